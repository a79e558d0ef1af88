"""The skew polynomial ring ``OPol_n = Z<x_1..x_n> / (x_i x_j + x_j x_i, i != j)``.

A monomial is kept in ascend-sorted normal form ``x_1^a_1 ... x_n^a_n`` and
keyed by its exponent vector ``(a_1, ..., a_n)``.  Squares ``x_i^2`` are
central, so sorting a word only picks up a sign from inversions between
distinct letters.
"""

from __future__ import annotations

import itertools
import re
from collections import defaultdict
from functools import lru_cache
from typing import Iterable, Mapping, Sequence, Union

from .diagrams import sign_of

Exponents = tuple[int, ...]
Word = tuple[int, ...]


def inversions(word: Sequence[int]) -> int:
    """Number of pairs ``s < t`` with ``word[s] > word[t]``."""
    return sum(1 for s, t in itertools.combinations(range(len(word)), 2) if word[s] > word[t])


def normalize(word: Sequence[int]) -> tuple[int, Word]:
    """Ascend-sort ``word``; return ``(sign, sorted indices)``."""
    return sign_of(inversions(word)), tuple(sorted(word))


def exponents_of(word: Sequence[int], n: int) -> Exponents:
    ex = [0] * n
    for x in word:
        if not 1 <= x <= n:
            raise ValueError(f"letter {x} outside 1..{n}")
        ex[x - 1] += 1
    return tuple(ex)


def indices_of(ex: Exponents) -> Word:
    return tuple(i for i, a in enumerate(ex, start=1) for _ in range(a))


def _merge_sign(a: Exponents, b: Exponents) -> int:
    # moving every letter of b left past the larger letters of a
    total = 0
    larger = 0
    for i in range(len(a) - 1, -1, -1):
        total += b[i] * larger
        larger += a[i]
    return -1 if total & 1 else 1


class SkewPolynomial:
    """An element of ``OPol_n`` with arbitrary-precision integer coefficients."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[Exponents, int] = ()):
        if n < 0:
            raise ValueError("n must be non-negative")
        self.n = n
        clean = {}
        for ex, c in dict(terms).items():
            ex = tuple(ex)
            if len(ex) != n:
                raise ValueError(f"exponent vector {ex} does not have length {n}")
            if c:
                clean[ex] = c
        self.terms: dict[Exponents, int] = clean

    @classmethod
    def one(cls, n: int) -> "SkewPolynomial":
        return cls(n, {(0,) * n: 1})

    @classmethod
    def zero(cls, n: int) -> "SkewPolynomial":
        return cls(n)

    @classmethod
    def variable(cls, i: int, n: int) -> "SkewPolynomial":
        return cls.from_word((i,), n)

    @classmethod
    def from_word(cls, word: Sequence[int], n: int, coeff: int = 1) -> "SkewPolynomial":
        sign, _ = normalize(word)
        return cls(n, {exponents_of(word, n): sign * coeff})

    def _check(self, other: "SkewPolynomial"):
        if not isinstance(other, SkewPolynomial):
            return NotImplemented
        if other.n != self.n:
            raise ValueError(f"mismatched variable counts {self.n} and {other.n}")

    def __add__(self, other):
        if isinstance(other, int):
            other = other * SkewPolynomial.one(self.n)
        self._check(other)
        out = dict(self.terms)
        for ex, c in other.terms.items():
            out[ex] = out.get(ex, 0) + c
        return SkewPolynomial(self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return SkewPolynomial(self.n, {ex: -c for ex, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return SkewPolynomial(self.n, {ex: c * other for ex, c in self.terms.items()})
        return multiply(self, other)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __pow__(self, k: int):
        out = SkewPolynomial.one(self.n)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = other * SkewPolynomial.one(self.n)
        if not isinstance(other, SkewPolynomial):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        return f"SkewPolynomial({self.n}, {format_polynomial(self)!r})"

    def __str__(self):
        return format_polynomial(self)

    def coefficient(self, ex: Exponents) -> int:
        return self.terms.get(tuple(ex), 0)

    def degrees(self) -> set[int]:
        """Set of monomial lengths (half the Z-degree) present."""
        return {sum(ex) for ex in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1


def multiply(f: SkewPolynomial, g: SkewPolynomial) -> SkewPolynomial:
    if f.n != g.n:
        raise ValueError(f"mismatched variable counts {f.n} and {g.n}")
    out: dict[Exponents, int] = defaultdict(int)
    for a, c in f.terms.items():
        for b, d in g.terms.items():
            ex = tuple(x + y for x, y in zip(a, b))
            out[ex] += _merge_sign(a, b) * c * d
    return SkewPolynomial(f.n, out)


def product(factors: Iterable[SkewPolynomial], n: int) -> SkewPolynomial:
    out = SkewPolynomial.one(n)
    for f in factors:
        out = out * f
    return out


# ---------------------------------------------------------------------------
# symmetric group action and odd divided differences


def _check_index(i: int, n: int):
    if not 1 <= i <= n - 1:
        raise ValueError(f"index {i} outside 1..{n - 1}")


def si_action(i: int, f: Union[SkewPolynomial, "FreeWordPolynomial"]):
    """``s_i``: negate every letter and swap ``x_i`` with ``x_{i+1}``."""
    _check_index(i, f.n)
    if isinstance(f, FreeWordPolynomial):
        return f.si_action(i)
    out = {}
    for ex, c in f.terms.items():
        a, b = ex[i - 1], ex[i]
        new = ex[: i - 1] + (b, a) + ex[i + 1:]
        out[new] = c * sign_of(sum(ex) + a * b)
    return SkewPolynomial(f.n, out)


def w0_twist(f: SkewPolynomial) -> SkewPolynomial:
    """Act by the longest element through the word ``s_1 (s_2 s_1) ... (s_{n-1} ... s_1)``."""
    for i in reversed(longest_word(f.n)):
        f = si_action(i, f)
    return f


def longest_word(n: int) -> list[int]:
    """The reduced word ``1, 2,1, 3,2,1, ..., n-1,...,1`` of the longest permutation."""
    return [i for top in range(1, n) for i in range(top, 0, -1)]


def divided_difference(i: int, f: SkewPolynomial) -> SkewPolynomial:
    """The odd divided difference ``d_i`` (twisted Leibniz rule), on sorted monomials."""
    _check_index(i, f.n)
    out: dict[Exponents, int] = defaultdict(int)
    for ex, coeff in f.terms.items():
        a, b = ex[i - 1], ex[i]
        if a == 0 and b == 0:
            continue
        p = sum(ex[: i - 1])
        head, tail = ex[: i - 1], ex[i + 1:]
        # differentiating the (c+1)-th copy of x_i
        for c in range(a):
            new = head + (a - c - 1, b + c) + tail
            out[new] += coeff * sign_of(p + c + c * (a - c - 1))
        # differentiating the (c+1)-th copy of x_{i+1}
        for c in range(b):
            new = head + (c, a + b - c - 1) + tail
            out[new] += coeff * sign_of(p + a + c + a * c)
    return SkewPolynomial(f.n, out)


def longest_divided_difference(f: SkewPolynomial) -> SkewPolynomial:
    """``d_w0 = d_1 (d_2 d_1) ... (d_{n-1} ... d_1)``, rightmost factor applied first."""
    for i in reversed(longest_word(f.n)):
        f = divided_difference(i, f)
    return f


def is_odd_symmetric(f: SkewPolynomial) -> bool:
    return all(not divided_difference(i, f) for i in range(1, f.n))


# ---------------------------------------------------------------------------
# distinguished elements


def _tilde_sign(ex: Exponents) -> int:
    # x~_i = (-1)^(i-1) x_i
    return sign_of(sum(i * a for i, a in enumerate(ex)))


def elementary(k: int, n: int) -> SkewPolynomial:
    if k < 0 or k > n:
        return SkewPolynomial.zero(n)
    out = {}
    for idx in itertools.combinations(range(1, n + 1), k):
        ex = exponents_of(idx, n)
        out[ex] = _tilde_sign(ex)
    return SkewPolynomial(n, out)


def complete(k: int, n: int) -> SkewPolynomial:
    if k < 0:
        return SkewPolynomial.zero(n)
    out = {}
    for idx in itertools.combinations_with_replacement(range(1, n + 1), k):
        ex = exponents_of(idx, n)
        out[ex] = _tilde_sign(ex)
    return SkewPolynomial(n, out)


def monomial_of_word(word: Sequence[int], n: int) -> SkewPolynomial:
    """The image of ``word`` under ``i -> x~_i``."""
    sign, _ = normalize(word)
    ex = exponents_of(word, n)
    return SkewPolynomial(n, {ex: sign * _tilde_sign(ex)})


# ---------------------------------------------------------------------------
# free algebra level


class FreeWordPolynomial:
    """An element of the free algebra ``Z<x_1..x_n>``, keyed by words."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[Word, int] = ()):
        self.n = n
        self.terms: dict[Word, int] = {tuple(w): c for w, c in dict(terms).items() if c}

    @classmethod
    def word(cls, word: Sequence[int], n: int) -> "FreeWordPolynomial":
        return cls(n, {tuple(word): 1})

    def __add__(self, other: "FreeWordPolynomial"):
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return FreeWordPolynomial(self.n, out)

    def __mul__(self, other):
        if isinstance(other, int):
            return FreeWordPolynomial(self.n, {w: c * other for w, c in self.terms.items()})
        out: dict[Word, int] = defaultdict(int)
        for u, c in self.terms.items():
            for v, d in other.terms.items():
                out[u + v] += c * d
        return FreeWordPolynomial(self.n, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, FreeWordPolynomial) and (self.n, self.terms) == (other.n, other.terms)

    def si_action(self, i: int) -> "FreeWordPolynomial":
        swap = {i: i + 1, i + 1: i}
        return FreeWordPolynomial(
            self.n,
            {tuple(swap.get(x, x) for x in w): c * sign_of(len(w)) for w, c in self.terms.items()},
        )

    def divided_difference(self, i: int) -> "FreeWordPolynomial":
        """Leibniz recursion letter by letter."""
        _check_index(i, self.n)
        out: dict[Word, int] = defaultdict(int)
        swap = {i: i + 1, i + 1: i}
        for w, c in self.terms.items():
            for t, x in enumerate(w):
                if x not in (i, i + 1):
                    continue
                prefix = tuple(swap.get(y, y) for y in w[:t])
                out[prefix + w[t + 1:]] += c * sign_of(t)
        return FreeWordPolynomial(self.n, out)

    def to_skew(self) -> SkewPolynomial:
        out: dict[Exponents, int] = defaultdict(int)
        for w, c in self.terms.items():
            sign, _ = normalize(w)
            out[exponents_of(w, self.n)] += sign * c
        return SkewPolynomial(self.n, out)


def lift(f: SkewPolynomial) -> FreeWordPolynomial:
    """The sorted-word representative of ``f`` in the free algebra."""
    return FreeWordPolynomial(f.n, {indices_of(ex): c for ex, c in f.terms.items()})


# ---------------------------------------------------------------------------
# text form

_TERM = re.compile(r"\s*([+-])?\s*(\d+)?\s*(\*)?\s*((?:x\d+(?:\^\d+)?\s*\*?\s*)*)")


def format_polynomial(f: SkewPolynomial) -> str:
    if not f.terms:
        return "0"
    pieces = []
    for ex in sorted(f.terms, key=lambda e: (sum(e), tuple(-a for a in e))):
        c = f.terms[ex]
        factors = [f"x{i}" + (f"^{a}" if a > 1 else "") for i, a in enumerate(ex, start=1) if a]
        mono = "*".join(factors)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        sign = "-" if c < 0 else "+"
        pieces.append((sign, body))
    first_sign, first_body = pieces[0]
    text = ("-" if first_sign == "-" else "") + first_body
    for sign, body in pieces[1:]:
        text += f" {sign} {body}"
    return text


def parse_polynomial(text: str, n: int) -> SkewPolynomial:
    """Parse the output of :func:`format_polynomial` (and a leading ``+`` sign)."""
    text = text.strip()
    if text == "0":
        return SkewPolynomial.zero(n)
    out: dict[Exponents, int] = defaultdict(int)
    pos = 0
    first = True
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial at {text[pos:]!r}")
        sign, num, _, mono = m.groups()
        if sign is None and not first:
            raise ValueError(f"missing sign at {text[pos:]!r}")
        if num is None and not mono.strip():
            raise ValueError(f"empty term at {text[pos:]!r}")
        coeff = int(num) if num else 1
        if sign == "-":
            coeff = -coeff
        word: list[int] = []
        for var, power in re.findall(r"x(\d+)(?:\^(\d+))?", mono):
            word += [int(var)] * (int(power) if power else 1)
        sign, _ = normalize(word)
        out[exponents_of(word, n)] += sign * coeff
        pos = m.end()
        first = False
    return SkewPolynomial(n, out)


@lru_cache(maxsize=None)
def complete_cached(k: int, n: int) -> SkewPolynomial:
    return complete(k, n)


@lru_cache(maxsize=None)
def elementary_cached(k: int, n: int) -> SkewPolynomial:
    return elementary(k, n)
