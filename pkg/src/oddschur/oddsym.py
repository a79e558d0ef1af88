"""The ring of odd symmetric functions, handled one degree at a time.

Elements are :class:`SymFunction` objects: integer combinations of ``e_lam``,
``h_lam`` or ``s_lam`` for partitions ``lam`` of a fixed size.  Products of
generators are put in sorted (partition) order with the odd defining
relations; the Schur basis is defined from the h basis through the odd
Kostka matrix.
"""

from __future__ import annotations

import re
from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Mapping, Optional, Sequence

import sympy

from .diagrams import Partition, enumerate_partitions, partition, sign_of
from .opol import SkewPolynomial, complete_cached, elementary_cached, product
from .tableaux import enumerate_ssyt, superstandard, tableau_sign

BASES = ("e", "h", "s")


@dataclass(frozen=True)
class BasisElement:
    basis: str
    index: Partition

    def __post_init__(self):
        if self.basis not in BASES:
            raise ValueError(f"unknown basis {self.basis!r}")
        object.__setattr__(self, "index", partition(self.index))

    def __str__(self):
        return f"{self.basis}[{','.join(map(str, self.index))}]"


# ---------------------------------------------------------------------------
# straightening


def _tri(k: int) -> int:
    return k * (k + 1) // 2


@lru_cache(maxsize=None)
def pair_expansion(a: int, b: int) -> tuple[tuple[tuple[int, int], int], ...]:
    """Write ``g_a g_b`` (``a < b``) as a combination of sorted pairs ``g_c g_d``, ``c >= d``.

    ``g`` stands for either ``e`` or ``h``: both satisfy the same relations.
    When ``a + b`` is odd the relation with the larger index first,

        g_b g_a + (-1)^b g_a g_b = (-1)^b g_{b+1} g_{a-1} + g_{a-1} g_{b+1},

    expresses ``g_a g_b`` through ``g_{a-1} g_{b+1}``; the recursion bottoms
    out at ``g_0 g_s = g_s``.
    """
    if a > b:
        return (((a, b), 1),)
    if (a + b) % 2 == 0 or a == 0:
        return (((b, a), 1),)
    out: dict[tuple[int, int], int] = defaultdict(int)
    sb = sign_of(b)
    for pair, c in pair_expansion(a - 1, b + 1):
        out[pair] += sb * c
    out[(b, a)] -= sb
    out[(b + 1, a - 1)] += 1
    return tuple((pair, c) for pair, c in sorted(out.items()) if c)


@lru_cache(maxsize=None)
def _straighten(word: tuple[int, ...]) -> tuple[tuple[Partition, int], ...]:
    for t in range(len(word) - 1):
        if word[t] < word[t + 1]:
            break
    else:
        return ((word, 1),)
    out: dict[Partition, int] = defaultdict(int)
    for (c, d), coeff in pair_expansion(word[t], word[t + 1]):
        new = word[:t] + tuple(x for x in (c, d) if x) + word[t + 2:]
        for lam, c2 in _straighten(new):
            out[lam] += coeff * c2
    return tuple((lam, c) for lam, c in out.items() if c)


def straighten_word(word: Sequence[int]) -> dict[Partition, int]:
    """Sorted-basis coordinates of the product ``g_{w_1} g_{w_2} ...`` of generators."""
    if any(x < 0 for x in word):
        return {}
    return dict(_straighten(tuple(x for x in word if x)))


def straighten_product(factors: Sequence[BasisElement]) -> "SymFunction":
    """Straighten a product of single generators ``e_a`` (or ``h_a``) into the e (or h) basis."""
    letters = {f.basis for f in factors}
    if len(letters) > 1 or letters & {"s"}:
        raise ValueError("factors must all be e's or all h's")
    basis = letters.pop() if letters else "h"
    word = []
    for f in factors:
        if len(f.index) > 1:
            raise ValueError(f"{f} is not a single generator")
        word.extend(f.index)
    return SymFunction(basis, straighten_word(word))


# ---------------------------------------------------------------------------
# SymFunction


@dataclass(frozen=True)
class SymFunction:
    """A homogeneous element of odd symmetric functions in a single basis."""

    basis: str
    terms: Mapping[Partition, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.basis not in BASES:
            raise ValueError(f"unknown basis {self.basis!r}")
        clean = {}
        for lam, c in dict(self.terms).items():
            lam = partition(lam)
            if c:
                clean[lam] = clean.get(lam, 0) + c
        clean = {lam: c for lam, c in clean.items() if c}
        if len({sum(lam) for lam in clean}) > 1:
            raise ValueError("SymFunction must be homogeneous")
        object.__setattr__(self, "terms", clean)

    @classmethod
    def basis_element(cls, basis: str, lam: Iterable[int], coeff: int = 1) -> "SymFunction":
        return cls(basis, {partition(lam): coeff})

    @property
    def degree(self) -> Optional[int]:
        """Half the Z-degree; None for the zero function."""
        return sum(next(iter(self.terms))) if self.terms else None

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, SymFunction):
            return NotImplemented
        if self.basis != other.basis:
            other = other.to_basis(self.basis)
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.to_basis("h").terms.items()))

    def __add__(self, other: "SymFunction") -> "SymFunction":
        other = other.to_basis(self.basis)
        out = dict(self.terms)
        for lam, c in other.terms.items():
            out[lam] = out.get(lam, 0) + c
        return SymFunction(self.basis, out)

    def __neg__(self):
        return SymFunction(self.basis, {lam: -c for lam, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return SymFunction(self.basis, {lam: c * other for lam, c in self.terms.items()})
        if not isinstance(other, SymFunction):
            return NotImplemented
        if self.basis == "s":
            return (self.to_basis("h") * other).to_basis("s")
        other = other.to_basis(self.basis)
        out: dict[Partition, int] = defaultdict(int)
        for lam, c in self.terms.items():
            for mu, d in other.terms.items():
                for nu, k in straighten_word(lam + mu).items():
                    out[nu] += c * d * k
        return SymFunction(self.basis, out)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def to_basis(self, basis: str) -> "SymFunction":
        if basis == self.basis:
            return self
        if self.basis != "h":
            to_h = e_in_h if self.basis == "e" else (lambda lam: schur_K(lam).terms)
            h: dict[Partition, int] = defaultdict(int)
            for lam, c in self.terms.items():
                for mu, d in to_h(lam).items():
                    h[mu] += c * d
            return SymFunction("h", h).to_basis(basis)
        out: dict[Partition, int] = defaultdict(int)
        for lam, c in self.terms.items():
            image = h_in_e(lam) if basis == "e" else h_in_s(lam)
            for mu, d in image.items():
                out[mu] += c * d
        return SymFunction(basis, out)

    def __str__(self):
        return format_symfunction(self)


def one() -> SymFunction:
    return SymFunction.basis_element("h", ())


@lru_cache(maxsize=None)
def _e_single_in_h(k: int) -> SymFunction:
    # sum_{j=0}^k (-1)^{j(j+1)/2} e_j h_{k-j} = 0 for k >= 1
    if k == 0:
        return one()
    acc = SymFunction("h")
    for j in range(k):
        term = _e_single_in_h(j) * SymFunction.basis_element("h", (k - j,))
        acc = acc + term * sign_of(_tri(j))
    return acc * -sign_of(_tri(k))


@lru_cache(maxsize=None)
def _h_single_in_e(k: int) -> SymFunction:
    if k == 0:
        return SymFunction.basis_element("e", ())
    acc = SymFunction("e")
    for j in range(1, k + 1):
        term = SymFunction.basis_element("e", (j,)) * _h_single_in_e(k - j)
        acc = acc + term * sign_of(_tri(j))
    return -acc


@lru_cache(maxsize=None)
def _e_in_h(lam: Partition) -> tuple[tuple[Partition, int], ...]:
    out = one()
    for k in lam:
        out = out * _e_single_in_h(k)
    return tuple(out.terms.items())


def e_in_h(lam: Partition) -> dict[Partition, int]:
    """h-basis coordinates of ``e_lam = e_{lam_1} e_{lam_2} ...``."""
    return dict(_e_in_h(partition(lam)))


@lru_cache(maxsize=None)
def _h_in_e(lam: Partition) -> tuple[tuple[Partition, int], ...]:
    out = SymFunction.basis_element("e", ())
    for k in lam:
        out = out * _h_single_in_e(k)
    return tuple(out.terms.items())


def h_in_e(lam: Partition) -> dict[Partition, int]:
    return dict(_h_in_e(partition(lam)))


def h_in_s(lam: Partition) -> dict[Partition, int]:
    """``h_mu = sum_lam K_{lam mu} s_lam``."""
    mu = partition(lam)
    return {
        shape: kostka_number(shape, mu)
        for shape in enumerate_partitions(sum(mu))
        if kostka_number(shape, mu)
    }


# ---------------------------------------------------------------------------
# odd Kostka numbers and the combinatorial Schur basis


@lru_cache(maxsize=None)
def kostka_number(lam: Partition, mu: Partition) -> int:
    """``K_{lam mu} = sign(T_lam) * sum of sign(T)`` over SSYT of shape lam and content mu."""
    lam, mu = partition(lam), partition(mu)
    if sum(lam) != sum(mu):
        return 0
    total = sum(tableau_sign(t) for t in enumerate_ssyt(lam, mu))
    return tableau_sign(superstandard(lam)) * total


@dataclass(frozen=True)
class KostkaMatrix:
    """Odd Kostka numbers of degree k.

    ``entries[i][j] = K_{partitions[j], partitions[i]}``: row i holds the
    s-basis coordinates of ``h_{partitions[i]}``.  With partitions in
    descending lexicographic order the matrix is lower unitriangular.
    """

    k: int
    partitions: tuple[Partition, ...]
    entries: tuple[tuple[int, ...], ...]

    def value(self, lam: Partition, mu: Partition) -> int:
        """``K_{lam mu}``."""
        return self.entries[self.partitions.index(partition(mu))][self.partitions.index(partition(lam))]

    def is_lower_unitriangular(self) -> bool:
        size = len(self.partitions)
        for i in range(size):
            if self.entries[i][i] != 1:
                return False
            if any(self.entries[i][j] for j in range(i + 1, size)):
                return False
        return True


@lru_cache(maxsize=None)
def kostka_matrix(k: int) -> KostkaMatrix:
    if k < 0:
        raise ValueError("degree must be non-negative")
    parts = tuple(enumerate_partitions(k))
    entries = tuple(tuple(kostka_number(lam, mu) for lam in parts) for mu in parts)
    return KostkaMatrix(k, parts, entries)


@lru_cache(maxsize=None)
def _kostka_inverse(k: int) -> tuple[tuple[int, ...], ...]:
    km = kostka_matrix(k)
    inv = sympy.Matrix(km.entries).inv() if km.partitions else sympy.Matrix([])
    rows = []
    for i in range(len(km.partitions)):
        row = []
        for j in range(len(km.partitions)):
            value = inv[i, j]
            if not value.is_integer:
                raise ArithmeticError("odd Kostka matrix is not unimodular")
            row.append(int(value))
        rows.append(tuple(row))
    return tuple(rows)


def schur_K(lam: Iterable[int]) -> SymFunction:
    """The combinatorial odd Schur function ``s^K_lam`` in the h basis."""
    lam = partition(lam)
    k = sum(lam)
    km = kostka_matrix(k)
    inv = _kostka_inverse(k)
    # h = M s with M[mu][lam] = K_{lam mu}, so s_lam = sum_mu (M^-1)[lam][mu] h_mu
    i = km.partitions.index(lam)
    return SymFunction("h", {mu: inv[i][j] for j, mu in enumerate(km.partitions)})


# ---------------------------------------------------------------------------
# polynomial images


@lru_cache(maxsize=None)
def basis_image(basis: str, lam: Partition, n: int) -> SkewPolynomial:
    """The image of ``basis[lam]`` in ``OPol_n``."""
    lam = partition(lam)
    if basis == "e":
        return product((elementary_cached(k, n) for k in lam), n)
    if basis == "h":
        return product((complete_cached(k, n) for k in lam), n)
    return to_polynomial(schur_K(lam), n)


def to_polynomial(f: SymFunction, n: int) -> SkewPolynomial:
    out = SkewPolynomial.zero(n)
    basis = "h" if f.basis == "s" else f.basis
    g = f.to_basis(basis)
    for lam, c in g.terms.items():
        out = out + basis_image(basis, lam, n) * c
    return out


def _dominant_exponent(lam: Partition, n: int) -> tuple[int, ...]:
    return tuple(lam) + (0,) * (n - len(lam))


@lru_cache(maxsize=64)
def _restricted_inverse(key, matrix_rows: tuple[tuple[int, ...], ...]):
    m = sympy.Matrix(matrix_rows)
    if m.det() == 0:
        raise ArithmeticError("basis images are not independent on the dominant monomials")
    return m.inv()


def solve_in_images(
    f: SkewPolynomial, images: Mapping[Partition, SkewPolynomial], check: bool = True
) -> dict[Partition, int]:
    """Integer coordinates of ``f`` over ``images`` (indexed by all partitions of one k).

    The square system is taken on the coordinates of the dominant monomials
    ``x^kappa`` (``kappa`` a partition); with ``check`` the full residual is
    verified to vanish.
    """
    n = f.n
    parts = sorted(images, reverse=True)
    if not parts:
        raise ValueError("no basis images given")
    if any(len(lam) > n for lam in parts):
        raise ValueError("too few variables for a faithful expansion")
    coords = [_dominant_exponent(lam, n) for lam in parts]
    rows = tuple(tuple(images[lam].coefficient(kappa) for lam in parts) for kappa in coords)
    inv = _restricted_inverse((n, tuple(parts)), rows)
    rhs = sympy.Matrix([f.coefficient(kappa) for kappa in coords])
    sol = inv * rhs
    out = {}
    for lam, value in zip(parts, sol):
        if not value.is_integer:
            raise ValueError("not odd symmetric of this degree")
        if value:
            out[lam] = int(value)
    if check:
        residual = f
        for lam, c in out.items():
            residual = residual - images[lam] * c
        if residual:
            raise ValueError("not odd symmetric of this degree")
    return out


def expand_in_basis(f: SkewPolynomial, basis: str, k: Optional[int] = None) -> SymFunction:
    """Coordinates of the odd symmetric polynomial ``f`` in the chosen basis of degree ``k``."""
    if basis not in BASES:
        raise ValueError(f"unknown basis {basis!r}")
    degrees = f.degrees()
    if k is None:
        if not degrees:
            return SymFunction(basis)
        if len(degrees) > 1:
            raise ValueError("not odd symmetric of this degree")
        k = degrees.pop()
    elif degrees - {k}:
        raise ValueError("not odd symmetric of this degree")
    if not f:
        return SymFunction(basis)
    if f.n < k:
        raise ValueError(f"need at least {k} variables to expand in degree {k}")
    images = {lam: basis_image(basis, lam, f.n) for lam in enumerate_partitions(k)}
    return SymFunction(basis, solve_in_images(f, images))


# ---------------------------------------------------------------------------
# symmetries


def _psi1(f: SymFunction) -> SymFunction:
    h = f.to_basis("h")
    return SymFunction("e", dict(h.terms)).to_basis("h")


def _psi2(f: SymFunction) -> SymFunction:
    h = f.to_basis("h")
    return SymFunction("h", {lam: c * sign_of(sum(_tri(k) for k in lam)) for lam, c in h.terms.items()})


def _psi3(f: SymFunction) -> SymFunction:
    h = f.to_basis("h")
    out: dict[Partition, int] = defaultdict(int)
    for lam, c in h.terms.items():
        for mu, d in straighten_word(tuple(reversed(lam))).items():
            out[mu] += c * d
    return SymFunction("h", out)


_PSI = {
    "psi1": (_psi1,),
    "psi2": (_psi2,),
    "psi3": (_psi3,),
    "psi1psi2": (_psi2, _psi1),
    "antipode": (_psi3, _psi2, _psi1),
}


def psi(which: str, f: SymFunction) -> SymFunction:
    """Apply ``psi1``, ``psi2``, ``psi3``, ``psi1psi2`` or the antipode ``psi1 psi2 psi3``.

    The result is returned in the basis of ``f``.
    """
    try:
        maps = _PSI[which]
    except KeyError:
        raise ValueError(f"unknown symmetry {which!r}") from None
    g = f
    for m in maps:
        g = m(g)
    return g.to_basis(f.basis)


# ---------------------------------------------------------------------------
# coproduct

Tensor = dict[tuple[Partition, Partition], int]


def tensor_multiply(x: Mapping, y: Mapping) -> Tensor:
    """Product in the super tensor square, both factors in the h basis."""
    out: Tensor = defaultdict(int)
    for (f, g), c in x.items():
        for (f2, g2), d in y.items():
            sign = sign_of(sum(g) * sum(f2))
            left = straighten_word(f + f2)
            right = straighten_word(g + g2)
            for a, ca in left.items():
                for b, cb in right.items():
                    out[(a, b)] += sign * c * d * ca * cb
    return {key: c for key, c in out.items() if c}


def _delta_h(k: int) -> Tensor:
    return {(partition((i,)), partition((k - i,))): 1 for i in range(k + 1)}


def coproduct(f: SymFunction) -> Tensor:
    """``Delta(f)`` as h-basis tensor coordinates ``{(lam, mu): c}``."""
    h = f.to_basis("h")
    out: Tensor = defaultdict(int)
    for lam, c in h.terms.items():
        acc: Tensor = {((), ()): 1}
        for k in lam:
            acc = tensor_multiply(acc, _delta_h(k))
        for key, d in acc.items():
            out[key] += c * d
    return {key: c for key, c in out.items() if c}


# ---------------------------------------------------------------------------
# text form


def format_symfunction(f: SymFunction) -> str:
    if not f.terms:
        return "0"
    pieces = []
    for lam in sorted(f.terms, reverse=True):
        c = f.terms[lam]
        elem = f"{f.basis}[{','.join(map(str, lam))}]"
        body = elem if abs(c) == 1 else f"{abs(c)}*{elem}"
        pieces.append(("-" if c < 0 else "+", body))
    text = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
    for sign, body in pieces[1:]:
        text += f" {sign} {body}"
    return text


def parse_symfunction(text: str) -> SymFunction:
    text = text.strip()
    if text == "0":
        return SymFunction("h")
    terms: dict[Partition, int] = defaultdict(int)
    basis = None
    pattern = re.compile(r"\s*([+-])?\s*(?:(\d+)\s*\*\s*)?([ehs])\[([\d,\s]*)\]")
    pos = 0
    while pos < len(text):
        m = pattern.match(text, pos)
        if not m:
            raise ValueError(f"cannot parse symmetric function at {text[pos:]!r}")
        sign, num, b, body = m.groups()
        if basis is not None and b != basis:
            raise ValueError("mixed bases in one expression")
        basis = b
        lam = partition(int(x) for x in body.split(",") if x.strip())
        c = int(num) if num else 1
        terms[lam] += -c if sign == "-" else c
        pos = m.end()
    return SymFunction(basis, terms)


def symfunction_to_json(f: SymFunction) -> list[dict]:
    return [
        {"basis": f.basis, "partition": list(lam), "coeff": c}
        for lam, c in sorted(f.terms.items(), reverse=True)
    ]


def symfunction_from_json(items: list[dict], basis: str = "h") -> SymFunction:
    if items:
        basis = items[0]["basis"]
    return SymFunction(basis, {tuple(it["partition"]): it["coeff"] for it in items})
