"""The odd plactic ring: words modulo signed elementary Knuth transformations.

    (K')   y z x = - y x z    for x < y <= z
    (K'')  x z y = - z x y    for x <= y < z

Every word is equivalent to plus or minus the row word of a unique tableau,
so tableaux form a basis.
"""

from __future__ import annotations

from collections import defaultdict, deque
from typing import Mapping, Sequence

from .diagrams import Partition, box_count, partition, sign_of
from .opol import SkewPolynomial, monomial_of_word
from .tableaux import Tableau, enumerate_ssyt, is_row_word, word_to_tableau_reading

Word = tuple[int, ...]

STRATEGIES = ("insertion", "bumping", "search")


class KnuthError(RuntimeError):
    pass


# ---------------------------------------------------------------------------
# elementary moves


def apply_move(word: list[int], pos: int, kind: str) -> None:
    """Apply the directed move ``kind`` (``"K'"`` or ``"K''"``) at ``word[pos:pos+3]`` in place."""
    a, b, c = word[pos: pos + 3]
    if kind == "K'":
        # y z x -> y x z
        if not c < a <= b:
            raise KnuthError(f"K' does not apply to {a}{b}{c}")
        word[pos + 1], word[pos + 2] = c, b
    elif kind == "K''":
        # x z y -> z x y
        if not a <= c < b:
            raise KnuthError(f"K'' does not apply to {a}{b}{c}")
        word[pos], word[pos + 1] = b, a
    else:
        raise ValueError(f"unknown move {kind!r}")


def neighbours(word: Word):
    """Words one elementary Knuth transformation away, in either direction."""
    for pos in range(len(word) - 2):
        a, b, c = word[pos: pos + 3]
        if c < a <= b or b < a <= c:
            yield word[:pos] + (a, c, b) + word[pos + 3:]
        if a <= c < b or b <= c < a:
            yield word[:pos] + (b, a, c) + word[pos + 3:]


# ---------------------------------------------------------------------------
# normalization strategies


def _normalize_by_insertion(word: Sequence[int]) -> tuple[int, Tableau]:
    """Row-insert letters left to right, performing each bump as explicit moves."""
    current: list[int] = []
    rows: list[list[int]] = []  # top to bottom
    moves = 0
    for x in word:
        current.append(x)
        # the row being inserted into starts where its letters sit in ``current``
        start = len(current) - 1 - (len(rows[0]) if rows else 0)
        letter = x
        r = 0
        while True:
            if r == len(rows):
                rows.append([letter])
                break
            row = rows[r]
            m = len(row)
            k = next((i for i, v in enumerate(row) if v > letter), None)
            if k is None:
                row.append(letter)
                break
            for j in range(m - 1, k, -1):
                apply_move(current, start + j - 1, "K'")
                moves += 1
            for t in range(k - 1, -1, -1):
                apply_move(current, start + t, "K''")
                moves += 1
            bumped = row[k]
            row[k] = letter
            letter = bumped
            r += 1
            if r < len(rows):
                start -= len(rows[r])
        expected = [v for row in reversed(rows) for v in row]
        if current != expected:
            raise KnuthError("insertion moves did not produce the row word")
    return sign_of(moves), Tableau(tuple(tuple(row) for row in rows))


def signed_insert(t: Tableau, x: int) -> tuple[int, Tableau]:
    """Row-insert ``x``; bumping out of a row of length r costs ``(-1)^(r-1)``."""
    rows = [list(row) for row in t.rows]
    sign = 1
    letter = x
    for row in rows:
        k = next((i for i, v in enumerate(row) if v > letter), None)
        if k is None:
            row.append(letter)
            break
        sign *= sign_of(len(row) - 1)
        row[k], letter = letter, row[k]
    else:
        rows.append([letter])
    return sign, Tableau(tuple(tuple(row) for row in rows))


def _normalize_by_bumping(word: Sequence[int]) -> tuple[int, Tableau]:
    sign, t = 1, Tableau(())
    for x in word:
        s, t = signed_insert(t, x)
        sign *= s
    return sign, t


_SEARCH_CACHE: dict[Word, tuple[int, Tableau]] = {}


def knuth_class(word: Sequence[int]) -> dict[Word, int]:
    """All words Knuth-equivalent to ``word`` with their sign relative to it.

    Raises KnuthError if two paths assign a word different signs.
    """
    start = tuple(word)
    signs = {start: 1}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        s = signs[w]
        for v in neighbours(w):
            if v not in signs:
                signs[v] = -s
                queue.append(v)
            elif signs[v] != -s:
                raise KnuthError(f"inconsistent signs in the class of {start}")
    return signs


def _normalize_by_search(word: Sequence[int]) -> tuple[int, Tableau]:
    word = tuple(word)
    if word in _SEARCH_CACHE:
        return _SEARCH_CACHE[word]
    signs = knuth_class(word)
    tableau_words = [w for w in signs if is_row_word(w)]
    if len(tableau_words) != 1:
        raise KnuthError(f"class of {word} contains {len(tableau_words)} row words")
    target = tableau_words[0]
    t = word_to_tableau_reading(target)
    for w, s in signs.items():
        # w = s * word and target = signs[target] * word
        _SEARCH_CACHE[w] = (s * signs[target], t)
    return _SEARCH_CACHE[word]


def knuth_normalize(word: Sequence[int], strategy: str = "insertion") -> tuple[int, Tableau]:
    """Return ``(sign, T)`` with ``word = sign * w_r(T)`` in the odd plactic ring.

    ``insertion`` performs Schensted insertion as a sequence of checked
    elementary moves; ``bumping`` uses the per-bump sign shortcut; ``search``
    explores the whole Knuth class.
    """
    if strategy == "insertion":
        return _normalize_by_insertion(word)
    if strategy == "bumping":
        return _normalize_by_bumping(word)
    if strategy == "search":
        return _normalize_by_search(word)
    raise ValueError(f"unknown strategy {strategy!r}")


# ---------------------------------------------------------------------------
# the even (unsigned) plactic product


def rsk_insert(t: Tableau, x: int) -> Tableau:
    rows = [list(row) for row in t.rows]
    for row in rows:
        for i, v in enumerate(row):
            if v > x:
                row[i], x = x, v
                break
        else:
            row.append(x)
            return Tableau(tuple(map(tuple, rows)))
    rows.append([x])
    return Tableau(tuple(map(tuple, rows)))


def even_product(t: Tableau, u: Tableau) -> Tableau:
    """The product ``t u`` in the ordinary plactic monoid."""
    for x in u.row_word():
        t = rsk_insert(t, x)
    return t


# ---------------------------------------------------------------------------
# PlacticElement


class PlacticElement:
    """An integer combination of tableaux with entries in ``1..n``."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[Tableau, int] = ()):
        self.n = n
        clean = {}
        for t, c in dict(terms).items():
            if any(x > n or x < 1 for x in t.row_word()):
                raise ValueError(f"tableau {t} has entries outside 1..{n}")
            if c:
                clean[t] = c
        self.terms: dict[Tableau, int] = clean

    @classmethod
    def tableau(cls, t: Tableau, n: int, coeff: int = 1) -> "PlacticElement":
        return cls(n, {t: coeff})

    @classmethod
    def word(cls, word: Sequence[int], n: int) -> "PlacticElement":
        sign, t = knuth_normalize(word)
        return cls(n, {t: sign})

    def __add__(self, other: "PlacticElement"):
        out = dict(self.terms)
        for t, c in other.terms.items():
            out[t] = out.get(t, 0) + c
        return PlacticElement(self.n, out)

    def __neg__(self):
        return PlacticElement(self.n, {t: -c for t, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return PlacticElement(self.n, {t: c * other for t, c in self.terms.items()})
        return plactic_multiply(self, other)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, PlacticElement) and (self.n, self.terms) == (other.n, other.terms)

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        body = " ".join(f"{c:+d}*[{t}]" for t, c in sorted(self.terms.items()))
        return f"PlacticElement({self.n}, {body or '0'})"


def plactic_multiply(p: PlacticElement, q: PlacticElement, strategy: str = "insertion") -> PlacticElement:
    if p.n != q.n:
        raise ValueError(f"mismatched alphabets {p.n} and {q.n}")
    out: dict[Tableau, int] = defaultdict(int)
    for t, c in p.terms.items():
        for u, d in q.terms.items():
            sign, v = knuth_normalize(t.row_word() + u.row_word(), strategy)
            out[v] += sign * c * d
    return PlacticElement(p.n, out)


def schur_sign(lam: Partition) -> int:
    """``(-1)^(dN(lam) + N(lam))``."""
    return sign_of(box_count(lam, "dN") + box_count(lam, "N"))


def plactic_schur(lam: Sequence[int], n: int) -> PlacticElement:
    """The plactic Schur element: signed sum of all SSYT of shape ``lam`` over ``1..n``."""
    lam = partition(lam)
    s = schur_sign(lam)
    return PlacticElement(n, {t: s for t in enumerate_ssyt(lam, alphabet_max=n)})


def to_opol(p: PlacticElement) -> SkewPolynomial:
    """The ring map sending a letter i to ``x~_i``."""
    out: dict = defaultdict(int)
    for t, c in p.terms.items():
        for ex, d in monomial_of_word(t.row_word(), p.n).terms.items():
            out[ex] += c * d
    return SkewPolynomial(p.n, out)


# ---------------------------------------------------------------------------
# text form


def format_word(word: Sequence[int]) -> str:
    if all(1 <= x <= 9 for x in word):
        return "".join(map(str, word))
    return ",".join(map(str, word))


def parse_word(text: str) -> Word:
    text = text.strip()
    if not text:
        return ()
    if "," in text:
        word = tuple(int(x) for x in text.split(","))
    elif text.isdigit():
        word = tuple(int(ch) for ch in text)
    else:
        raise ValueError(f"cannot parse word {text!r}")
    if any(x < 1 for x in word):
        raise ValueError("letters must be positive")
    return word
