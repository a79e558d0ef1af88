"""Semistandard (skew) tableaux, row words, signs and Yamanouchi words."""

from __future__ import annotations

import operator
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence, Union

from .diagrams import (
    BoxCountSpec,
    Partition,
    SkewShape,
    direction_predicate,
    part,
    partition,
    sign_of,
)

Word = tuple[int, ...]

_COMPARE = {
    "<": operator.lt,
    "<=": operator.le,
    ">": operator.gt,
    ">=": operator.ge,
}


def _check_semistandard(rows, offsets):
    """``rows[r]`` holds the entries of row r starting at column ``offsets[r] + 1``."""
    for r, row in enumerate(rows):
        for a, b in zip(row, row[1:]):
            if a > b:
                raise ValueError(f"row {r + 1} is not weakly increasing: {row}")
        if r == 0:
            continue
        above, above_off = rows[r - 1], offsets[r - 1]
        for k, entry in enumerate(row):
            col = offsets[r] + k
            j = col - above_off
            if 0 <= j < len(above) and above[j] >= entry:
                raise ValueError(f"column {col + 1} is not strictly increasing")


@dataclass(frozen=True, order=True)
class Tableau:
    """A semistandard Young tableau, stored as its rows from top to bottom."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.rows)
        while rows and not rows[-1]:
            rows = rows[:-1]
        partition(len(row) for row in rows)
        _check_semistandard(rows, [0] * len(rows))
        object.__setattr__(self, "rows", rows)

    @classmethod
    def filling(cls, rows) -> "Tableau":
        """A filling of a Young diagram that need not be semistandard."""
        t = object.__new__(cls)
        object.__setattr__(t, "rows", tuple(tuple(row) for row in rows))
        return t

    @property
    def shape(self) -> Partition:
        return tuple(len(row) for row in self.rows)

    def content(self) -> tuple[int, ...]:
        return content_of(self.row_word())

    def row_word(self) -> Word:
        return tuple(x for row in reversed(self.rows) for x in row)

    def entries(self) -> dict[tuple[int, int], int]:
        return {
            (r, c): x
            for r, row in enumerate(self.rows, start=1)
            for c, x in enumerate(row, start=1)
        }

    def __len__(self):
        return sum(len(row) for row in self.rows)

    def __str__(self):
        return format_tableau(self)


@dataclass(frozen=True, order=True)
class SkewTableau:
    """A semistandard filling of ``outer / inner``; the inner shape is part of its identity.

    ``rows[r]`` lists the entries of row r + 1 to the right of the inner shape.
    """

    inner: Partition
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        inner = partition(self.inner)
        rows = tuple(tuple(int(x) for x in row) for row in self.rows)
        rows = rows + ((),) * (len(inner) - len(rows))
        while rows and not rows[-1] and len(rows) > len(inner):
            rows = rows[:-1]
        offsets = [part(inner, r) for r in range(1, len(rows) + 1)]
        # raises if the outer shape is not a partition or does not contain inner
        SkewShape(tuple(o + len(row) for o, row in zip(offsets, rows)), inner)
        _check_semistandard(rows, offsets)
        object.__setattr__(self, "inner", inner)
        object.__setattr__(self, "rows", rows)

    @property
    def outer(self) -> Partition:
        return partition(part(self.inner, r) + len(row) for r, row in enumerate(self.rows, start=1))

    @property
    def shape(self) -> SkewShape:
        return SkewShape(self.outer, self.inner)

    def row_word(self) -> Word:
        return tuple(x for row in reversed(self.rows) for x in row)

    def content(self) -> tuple[int, ...]:
        return content_of(self.row_word())

    def completion(self, fill: int = 0) -> Tableau:
        """The filling of the outer shape with ``fill`` in every inner box.

        Stacked ``fill`` entries make this a filling rather than a semistandard tableau.
        """
        return Tableau.filling(
            tuple((fill,) * part(self.inner, r) + row for r, row in enumerate(self.rows, start=1))
        )

    def __str__(self):
        return format_tableau(self)


def content_of(word: Sequence[int]) -> tuple[int, ...]:
    """Content as a composition with trailing zeros removed."""
    if not word:
        return ()
    counts = [0] * max(word)
    for x in word:
        if x >= 1:
            counts[x - 1] += 1
    while counts and counts[-1] == 0:
        counts.pop()
    return tuple(counts)


def _normalize_content(content: Sequence[int]) -> tuple[int, ...]:
    content = list(content)
    while content and content[-1] == 0:
        content.pop()
    return tuple(content)


def superstandard(lam: Partition) -> Tableau:
    """The tableau ``T_lam`` whose row i is filled with i's."""
    return Tableau(tuple((i,) * p for i, p in enumerate(lam, start=1)))


def row_word(t: Union[Tableau, SkewTableau]) -> Word:
    return t.row_word()


def split_rows(word: Sequence[int]) -> list[tuple[int, ...]]:
    """Cut ``word`` at strict descents into maximal weakly increasing runs."""
    runs: list[list[int]] = []
    for x in word:
        if runs and x >= runs[-1][-1]:
            runs[-1].append(x)
        else:
            runs.append([x])
    return [tuple(r) for r in runs]


def is_row_word(word: Sequence[int]) -> bool:
    try:
        word_to_tableau_reading(word)
    except ValueError:
        return False
    return True


def word_to_tableau_reading(word: Sequence[int]) -> Tableau:
    """Recover the tableau whose row word is ``word``."""
    rows = tuple(reversed(split_rows(word)))
    try:
        return Tableau(rows)
    except ValueError:
        raise ValueError("not a tableau word") from None


# ---------------------------------------------------------------------------
# enumeration


def _fill(shape_rows, offsets, content, alphabet_max) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Backtracking filler shared by straight and skew enumeration.

    Boxes are filled top to bottom, left to right, trying entries in increasing
    order, so results come out in lexicographic order of that reading sequence.
    """
    positions = [(r, k) for r, length in enumerate(shape_rows) for k in range(length)]
    grid = [[0] * length for length in shape_rows]
    remaining = None if content is None else list(content) + [0] * max(0, alphabet_max - len(content))

    def above_entry(r, k):
        if r == 0:
            return None
        col = offsets[r] + k
        j = col - offsets[r - 1]
        if 0 <= j < shape_rows[r - 1]:
            return grid[r - 1][j]
        return None

    def rec(idx):
        if idx == len(positions):
            yield tuple(tuple(row) for row in grid)
            return
        r, k = positions[idx]
        lo = 1
        if k > 0:
            lo = grid[r][k - 1]
        a = above_entry(r, k)
        if a is not None:
            lo = max(lo, a + 1)
        for x in range(lo, alphabet_max + 1):
            if remaining is not None:
                if remaining[x - 1] == 0:
                    continue
                remaining[x - 1] -= 1
            grid[r][k] = x
            yield from rec(idx + 1)
            if remaining is not None:
                remaining[x - 1] += 1

    yield from rec(0)


def enumerate_ssyt(
    lam: Partition, content: Optional[Sequence[int]] = None, alphabet_max: Optional[int] = None
) -> list[Tableau]:
    """All semistandard tableaux of shape ``lam`` with entries at most ``alphabet_max``.

    If ``content`` is given, only tableaux of that content are returned and
    ``alphabet_max`` defaults to its length.
    """
    lam = partition(lam)
    if content is not None:
        content = _normalize_content(content)
        if sum(content) != sum(lam):
            return []
        if alphabet_max is None:
            alphabet_max = len(content)
        if len(content) > alphabet_max:
            return []
    if alphabet_max is None:
        raise ValueError("alphabet_max is required when no content is given")
    if alphabet_max < 1 and lam:
        return []
    return [Tableau(rows) for rows in _fill(list(lam), [0] * len(lam), content, alphabet_max)]


def enumerate_skew_ssyt(s: SkewShape, content: Sequence[int]) -> list[SkewTableau]:
    """All semistandard fillings of the skew shape ``s`` with the given content."""
    content = _normalize_content(content)
    if sum(content) != s.size():
        return []
    lengths = list(s.row_lengths())
    offsets = [part(s.inner, r) for r in range(1, len(lengths) + 1)]
    return [
        SkewTableau(s.inner, rows)
        for rows in _fill(lengths, offsets, content, len(content))
    ]


# ---------------------------------------------------------------------------
# counts and signs


def decorated_count(t: Union[Tableau, SkewTableau], spec: Union[str, BoxCountSpec]) -> int:
    """Sum over boxes B of the boxes in ``spec``'s direction whose entries compare to B's.

    A skew tableau is counted on its completion with 0 in the inner boxes.
    """
    if isinstance(spec, str):
        spec = BoxCountSpec.parse(spec)
    if isinstance(t, SkewTableau):
        t = t.completion(0)
    pred = direction_predicate(spec.direction)
    cmp = _COMPARE[spec.comparator] if spec.comparator else None
    items = list(t.entries().items())
    total = 0
    for (r, c), x in items:
        for (r2, c2), y in items:
            if pred(r2 - r, c2 - c) and (cmp is None or cmp(y, x)):
                total += 1
    return total


def n_less(t: Union[Tableau, SkewTableau]) -> int:
    """``N^<``: pairs (B, B') with B' in a strictly higher row and a smaller entry."""
    if isinstance(t, SkewTableau):
        t = t.completion(0)
    total = 0
    rows = t.rows
    for r in range(1, len(rows)):
        for x in rows[r]:
            for above in rows[:r]:
                total += sum(1 for y in above if y < x)
    return total


def tableau_sign(t: Tableau) -> int:
    return sign_of(n_less(t))


def skew_sign(s: SkewTableau) -> int:
    return sign_of(n_less(s.completion(0)))


def is_yamanouchi(word: Sequence[int]) -> bool:
    """True iff every suffix of ``word`` has at least as many a's as b's whenever a < b."""
    counts: dict[int, int] = {}
    for x in reversed(word):
        counts[x] = counts.get(x, 0) + 1
        if x > 1 and counts[x] > counts.get(x - 1, 0):
            return False
    return True


# ---------------------------------------------------------------------------
# text form


def format_tableau(t: Union[Tableau, SkewTableau]) -> str:
    if isinstance(t, SkewTableau):
        rows = [
            ["."] * part(t.inner, r) + [str(x) for x in row]
            for r, row in enumerate(t.rows, start=1)
        ]
    else:
        rows = [[str(x) for x in row] for row in t.rows]
    return "/".join(",".join(row) for row in rows)


def parse_tableau(text: str) -> Union[Tableau, SkewTableau]:
    """Parse ``"1,1,2/2,3"`` or, with inner boxes as dots, ``".,.,1/.,2/1"``."""
    text = text.strip()
    if not text:
        return Tableau(())
    inner = []
    rows = []
    for chunk in text.split("/"):
        cells = [c.strip() for c in chunk.split(",")] if chunk.strip() else []
        dots = 0
        while dots < len(cells) and cells[dots] == ".":
            dots += 1
        if "." in cells[dots:]:
            raise ValueError(f"inner boxes must come first in each row: {chunk!r}")
        inner.append(dots)
        rows.append(tuple(int(c) for c in cells[dots:]))
    if any(inner):
        return SkewTableau(partition(inner), tuple(rows))
    return Tableau(tuple(rows))
