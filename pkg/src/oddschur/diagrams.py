"""Partitions, Young diagrams and box-counting functions.

Boxes are addressed as ``(row, column)`` pairs, 1-based, in English notation:
row 1 is the top row, so "North" means a strictly smaller row index.
Partitions are plain tuples of positive integers with no trailing zeros.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, NamedTuple, Optional, Union

Partition = tuple[int, ...]
Box = tuple[int, int]

DIRECTIONS = (
    "N", "S", "E", "W",
    "NE", "NW", "SE", "SW",
    "nE", "nW", "sE", "sW",
    "Ne", "Nw", "Se", "Sw",
    "dN", "dS", "dE", "dW",
)
COMPARATORS = ("<", "<=", ">", ">=")


def partition(parts: Iterable[int]) -> Partition:
    """Normalize ``parts`` to a partition, dropping trailing zeros.

    Raises ValueError if the parts are negative or not weakly decreasing.
    """
    parts = tuple(int(p) for p in parts)
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    for a, b in zip(parts, parts[1:]):
        if a < b:
            raise ValueError(f"parts of a partition must weakly decrease: {parts}")
    if any(p < 0 for p in parts):
        raise ValueError(f"parts of a partition must be non-negative: {parts}")
    return parts


def weight(lam: Partition) -> int:
    return sum(lam)


def part(lam: Partition, i: int) -> int:
    """The ``i``-th part (1-based), zero past the end."""
    return lam[i - 1] if 1 <= i <= len(lam) else 0


def transpose(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


def boxes(lam: Partition) -> list[Box]:
    return [(r, c) for r, length in enumerate(lam, start=1) for c in range(1, length + 1)]


def contains(outer: Partition, inner: Partition) -> bool:
    if len(inner) > len(outer):
        return False
    return all(a >= b for a, b in zip(outer, inner))


@dataclass(frozen=True)
class SkewShape:
    """The skew diagram ``outer / inner``."""

    outer: Partition
    inner: Partition = ()

    def __post_init__(self):
        object.__setattr__(self, "outer", partition(self.outer))
        object.__setattr__(self, "inner", partition(self.inner))
        if not contains(self.outer, self.inner):
            raise ValueError(f"{self.inner} is not contained in {self.outer}")

    def row_lengths(self) -> tuple[int, ...]:
        return tuple(a - part(self.inner, i) for i, a in enumerate(self.outer, start=1))

    def boxes(self) -> list[Box]:
        return [
            (r, c)
            for r, length in enumerate(self.outer, start=1)
            for c in range(part(self.inner, r) + 1, length + 1)
        ]

    def size(self) -> int:
        return weight(self.outer) - weight(self.inner)


@dataclass(frozen=True)
class BoxCountSpec:
    """A direction such as ``NE`` or ``dN``, optionally decorated with a comparator."""

    direction: str
    comparator: Optional[str] = None

    def __post_init__(self):
        if self.direction not in DIRECTIONS:
            raise ValueError(f"unknown direction {self.direction!r}")
        if self.comparator is not None and self.comparator not in COMPARATORS:
            raise ValueError(f"unknown comparator {self.comparator!r}")

    @classmethod
    def parse(cls, text: str) -> "BoxCountSpec":
        """Parse ``"NE"``, ``"E>"``, ``"N<"``, ``"sW>="`` and so on."""
        m = re.fullmatch(r"([A-Za-z]{1,2})(<=|>=|<|>|≤|≥)?", text.strip())
        if not m:
            raise ValueError(f"cannot parse box count {text!r}")
        comparator = {"≤": "<=", "≥": ">="}.get(m.group(2), m.group(2))
        return cls(m.group(1), comparator)

    def __str__(self):
        return self.direction + (self.comparator or "")


def _vertical_ok(code: str, dr: int) -> bool:
    # dr = row(other) - row(box)
    return {
        "N": dr < 0, "n": dr <= 0, "S": dr > 0, "s": dr >= 0, "": True,
    }[code]


def _horizontal_ok(code: str, dc: int) -> bool:
    return {
        "E": dc > 0, "e": dc >= 0, "W": dc < 0, "w": dc <= 0, "": True,
    }[code]


@lru_cache(maxsize=None)
def direction_predicate(direction: str):
    """Return ``f(dr, dc)`` telling whether the offset lies in ``direction``.

    ``dr``, ``dc`` are the row and column offsets of the other box relative
    to the reference box.
    """
    if direction not in DIRECTIONS:
        raise ValueError(f"unknown direction {direction!r}")
    if direction.startswith("d"):
        d = direction[1]
        if d in "NS":
            return lambda dr, dc: dc == 0 and _vertical_ok(d, dr)
        return lambda dr, dc: dr == 0 and _horizontal_ok(d, dc)
    if len(direction) == 1:
        if direction in "NS":
            vert, horiz = direction, ""
        else:
            vert, horiz = "", direction
    else:
        vert, horiz = direction
    return lambda dr, dc: (dr, dc) != (0, 0) and _vertical_ok(vert, dr) and _horizontal_ok(horiz, dc)


def box_count(shape: Union[Partition, SkewShape], spec: Union[str, BoxCountSpec]) -> int:
    """Sum over all boxes B of the number of boxes lying in ``spec``'s direction from B.

    A skew shape is counted on its outer diagram.
    """
    if isinstance(spec, str):
        spec = BoxCountSpec.parse(spec)
    if spec.comparator is not None:
        raise ValueError("decorated count requires a tableau")
    lam = shape.outer if isinstance(shape, SkewShape) else shape
    return _box_count(tuple(lam), spec.direction)


@lru_cache(maxsize=4096)
def _box_count(lam: Partition, direction: str) -> int:
    pred = direction_predicate(direction)
    bs = boxes(lam)
    return sum(1 for (r, c) in bs for (r2, c2) in bs if pred(r2 - r, c2 - c))


def eps(lam: Partition) -> int:
    """The sign ``(-1)^dN(lam)``."""
    return -1 if box_count(lam, "dN") % 2 else 1


def sign_of(exponent: int) -> int:
    return -1 if exponent % 2 else 1


def strip_type(s: SkewShape) -> str:
    """Classify ``s`` as ``"horizontal"``, ``"vertical"``, ``"both"`` or ``"neither"``."""
    bs = s.boxes()
    rows = [r for r, _ in bs]
    cols = [c for _, c in bs]
    horizontal = len(set(cols)) == len(cols)
    vertical = len(set(rows)) == len(rows)
    if horizontal and vertical:
        return "both"
    if horizontal:
        return "horizontal"
    if vertical:
        return "vertical"
    return "neither"


class Truncations(NamedTuple):
    below: Partition   # rows 1..i removed
    above: Partition   # rows i..bottom removed
    right: Partition   # columns 1..i removed
    left: Partition    # columns i..rightmost removed


def row_col_truncations(lam: Partition, i: int) -> Truncations:
    if i < 1:
        raise ValueError("truncation index must be positive")
    below = tuple(lam[i:])
    above = tuple(lam[: i - 1])
    right = partition(max(p - i, 0) for p in lam)
    left = partition(min(p, i - 1) for p in lam)
    return Truncations(below, above, right, left)


def enumerate_partitions(
    k: int, max_height: Optional[int] = None, max_width: Optional[int] = None
) -> list[Partition]:
    """All partitions of ``k`` within the bounds, in descending lexicographic order."""
    if k < 0:
        raise ValueError("k must be non-negative")
    return list(_partitions(k, k if max_width is None else max_width,
                            k if max_height is None else max_height))


@lru_cache(maxsize=None)
def _partitions(k: int, largest: int, height: int) -> tuple[Partition, ...]:
    if k == 0:
        return ((),)
    if height == 0:
        return ()
    out = []
    for first in range(min(k, largest), 0, -1):
        for rest in _partitions(k - first, first, height - 1):
            out.append((first,) + rest)
    return tuple(out)


def format_partition(lam: Partition) -> str:
    return "[" + ",".join(str(p) for p in lam) + "]"


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if not (text.startswith("[") and text.endswith("]")):
        raise ValueError(f"partition must look like [3,2,1], got {text!r}")
    body = text[1:-1].strip()
    if not body:
        return ()
    try:
        parts = [int(x) for x in body.split(",")]
    except ValueError:
        raise ValueError(f"partition must look like [3,2,1], got {text!r}") from None
    if any(p <= 0 for p in parts):
        raise ValueError(f"partition parts must be positive, got {text!r}")
    return partition(parts)
