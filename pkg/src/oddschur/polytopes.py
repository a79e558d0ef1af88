"""Littlewood-Richardson triangles and hives, their quadratic forms, and lattice-point sums.

Both kinds of array are indexed by ``(i, j)`` with ``0 <= i <= j <= n`` and
stored as rows ``j = 0..n``, row j listing the values at ``(0, j), ..., (j, j)``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterator, Sequence

from .diagrams import Partition, box_count, part, partition, sign_of, weight
from .lr import LRQuery, _query
from .tableaux import SkewTableau, is_yamanouchi


def _check_rows(n: int, rows) -> tuple[tuple[int, ...], ...]:
    rows = tuple(tuple(int(x) for x in row) for row in rows)
    if len(rows) != n + 1 or any(len(row) != j + 1 for j, row in enumerate(rows)):
        raise ValueError(f"expected {n + 1} rows of lengths 1..{n + 1}")
    return rows


@dataclass(frozen=True, order=True)
class Triangle:
    n: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "rows", _check_rows(self.n, self.rows))

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.rows[j][i]

    @classmethod
    def zero(cls, n: int) -> "Triangle":
        return cls(n, tuple((0,) * (j + 1) for j in range(n + 1)))

    def to_json(self) -> str:
        return json.dumps([list(row) for row in self.rows])

    @classmethod
    def from_json(cls, text: str) -> "Triangle":
        rows = json.loads(text)
        return cls(len(rows) - 1, rows)


@dataclass(frozen=True, order=True)
class Hive:
    n: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "rows", _check_rows(self.n, self.rows))

    def __getitem__(self, ij: tuple[int, int]) -> int:
        """``h_{i,j}``, zero outside ``0 <= i <= j <= n``."""
        i, j = ij
        if i < 0 or i > j or j > self.n:
            return 0
        return self.rows[j][i]

    @classmethod
    def zero(cls, n: int) -> "Hive":
        return cls(n, tuple((0,) * (j + 1) for j in range(n + 1)))

    def to_json(self) -> str:
        return json.dumps([list(row) for row in self.rows])

    @classmethod
    def from_json(cls, text: str) -> "Hive":
        rows = json.loads(text)
        return cls(len(rows) - 1, rows)


def polytope_size(lam: Partition, mu: Partition, nu: Partition) -> int:
    return max(len(lam), len(mu), len(nu), 1)


# ---------------------------------------------------------------------------
# marginals and membership


def _as_partition(values: Sequence[int], kind: str) -> Partition:
    try:
        return partition(values)
    except ValueError:
        raise ValueError(f"not in any {kind}(lambda, mu, nu)") from None


def boundary_partitions(x) -> tuple[Partition, Partition, Partition]:
    """The three marginals ``(lam, mu, nu)`` of a triangle or hive."""
    n = x.n
    if isinstance(x, Triangle):
        if x[0, 0] != 0:
            raise ValueError("not in any triangle polytope: a_{0,0} must be 0")
        lam = [sum(x[p, j] for p in range(j + 1)) for j in range(1, n + 1)]
        mu = [x[0, j] for j in range(1, n + 1)]
        nu = [sum(x[i, q] for q in range(i, n + 1)) for i in range(1, n + 1)]
        kind = "triangle"
    else:
        if x[0, 0] != 0:
            raise ValueError("not a hive: h_{0,0} must be 0")
        lam = [x[j, j] - x[j - 1, j - 1] for j in range(1, n + 1)]
        mu = [x[0, j] - x[0, j - 1] for j in range(1, n + 1)]
        nu = [x[i, n] - x[i - 1, n] for i in range(1, n + 1)]
        kind = "hive"
    return _as_partition(lam, kind), _as_partition(mu, kind), _as_partition(nu, kind)


def is_lr_triangle(a: Triangle, diagonal_lattice: bool = True) -> bool:
    """Check the LR-triangle inequalities.

    The lattice inequalities ``sum_{q=i}^{j} a_{i,q} >= sum_{q=i+1}^{j+1} a_{i+1,q}``
    are imposed for ``1 <= i <= j < n``. Without the ``i = j`` cases
    (``diagonal_lattice=False``) the polytope can contain points that are not
    of the form ``A_S``, e.g. rows ``(0), (2,0), (0,1,1)``.
    """
    n = a.n
    for j in range(1, n + 1):
        for i in range(1, j):
            if a[i, j] < 0:
                return False
    for j in range(1, n):
        for i in range(1, j + 1):
            if sum(a[p, j] for p in range(i)) < sum(a[p, j + 1] for p in range(i + 1)):
                return False
    for j in range(1, n):
        for i in range(1, j + 1 if diagonal_lattice else j):
            if sum(a[i, q] for q in range(i, j + 1)) < sum(a[i + 1, q] for q in range(i + 1, j + 2)):
                return False
    return True


def hive_violations(h: Hive) -> list[tuple[str, int, int]]:
    """The rhombus inequalities ``(kind, i, j)`` that ``h`` fails."""
    n = h.n
    bad = []
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            if i < j and h[i, j] - h[i, j - 1] < h[i - 1, j] - h[i - 1, j - 1]:
                bad.append(("R", i, j))
            if j < n and h[i - 1, j] - h[i - 1, j - 1] < h[i, j + 1] - h[i, j]:
                bad.append(("V", i, j))
            if j < n and h[i, j] - h[i - 1, j] < h[i + 1, j + 1] - h[i, j + 1]:
                bad.append(("L", i, j))
    return bad


def is_hive(h: Hive) -> bool:
    return h[0, 0] == 0 and not hive_violations(h)


# ---------------------------------------------------------------------------
# tableaux <-> triangles


def triangle_from_skew_tableau(s: SkewTableau, n: int | None = None) -> Triangle:
    """``A_S``: ``a_{0,j} = mu_j`` and ``a_{i,j}`` counts the entries i in row j."""
    if not is_yamanouchi(s.row_word()):
        raise ValueError("not a Littlewood-Richardson tableau")
    lam, mu, nu = s.outer, s.inner, s.content()
    if n is None:
        n = polytope_size(lam, mu, nu)
    rows = [[0]]
    for j in range(1, n + 1):
        row_entries = s.rows[j - 1] if j <= len(s.rows) else ()
        counts = [row_entries.count(i) for i in range(1, j + 1)]
        if any(x > j for x in row_entries):
            raise ValueError("entry larger than its row index")
        rows.append([part(mu, j)] + counts)
    return Triangle(n, rows)


def skew_tableau_from_triangle(a: Triangle) -> SkewTableau:
    lam, mu, nu = boundary_partitions(a)
    if not is_lr_triangle(a):
        raise ValueError("not a Littlewood-Richardson triangle")
    rows = []
    for j in range(1, a.n + 1):
        row = []
        for i in range(1, j + 1):
            row.extend([i] * a[i, j])
        rows.append(tuple(row))
    return SkewTableau(mu, tuple(rows))


# ---------------------------------------------------------------------------
# quadratic forms and Phi


def q_triangle(a: Triangle) -> int:
    """``Q(A) = sum a_{i,j} Y_{i,j}`` with ``Y_{i,j} = sum_{p<i} sum_{q=p}^{j-1} a_{p,q}``."""
    n = a.n
    total = 0
    for j in range(n + 1):
        for i in range(j + 1):
            if not a[i, j]:
                continue
            y = sum(a[p, q] for p in range(i) for q in range(p, j))
            total += a[i, j] * y
    return total


def phi(a: Triangle) -> Hive:
    """``h_{i,j} = sum_{p<=i} sum_{q=p}^{j} a_{p,q}``."""
    n = a.n
    return Hive(n, [
        [sum(a[p, q] for p in range(i + 1) for q in range(p, j + 1)) for i in range(j + 1)]
        for j in range(n + 1)
    ])


def phi_inverse(h: Hive) -> Triangle:
    n = h.n
    rows = []
    for j in range(n + 1):
        row = []
        for i in range(j + 1):
            if i < j:
                row.append(h[i, j] - h[i - 1, j] - h[i, j - 1] + h[i - 1, j - 1])
            else:
                row.append(h[i, i] - h[i - 1, i])
        rows.append(row)
    return Triangle(n, rows)


def rhombus_terms(h: Hive) -> Iterator[tuple[int, int, int]]:
    """``(i, j, h_{i,j} - h_{i-1,j} - h_{i,j-1} + h_{i-1,j-1})`` for ``1 <= i <= j <= n``."""
    for i in range(1, h.n + 1):
        for j in range(i, h.n + 1):
            yield i, j, h[i, j] - h[i - 1, j] - h[i, j - 1] + h[i - 1, j - 1]


def q_hive(h: Hive) -> int:
    total = sum(h[i - 1, j - 1] * t for i, j, t in rhombus_terms(h))
    return total - sum(h[i, i] ** 2 for i in range(1, h.n))


# ---------------------------------------------------------------------------
# enumeration


def _padded(p: Partition, n: int) -> list[int]:
    return [0] + [part(p, i) for i in range(1, n + 1)]


def enumerate_triangles(lam, mu, nu, n: int | None = None) -> list[Triangle]:
    """Integer points of the LR-triangle polytope for ``(lam, mu, nu)``.

    Rows are filled top-down; within a row each ``a_{i,j}`` (``0 < i < j``) ranges
    over ``0 .. sum_{p<i} a_{p,j-1} - sum_{p<i} a_{p,j}`` and ``a_{j,j}`` is forced
    by ``lam_j``. Partial ``nu`` sums prune the search.
    """
    lam, mu, nu = partition(lam), partition(mu), partition(nu)
    if n is None:
        n = polytope_size(lam, mu, nu)
    if max(len(lam), len(mu), len(nu)) > n or weight(mu) + weight(nu) != weight(lam):
        return []
    L, M, N = _padded(lam, n), _padded(mu, n), _padded(nu, n)
    rows: list[list[int]] = [[0]]
    nu_used = [0] * (n + 1)
    out = []

    def fill_row(j: int, row: list[int], i: int):
        if i == j:
            diag = L[j] - sum(row)
            if nu_used[j] + diag > N[j] and j < n:
                return
            row.append(diag)
            nu_used[j] += diag
            rows.append(row[:])
            if all(nu_used[p] <= N[p] for p in range(1, j + 1)):
                if j == n:
                    finish()
                else:
                    fill_row(j + 1, [M[j + 1]], 1)
            rows.pop()
            nu_used[j] -= diag
            row.pop()
            return
        upper = sum(rows[j - 1][:i]) - sum(row[:i])
        upper = min(upper, N[i] - nu_used[i])
        for v in range(0, upper + 1):
            row.append(v)
            nu_used[i] += v
            fill_row(j, row, i + 1)
            nu_used[i] -= v
            row.pop()

    def finish():
        t = Triangle(n, rows)
        if is_lr_triangle(t) and boundary_partitions(t) == (lam, mu, nu):
            out.append(t)

    fill_row(1, [M[1]], 1)
    return sorted(out)


def enumerate_hives(lam, mu, nu, n: int | None = None, method: str = "direct") -> list[Hive]:
    """Integer points of the hive polytope, by rhombus backtracking or as the image of triangles."""
    lam, mu, nu = partition(lam), partition(mu), partition(nu)
    if n is None:
        n = polytope_size(lam, mu, nu)
    if method == "phi":
        return sorted(phi(a) for a in enumerate_triangles(lam, mu, nu, n))
    if method != "direct":
        raise ValueError(f"unknown method {method!r}")
    if max(len(lam), len(mu), len(nu)) > n or weight(mu) + weight(nu) != weight(lam):
        return []
    L, M, N = _padded(lam, n), _padded(mu, n), _padded(nu, n)
    grid = [[None] * (j + 1) for j in range(n + 1)]
    for j in range(n + 1):
        grid[j][0] = sum(M[: j + 1])
        grid[j][j] = sum(L[: j + 1])
    for i in range(n + 1):
        grid[n][i] = weight(mu) + sum(N[1: i + 1])

    def h(i, j):
        return grid[j][i]

    cells = [(i, j) for j in range(2, n) for i in range(1, j)]
    out = []

    def rec(idx):
        if idx == len(cells):
            hv = Hive(n, grid)
            if not hive_violations(hv):
                out.append(hv)
            return
        i, j = cells[idx]
        lo = h(i, j - 1) + h(i - 1, j) - h(i - 1, j - 1)
        hi = h(i, j - 1) + h(i - 1, j - 1) - h(i - 1, j - 2)
        if i >= 2:
            hi = min(hi, h(i - 1, j) + h(i - 1, j - 1) - h(i - 2, j - 1))
        for v in range(lo, hi + 1):
            grid[j][i] = v
            rec(idx + 1)
        grid[j][i] = None

    rec(0)
    return sorted(out)


# ---------------------------------------------------------------------------
# signed lattice sums


def _prefactor(q: LRQuery) -> int:
    return sign_of(box_count(q.mu, "N") + box_count(q.lam, "N"))


def lr_triangle(q_or_mu, nu=None, lam=None) -> int:
    q = _query(q_or_mu, nu, lam)
    points = enumerate_triangles(q.lam, q.mu, q.nu)
    return _prefactor(q) * sum(sign_of(q_triangle(a)) for a in points)


def lr_hive(q_or_mu, nu=None, lam=None) -> int:
    q = _query(q_or_mu, nu, lam)
    points = enumerate_hives(q.lam, q.mu, q.nu)
    return _prefactor(q) * sum(sign_of(q_hive(h)) for h in points)


def lattice_points(q: LRQuery, kind: str = "triangle") -> list:
    if kind == "triangle":
        return enumerate_triangles(q.lam, q.mu, q.nu)
    if kind == "hive":
        return enumerate_hives(q.lam, q.mu, q.nu)
    raise ValueError(f"unknown polytope {kind!r}")

