"""The plactic, odd-symmetrized and combinatorial odd Schur polynomials, and Pieri rules."""

from __future__ import annotations

from math import comb
from typing import Iterable, Iterator, Optional

from .diagrams import (
    Partition,
    SkewShape,
    box_count,
    enumerate_partitions,
    part,
    partition,
    row_col_truncations,
    sign_of,
    strip_type,
    weight,
)
from .oddsym import SymFunction, expand_in_basis, schur_K, to_polynomial
from .opol import SkewPolynomial, longest_divided_difference, w0_twist
from .plactic import plactic_schur, to_opol

METHODS = ("plactic", "symmetrized", "kostka")


def schur_plactic(lam: Iterable[int], n: int) -> SkewPolynomial:
    """``(-1)^(dN + N) * sum over SSYT T of x~^(w_r(T))``."""
    return to_opol(plactic_schur(partition(lam), n))


def schur_symmetrized(lam: Iterable[int], n: int) -> SkewPolynomial:
    """``(-1)^C(n,3) * (d_w0(x^lam * x^delta))^w0`` with ``delta = (n-1, ..., 1, 0)``.

    ``x^lam * x^delta`` is a product in ``OPol_n``, so it carries a reordering sign.
    """
    lam = partition(lam)
    if len(lam) > n:
        raise ValueError(f"{lam} has more than {n} parts")
    x_lam = SkewPolynomial(n, {tuple(part(lam, i) for i in range(1, n + 1)): 1})
    x_delta = SkewPolynomial(n, {tuple(n - i for i in range(1, n + 1)): 1})
    f = longest_divided_difference(x_lam * x_delta)
    return w0_twist(f) * sign_of(comb(n, 3))


def schur_combinatorial(lam: Iterable[int], n: int) -> SkewPolynomial:
    return to_polynomial(schur_K(partition(lam)), n)


def schur(lam: Iterable[int], n: int, method: str) -> SkewPolynomial:
    if method == "plactic":
        return schur_plactic(lam, n)
    if method == "symmetrized":
        return schur_symmetrized(lam, n)
    if method == "kostka":
        return schur_combinatorial(lam, n)
    raise ValueError(f"unknown method {method!r}")


# ---------------------------------------------------------------------------
# Pieri rules


def vertical_strips(lam: Partition, k: int) -> Iterator[tuple[Partition, tuple[int, ...]]]:
    """Partitions obtained by adding a vertical strip of size ``k``, with the rows it occupies."""
    lam = partition(lam)
    for mu in enumerate_partitions(weight(lam) + k, max_height=len(lam) + k):
        try:
            s = SkewShape(mu, lam)
        except ValueError:
            continue
        if strip_type(s) in ("vertical", "both"):
            yield mu, tuple(r for r, _ in s.boxes())


def horizontal_strips(lam: Partition, k: int) -> Iterator[tuple[Partition, tuple[int, ...]]]:
    """Partitions obtained by adding a horizontal strip of size ``k``, with the columns it occupies."""
    lam = partition(lam)
    for mu in enumerate_partitions(weight(lam) + k, max_height=len(lam) + 1):
        try:
            s = SkewShape(mu, lam)
        except ValueError:
            continue
        if strip_type(s) in ("horizontal", "both"):
            yield mu, tuple(c for _, c in s.boxes())


def pieri_vertical(lam: Iterable[int], k: int) -> SymFunction:
    """Right-hand side of the e-right rule for ``s_lam * s_(1^k)`` in the s basis."""
    lam = partition(lam)
    terms = {}
    for mu, rows in vertical_strips(lam, k):
        terms[mu] = sign_of(sum(weight(row_col_truncations(lam, i).below) for i in rows))
    return SymFunction("s", terms)


def pieri_horizontal(lam: Iterable[int], k: int) -> SymFunction:
    """Right-hand side of the h-right rule for ``s_lam * s_(k)`` in the s basis.

    The rule reads ``(-1)^NE(lam) s_lam s_(k) = sum (-1)^(NE(mu) + sum |i|lam|) s_mu``.
    """
    lam = partition(lam)
    terms = {}
    base = box_count(lam, "NE")
    for mu, cols in horizontal_strips(lam, k):
        e = base + box_count(mu, "NE") + sum(weight(row_col_truncations(lam, i).right) for i in cols)
        terms[mu] = sign_of(e)
    return SymFunction("s", terms)


def pieri_product(lam: Iterable[int], k: int, kind: str, method: str = "kostka",
                  n: Optional[int] = None) -> SymFunction:
    """``s_lam * s_(1^k)`` (kind ``vertical``) or ``s_lam * s_(k)`` (``horizontal``).

    The product is formed in ``OPol_n`` from the chosen Schur images and expanded
    back into the s basis.
    """
    lam = partition(lam)
    right = (1,) * k if kind == "vertical" else ((k,) if k else ())
    if kind not in ("vertical", "horizontal"):
        raise ValueError(f"unknown strip kind {kind!r}")
    if n is None:
        n = weight(lam) + k
    f = schur(lam, n, method) * schur(right, n, method)
    return expand_in_basis(f, "s", weight(lam) + k)
