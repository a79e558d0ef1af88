"""Odd Littlewood-Richardson coefficients.

Several independent routes are provided: expansion of ``s_mu s_nu`` in
``OPol_n``, the even-plactic sum over tableaux ``U`` with ``U T_nu = T_lam``,
the signed Yamanouchi rule, and (via ``polytopes``) signed lattice-point sums.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional

from .diagrams import (
    Partition,
    SkewShape,
    box_count,
    enumerate_partitions,
    part,
    partition,
    sign_of,
    transpose,
    weight,
)
from .oddsym import expand_in_basis
from .opol import monomial_of_word
from .plactic import even_product
from .schur import schur_plactic
from .tableaux import (
    SkewTableau,
    Tableau,
    enumerate_skew_ssyt,
    enumerate_ssyt,
    is_yamanouchi,
    n_less,
    superstandard,
)

ODD_METHODS = ("direct", "yamanouchi", "plactic", "triangle", "hive")
METHODS = ODD_METHODS + ("even",)


@dataclass(frozen=True)
class LRQuery:
    mu: Partition
    nu: Partition
    lam: Partition

    def __post_init__(self):
        object.__setattr__(self, "mu", partition(self.mu))
        object.__setattr__(self, "nu", partition(self.nu))
        object.__setattr__(self, "lam", partition(self.lam))

    def degree_ok(self) -> bool:
        return weight(self.mu) + weight(self.nu) == weight(self.lam)

    def skew_shape(self) -> Optional[SkewShape]:
        """``lam / mu``, or None if ``mu`` does not fit inside ``lam``."""
        try:
            return SkewShape(self.lam, self.mu)
        except ValueError:
            return None


class LRDisagreement(RuntimeError):
    def __init__(self, mu, nu, divergent: dict):
        self.divergent = divergent
        lines = [f"methods disagree for mu={mu} nu={nu}:"]
        for lam, values in sorted(divergent.items(), reverse=True):
            lines.append(f"  lambda={lam}: " + ", ".join(f"{m}={v}" for m, v in values.items()))
        super().__init__("\n".join(lines))


def _query(q_or_mu, nu=None, lam=None) -> LRQuery:
    if isinstance(q_or_mu, LRQuery):
        return q_or_mu
    return LRQuery(q_or_mu, nu, lam)


# ---------------------------------------------------------------------------
# direct expansion


@lru_cache(maxsize=None)
def direct_table(mu: Partition, nu: Partition) -> dict[Partition, int]:
    """Coordinates of ``s_mu s_nu`` over the odd Schur images in ``OPol_n``, ``n = |mu| + |nu|``."""
    k = weight(mu) + weight(nu)
    n = max(k, 1)
    f = schur_plactic(mu, n) * schur_plactic(nu, n)
    return dict(expand_in_basis(f, "s", k).terms)


def lr_direct(q_or_mu, nu=None, lam=None) -> int:
    q = _query(q_or_mu, nu, lam)
    if not q.degree_ok():
        return 0
    return direct_table(q.mu, q.nu).get(q.lam, 0)


# ---------------------------------------------------------------------------
# Yamanouchi rule


def lr_tableaux(q_or_mu, nu=None, lam=None) -> list[SkewTableau]:
    """Littlewood-Richardson tableaux of shape ``lam / mu`` and content ``nu``."""
    q = _query(q_or_mu, nu, lam)
    shape = q.skew_shape()
    if shape is None or not q.degree_ok():
        return []
    return [s for s in enumerate_skew_ssyt(shape, q.nu) if is_yamanouchi(s.row_word())]


def lr_yamanouchi_detail(q_or_mu, nu=None, lam=None) -> tuple[int, list[tuple[SkewTableau, int]]]:
    """The prefactor exponent ``N(mu) + N(lam)`` and each LR tableau with its ``N^<``."""
    q = _query(q_or_mu, nu, lam)
    prefactor = box_count(q.mu, "N") + box_count(q.lam, "N")
    return prefactor, [(s, n_less(s)) for s in lr_tableaux(q)]


def lr_yamanouchi(q_or_mu, nu=None, lam=None) -> int:
    prefactor, items = lr_yamanouchi_detail(q_or_mu, nu, lam)
    return sign_of(prefactor) * sum(sign_of(e) for _, e in items)


def lr_even(q_or_mu, nu=None, lam=None) -> int:
    """The classical coefficient: the number of LR tableaux."""
    return len(lr_tableaux(q_or_mu, nu, lam))


# ---------------------------------------------------------------------------
# even plactic sum


def _skew_content(lam: Partition, nu: Partition) -> Optional[tuple[int, ...]]:
    diff = tuple(part(lam, i) - part(nu, i) for i in range(1, len(lam) + 1))
    if any(d < 0 for d in diff) or len(nu) > len(lam):
        return None
    return diff


def plactic_witnesses(q_or_mu, nu=None, lam=None) -> list[Tableau]:
    """All ``U`` in SSYT(mu) of content ``lam - nu`` with ``U T_nu = T_lam`` in the even plactic monoid."""
    q = _query(q_or_mu, nu, lam)
    if not q.degree_ok():
        return []
    content = _skew_content(q.lam, q.nu)
    if content is None:
        return []
    t_nu, t_lam = superstandard(q.nu), superstandard(q.lam)
    return [
        u for u in enumerate_ssyt(q.mu, content, alphabet_max=max(len(q.lam), 1))
        if even_product(u, t_nu) == t_lam
    ]


def monomial_sign(y, z) -> int:
    """``sign(Y, Z)`` for monomials with ``Y = +-Z``, read off as a coefficient ratio."""
    if len(y) != 1 or len(z) != 1:
        raise ValueError("sign(Y, Z) needs two single-term monomials")
    (ey, cy), = y.terms.items()
    (ez, cz), = z.terms.items()
    if ey != ez or abs(cy) != abs(cz):
        raise ValueError("monomials are not proportional by a sign")
    return cy // cz


def lr_plactic(q_or_mu, nu=None, lam=None, signs: str = "formula") -> int:
    """The sum over even-plactic witnesses ``U``.

    With ``signs="formula"`` each ``U`` contributes ``(-1)^N^<(U)`` times a closed-form
    prefactor; with ``signs="monomial"`` the sign between ``x~^(w_r(U)) x~^(w_r(T_nu))``
    and ``x~^(w_r(T_lam))`` is computed directly.
    """
    q = _query(q_or_mu, nu, lam)
    mu, nu, lam = q.mu, q.nu, q.lam
    witnesses = plactic_witnesses(q)
    if not witnesses:
        return 0
    d_n = box_count(mu, "dN") + box_count(nu, "dN") + box_count(lam, "dN")
    if signs == "formula":
        cross = sum(
            (part(lam, i) - part(nu, i)) * sum(nu[: i - 1]) for i in range(1, len(lam) + 1)
        )
        prefactor = d_n + box_count(mu, "N") + cross
        return sign_of(prefactor) * sum(sign_of(n_less(u)) for u in witnesses)
    if signs == "monomial":
        n = max(len(lam), 1)
        prefactor = d_n + box_count(mu, "N") + box_count(nu, "N") + box_count(lam, "N")
        target = monomial_of_word(superstandard(lam).row_word(), n)
        total = 0
        for u in witnesses:
            y = monomial_of_word(u.row_word() + superstandard(nu).row_word(), n)
            total += monomial_sign(y, target)
        return sign_of(prefactor) * total
    raise ValueError(f"unknown sign mode {signs!r}")


# ---------------------------------------------------------------------------
# dispatch, tables and symmetries


def lr_coefficient(q_or_mu, nu=None, lam=None, method: str = "direct") -> int:
    q = _query(q_or_mu, nu, lam)
    if method == "direct":
        return lr_direct(q)
    if method == "yamanouchi":
        return lr_yamanouchi(q)
    if method == "plactic":
        return lr_plactic(q)
    if method == "even":
        return lr_even(q)
    if method in ("triangle", "hive"):
        from . import polytopes

        return polytopes.lr_triangle(q) if method == "triangle" else polytopes.lr_hive(q)
    raise ValueError(f"unknown method {method!r}")


def lr_table(mu: Iterable[int], nu: Iterable[int], method: str = "direct") -> dict[Partition, int]:
    """All nonzero ``c^lam_{mu nu}``; ``method="all"`` cross-checks the odd methods."""
    mu, nu = partition(mu), partition(nu)
    lams = enumerate_partitions(weight(mu) + weight(nu))
    if method != "all":
        table = {lam: lr_coefficient(mu, nu, lam, method) for lam in lams}
        return {lam: c for lam, c in table.items() if c}
    out = {}
    divergent = {}
    for lam in lams:
        values = {m: lr_coefficient(mu, nu, lam, m) for m in ODD_METHODS}
        if len(set(values.values())) > 1:
            divergent[lam] = values
        elif values["direct"]:
            out[lam] = values["direct"]
    if divergent:
        raise LRDisagreement(mu, nu, divergent)
    return out


def swap_sign(mu: Partition, nu: Partition, lam: Partition) -> int:
    """The sign relating ``c^lam_{mu nu}`` and ``c^lam_{nu mu}``."""
    e = sum(box_count(p, "dN") + box_count(p, "N") for p in (mu, nu, lam))
    return sign_of(e)


def transpose_sign(mu: Partition, nu: Partition, lam: Partition) -> int:
    """The sign relating ``c^lam_{mu nu}`` and ``c^{lam^T}_{mu^T nu^T}``."""
    return sign_of(sum(box_count(p, "NE") for p in (mu, nu, lam)))


def transpose_query(q: LRQuery) -> LRQuery:
    return LRQuery(transpose(q.mu), transpose(q.nu), transpose(q.lam))
