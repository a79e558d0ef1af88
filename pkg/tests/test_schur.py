import pytest

from oddschur.diagrams import SkewShape
from oddschur.oddsym import SymFunction, expand_in_basis
from oddschur.opol import SkewPolynomial, complete, elementary
from oddschur.schur import (
    METHODS,
    horizontal_strips,
    pieri_horizontal,
    pieri_product,
    pieri_vertical,
    schur,
    schur_combinatorial,
    schur_plactic,
    schur_symmetrized,
    vertical_strips,
)

from oracles import partitions_oracle


@pytest.mark.parametrize("method", METHODS)
@pytest.mark.parametrize("k", range(1, 6))
def test_straight_shapes(method, k):
    n = k
    assert schur((k,), n, method) == complete(k, n)
    assert schur((1,) * k, n, method) == elementary(k, n) * (-1) ** (k * (k - 1) // 2)


def test_empty_shape_is_one():
    assert schur_plactic((), 1) == SkewPolynomial.one(1)
    assert schur_symmetrized((), 1) == SkewPolynomial.one(1)
    assert schur_combinatorial((), 1) == SkewPolynomial.one(1)


def test_tall_shapes_vanish():
    assert schur_plactic((1, 1, 1), 2) == SkewPolynomial.zero(2)
    assert schur_combinatorial((2, 1, 1), 2) == SkewPolynomial.zero(2)
    with pytest.raises(ValueError):
        schur_symmetrized((1, 1, 1), 2)


def test_symmetrized_21():
    assert schur_symmetrized((2, 1), 3) == schur_plactic((2, 1), 3)


@pytest.mark.parametrize("lam", [lam for k in range(1, 6) for lam in partitions_oracle(k)])
def test_three_constructions_coincide(lam):
    n = sum(lam)
    p = schur_plactic(lam, n)
    assert schur_combinatorial(lam, n) == p
    assert schur_symmetrized(lam, n) == p


@pytest.mark.parametrize("lam", [(2, 1), (2, 2), (3, 1), (2, 1, 1)])
def test_coincidence_with_extra_variables(lam):
    n = sum(lam) + 1
    p = schur_plactic(lam, n)
    assert schur_combinatorial(lam, n) == p
    assert schur_symmetrized(lam, n) == p


@pytest.mark.parametrize("lam", [(1,), (2, 1), (3, 2, 1)])
def test_schur_images_are_odd_symmetric(lam):
    n = sum(lam)
    f = schur_plactic(lam, n)
    assert expand_in_basis(f, "s", n) == SymFunction("s", {lam: 1})


def strips_oracle(lam, k, vertical):
    out = []
    for mu in partitions_oracle(sum(lam) + k):
        try:
            s = SkewShape(mu, lam)
        except ValueError:
            continue
        bs = s.boxes()
        key = 0 if vertical else 1
        if len({b[key] for b in bs}) == len(bs):
            out.append(mu)
    return out


@pytest.mark.parametrize("lam", [(), (1,), (2, 1), (2, 2), (3, 1, 1)])
@pytest.mark.parametrize("k", [1, 2, 3])
def test_strip_enumeration(lam, k):
    assert [mu for mu, _ in vertical_strips(lam, k)] == strips_oracle(lam, k, True)
    assert [mu for mu, _ in horizontal_strips(lam, k)] == strips_oracle(lam, k, False)


def test_pieri_vertical_example():
    # s_1 * s_1 = s_2 + s_11 with the sign of the box below row 1
    assert pieri_vertical((1,), 1) == SymFunction("s", {(2,): 1, (1, 1): 1})
    assert pieri_product((1,), 1, "vertical") == pieri_vertical((1,), 1)


@pytest.mark.parametrize("lam", [(1,), (2,), (1, 1), (2, 1), (3, 1)])
@pytest.mark.parametrize("k", [1, 2])
def test_pieri_rules_small(lam, k):
    assert pieri_product(lam, k, "vertical") == pieri_vertical(lam, k)
    assert pieri_product(lam, k, "horizontal") == pieri_horizontal(lam, k)


@pytest.mark.parametrize("method", METHODS)
def test_pieri_methods_agree(method):
    assert pieri_product((2, 1), 2, "vertical", method) == pieri_vertical((2, 1), 2)
    assert pieri_product((2, 1), 2, "horizontal", method) == pieri_horizontal((2, 1), 2)


def test_pieri_even_coefficients_are_unsigned_counts():
    for lam in [(2, 1), (2, 2), (3, 1)]:
        for k in (1, 2):
            f = pieri_horizontal(lam, k)
            assert sorted(f.terms) == sorted(strips_oracle(lam, k, False))
            assert all(abs(c) == 1 for c in f.terms.values())


def test_unknown_method():
    with pytest.raises(ValueError):
        schur((1,), 1, "nope")
    with pytest.raises(ValueError):
        pieri_product((1,), 1, "diagonal")
