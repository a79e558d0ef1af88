import random
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from oddschur.opol import SkewPolynomial, monomial_of_word
from oddschur.plactic import (
    STRATEGIES,
    KnuthError,
    PlacticElement,
    apply_move,
    even_product,
    format_word,
    knuth_class,
    knuth_normalize,
    parse_word,
    plactic_multiply,
    plactic_schur,
    schur_sign,
    to_opol,
)
from oddschur.tableaux import Tableau, enumerate_ssyt, superstandard

from oracles import rsk_rows, signed_normal_form

words_st = st.lists(st.integers(1, 4), max_size=7)


def test_knuth_normalize_examples():
    t = Tableau(((1, 3), (2,)))
    assert knuth_normalize((2, 1, 3)) == (1, t)
    assert knuth_normalize((2, 3, 1)) == (-1, t)
    assert knuth_normalize((1, 2, 1)) == (-1, Tableau(((1, 1), (2,))))
    assert knuth_normalize(()) == (1, Tableau(()))


@pytest.mark.parametrize("strategy", STRATEGIES)
def test_row_words_are_fixed(strategy):
    for lam in [(3, 2, 1), (2, 2), (4, 1)]:
        for t in enumerate_ssyt(lam, alphabet_max=3):
            assert knuth_normalize(t.row_word(), strategy) == (1, t)


@pytest.mark.parametrize("strategy", STRATEGIES)
@settings(max_examples=150, deadline=None)
@given(words_st)
def test_normalize_matches_class_oracle(strategy, word):
    sign, t = knuth_normalize(word, strategy)
    expected_sign, rows = signed_normal_form(word)
    assert (sign, t.rows) == (expected_sign, rows)


def test_strategies_agree_exhaustively_short():
    for length in range(7):
        for word in product(range(1, 4), repeat=length):
            results = {knuth_normalize(word, s) for s in STRATEGIES}
            assert len(results) == 1, word


@given(words_st)
def test_shape_matches_rsk(word):
    _, t = knuth_normalize(word)
    assert t.rows == rsk_rows(word)


def test_knuth_class_signs_are_consistent():
    cls = knuth_class((3, 1, 2, 2, 1))
    for w, s in cls.items():
        assert knuth_normalize(w)[0] * s == knuth_normalize((3, 1, 2, 2, 1))[0]


def test_apply_move_validates_pattern():
    w = [2, 3, 1]
    apply_move(w, 0, "K'")
    assert w == [2, 1, 3]
    with pytest.raises(KnuthError):
        apply_move([1, 2, 3], 0, "K'")
    with pytest.raises(KnuthError):
        apply_move([1, 2, 3], 0, "K''")


def test_plactic_multiply_examples():
    n = 3
    t = PlacticElement.tableau(Tableau(((1, 1, 2), (2, 3))), n)
    one = PlacticElement.tableau(Tableau(()), n)
    assert plactic_multiply(t, one) == t
    assert plactic_multiply(one, t) == t
    xz = PlacticElement.tableau(Tableau(((1, 2),)), n)
    y = PlacticElement.tableau(Tableau(((1,),)), n)
    assert plactic_multiply(xz, y) == -PlacticElement.tableau(Tableau(((1, 1), (2,))), n)


def test_cancellation_products():
    # U * T_(2,1) for the two even-plactic witnesses of c^(3,2,1)_(2,1),(2,1)
    t_nu = superstandard((2, 1))
    t_lam = superstandard((3, 2, 1))
    witnesses = [u for u in enumerate_ssyt((2, 1), (1, 1, 1), alphabet_max=3) if even_product(u, t_nu) == t_lam]
    assert len(witnesses) == 2
    for u in witnesses:
        p = plactic_multiply(PlacticElement.tableau(u, 3), PlacticElement.tableau(t_nu, 3))
        assert set(p.terms) == {t_lam}
        assert abs(p.terms[t_lam]) == 1


def test_plactic_element_validation():
    with pytest.raises(ValueError):
        PlacticElement.tableau(Tableau(((1, 4),)), 3)


def test_plactic_schur_examples():
    s1 = plactic_schur((1,), 3)
    assert s1.terms == {Tableau(((i,),)): 1 for i in (1, 2, 3)}
    assert plactic_schur((1, 1), 2).terms == {Tableau(((1,), (2,))): 1}
    assert schur_sign((1, 1)) == 1
    assert not plactic_schur((1, 1, 1), 2)


def test_to_opol_examples():
    t = Tableau(((1, 1, 2), (2, 3)))
    assert to_opol(PlacticElement.tableau(t, 3)) == monomial_of_word((2, 3, 1, 1, 2), 3)
    assert to_opol(PlacticElement(3)) == SkewPolynomial.zero(3)


def random_element(rng, n, max_size=4):
    terms = {}
    for _ in range(rng.randint(1, 3)):
        word = [rng.randint(1, n) for _ in range(rng.randint(0, max_size))]
        _, t = knuth_normalize(word)
        terms[t] = terms.get(t, 0) + rng.choice((-2, -1, 1, 2))
    return PlacticElement(n, terms)


def test_to_opol_is_multiplicative():
    rng = random.Random(2024)
    for _ in range(200):
        p, q = random_element(rng, 3), random_element(rng, 3)
        assert to_opol(plactic_multiply(p, q)) == to_opol(p) * to_opol(q)


@settings(max_examples=60, deadline=None)
@given(words_st, words_st, words_st)
def test_plactic_multiply_associative(a, b, c):
    pa, pb, pc = (PlacticElement.word(w, 4) for w in (a, b, c))
    assert plactic_multiply(plactic_multiply(pa, pb), pc) == plactic_multiply(pa, plactic_multiply(pb, pc))


@given(words_st, words_st)
def test_even_product_is_rsk(a, b):
    ta, tb = Tableau(rsk_rows(a)), Tableau(rsk_rows(b))
    assert even_product(ta, tb).rows == rsk_rows(ta.row_word() + tb.row_word())


def test_word_text_round_trip():
    assert parse_word("53422331112") == (5, 3, 4, 2, 2, 3, 3, 1, 1, 1, 2)
    assert parse_word("1,10,2") == (1, 10, 2)
    assert parse_word(format_word((1, 10, 2))) == (1, 10, 2)
    assert parse_word(format_word((3, 1, 2))) == (3, 1, 2)
    with pytest.raises(ValueError):
        parse_word("1a")


@settings(max_examples=100, deadline=None)
@given(words_st, words_st)
def test_product_mod_two_is_even_product(a, b):
    _, ta = knuth_normalize(a)
    _, tb = knuth_normalize(b)
    p = plactic_multiply(PlacticElement.tableau(ta, 4), PlacticElement.tableau(tb, 4))
    (t, c), = p.terms.items()
    assert abs(c) == 1
    assert t == even_product(ta, tb)


@pytest.mark.parametrize("lam", [(1,), (2, 1), (2, 2), (3, 1), (2, 1, 1)])
def test_plactic_schur_image(lam):
    from oddschur.schur import schur_combinatorial

    n = sum(lam)
    assert to_opol(plactic_schur(lam, n)) == schur_combinatorial(lam, n)
