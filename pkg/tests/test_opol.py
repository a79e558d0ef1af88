import random

import pytest
from hypothesis import given, settings, strategies as st

from oddschur.opol import (
    FreeWordPolynomial,
    SkewPolynomial,
    complete,
    divided_difference,
    elementary,
    format_polynomial,
    is_odd_symmetric,
    lift,
    longest_divided_difference,
    longest_word,
    monomial_of_word,
    normalize,
    parse_polynomial,
    si_action,
    w0_twist,
)

from oracles import free_divided_difference, inversions_distinct, skew_poly_product, tilde_sum


def x(i, n=3):
    return SkewPolynomial.variable(i, n)


def word_poly(word, n):
    return SkewPolynomial.from_word(word, n)


def from_sorted_dict(d, n):
    out = SkewPolynomial.zero(n)
    for w, c in d.items():
        out = out + word_poly(w, n) * c
    return out


def skew_polys(n, max_terms=3, max_len=3):
    word = st.lists(st.integers(1, n), max_size=max_len).map(tuple)
    return st.dictionaries(word, st.integers(-3, 3), max_size=max_terms)


def test_normalize_examples():
    assert normalize((1, 3, 2)) == (-1, (1, 2, 3))
    assert normalize((2, 1, 1)) == (1, (1, 1, 2))
    assert normalize((1, 1)) == (1, (1, 1))


@given(st.lists(st.integers(1, 4), max_size=8))
def test_normalize_sign_counts_distinct_inversions(word):
    sign, sorted_word = normalize(word)
    assert sorted_word == tuple(sorted(word))
    assert sign == (-1) ** inversions_distinct(word)


def test_multiply_identities():
    x1, x2 = x(1, 2), x(2, 2)
    assert (x1 + x2) * x1 == x1 * (x1 - x2)
    assert (x1 - x2) * (x1 - x2) == x1 * x1 + x2 * x2
    assert (x1 - x2) * (x1 - x2) == (x1 + x2) * (x1 + x2)
    f = x1 * x2 + x1 * 3
    assert SkewPolynomial.one(2) * f == f


@given(skew_polys(3), skew_polys(3))
def test_multiply_matches_bubble_sort_oracle(f, g):
    got = from_sorted_dict(f, 3) * from_sorted_dict(g, 3)
    fs = {}
    for w, c in f.items():
        s, key = normalize(w)
        fs[key] = fs.get(key, 0) + s * c
    gs = {}
    for w, c in g.items():
        s, key = normalize(w)
        gs[key] = gs.get(key, 0) + s * c
    expected = skew_poly_product({k: v for k, v in fs.items() if v}, {k: v for k, v in gs.items() if v})
    assert got == from_sorted_dict(expected, 3)


@given(skew_polys(3), skew_polys(3), skew_polys(3))
def test_multiply_associative(f, g, h):
    f, g, h = (from_sorted_dict(d, 3) for d in (f, g, h))
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h


def test_anticommutation():
    for i in range(1, 4):
        for j in range(1, 4):
            if i != j:
                assert x(i) * x(j) == -(x(j) * x(i))
    assert x(1) * x(1) * x(2) == x(2) * x(1) * x(1)


def test_si_action_examples():
    assert si_action(1, x(1) * x(2)) == -(x(1) * x(2))
    assert si_action(1, SkewPolynomial.one(3)) == SkewPolynomial.one(3)
    assert si_action(1, x(3)) == -x(3)


@given(skew_polys(3), skew_polys(3), st.integers(1, 2))
def test_si_is_multiplicative_and_involutive(f, g, i):
    f, g = from_sorted_dict(f, 3), from_sorted_dict(g, 3)
    assert si_action(i, f * g) == si_action(i, f) * si_action(i, g)
    assert si_action(i, si_action(i, f)) == f


def test_si_on_free_words_descends():
    w = FreeWordPolynomial.word((2, 1, 3), 3)
    assert si_action(1, w).to_skew() == si_action(1, w.to_skew())


def test_w0_twist_examples():
    assert w0_twist(x(1, 2)) == -x(2, 2)
    assert w0_twist(SkewPolynomial.one(2) * 5) == SkewPolynomial.one(2) * 5
    assert w0_twist(x(1, 2) * x(2, 2)) == -(x(1, 2) * x(2, 2))


def test_divided_difference_examples():
    assert divided_difference(1, x(1)) == SkewPolynomial.one(3)
    assert divided_difference(1, x(2)) == SkewPolynomial.one(3)
    assert divided_difference(1, x(3)) == SkewPolynomial.zero(3)
    assert divided_difference(1, x(1) * x(2) + x(2) * x(1)) == SkewPolynomial.zero(3)
    assert divided_difference(1, x(1) * x(1)) == x(1) - x(2)


@given(st.lists(st.integers(1, 3), max_size=5).map(tuple), st.integers(1, 2))
def test_divided_difference_matches_leibniz_oracle(word, i):
    got = divided_difference(i, word_poly(word, 3))
    expected = SkewPolynomial.zero(3)
    for w, c in free_divided_difference(i, word).items():
        expected = expected + word_poly(w, 3) * c
    assert got == expected


@given(skew_polys(3), skew_polys(3), st.integers(1, 2))
def test_twisted_leibniz(f, g, i):
    f, g = from_sorted_dict(f, 3), from_sorted_dict(g, 3)
    lhs = divided_difference(i, f * g)
    rhs = divided_difference(i, f) * g + si_action(i, f) * divided_difference(i, g)
    assert lhs == rhs


def test_free_word_divided_difference_descends():
    for word in [(1, 2), (2, 1, 1), (1, 3, 2, 2)]:
        f = FreeWordPolynomial.word(word, 3)
        assert f.divided_difference(1).to_skew() == divided_difference(1, f.to_skew())
        assert lift(f.to_skew()).to_skew() == f.to_skew()


def test_longest_divided_difference_examples():
    assert longest_word(2) == [1]
    assert longest_divided_difference(x(1, 2)) == SkewPolynomial.one(2)
    assert longest_divided_difference(SkewPolynomial.one(3)) == SkewPolynomial.zero(3)
    f = x(1, 2) * x(1, 2) * x(1, 2)
    assert longest_divided_difference(f) == divided_difference(1, f)


def test_longest_divided_difference_applies_rightmost_first():
    f = word_poly((1, 1, 2, 1), 3)
    expected = f
    for i in reversed(longest_word(3)):
        expected = divided_difference(i, expected)
    assert longest_divided_difference(f) == expected


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_elementary_and_complete_match_definition(n):
    for k in range(0, n + 3):
        assert elementary(k, n) == from_sorted_dict(tilde_sum(n, k, strict=True), n)
        assert complete(k, n) == from_sorted_dict(tilde_sum(n, k, strict=False), n)


def test_elementary_examples():
    assert elementary(1, 3) == x(1) - x(2) + x(3)
    assert complete(1, 3) == elementary(1, 3)
    assert elementary(0, 3) == SkewPolynomial.one(3)
    assert elementary(4, 3) == SkewPolynomial.zero(3)


def test_monomial_of_word_examples():
    got = monomial_of_word((2, 3, 1, 1, 2), 3)
    sign = (-1) ** (1 + 2 + 0 + 0 + 1) * (-1) ** inversions_distinct((2, 3, 1, 1, 2))
    assert got == word_poly((1, 1, 2, 2, 3), 3) * sign
    assert monomial_of_word((), 3) == SkewPolynomial.one(3)
    assert monomial_of_word((1,), 3) == x(1)


def test_is_odd_symmetric_examples():
    for n in (2, 3, 4):
        for k in range(n + 1):
            assert is_odd_symmetric(elementary(k, n))
            assert is_odd_symmetric(complete(k, n))
    assert not is_odd_symmetric(x(1, 2))
    assert is_odd_symmetric(SkewPolynomial.one(2))


def test_polynomial_text_round_trip():
    rng = random.Random(7)
    for _ in range(50):
        terms = {}
        for _ in range(rng.randint(0, 4)):
            w = tuple(sorted(rng.choice((1, 2, 3)) for _ in range(rng.randint(0, 4))))
            terms[w] = rng.randint(-4, 4)
        f = from_sorted_dict({w: c for w, c in terms.items() if c}, 3)
        assert parse_polynomial(format_polynomial(f), 3) == f
    assert format_polynomial(SkewPolynomial.zero(2)) == "0"


@settings(max_examples=60, deadline=None)
@given(skew_polys(4, max_terms=4, max_len=5), st.integers(1, 3))
def test_divided_difference_squares_to_zero(f, i):
    f = from_sorted_dict(f, 4)
    assert divided_difference(i, divided_difference(i, f)) == SkewPolynomial.zero(4)
