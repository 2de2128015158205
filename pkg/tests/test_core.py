from math import gcd

import pytest
from hypothesis import given, strategies as st

from aplcm import (
    InvalidInputError,
    NotCoprimeError,
    Progression,
    divides,
    new_progression,
    term,
    threshold_index,
)
from aplcm.core import as_ratio
from oracles import threshold_by_search

coprime_pairs = st.tuples(st.integers(1, 10**6), st.integers(1, 10**4)).filter(lambda t: gcd(*t) == 1)


def test_new_progression_accepts_coprime():
    assert new_progression(1, 2) == Progression(1, 2)
    assert new_progression(7, 1) == Progression(7, 1)


def test_new_progression_rejects_non_coprime():
    with pytest.raises(NotCoprimeError) as exc:
        new_progression(2, 2)
    assert exc.value.gcd == 2
    assert "not coprime" in str(exc.value)


@pytest.mark.parametrize("u0,r", [(0, 1), (1, 0), (0, 0), (-3, 2), (3, -2)])
def test_new_progression_rejects_nonpositive(u0, r):
    with pytest.raises(InvalidInputError):
        new_progression(u0, r)


def test_new_progression_rejects_non_integers():
    with pytest.raises(InvalidInputError):
        new_progression(1.0, 2)
    with pytest.raises(InvalidInputError):
        new_progression(True, 2)


def test_term():
    assert term(Progression(1, 2), 4) == 9
    assert term(Progression(13, 5), 0) == 13
    assert term(Progression._unchecked(2, 2), 8) == 18


def test_terms_iterator():
    assert list(Progression(1, 2).terms(0, 4)) == [1, 3, 5, 7, 9]
    assert list(Progression(1, 2).terms(2, 4)) == [5, 7, 9]
    assert list(Progression(1, 2).terms(3, 2)) == []


def test_threshold_index_examples():
    assert threshold_index(Progression(1, 2), 4) == 2
    assert threshold_index(Progression(10, 3), 5) == 0
    assert threshold_index(Progression(1, 2), 8) == 3
    for u0, r in [(1, 1), (5, 3), (17, 4)]:
        assert threshold_index(Progression(u0, r), u0) == 1


def test_threshold_index_rejects_zero():
    with pytest.raises(InvalidInputError):
        threshold_index(Progression(1, 2), 0)


@given(coprime_pairs, st.integers(1, 10**6))
def test_threshold_index_matches_oracle_and_range(pair, n):
    p = Progression(*pair)
    kn = threshold_index(p, n)
    assert kn == threshold_by_search(p.u0, p.r, n)
    assert 0 <= kn <= n
    if n <= p.u0:
        assert kn <= 1


@given(coprime_pairs, st.integers(0, 1000))
def test_terms_stay_coprime_to_r(pair, k):
    p = Progression(*pair)
    assert gcd(term(p, k), p.r) == 1


@pytest.mark.parametrize("u0,r", [(1, 2), (3, 2), (5, 6), (1, 1), (7, 10)])
def test_terms_coprime_to_r_up_to_1000(u0, r):
    p = Progression(u0, r)
    assert all(gcd(u, r) == 1 for u in p.terms(0, 1000))
    assert all(a < b for a, b in zip(p.terms(0, 999), p.terms(1, 1000)))


def test_divides_real_sense():
    assert divides(as_ratio(315, 8), 315)
    assert divides(as_ratio(1, 2), 3)
    assert not divides(as_ratio(3, 2), 4)
    assert divides(4, 12) and not divides(5, 12)


def test_ratio_is_reduced():
    c = as_ratio(945, 24)
    assert (c.numerator, c.denominator) == (315, 8)
    with pytest.raises(InvalidInputError):
        as_ratio(1, 0)
