import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from powersemigroup.core_sets import NaturalSet, add, dilate, gap, interval, normalize, translate
from powersemigroup.numerical_semigroup import from_complement, from_generators, interval_semigroup
from powersemigroup.power_structures import (
    CarrierTooLarge,
    EquivClassRep,
    enumerate_window,
    equivalent,
    phi,
    phi_inv,
    sigma,
    window_size,
)

from oracles import all_subsets

N = from_complement([])
S35 = from_generators([3, 5])


def S(text):
    return NaturalSet.parse(text)


def nat_sets(max_value=40):
    return st.lists(st.integers(0, max_value), min_size=1, max_size=10).map(NaturalSet)


@pytest.mark.parametrize(
    "s, bound, reduced, size",
    [(N, 2, False, 7), (S35, 8, False, 31), (N, 2, True, 4), (interval_semigroup(2), 10, False, 511)],
)
def test_window_sizes(s, bound, reduced, size):
    w = enumerate_window(s, bound, reduced)
    assert len(w) == size == window_size(s, bound, reduced)


@pytest.mark.parametrize(
    "s, bound, reduced",
    [(S35, 9, False), (S35, 9, True), (N, 4, False), (N, 4, True),
     (from_generators([2, 5], monoid=False), 7, False)],
)
def test_window_members_match_subset_oracle(s, bound, reduced):
    w = enumerate_window(s, bound, reduced)
    expected = [x for x in all_subsets(s.members_upto(bound)) if not reduced or 0 in x]
    expected.sort(key=lambda e: (e[-1], e[0], e))
    assert [list(x) for x in w.members] == expected
    assert all(w.index[x] == i for i, x in enumerate(w.members))


def test_window_errors():
    with pytest.raises(CarrierTooLarge):
        enumerate_window(N, 30, cap=1000)
    with pytest.raises(ValueError):
        enumerate_window(interval_semigroup(3), 2)
    with pytest.raises(ValueError):
        enumerate_window(interval_semigroup(3), 8, reduced=True)


def test_window_describe():
    w = enumerate_window(S35, 8)
    assert w.describe() == {
        "semigroup": {"gaps": [1, 2, 4, 7], "contains_zero": True},
        "bound": 8,
        "reduced": False,
        "size": 31,
    }


# -- sigma --

def test_sigma_examples():
    assert sigma(S("2,4,5")) == S("2,3,5")
    assert sigma(S("7")) == S("7")
    assert sigma(S("0,5,8,10")) == S("0,2,5,10")


@given(nat_sets())
def test_sigma_pointwise(x):
    y = sigma(x)
    assert sorted(x.beta + x.alpha - v for v in x) == list(y)
    assert (y.alpha, y.beta, gap(y)) == (x.alpha, x.beta, gap(x))
    assert sigma(y) == x


@given(nat_sets(), nat_sets())
def test_sigma_additive(x, y):
    assert sigma(x + y) == sigma(x) + sigma(y)


@given(st.integers(1, 4), nat_sets(max_value=15))
def test_sigma_commutes_with_dilation(l, x):
    assert sigma(dilate(l, x)) == dilate(l, sigma(x))


@given(st.integers(0, 20), st.integers(0, 20))
def test_sigma_fixes_intervals_and_pairs(i, d):
    assert sigma(interval(i, i + d)) == interval(i, i + d)
    assert sigma(NaturalSet([i, i + d])) == NaturalSet([i, i + d])


def test_sigma_involution_on_window():
    w = enumerate_window(N, 7)
    assert all(sigma(sigma(x)) == x for x in w.members)
    assert {sigma(x) for x in w.members} == set(w.members)


# -- translation classes --

def test_equivalent_examples():
    assert equivalent(S("2,4"), S("5,7"))
    assert not equivalent(S("2,4"), S("2,5"))
    x = S("1,3,4")
    assert equivalent(x, x)


def test_equivalence_relation_on_samples():
    rng = random.Random(3)
    pool = [NaturalSet(rng.sample(range(8), rng.randint(1, 3))) for _ in range(40)]
    pool += [translate(rng.randint(0, 4), x) for x in pool]
    for x, y, z in itertools.product(pool[:25], repeat=3):
        assert equivalent(x, y) == equivalent(y, x)
        if equivalent(x, y) and equivalent(y, z):
            assert equivalent(x, z)


def test_phi_examples():
    assert phi(S("3,5,9")).rep == S("0,2,6")
    x, y = S("2,3"), S("2,4")
    assert x + y == S("4,5,6,7")
    assert phi(x + y).rep == S("0,1,2,3") == phi(x).rep + phi(y).rep
    for k in (0, 4, 11):
        assert phi(NaturalSet([k])).rep == S("0")


def test_phi_inv_examples():
    assert phi_inv(EquivClassRep(S("0,2,6")), 3) == S("3,5,9")
    assert phi_inv(EquivClassRep(S("0")), 5) == S("5")
    with pytest.raises(ValueError):
        EquivClassRep(S("1,2"))


def test_phi_inv_round_trip_random():
    rng = random.Random(11)
    for _ in range(100):
        rep = NaturalSet([0] + rng.sample(range(1, 30), rng.randint(0, 6)))
        k = rng.randint(0, 20)
        assert phi(phi_inv(EquivClassRep(rep), k)).rep == rep


@given(nat_sets(), nat_sets(), st.integers(0, 30))
def test_phi_well_defined_and_additive(x, y, m):
    assert phi(translate(m, x)) == phi(x)
    assert phi(x + y).rep == phi(x).rep + phi(y).rep


@pytest.mark.parametrize("k, bound", [(0, 6), (2, 8), (3, 9)])
def test_phi_bijective_onto_reduced_window(k, bound):
    w = enumerate_window(interval_semigroup(k), bound)
    reps = {phi(x).rep for x in w.members}
    target = enumerate_window(N, bound - k, reduced=True)
    assert reps == set(target.members)
    assert all(normalize(phi_inv(EquivClassRep(r), k)) == r for r in reps)
