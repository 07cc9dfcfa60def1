import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from numsem.core import minimal_generators, semigroup_from_gaps
from numsem.errors import InvalidKunz
from numsem.kunz import (
    KunzVector,
    count_by_kunz,
    enumerate_kunz_vectors,
    generators_from_kunz,
    is_valid_kunz,
    kunz_of,
    semigroup_of_kunz,
)
from numsem.tree import count_genus_series, iter_semigroups


def test_kunz_of_examples():
    assert kunz_of(semigroup_from_gaps({1, 2, 4})) == KunzVector(3, (2, 1))
    assert kunz_of(semigroup_from_gaps({1, 3, 5, 7})) == KunzVector(2, (4,))
    m = 6
    S = semigroup_from_gaps(range(1, m))
    assert kunz_of(S) == KunzVector(m, (1,) * (m - 1))


def test_semigroup_of_kunz_examples():
    assert semigroup_of_kunz(KunzVector(3, (2, 1))).gaps() == (1, 2, 4)
    assert semigroup_of_kunz(KunzVector(5, (1, 1, 1, 1))).gaps() == (1, 2, 3, 4)
    with pytest.raises(InvalidKunz) as exc:
        semigroup_of_kunz(KunzVector(3, (1, 3)))
    assert exc.value.indices == (1, 1)


def test_is_valid():
    assert is_valid_kunz(3, (2, 1))
    assert not is_valid_kunz(3, (1, 3))
    for m in range(2, 51):
        assert is_valid_kunz(m, (1,) * (m - 1))


def test_generators_from_kunz_examples():
    assert generators_from_kunz(KunzVector(3, (2, 1))) == {3, 5, 7}
    assert generators_from_kunz(KunzVector(5, (1, 1, 1, 1))) == {5, 6, 7, 8, 9}
    assert generators_from_kunz(KunzVector(2, (4,))) == {2, 9}


def test_m1_empty_vector():
    kv = KunzVector(1, ())
    S = semigroup_of_kunz(kv)
    assert S.genus == 0
    assert kunz_of(S) == kv


@pytest.mark.parametrize("g", range(11))
def test_roundtrip_exhaustive(g):
    vectors = set()
    for S in iter_semigroups(g):
        kv = kunz_of(S)
        assert kv.genus == g
        assert is_valid_kunz(kv.multiplicity, kv.coords)
        assert semigroup_of_kunz(kv) == S
        assert tuple(sorted(generators_from_kunz(kv))) == minimal_generators(S)
        vectors.add(kv)
    # the map is onto the valid vectors of this genus
    expected = {KunzVector(1, ())} if g == 0 else {
        kv for m in range(2, g + 2) for kv in enumerate_kunz_vectors(m, g)
    }
    assert vectors == expected


def test_oracle_matches_tree():
    series = count_genus_series(12)
    assert [count_by_kunz(g) for g in range(13)] == series
    assert series[:8] == [1, 1, 2, 4, 7, 12, 23, 39]


def test_backtracker_agrees_with_filter():
    # cross-check the pruned enumerator against a brute-force filter
    from itertools import product

    for m, g in [(3, 7), (4, 7), (5, 8)]:
        brute = {
            KunzVector(m, c)
            for c in product(range(1, g + 1), repeat=m - 1)
            if sum(c) == g and is_valid_kunz(m, c)
        }
        assert set(enumerate_kunz_vectors(m, g)) == brute


@settings(max_examples=150, deadline=None)
@given(st.integers(min_value=2, max_value=7), st.data())
def test_random_vector_validity_consistency(m, data):
    coords = tuple(
        data.draw(st.integers(min_value=1, max_value=4)) for _ in range(m - 1)
    )
    if is_valid_kunz(m, coords):
        S = semigroup_of_kunz(KunzVector(m, coords))
        assert S.multiplicity == m
        assert S.genus == sum(coords)
    else:
        with pytest.raises(InvalidKunz):
            semigroup_of_kunz(KunzVector(m, coords))
