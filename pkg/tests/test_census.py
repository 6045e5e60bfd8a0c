from collections import Counter
from itertools import permutations, product

import pytest

from hypercount.census import (
    CONSTELLATION,
    HYPERMAP,
    CountQuery,
    build_censuses,
    census,
    connected_census,
    count_constellations,
    count_hypermaps,
    genus_of,
    rc_census,
    rh_census,
)
from hypercount.oracle import block_permutation, compose, cycle_type, inverse, num_cycles


def raw_constellations(n, m):
    """All tuples sigma_1..sigma_m in S_n (transitive or not), phi closing the product."""
    group = list(permutations(range(n)))
    tally = Counter()
    for tup in product(group, repeat=m):
        p = tuple(range(n))
        for s in tup:
            p = compose(p, s)
        tally[(tuple(num_cycles(s) for s in tup), cycle_type(inverse(p)))] += 1
    return dict(tally)


def raw_hypermaps(n, m):
    N = m * n
    tau = block_permutation(n, m)
    tally = Counter()
    for phi in permutations(range(N)):
        t = cycle_type(phi)
        if any(x % m for x in t):
            continue
        sigma = inverse(compose(tau, phi))
        tally[((num_cycles(sigma),), tuple(x // m for x in t))] += 1
    return dict(tally)


def test_rc_examples():
    assert rc_census(1, 2) == {((1, 1), (1,)): 1}
    # sigma_1 = sigma_2 = (12) closes with phi = id: key l = (1, 1), mu = (1, 1)
    assert rc_census(2, 2) == {
        ((1, 2), (2,)): 1,
        ((2, 1), (2,)): 1,
        ((1, 1), (1, 1)): 1,
        ((2, 2), (1, 1)): 1,
    }


def test_rh_examples():
    # with tau = (12) fixed, phi must be (12) and sigma = id
    assert rh_census(1, 2) == {((2,), (1,)): 1}
    assert rh_census(1, 3) == {((3,), (1,)): 1, ((1,), (1,)): 1}


@pytest.mark.parametrize("n, m", [(1, 2), (2, 2), (3, 2), (4, 2), (1, 3), (2, 3), (3, 3), (2, 4)])
def test_rc_against_enumeration(n, m):
    assert rc_census(n, m) == raw_constellations(n, m)


@pytest.mark.parametrize("n, m", [(1, 2), (2, 2), (3, 2), (1, 3), (2, 3), (1, 4)])
def test_rh_against_enumeration(n, m):
    assert rh_census(n, m) == raw_hypermaps(n, m)


def test_connected_examples():
    raw = {1: rc_census(1, 2), 2: rc_census(2, 2)}
    conn = connected_census(raw, 2)
    assert conn[1] == raw[1]
    assert ((2, 2), (1, 1)) not in conn[2]
    assert sum(conn[2].values()) == 3


@pytest.mark.parametrize("V, F, n, m, g", [(3, 1, 2, 2, 0), (12, 4, 7, 3, 0), (1, 1, 2, 2, 1)])
def test_genus_of(V, F, n, m, g):
    assert genus_of(V, F, n, m) == g


def test_genus_of_errors():
    with pytest.raises(ValueError):
        genus_of(2, 1, 2, 2)
    with pytest.raises(ValueError):
        genus_of(10, 1, 2, 2)


def test_count_constellation_examples():
    assert count_constellations(CountQuery(2, 1, 0)) == 1
    assert count_constellations(CountQuery(2, 2, 0)) == 3
    assert count_constellations(CountQuery(2, 1, 0, marks=(2,))) == 0
    assert count_constellations(CountQuery(2, 1, 0, marks=(1,))) == 1


def test_count_hypermap_examples():
    assert count_hypermaps(CountQuery(2, 1, 0)) == 1
    assert count_hypermaps(CountQuery(3, 1, 0)) == 1
    assert count_hypermaps(CountQuery(3, 1, 1)) == 1
    # rooted planar quadrangulations with 2 faces, through the face-vertex link
    assert count_hypermaps(CountQuery(2, 2, 0, frozenset({2}))) == 2


def test_bipartite_planar_sequence():
    # rooted planar bipartite maps: 1, 3, 12, 56
    assert [count_constellations(CountQuery(2, n, 0)) for n in range(1, 5)] == [1, 3, 12, 56]
    # rooted planar maps with all faces even, by edges: same numbers
    assert [count_hypermaps(CountQuery(2, n, 0)) for n in range(1, 5)] == [1, 3, 12, 56]


def test_census_entries_obey_euler():
    for kind in (HYPERMAP, CONSTELLATION):
        for c in build_censuses(kind, 3, 3):
            for e in c.entries():
                assert sum(e.colors) - (c.m - 1) * c.n + len(e.mu) == 2 - 2 * e.genus
                assert sum(e.mu) == c.n


@pytest.mark.parametrize("m, n", [(2, 1), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2), (3, 3)])
def test_planar_coincidence(m, n):
    for degrees in (None, {1}, {2}, {1, 2}, {3}, {1, 3}):
        d = None if degrees is None else frozenset(degrees)
        assert count_hypermaps(CountQuery(m, n, 0, d)) == count_constellations(CountQuery(m, n, 0, d))


@pytest.mark.parametrize("m, n_max", [(2, 4), (3, 3), (4, 2)])
def test_mark_symmetry(m, n_max):
    for n in range(1, n_max + 1):
        for g in range(3):
            for ks in [(1,), (2,), (1, 1), (2, 1), (3,)]:
                padded = list(ks) + [0] * (m - len(ks))
                values = {
                    count_constellations(CountQuery(m, n, g, marks=tuple(p)))
                    for p in set(permutations(padded))
                }
                assert len(values) == 1, (m, n, g, ks)


def test_query_validation():
    with pytest.raises(ValueError):
        CountQuery(1, 1, 0)
    with pytest.raises(ValueError):
        CountQuery(2, 0, 0)
    with pytest.raises(ValueError):
        CountQuery(2, 1, -1)
    with pytest.raises(ValueError):
        CountQuery(2, 1, 0, marks=(-1,))
    with pytest.raises(ValueError):
        CountQuery(2, 1, 0, frozenset({0}))
    with pytest.raises(ValueError):
        count_hypermaps(CountQuery(2, 1, 0, marks=(1,)))


def test_census_json_shape():
    rows = census(HYPERMAP, 2, 2).to_json()
    assert rows == sorted(rows, key=lambda r: (r["genus"], r["mu"], r["colors"]))
    assert all(isinstance(r["colors"], int) for r in rows)
    rows = census(CONSTELLATION, 2, 2).to_json()
    assert all(isinstance(r["colors"], list) and len(r["colors"]) == 2 for r in rows)
