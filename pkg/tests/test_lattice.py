import random

import pytest
from hypothesis import given, settings, strategies as st

from grothext.lattice import (IntLattice, UnsupportedSize, enumerate_subgroups, hnf,
                              lattice_equal, matmul, member, quotient, snf, solve)
from oracles import (brute_member, brute_member_grid, closure_subgroups,
                     determinantal_divisors, invariant_factor_lists, leibniz_det)

matrices = st.integers(1, 4).flatmap(
    lambda r: st.integers(1, 4).flatmap(
        lambda c: st.lists(st.lists(st.integers(-5, 5), min_size=c, max_size=c),
                           min_size=r, max_size=r)))


def test_hnf_examples():
    eye = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert hnf(eye) == eye
    assert hnf([[2, 2, -2]]) == [[2, 2, -2]]
    assert hnf([[-2, -2, 2]]) == [[2, 2, -2]]
    assert hnf([[2, 4], [6, 8]]) == [[2, 0], [0, 4]]


def test_hnf_example_spans_same_lattice():
    # each side's rows are small integer combinations of the other side's
    orig, red = [[2, 4], [6, 8]], [[2, 0], [0, 4]]
    for v in red:
        assert brute_member_grid(orig, v, 4) is not None
    for v in orig:
        assert brute_member_grid(red, v, 4) is not None


def test_snf_examples():
    u, d, v = snf([[2, 0], [0, 3]])
    assert d == [[1, 0], [0, 6]]
    assert matmul(matmul(u, [[2, 0], [0, 3]]), v) == d
    u, d, v = snf([[0, 0], [0, 0]])
    assert d == [[0, 0], [0, 0]]
    assert u == v == [[1, 0], [0, 1]]
    u, d, v = snf([[1, 1, -1]])
    assert d == [[1, 0, 0]]
    assert matmul(matmul(u, [[1, 1, -1]]), v) == d


def _diag(d):
    return [d[i][i] for i in range(min(len(d), len(d[0]) if d else 0))]


@settings(max_examples=200, deadline=None)
@given(matrices)
def test_snf_properties(m):
    u, d, v = snf(m)
    assert matmul(matmul(u, m), v) == d
    assert abs(leibniz_det(u)) == 1 and abs(leibniz_det(v)) == 1
    for i, row in enumerate(d):
        for j, x in enumerate(row):
            assert i == j or x == 0
    diag = _diag(d)
    assert all(x >= 0 for x in diag)
    for x, y in zip(diag, diag[1:]):
        assert (y == 0) if x == 0 else y % x == 0
    assert [x for x in diag if x] == determinantal_divisors(m)


@settings(max_examples=200, deadline=None)
@given(matrices)
def test_hnf_idempotent_and_canonical(m):
    h = hnf(m)
    assert hnf(h) == h
    lead = [next(j for j, x in enumerate(r) if x) for r in h]
    assert lead == sorted(set(lead))
    for k, (row, j) in enumerate(zip(h, lead)):
        assert row[j] > 0
        assert all(0 <= h[i][j] < row[j] for i in range(k))


def test_member_examples():
    lat = IntLattice(3, [(1, 1, -1)])
    assert member(lat, (2, 2, -2))
    assert not member(lat, (1, 0, 0))
    assert member(lat, (0, 0, 0))
    assert member(IntLattice(3), (0, 0, 0))
    with pytest.raises(ValueError):
        member(lat, (1, 1))


def test_lattice_equal_examples():
    assert lattice_equal(IntLattice(3, [(1, 1, -1)]), IntLattice(3, [(-1, -1, 1)]))
    assert not lattice_equal(IntLattice(3, [(1, 1, -1)]), IntLattice(3, [(2, 2, -2)]))
    assert lattice_equal(IntLattice(2), IntLattice(2))
    with pytest.raises(ValueError):
        lattice_equal(IntLattice(2), IntLattice(3))


def test_solve_examples():
    assert solve(IntLattice(3, [(1, 1, -1)]), (3, 3, -3)) == [3]
    assert solve(IntLattice(2, [(1, 0), (0, 2)]), (1, 1)) is None
    c = solve(IntLattice(2, [(1, 1), (1, -1)]), (2, 0))
    assert c == [1, 1]
    with pytest.raises(ValueError):
        solve(IntLattice(2, [(1, 0)]), (1, 0, 0))


@settings(max_examples=200, deadline=None)
@given(matrices, st.data())
def test_solve_reproduces_vector(m, data):
    lat = IntLattice(len(m[0]), m)
    coeffs = data.draw(st.lists(st.integers(-4, 4), min_size=len(m), max_size=len(m)))
    v = tuple(sum(c * row[j] for c, row in zip(coeffs, m)) for j in range(len(m[0])))
    x = lat.solve(v)
    assert x is not None
    assert tuple(sum(c * row[j] for c, row in zip(x, m)) for j in range(len(m[0]))) == v


def test_member_matches_brute_force_on_random_3x3():
    rng = random.Random(7)
    for _ in range(40):
        m = [[rng.randint(-3, 3) for _ in range(3)] for _ in range(3)]
        lat = IntLattice(3, m)
        for v in [(x, y, z) for x in range(-2, 3) for y in range(-2, 3) for z in (-1, 0, 1)]:
            assert (v in lat) == brute_member(m, v), (m, v)


def test_quotient_examples():
    g = quotient(3, IntLattice(3, [(1, 1, -1)]))
    assert (g.free_rank, g.torsion) == (2, ())
    g = quotient(2, IntLattice(2, [(2, 0), (0, 2)]))
    assert (g.free_rank, g.torsion) == (0, (2, 2))
    g = quotient(2, IntLattice(2))
    assert (g.free_rank, g.torsion) == (2, ())


@settings(max_examples=100, deadline=None)
@given(matrices)
def test_quotient_projection_kills_lattice(m):
    n = len(m[0])
    lat = IntLattice(n, m)
    g = quotient(n, lat)
    assert g.free_rank == n - lat.rank
    assert all(d >= 2 for d in g.torsion)
    assert all(b % a == 0 for a, b in zip(g.torsion, g.torsion[1:]))
    for row in m:
        assert g.project(row) == g.zero()
    # the lift is a section of the projection
    for k in range(g.ngens):
        e = tuple(int(i == k) for i in range(g.ngens))
        lifted = [sum(e[i] * g.lift[i][j] for i in range(g.ngens)) for j in range(n)]
        assert g.project(lifted) == e


def _element_sets(torsion):
    g = quotient(len(torsion), IntLattice(len(torsion),
                 [tuple(d if i == j else 0 for j in range(len(torsion)))
                  for i, d in enumerate(torsion)]))
    assert g.torsion == tuple(torsion)
    subs = enumerate_subgroups(g)
    elements = list(g.elements())
    return [frozenset(x for x in elements if x in lat) for lat in subs]


@pytest.mark.parametrize("torsion,count", [((4,), 3), ((2, 2), 5), ((), 1), ((2, 4), 8)])
def test_enumerate_subgroups_examples(torsion, count):
    sets = _element_sets(torsion)
    assert len(sets) == count
    assert set(sets) == closure_subgroups(torsion)


def test_enumerate_subgroups_small_orders():
    for torsion in invariant_factor_lists(24):
        sets = _element_sets(torsion)
        assert len(set(sets)) == len(sets)
        assert set(sets) == closure_subgroups(torsion), torsion


def test_enumerate_subgroups_canonical_order():
    g = quotient(2, IntLattice(2, [(2, 0), (0, 4)]))
    a = enumerate_subgroups(g)
    assert a == enumerate_subgroups(g)
    sizes = [8 // (lat.basis[0][0] * lat.basis[1][1]) for lat in a]
    assert sizes == sorted(sizes)


def test_enumerate_subgroups_refuses_infinite_or_large():
    with pytest.raises(UnsupportedSize, match="infinite"):
        enumerate_subgroups(quotient(1, IntLattice(1)))
    big = quotient(1, IntLattice(1, [(20001,)]))
    with pytest.raises(UnsupportedSize, match="10000"):
        enumerate_subgroups(big)
    assert len(enumerate_subgroups(big, bound=30000)) == sum(
        1 for d in range(1, 20002) if 20001 % d == 0)


def test_big_integers_stay_exact():
    m = [[10**30, 3], [7, 10**25]]
    u, d, v = snf(m)
    assert matmul(matmul(u, m), v) == d
    assert d[0][0] * d[1][1] == abs(leibniz_det(m))
