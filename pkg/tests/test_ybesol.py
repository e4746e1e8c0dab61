import itertools
from collections import Counter

import numpy as np
from hypothesis import given
from hypothesis import strategies as st

from conftest import tables
from gsbrace.catalog import retraction_over_constant, twist_system, zappa_szep_s3
from gsbrace.finalg import FiniteSemigroup, complete_regular_inverses
from gsbrace.groups import named_group
from gsbrace.search import completely_regular, crypto_counterexample
from gsbrace.semibrace import associated_solution, build_rightzero_semibrace
from gsbrace.sslattice import build_solution
from gsbrace.ybesol import (
    SetSolution,
    check_right_cryptogroup_criterion,
    classify,
    constant_solution,
    dihedral_quandle_solution,
    index_period,
    is_solution,
    is_solution_lcr,
    permutation_solution,
    power,
    restrict_solution,
    right_constant,
    twist,
)


def brute_braid_failures(r: SetSolution):
    n = r.order
    out = []
    for x, y, z in itertools.product(range(n), repeat=3):
        a, b = r(x, y)
        b2, c = r(b, z)
        a2, b3 = r(a, b2)
        left = (a2, b3, c)
        u, v = r(y, z)
        p, q = r(x, u)
        q2, v2 = r(q, v)
        right = (p, q2, v2)
        if left != right:
            out.append((x, y, z))
    return out


def brute_index_period(r: SetSolution):
    n = r.order
    cur = tuple(range(n * n))
    history = [cur]
    while True:
        cur = tuple(int(r.pair_map[c]) for c in cur)
        if cur in history:
            i = history.index(cur)
            return i, len(history) - i
        history.append(cur)


def test_basic_verdicts():
    assert is_solution(twist(3))
    assert is_solution(constant_solution(3, 1))
    v = is_solution(associated_solution(zappa_szep_s3()))
    assert not v and v.witness == brute_braid_failures(associated_solution(zappa_szep_s3()))[0]


def test_classify_examples():
    p = classify(twist(3))
    assert p.involutive and p.bijective and p.nondegenerate and p.index == 0 and p.period == 2
    p = classify(right_constant(3, 0))
    assert p.idempotent and p.degenerate and (p.index, p.period) == (1, 1)


def test_commutative_clifford_map_is_cubic():
    # semilattice of C2 over C1, commutative
    c = complete_regular_inverses(FiniteSemigroup([[0, 0, 0], [0, 1, 2], [0, 2, 1]]))
    r = SetSolution.from_function(3, lambda a, b: (c(c.idem[a], b), c(c.idem[b], a)))
    assert is_solution(r) and classify(r).cubic


def test_index_period_examples():
    assert index_period(twist(2)) == (0, 2)
    assert index_period(right_constant(2, 0)) == (1, 1)
    assert index_period(build_solution(retraction_over_constant())) == (2, 1)
    assert index_period(dihedral_quandle_solution(3)) == (0, 3)


def test_power_examples():
    r = twist(3)
    assert np.array_equal(power(r, 1), r.pair_map)
    assert np.array_equal(power(r, 2), np.arange(9))
    assert np.array_equal(power(r, 0), np.arange(9))
    e1 = build_solution(twist_system())
    assert np.array_equal(power(e1, 3), power(e1, 1))


def test_order_two_census():
    # every self-map of X x X for |X| = 2, filtered by the braid relation
    counts = Counter()
    for images in itertools.product(range(4), repeat=4):
        r = SetSolution.from_pair_map(2, images)
        if is_solution(r):
            counts[index_period(r)] += 1
    assert counts == {(1, 1): 26, (2, 1): 8, (0, 1): 1, (1, 2): 4, (0, 2): 2, (0, 4): 2}


def test_crypto_criterion():
    assert check_right_cryptogroup_criterion(named_group("S3"))
    c = complete_regular_inverses(FiniteSemigroup([[0, 0, 0], [0, 1, 2], [0, 2, 1]]))
    assert check_right_cryptogroup_criterion(c)
    bad = crypto_counterexample(4)
    assert bad is not None and bad.order == 4
    assert not check_right_cryptogroup_criterion(bad)
    assert not is_solution(associated_solution(build_rightzero_semibrace(bad)))


def test_no_counterexample_below_order_four():
    assert crypto_counterexample(3) is None


def test_criterion_holds_on_clifford_tables():
    from gsbrace.finalg import is_clifford
    for n in range(1, 5):
        for c in completely_regular(n):
            if is_clifford(c):
                assert check_right_cryptogroup_criterion(c)


def test_restriction():
    r = build_solution(twist_system())
    assert restrict_solution(r, range(2, 4)) == twist(2)


# properties

@st.composite
def candidate_maps(draw, max_order=4):
    n = draw(st.integers(1, max_order))
    lam = draw(st.lists(st.lists(st.integers(0, n - 1), min_size=n, max_size=n), min_size=n, max_size=n))
    rho = draw(st.lists(st.lists(st.integers(0, n - 1), min_size=n, max_size=n), min_size=n, max_size=n))
    return SetSolution(lam, rho)


@st.composite
def known_solutions(draw):
    n = draw(st.integers(1, 5))
    kind = draw(st.sampled_from(["twist", "constant", "right_constant", "quandle", "perm"]))
    if kind == "twist":
        return twist(n)
    if kind == "constant":
        return constant_solution(n, draw(st.integers(0, n - 1)))
    if kind == "right_constant":
        return right_constant(n, draw(st.integers(0, n - 1)))
    if kind == "quandle":
        return dihedral_quandle_solution(n)
    f = draw(st.permutations(range(n)))
    k = draw(st.integers(0, 3))
    g = f
    for _ in range(k):
        g = [f[x] for x in g]
    return permutation_solution(f, g)


@given(st.one_of(candidate_maps(), known_solutions()))
def test_two_braid_checks_agree(r):
    a, b = is_solution(r), is_solution_lcr(r)
    assert bool(a) == bool(b)
    fails = brute_braid_failures(r)
    assert bool(a) == (not fails)
    if fails:
        assert a.witness == b.witness == fails[0]


@given(st.one_of(candidate_maps(), known_solutions()))
def test_index_period_is_least(r):
    i, p = index_period(r)
    assert (i, p) == brute_index_period(r)
    assert np.array_equal(power(r, i + p), power(r, i))
    prof = classify(r)
    assert prof.bijective == (i == 0)
    if prof.involutive:
        assert prof.bijective
    if prof.idempotent:
        assert i <= 1 and p == 1


@given(st.one_of(candidate_maps(), known_solutions()))
def test_classify_flags_follow_powers(r):
    prof = classify(r)
    r1, r2, r3 = power(r, 1), power(r, 2), power(r, 3)
    assert prof.involutive == np.array_equal(r2, np.arange(r.order ** 2))
    assert prof.idempotent == np.array_equal(r2, r1)
    assert prof.cubic == np.array_equal(r3, r1)


@given(known_solutions())
def test_known_families_are_solutions(r):
    assert is_solution(r)


@given(tables(3))
def test_solution_from_table_roundtrip(t):
    r = SetSolution(t, t)
    assert SetSolution.from_pair_map(r.order, r.pair_map) == r
