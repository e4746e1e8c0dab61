import itertools

import pytest

from gsbrace.finalg import check_associative, is_clifford
from gsbrace.groups import cyclic, named_group
from gsbrace.search import (
    all_left_semibraces,
    completely_regular,
    crypto_counterexample,
    fg_pairs,
    fg_semibraces,
    semibrace_tables,
    semigroup_tables,
    semilattice_tables,
)
from gsbrace.semibrace import check_key_left, verify_generalized_left
from gsbrace.ybesol import check_right_cryptogroup_criterion


def all_tables(n):
    for cells in itertools.product(range(n), repeat=n * n):
        yield [list(cells[i * n:(i + 1) * n]) for i in range(n)]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_semigroups_match_brute_force(n):
    brute = [t for t in all_tables(n) if check_associative(t)]
    assert list(semigroup_tables(n)) == brute


def test_semigroup_counts():
    assert [sum(1 for _ in semigroup_tables(n)) for n in (1, 2, 3, 4)] == [1, 8, 113, 3492]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_semilattices_match_brute_force(n):
    brute = [tuple(map(tuple, t)) for t in all_tables(n)
             if check_associative(t)
             and all(t[a][b] == t[b][a] for a in range(n) for b in range(n))
             and all(t[a][a] == a for a in range(n))]
    assert list(semilattice_tables(n)) == brute


def test_semilattice_counts():
    assert [len(semilattice_tables(m)) for m in (1, 2, 3, 4)] == [1, 2, 9, 76]


@pytest.mark.parametrize("name", ["C1", "C2", "C3"])
def test_semibraces_match_brute_force(name):
    g = named_group(name)
    brute = [t for t in all_tables(g.order) if check_associative(t) and check_key_left(t, g)]
    assert list(semibrace_tables(g)) == brute


def test_semibrace_counts():
    counts = {name: sum(1 for _ in semibrace_tables(named_group(name)))
              for name in ("C1", "C2", "C3", "C4", "C2xC2")}
    assert counts == {"C1": 1, "C2": 3, "C3": 3, "C4": 6, "C2xC2": 24}


def test_every_enumerated_semibrace_verifies():
    for _, s in all_left_semibraces(4):
        assert "left_semibrace" in verify_generalized_left(s.add.table, s.mul)


def test_crypto_counterexample():
    c = crypto_counterexample(4)
    assert c.base.table == ((0, 0, 0, 0), (0, 1, 2, 3), (2, 2, 2, 2), (2, 3, 0, 1))
    v = check_right_cryptogroup_criterion(c)
    assert not v and v.witness == (3, 0)
    assert not is_clifford(c)


def test_clifford_never_counterexample():
    for n in (1, 2, 3):
        for c in completely_regular(n):
            assert check_right_cryptogroup_criterion(c) or not is_clifford(c)


def test_fg_pairs_commute_and_sorted():
    pairs = fg_pairs(named_group("C2xC2"))
    assert len(pairs) == 40
    keys = [(f.map, g.map) for f, g in pairs]
    assert keys == sorted(keys)
    for f, g in pairs:
        assert f.then(g) == g.then(f)


def test_fg_semibraces_are_semibraces():
    for f, g, s in fg_semibraces(cyclic(4)):
        assert "left_semibrace" in verify_generalized_left(s.add.table, s.mul)
