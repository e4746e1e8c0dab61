import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import semigroups, tables
from gsbrace.errors import (
    MalformedMap,
    MalformedTable,
    NotAGroup,
    NotAssociative,
    NotCompletelyRegular,
    NotSemilattice,
)
from gsbrace.finalg import (
    CarrierMap,
    FiniteSemigroup,
    Semilattice,
    as_group,
    chain,
    check_associative,
    check_homomorphism,
    classify_band,
    complete_regular_inverses,
    direct_product,
    idempotents,
    is_clifford,
    is_completely_simple,
    is_middle_unit,
    is_rectangular_group,
    left_zero,
    middle_unit_semigroup,
    rectangular_band,
    right_zero,
    table_from_op,
)
from gsbrace.groups import cyclic, named_group


def brute_assoc_failures(t):
    n = len(t)
    return [(a, b, c) for a, b, c in itertools.product(range(n), repeat=3)
            if t[t[a][b]][c] != t[a][t[b][c]]]


def test_associative_examples():
    assert check_associative(table_from_op(2, lambda a, b: a))
    assert check_associative(table_from_op(3, lambda a, b: (a + b) % 3))


def test_nonassociative_witness_is_least_failing_triple():
    v = check_associative([[0, 1], [0, 0]])
    assert not v
    fails = brute_assoc_failures([[0, 1], [0, 0]])
    assert v.witness == fails[0] == (1, 0, 1)
    assert (1, 1, 1) in fails


@given(tables())
def test_associativity_matches_brute_force(t):
    v = check_associative(t)
    fails = brute_assoc_failures(t)
    assert bool(v) == (not fails)
    if fails:
        assert v.witness == fails[0]


@pytest.mark.parametrize("rows", [[[0, 1]], [[0, 2], [0, 0]], [[0, -1], [0, 0]], [[0, 1.0], [1, 0]], "ab"])
def test_malformed_tables(rows):
    with pytest.raises(MalformedTable):
        check_associative(rows)


def test_semigroup_rejects_nonassociative():
    with pytest.raises(NotAssociative):
        FiniteSemigroup([[0, 1], [0, 0]])


def test_complete_regular_inverses_examples():
    assert complete_regular_inverses(cyclic(3).base).inv == (0, 2, 1)
    c = complete_regular_inverses(right_zero(2))
    assert c.inv == (0, 1) and c.idem == (0, 1)
    # monoid {1, x} with xx = x
    c = complete_regular_inverses(FiniteSemigroup([[0, 1], [1, 1]]))
    assert c.inv == (0, 1)


def test_not_completely_regular_names_least_element():
    # null semigroup: 1*1 = 0 and 0 is a zero
    with pytest.raises(NotCompletelyRegular) as e:
        complete_regular_inverses(FiniteSemigroup([[0, 0], [0, 0]]))
    assert e.value.element == 1


@given(semigroups)
def test_inverse_identities_hold_elementwise(t):
    s = FiniteSemigroup(t)
    try:
        c = complete_regular_inverses(s)
    except NotCompletelyRegular:
        return
    for a in range(s.order):
        i = c.inv[a]
        assert s(s(a, i), a) == a and s(s(i, a), i) == i and s(a, i) == s(i, a)
        e = c.idem[a]
        assert s(e, e) == e


@pytest.mark.parametrize("name", ["C1", "C2", "C5", "S3", "C2xC2", "D4", "Q8"])
def test_group_inverses_agree(name):
    g = named_group(name)
    assert complete_regular_inverses(g.base).inv == g.inv
    assert idempotents(g.base) == {g.identity}


def test_idempotents_of_rectangular_band():
    assert idempotents(rectangular_band(2, 3)) == frozenset(range(6))


def test_middle_units():
    m = FiniteSemigroup([[0, 1], [1, 1]])
    assert is_middle_unit(m, 0)
    c3 = cyclic(3).base
    assert is_middle_unit(c3, 0)
    assert not is_middle_unit(c3, 1) and not is_middle_unit(c3, 2)
    assert middle_unit_semigroup(c3) == frozenset(range(3))


def test_middle_unit_semigroup_of_left_zero():
    # in a left zero semigroup every element is a middle unit: a+u+b = a = a+b
    s = left_zero(3)
    brute = {x for x in range(3) for y in range(3)
             if s(s(y, x), y) == y and s(s(x, y), x) == x
             and is_middle_unit(s, s(x, y)) and is_middle_unit(s, s(y, x))}
    assert middle_unit_semigroup(s) == frozenset(brute) == frozenset(range(3))


def test_classify_band():
    assert classify_band(right_zero(3)) == "right_zero"
    assert classify_band(left_zero(3)) == "left_zero"
    assert classify_band(chain(2).base) == "semilattice"
    assert classify_band(rectangular_band(2, 2)) == "rectangular_band"
    assert classify_band(cyclic(2).base) == "none"
    # order 1: most specific tag wins
    assert classify_band(FiniteSemigroup([[0]])) == "left_zero"


def test_clifford():
    assert is_clifford(named_group("S3"))
    assert is_clifford(complete_regular_inverses(chain(3).base))
    assert not is_clifford(complete_regular_inverses(rectangular_band(2, 2)))


def test_completely_simple_and_rectangular_group():
    rb = rectangular_band(2, 2)
    assert is_completely_simple(rb) and is_rectangular_group(rb)
    rg = direct_product(cyclic(2).base, rb)
    assert is_rectangular_group(rg)
    assert not is_completely_simple(chain(2).base)


def test_homomorphism_examples():
    c4, c2 = cyclic(4).base, cyclic(2).base
    assert check_homomorphism(CarrierMap.identity(4), c4, c4)
    assert check_homomorphism(CarrierMap.of([x % 2 for x in range(4)], 2), c4, c2)
    sl = chain(3).base
    assert check_homomorphism(CarrierMap.constant(4, 3, 1), c4, sl)
    v = check_homomorphism(CarrierMap.of([0, 1, 0, 0], 2), c4, c2)
    assert not v and v.witness == (1, 2)
    with pytest.raises(MalformedMap):
        check_homomorphism(CarrierMap.identity(2), c4, c2)


@given(semigroups, semigroups, semigroups, st.data())
def test_homomorphisms_compose(s, t, u, data):
    s, t, u = FiniteSemigroup(s), FiniteSemigroup(t), FiniteSemigroup(u)
    f = CarrierMap(s.order, t.order, tuple(data.draw(st.integers(0, t.order - 1)) for _ in range(s.order)))
    g = CarrierMap(t.order, u.order, tuple(data.draw(st.integers(0, u.order - 1)) for _ in range(t.order)))
    if check_homomorphism(f, s, t) and check_homomorphism(g, t, u):
        assert check_homomorphism(f.then(g), s, u)


def test_semilattice_order():
    y = Semilattice.from_table([[0, 0, 0], [0, 1, 0], [0, 0, 2]])
    assert y.geq(1, 0) and y.geq(2, 0) and not y.geq(1, 2)
    assert (1, 0) in y.comparable_pairs() and (1, 2) not in y.comparable_pairs()
    with pytest.raises(NotSemilattice):
        Semilattice(cyclic(2).base)


def test_as_group_rejects_semilattice():
    with pytest.raises(NotAGroup):
        as_group(chain(2).base)
