import numpy as np
import pytest
from hypothesis import given

from conftest import systems
from gsbrace.catalog import (
    V_SHAPE,
    WORKED_EXAMPLES,
    brace_chain,
    c2_clifford_brace,
    mixed_period_system,
    retraction_over_constant,
    s3_over_trivial,
    semibrace_fixtures,
    trivial_brace,
    twist_over_constant,
    twist_system,
)
from gsbrace.errors import (
    ComponentNotSolution,
    ConditionFailed,
    EquivarianceFailed,
    NotHomomorphism,
    SystemMalformed,
)
from gsbrace.finalg import CarrierMap, chain, is_clifford
from gsbrace.groups import cyclic
from gsbrace.semibrace import associated_solution, build_rightzero_semibrace
from gsbrace.sslattice import (
    SemilatticeSystem,
    build_generalized_semibrace,
    build_solution,
    check_equivariance,
    check_structure_maps,
    composed_index_period,
    predicted_index_period,
    semibrace_semilattice_solution,
    solution_system,
)
from gsbrace.ybesol import (
    SetSolution,
    classify,
    index_period,
    is_solution,
    permutation_solution,
    power,
    restrict_solution,
    right_constant,
    twist,
)


def brute_union(sys):
    """Combined map computed pointwise from the definition."""
    where = [sys.locate(g) for g in range(sys.order)]

    def r(p, q):
        (a, x), (b, y) = where[p], where[q]
        nu = sys.y.table[a][b]
        u, v = sys.payloads[nu](sys.phi[a, nu](x), sys.phi[b, nu](y))
        off = sys.offsets[nu]
        return off + u, off + v
    return SetSolution.from_function(sys.order, r)


@pytest.mark.parametrize("name", sorted(WORKED_EXAMPLES))
def test_worked_examples(name):
    make, expected = WORKED_EXAMPLES[name]
    sys = make()
    r = build_solution(sys)
    assert r == brute_union(sys)
    assert index_period(r) == expected == composed_index_period(sys)


def test_worked_example_power_identities():
    r1 = build_solution(twist_system())
    assert np.array_equal(power(r1, 3), power(r1, 1))
    assert not classify(r1).involutive
    r2 = build_solution(twist_over_constant())
    assert np.array_equal(power(r2, 2), power(r2, 1))
    r3 = build_solution(retraction_over_constant())
    assert np.array_equal(power(r3, 3), power(r3, 2))
    assert not np.array_equal(power(r3, 2), power(r3, 1))


def test_twist_over_constant_needs_single_top_point():
    assert index_period(build_solution(twist_over_constant(n_top=2))) == (1, 2)


def test_mixed_periods_multiply():
    assert composed_index_period(mixed_period_system()) == (1, 6)


def test_phi_layout():
    sys = twist_system()
    assert sys.sizes == (2, 2, 3) and sys.offsets == (0, 2, 4) and sys.order == 7
    assert sys.locate(5) == (2, 1)
    assert sys.phi_map(1, 1).is_identity()
    with pytest.raises(SystemMalformed):
        sys.phi_map(1, 2)


def _two_point_bottom(sigma, c):
    # top: one point, bottom: r(x, y) = (sigma(y), x)
    phi = {(1, 0): CarrierMap.constant(1, 2, c)}
    return SemilatticeSystem(chain(2), (permutation_solution(sigma, (0, 1)), twist(1)), phi)


def test_equivariance_needs_fixed_point():
    assert check_equivariance(_two_point_bottom((0, 1), 0))
    bad = _two_point_bottom((1, 0), 0)
    v = check_equivariance(bad)
    assert not v and v.witness == (1, 0, 0, 0)
    with pytest.raises(EquivarianceFailed):
        build_solution(bad)


def test_condition_one():
    phi = {(0, 0): CarrierMap.constant(2, 2, 0)}
    sys = SemilatticeSystem(chain(1), (twist(2),), phi)
    assert check_structure_maps(sys).detail == "condition 1"
    with pytest.raises(SystemMalformed) as e:
        build_solution(sys)
    assert e.value.condition == 1


def test_condition_two():
    y = chain(3)  # 0 < 1 < 2
    ident = CarrierMap.identity(2)
    swap = CarrierMap.of([1, 0], 2)
    sys = SemilatticeSystem(y, (twist(2),) * 3, {(2, 1): ident, (1, 0): ident, (2, 0): swap})
    v = check_structure_maps(sys)
    assert not v and v.detail == "condition 2"
    with pytest.raises(SystemMalformed) as e:
        build_solution(sys)
    assert e.value.condition == 2


def test_malformed_systems():
    with pytest.raises(SystemMalformed):
        SemilatticeSystem(chain(2), (twist(1),), {})
    with pytest.raises(SystemMalformed):  # missing (1, 0)
        SemilatticeSystem(chain(2), (twist(1), twist(1)), {})
    with pytest.raises(SystemMalformed):  # incomparable pair in V
        SemilatticeSystem(V_SHAPE, (twist(1),) * 3,
                          {(1, 0): CarrierMap.identity(1), (2, 0): CarrierMap.identity(1),
                           (1, 2): CarrierMap.identity(1)})
    with pytest.raises(SystemMalformed):  # wrong shape
        SemilatticeSystem(chain(2), (twist(1), twist(2)), {(1, 0): CarrierMap.identity(2)})
    with pytest.raises(SystemMalformed):  # mixed payload kinds
        SemilatticeSystem(chain(2), (twist(1), trivial_brace()), {(1, 0): CarrierMap.identity(1)})


def test_component_not_solution():
    bad = SetSolution([[1, 0], [0, 0]], [[0, 0], [0, 1]])
    assert not is_solution(bad)
    sys = SemilatticeSystem(chain(2), (right_constant(1), bad), {(1, 0): CarrierMap.constant(2, 1, 0)})
    with pytest.raises(ComponentNotSolution) as e:
        build_solution(sys)
    assert e.value.alpha == 1


# semi-brace systems

@pytest.mark.parametrize("name", sorted(semibrace_fixtures()))
def test_semibrace_fixtures(name):
    sys = semibrace_fixtures()[name]
    r = semibrace_semilattice_solution(sys)
    assert r == build_solution(solution_system(sys))
    assert composed_index_period(sys) == (1, 2)


def test_clifford_union():
    sys = semibrace_fixtures()["c2_over_trivial"]
    u = build_generalized_semibrace(sys)
    assert u.order == 3 and is_clifford(u.mul)


def test_single_point_semilattice_echoes_payload():
    sys = semibrace_fixtures()["single_c6"]
    assert build_generalized_semibrace(sys) is sys.payloads[0]
    assert semibrace_semilattice_solution(sys) == associated_solution(sys.payloads[0])


def test_s3_payload_fails_condition():
    with pytest.raises(ConditionFailed) as e:
        semibrace_semilattice_solution(s3_over_trivial())
    assert e.value.alpha == 1 and e.value.witness == (0, 0, 4)


def test_not_homomorphism():
    # the constant map to the generator is not additive: 1 + 1 = 0
    sys = brace_chain(c2_clifford_brace(), c2_clifford_brace(), CarrierMap.constant(2, 2, 1))
    with pytest.raises(NotHomomorphism):
        build_generalized_semibrace(sys)


def test_right_zero_payloads():
    rz = build_rightzero_semibrace(cyclic(3))
    sys = brace_chain(rz, rz, CarrierMap.identity(3))
    r = semibrace_semilattice_solution(sys)
    assert classify(r).idempotent


# properties

@given(systems)
def test_random_system_is_solution(sys):
    r = build_solution(sys)
    assert r == brute_union(sys)
    assert is_solution(r)


@given(systems)
def test_blocks_restrict_to_payloads(sys):
    r = build_solution(sys)
    for a in range(sys.y.order):
        assert restrict_solution(r, sys.block(a)) == sys.payloads[a]


@given(systems)
def test_index_period_formula(sys):
    ind, per = composed_index_period(sys)
    assert (ind, per) == predicted_index_period(sys) == index_period(build_solution(sys))


@given(systems)
def test_nontrivial_semilattice_is_not_bijective(sys):
    if sys.y.order >= 2:
        assert not classify(build_solution(sys)).bijective


@given(systems)
def test_uniform_payload_properties_lift(sys):
    profs = [classify(r) for r in sys.payloads]
    whole = classify(build_solution(sys))
    if all(p.idempotent for p in profs):
        assert whole.idempotent
    if all(p.cubic for p in profs):
        assert whole.cubic
