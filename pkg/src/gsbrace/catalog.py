"""Ready-made systems: the worked examples, semi-brace chains, and random generators."""
from __future__ import annotations

import random
from dataclasses import dataclass

from .finalg import CarrierMap, Semilattice, chain
from .groups import cyclic, named_group
from .search import semilattice_tables
from .semibrace import (
    LeftSemiBrace,
    build_clifford_semibrace,
    build_leftzero_semibrace,
    build_zappa_szep,
    inversion_actions,
    trivial_actions,
)
from .sslattice import SemilatticeSystem
from .ybesol import (
    SetSolution,
    constant_solution,
    dihedral_quandle_solution,
    left_projection,
    retraction_solution,
    right_constant,
    right_projection,
    twist,
)

# Y = {0 < 1, 0 < 2}: two maximal elements meeting in 0
V_SHAPE = Semilattice.from_table([[0, 0, 0], [0, 1, 0], [0, 0, 2]])


def twist_system(y: Semilattice = V_SHAPE, sizes=(2, 2, 3), seed: int = 0) -> SemilatticeSystem:
    """Twists on every block, glued by arbitrary transitive maps."""
    rnd = random.Random(seed)
    phi = _random_transitive_maps(y, sizes, rnd)
    return SemilatticeSystem(y, tuple(twist(n) for n in sizes), phi)


def twist_over_constant(n_top: int = 1, n_bottom: int = 3, c: int = 0) -> SemilatticeSystem:
    """Twist on the top of a 2-chain over ``(x, c)`` with the constant map to ``c``.

    The combined map has ``r^2 = r`` only when the top block is a single point;
    with two or more points the twist survives and the period becomes 2.
    """
    phi = {(1, 0): CarrierMap.constant(n_top, n_bottom, c)}
    return SemilatticeSystem(chain(2), (right_constant(n_bottom, c), twist(n_top)), phi)


def retraction_over_constant(f=(0, 0, 2), n_bottom: int = 2, c: int = 0) -> SemilatticeSystem:
    """``(f(x), x)`` with ``f`` idempotent, not the identity, over ``(x, c)``; index 2."""
    phi = {(1, 0): CarrierMap.constant(len(f), n_bottom, c)}
    return SemilatticeSystem(chain(2), (right_constant(n_bottom, c), retraction_solution(f)), phi)


def mixed_period_system() -> SemilatticeSystem:
    """Period-3 quandle solution on top of a twist: index 1, period 6."""
    phi = {(1, 0): CarrierMap.constant(3, 2, 0)}
    return SemilatticeSystem(chain(2), (twist(2), dihedral_quandle_solution(3)), phi)


WORKED_EXAMPLES = {
    "twists_on_v": (twist_system, (1, 2)),
    "twist_over_constant": (twist_over_constant, (1, 1)),
    "retraction_over_constant": (retraction_over_constant, (2, 1)),
}


def c2_clifford_brace() -> LeftSemiBrace:
    """``a + b = a o b`` on C2."""
    return build_clifford_semibrace(cyclic(2))


def trivial_brace() -> LeftSemiBrace:
    return build_clifford_semibrace(cyclic(1))


def zappa_szep_c6() -> LeftSemiBrace:
    g, h = cyclic(2), cyclic(3)
    return build_zappa_szep(g, h, *trivial_actions(g, h), CarrierMap.constant(2, 3, 0))


def zappa_szep_s3() -> LeftSemiBrace:
    g, h = cyclic(2), cyclic(3)
    return build_zappa_szep(g, h, *inversion_actions(g, h), CarrierMap.constant(2, 3, 0))


def brace_chain(top: LeftSemiBrace, bottom: LeftSemiBrace, phi: CarrierMap) -> SemilatticeSystem:
    return SemilatticeSystem(chain(2), (bottom, top), {(1, 0): phi})


def semibrace_fixtures() -> dict[str, SemilatticeSystem]:
    """Valid semi-brace systems (every payload satisfies the solution condition)."""
    c2, one, c6 = c2_clifford_brace(), trivial_brace(), zappa_szep_c6()
    # the first coordinate of the Zappa-Szep sum is a left-zero sum
    left_zero_c2 = build_leftzero_semibrace(cyclic(2))
    return {
        "c2_over_c2": brace_chain(c2, c2, CarrierMap.identity(2)),
        "c2_over_trivial": brace_chain(c2, one, CarrierMap.constant(2, 1, 0)),
        "c6_over_trivial": brace_chain(c6, one, CarrierMap.constant(6, 1, 0)),
        "c6_over_c2": brace_chain(c6, left_zero_c2, CarrierMap.of([x // 3 for x in range(6)], 2)),
        "single_c6": SemilatticeSystem(chain(1), (c6,), {}),
    }


def s3_over_trivial() -> SemilatticeSystem:
    return brace_chain(zappa_szep_s3(), trivial_brace(), CarrierMap.constant(6, 1, 0))


# random systems

def _random_transitive_maps(y: Semilattice, sizes, rnd: random.Random) -> dict:
    """Arbitrary maps on covering pairs of ``y``, closed by composition.

    Maps are assigned top-down: ``phi[a, c]`` for ``c < a`` is drawn only when
    no intermediate ``b`` forces it as ``phi[b, c] o phi[a, b]``.
    """
    m = y.order
    below = {a: [b for b in range(m) if b != a and y.geq(a, b)] for a in range(m)}
    phi: dict = {}
    for a in sorted(range(m), key=lambda a: len(below[a])):
        for c in sorted(below[a], key=lambda c: -len(below[c])):
            via = [b for b in below[a] if c in below[b]]
            if via:
                b = via[0]
                phi[a, c] = phi[a, b].then(phi[b, c])
            else:
                phi[a, c] = CarrierMap(sizes[a], sizes[c],
                                       tuple(rnd.randrange(sizes[c]) for _ in range(sizes[a])))
    return phi


def random_semilattice(rnd: random.Random, max_order: int = 4) -> Semilattice:
    m = rnd.randint(1, max_order)
    return Semilattice.from_table(rnd.choice(semilattice_tables(m)))


# families that commute with x -> min(x, n-1) for any n
CLAMP_FAMILIES = ("twist", "constant", "right_constant", "left_projection",
                  "right_projection", "retraction")


def _clamp_payload(family: str, n: int, k: int) -> SetSolution:
    if family == "twist":
        return twist(n)
    if family == "constant":
        return constant_solution(n, 0)
    if family == "right_constant":
        return right_constant(n, 0)
    if family == "left_projection":
        return left_projection(n)
    if family == "right_projection":
        return right_projection(n)
    return retraction_solution([min(x, k) for x in range(n)])


def _pointed_payload(rnd: random.Random, n: int) -> SetSolution:
    """A solution fixing ``(0, 0)``, so constant maps to 0 are equivariant."""
    choice = rnd.choice(CLAMP_FAMILIES + ("quandle",))
    if choice == "quandle" and n in (3, 5):
        return dihedral_quandle_solution(n)
    if choice == "retraction":
        f = [0] * n
        fixed = {0} | {x for x in range(1, n) if rnd.random() < 0.5}
        for x in range(n):
            f[x] = x if x in fixed else rnd.choice(sorted(fixed))
        return retraction_solution(f)
    if choice == "quandle":
        choice = "twist"
    return _clamp_payload(choice, n, 0)


@dataclass(frozen=True)
class RandomSystemConfig:
    max_semilattice: int = 4
    max_payload: int = 5


def random_system(rnd: random.Random, cfg: RandomSystemConfig = RandomSystemConfig()) -> SemilatticeSystem:
    """Valid random system: either one family glued by clamping, or mixed pointed payloads
    glued by constant maps to 0."""
    y = random_semilattice(rnd, cfg.max_semilattice)
    m = y.order
    if rnd.random() < 0.5:
        drawn = [rnd.randint(1, cfg.max_payload) for _ in range(m)]
        sizes = [min(drawn[g] for g in range(m) if y.geq(g, a)) for a in range(m)]
        family = rnd.choice(CLAMP_FAMILIES)
        k = rnd.randrange(cfg.max_payload)
        payloads = tuple(_clamp_payload(family, n, k) for n in sizes)
        phi = {(a, b): CarrierMap(sizes[a], sizes[b], tuple(min(x, sizes[b] - 1) for x in range(sizes[a])))
               for a, b in y.comparable_pairs() if a != b}
    else:
        sizes = [rnd.randint(1, cfg.max_payload) for _ in range(m)]
        payloads = tuple(_pointed_payload(rnd, n) for n in sizes)
        phi = {(a, b): CarrierMap.constant(sizes[a], sizes[b], 0)
               for a, b in y.comparable_pairs() if a != b}
    return SemilatticeSystem(y, payloads, phi)


def named_brace(name: str) -> LeftSemiBrace:
    """Clifford brace ``a + b = a o b`` on a named group."""
    return build_clifford_semibrace(named_group(name))
