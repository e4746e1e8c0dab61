"""Strong semilattices of solutions and of generalized left semi-braces.

A system is a meet semilattice ``Y``, one payload per element of ``Y`` (a
solution or a generalized left semi-brace on its own carrier ``X_a``), and
structure maps ``phi[a, b]: X_a -> X_b`` for ``a >= b``.  The union carrier
is laid out in blocks: ``X_a`` occupies ``[offset[a], offset[a] + |X_a|)``.
Operations on the union push both arguments into the block of their meet.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Union

import numpy as np

from .errors import (
    ComponentNotSolution,
    ConditionFailed,
    EquivarianceFailed,
    InternalInconsistency,
    NotHomomorphism,
    SystemMalformed,
    TheoremMismatch,
)
from .finalg import (
    PASS,
    CarrierMap,
    FiniteGroup,
    FiniteSemigroup,
    Semilattice,
    Verdict,
    check_homomorphism,
    complete_regular_inverses,
    is_clifford,
)
from .semibrace import (
    GeneralizedLeftSemiBrace,
    LeftSemiBrace,
    associated_solution,
    check_solution_condition_any,
    make_semibrace,
)
from .ybesol import SetSolution, index_period, is_solution, lcm

Payload = Union[SetSolution, GeneralizedLeftSemiBrace]


@dataclass(frozen=True, eq=False)
class SemilatticeSystem:
    y: Semilattice
    payloads: tuple
    phi: Mapping[tuple[int, int], CarrierMap] = field(default_factory=dict)

    def __post_init__(self):
        payloads = tuple(self.payloads)
        m = self.y.order
        if len(payloads) != m:
            raise SystemMalformed(f"{len(payloads)} payloads for a semilattice of order {m}")
        kinds = {isinstance(p, SetSolution) for p in payloads}
        if len(kinds) != 1 or not all(isinstance(p, (SetSolution, GeneralizedLeftSemiBrace))
                                      for p in payloads):
            raise SystemMalformed("payloads must all be solutions or all semi-braces")
        phi = {}
        for (a, b), f in dict(self.phi).items():
            if not (0 <= a < m and 0 <= b < m) or not self.y.geq(a, b):
                raise SystemMalformed(f"structure map given for incomparable pair {(a, b)}", (a, b))
            if (f.source_order, f.target_order) != (payloads[a].order, payloads[b].order):
                raise SystemMalformed(f"structure map {(a, b)} has the wrong shape", (a, b))
            phi[a, b] = f
        for a, b in self.y.comparable_pairs():
            if (a, b) not in phi:
                if a != b:
                    raise SystemMalformed(f"missing structure map {(a, b)}", (a, b))
                phi[a, a] = CarrierMap.identity(payloads[a].order)
        object.__setattr__(self, "payloads", payloads)
        object.__setattr__(self, "phi", dict(sorted(phi.items())))

    @property
    def holds_solutions(self) -> bool:
        return isinstance(self.payloads[0], SetSolution)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(p.order for p in self.payloads)

    @property
    def offsets(self) -> tuple[int, ...]:
        out, acc = [], 0
        for n in self.sizes:
            out.append(acc)
            acc += n
        return tuple(out)

    @property
    def order(self) -> int:
        return sum(self.sizes)

    def block(self, a: int) -> range:
        off = self.offsets[a]
        return range(off, off + self.sizes[a])

    def phi_map(self, a: int, b: int) -> CarrierMap:
        try:
            return self.phi[a, b]
        except KeyError:
            raise SystemMalformed(f"no structure map for {(a, b)}: not comparable", (a, b)) from None

    def locate(self, g: int) -> tuple[int, int]:
        """Global index to ``(a, local index)``."""
        for a, off in enumerate(self.offsets):
            if off <= g < off + self.sizes[a]:
                return a, g - off
        raise IndexError(g)

    @property
    def owner(self) -> np.ndarray:
        return np.repeat(np.arange(self.y.order), self.sizes)

    def with_payloads(self, payloads) -> "SemilatticeSystem":
        return SemilatticeSystem(self.y, tuple(payloads), self.phi)


def check_structure_maps(sys: SemilatticeSystem) -> Verdict:
    """Conditions 1 (``phi[a, a]`` is the identity) and 2 (transitivity)."""
    for a in range(sys.y.order):
        if not sys.phi_map(a, a).is_identity():
            return Verdict(False, (a,), "condition 1")
    pairs = sys.y.comparable_pairs()
    for a, b in pairs:
        for b2, c in pairs:
            if b2 != b:
                continue
            if sys.phi_map(a, b).then(sys.phi_map(b, c)) != sys.phi_map(a, c):
                return Verdict(False, (a, b, c), "condition 2")
    return PASS


def require_structure_maps(sys: SemilatticeSystem) -> None:
    v = check_structure_maps(sys)
    if not v:
        cond = 1 if v.detail == "condition 1" else 2
        raise SystemMalformed(f"{v.detail} fails at {v.witness}", v.witness, condition=cond)


def check_equivariance(sys: SemilatticeSystem) -> Verdict:
    """``(phi x phi) r_a = r_b (phi x phi)`` for every ``a > b``; witness ``(a, b, x, y)``."""
    for a, b in sys.y.comparable_pairs():
        if a == b:
            continue
        f = sys.phi_map(a, b)
        ra, rb = sys.payloads[a], sys.payloads[b]
        for x in range(ra.order):
            for y in range(ra.order):
                u, v = ra(x, y)
                if (f(u), f(v)) != rb(f(x), f(y)):
                    return Verdict(False, (a, b, x, y), "condition 3")
    return PASS


def _meet_table(sys: SemilatticeSystem, op) -> list[list[int]]:
    """Union table of a binary operation evaluated in the block of the meet."""
    n = sys.order
    offs, yt = sys.offsets, sys.y.table
    where = [sys.locate(g) for g in range(n)]
    out = [[0] * n for _ in range(n)]
    for p, (a, x) in enumerate(where):
        for q, (b, y) in enumerate(where):
            nu = yt[a][b]
            out[p][q] = offs[nu] + op(nu, sys.phi[a, nu](x), sys.phi[b, nu](y))
    return out


def build_solution(sys: SemilatticeSystem) -> SetSolution:
    """``r(x, y) = r_ab(phi[a, ab](x), phi[b, ab](y))`` on the union carrier."""
    if not sys.holds_solutions:
        raise SystemMalformed("payloads are not solutions")
    require_structure_maps(sys)
    for a, r in enumerate(sys.payloads):
        v = is_solution(r)
        if not v:
            raise ComponentNotSolution(a, v.witness)
    v = check_equivariance(sys)
    if not v:
        raise EquivarianceFailed(f"condition 3 fails at {v.witness}", v.witness)
    n = sys.order
    lam = _meet_table(sys, lambda nu, x, y: sys.payloads[nu].lam[x][y])
    # rho_y(x) is the second coordinate of r(x, y); stored as rho[y][x]
    pairs = _meet_table(sys, lambda nu, x, y: sys.payloads[nu].rho[y][x])
    rho = [[pairs[x][y] for x in range(n)] for y in range(n)]
    r = SetSolution(lam, rho)
    v = is_solution(r)
    if not v:
        raise InternalInconsistency(f"combined map is not a solution at {v.witness}", v.witness)
    return r


def solution_system(sys: SemilatticeSystem) -> SemilatticeSystem:
    """Same semilattice and maps, payloads replaced by their associated solutions."""
    if sys.holds_solutions:
        return sys
    return sys.with_payloads(associated_solution(p) for p in sys.payloads)


def build_generalized_semibrace(sys: SemilatticeSystem) -> GeneralizedLeftSemiBrace:
    """``a + b = phi(a) + phi(b)`` and ``a o b = phi(a) o phi(b)`` in the block of the meet."""
    if sys.holds_solutions:
        raise SystemMalformed("payloads are not semi-braces")
    require_structure_maps(sys)
    for a, b in sys.y.comparable_pairs():
        f = sys.phi_map(a, b)
        sa, sb = sys.payloads[a], sys.payloads[b]
        for label, s, t in (("+", sa.add, sb.add), ("o", sa.mul.base, sb.mul.base)):
            v = check_homomorphism(f, s, t)
            if not v:
                raise NotHomomorphism(
                    f"phi{(a, b)} is not a homomorphism for {label} at {v.witness}", (a, b) + v.witness)
    if sys.y.order == 1:
        return sys.payloads[0]
    add = _meet_table(sys, lambda nu, x, y: sys.payloads[nu].plus(x, y))
    mul = _meet_table(sys, lambda nu, x, y: sys.payloads[nu].times(x, y))
    mul_cr = complete_regular_inverses(FiniteSemigroup(mul))
    union = make_semibrace(add, mul_cr)
    if all(isinstance(p.mul, FiniteGroup) for p in sys.payloads) and not is_clifford(union.mul):
        raise InternalInconsistency("a strong semilattice of groups is not Clifford")
    return union


def semibrace_semilattice_solution(sys: SemilatticeSystem) -> SetSolution:
    """Associated solution of the union semi-brace, cross-checked against the
    strong semilattice of the per-payload associated solutions."""
    if sys.holds_solutions:
        raise SystemMalformed("payloads are not semi-braces")
    for a, p in enumerate(sys.payloads):
        v = check_solution_condition_any(p)
        if not v:
            raise ConditionFailed(a, v.witness)
    union = build_generalized_semibrace(sys)
    direct = associated_solution(union)
    via_system = build_solution(solution_system(sys))
    if direct != via_system:
        raise InternalInconsistency("the two constructions of the solution disagree")
    return direct


def predicted_index_period(sys: SemilatticeSystem) -> tuple[int, int]:
    """``(max(1, ind r_a), lcm per r_a)``; a one-point semilattice just returns its payload's pair."""
    sols = solution_system(sys).payloads
    pairs = [index_period(r) for r in sols]
    ind = max(i for i, _ in pairs)
    if len(pairs) > 1:
        ind = max(1, ind)
    return ind, lcm(*(p for _, p in pairs))


def composed_index_period(sys: SemilatticeSystem) -> tuple[int, int]:
    """Index and period from the per-payload values, checked against direct iteration."""
    predicted = predicted_index_period(sys)
    if sys.holds_solutions:
        r = build_solution(sys)
    else:
        r = semibrace_semilattice_solution(sys)
    direct = index_period(r)
    if predicted != direct:
        raise TheoremMismatch(f"formula gives {predicted}, iteration gives {direct}")
    return predicted


def is_left_semibrace_system(sys: SemilatticeSystem) -> bool:
    return not sys.holds_solutions and all(isinstance(p, LeftSemiBrace) for p in sys.payloads)
