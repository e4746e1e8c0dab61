"""Left semi-braces and generalized left/right semi-braces.

A generalized left semi-brace is a carrier with a semigroup ``+`` and a
completely regular ``o`` such that

    a o (b + c) = a o b + a o (a^- + c)

for all a, b, c.  When ``o`` is a group this is a left semi-brace and its
identity plays the role of ``0``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import (
    AlgebraError,
    InternalInconsistency,
    KeyIdentityFailed,
    MalformedTable,
    NonCommutingPair,
    NotAGroup,
    NotClifford,
    NotCompletelySimple,
    NotIdempotentEndomorphism,
    NotMatchedPair,
    PhiIdentityViolated,
)
from .finalg import (
    PASS,
    CarrierMap,
    CompletelyRegularStructure,
    FiniteGroup,
    FiniteSemigroup,
    Verdict,
    _fail_or_pass,
    as_group,
    check_homomorphism,
    classify_band,
    complete_regular_inverses,
    idempotents,
    is_clifford,
    is_completely_simple,
    is_middle_unit,
    is_subgroup,
    is_subsemigroup,
    middle_units,
    restrict,
    table_from_op,
)
from .ybesol import SetSolution, is_solution


def _as_semigroup(x) -> FiniteSemigroup:
    if isinstance(x, FiniteSemigroup):
        return x
    if isinstance(x, CompletelyRegularStructure):
        return x.base
    return FiniteSemigroup(x)


def as_completely_regular(x) -> CompletelyRegularStructure:
    """A group when the table is one, otherwise the completely regular structure."""
    if isinstance(x, CompletelyRegularStructure):
        return x
    s = _as_semigroup(x)
    try:
        return as_group(s)
    except NotAGroup:
        return complete_regular_inverses(s)


def _key_left_mask(add: np.ndarray, mul: np.ndarray, inv: np.ndarray) -> np.ndarray:
    n = len(add)
    a = np.arange(n)[:, None, None]
    lhs = mul[a, add[None, :, :]]
    # a o (a^- + c), indexed [a, c]
    lam = mul[np.arange(n)[:, None], add[inv][:, :]]
    rhs = add[mul[:, :, None], lam[:, None, :]]
    return lhs != rhs


def _key_right_mask(add: np.ndarray, mul: np.ndarray, inv: np.ndarray) -> np.ndarray:
    n = len(add)
    c = np.arange(n)
    # (a + c^-) o c, indexed [a, c]
    first = mul[add[:, inv], c[None, :]]
    lhs = mul[add[:, :, None], c[None, None, :]]
    rhs = add[first[:, None, :], mul[None, :, :]]
    return lhs != rhs


def check_key_left(add, mul) -> Verdict:
    add, mul = _as_semigroup(add), as_completely_regular(mul)
    if add.order != mul.order:
        raise MalformedTable("additive and multiplicative carriers differ")
    return _fail_or_pass(_key_left_mask(add.arr, mul.arr, mul.inv_arr),
                         "a o (b+c) != a o b + a o (a^- + c)")


def check_key_right(add, mul) -> Verdict:
    add, mul = _as_semigroup(add), as_completely_regular(mul)
    if add.order != mul.order:
        raise MalformedTable("additive and multiplicative carriers differ")
    return _fail_or_pass(_key_right_mask(add.arr, mul.arr, mul.inv_arr),
                         "(a+b) o c != (a + c^-) o c + b o c")


@dataclass(frozen=True)
class GeneralizedLeftSemiBrace:
    add: FiniteSemigroup
    mul: CompletelyRegularStructure

    def __post_init__(self):
        object.__setattr__(self, "add", _as_semigroup(self.add))
        object.__setattr__(self, "mul", as_completely_regular(self.mul))
        v = check_key_left(self.add, self.mul)
        if not v:
            raise KeyIdentityFailed(f"left key identity fails at {v.witness}", v.witness)

    @classmethod
    def unchecked(cls, add, mul):
        """Build without verifying the key identity (for corrupted-input diagnostics)."""
        obj = object.__new__(cls)
        object.__setattr__(obj, "add", _as_semigroup(add))
        object.__setattr__(obj, "mul", as_completely_regular(mul))
        return obj

    @property
    def order(self) -> int:
        return self.add.order

    def plus(self, a: int, b: int) -> int:
        return self.add.table[a][b]

    def times(self, a: int, b: int) -> int:
        return self.mul.table[a][b]

    def inv(self, a: int) -> int:
        return self.mul.inv[a]

    @property
    def is_left_semibrace(self) -> bool:
        return isinstance(self.mul, FiniteGroup)


@dataclass(frozen=True)
class LeftSemiBrace(GeneralizedLeftSemiBrace):
    mul: FiniteGroup

    def __post_init__(self):
        super().__post_init__()
        if not isinstance(self.mul, FiniteGroup):
            raise NotAGroup("the multiplicative structure of a left semi-brace is a group")

    @property
    def zero(self) -> int:
        return self.mul.identity


def make_semibrace(add, mul) -> GeneralizedLeftSemiBrace:
    """Left semi-brace when ``mul`` is a group, generalized one otherwise."""
    m = as_completely_regular(mul)
    if isinstance(m, FiniteGroup):
        return LeftSemiBrace(add, m)
    return GeneralizedLeftSemiBrace(add, m)


KINDS = ("left_semibrace", "generalized_left", "generalized_right",
         "generalized_two_sided", "left_cancellative", "completely_simple_additive")


@dataclass(frozen=True)
class SemibraceVerdict:
    tags: frozenset[str]
    witnesses: dict = field(default_factory=dict, compare=False)

    def __contains__(self, tag):
        return tag in self.tags

    def __bool__(self):
        return "generalized_left" in self.tags


def is_left_cancellative(s: FiniteSemigroup) -> Verdict:
    for a in s.elements():
        seen = {}
        for b, v in enumerate(s.table[a]):
            if v in seen:
                return Verdict(False, (a, seen[v], b), "a+b = a+c with b != c")
            seen[v] = b
    return PASS


def is_right_cancellative(s: FiniteSemigroup) -> Verdict:
    for b in s.elements():
        seen = {}
        for a in s.elements():
            v = s.table[a][b]
            if v in seen:
                return Verdict(False, (seen[v], a, b), "a+b = c+b with a != c")
            seen[v] = a
    return PASS


def verify_generalized_left(add, mul, strict: bool = True) -> SemibraceVerdict:
    add, mul = _as_semigroup(add), as_completely_regular(mul)
    tags, wit = set(), {}
    left = check_key_left(add, mul)
    if not left:
        if strict:
            raise KeyIdentityFailed(f"left key identity fails at {left.witness}", left.witness)
        wit["generalized_left"] = left.witness
    else:
        tags.add("generalized_left")
        if isinstance(mul, FiniteGroup):
            tags.add("left_semibrace")
    right = check_key_right(add, mul)
    if right:
        tags.add("generalized_right")
    else:
        wit["generalized_right"] = right.witness
    if left and right:
        tags.add("generalized_two_sided")
    lc = is_left_cancellative(add)
    if lc:
        tags.add("left_cancellative")
    else:
        wit["left_cancellative"] = lc.witness
    if is_completely_simple(add):
        tags.add("completely_simple_additive")
    return SemibraceVerdict(frozenset(tags), wit)


def verify_generalized_right(add, mul) -> Verdict:
    return check_key_right(add, mul)


def lambda_table(s: GeneralizedLeftSemiBrace) -> np.ndarray:
    """``[a, b] -> a o (a^- + b)``."""
    n = s.order
    return s.mul.arr[np.arange(n)[:, None], s.add.arr[s.mul.inv_arr]]


def rho_table(s: GeneralizedLeftSemiBrace) -> np.ndarray:
    """``[b, a] -> (a^- + b)^- o b``."""
    inv, add, mul = s.mul.inv_arr, s.add.arr, s.mul.arr
    n = s.order
    u = add[inv][:, :]  # [a, b] = a^- + b
    return mul[inv[u], np.arange(n)[None, :]].T


def lambda_of(s: GeneralizedLeftSemiBrace, a: int) -> CarrierMap:
    return CarrierMap.of(lambda_table(s)[a].tolist(), s.order)


def rho_of(s: GeneralizedLeftSemiBrace, b: int) -> CarrierMap:
    """``a -> (a^- + b)^- o b``; for non-group ``o`` the completely regular inverse is used."""
    return CarrierMap.of(rho_table(s)[b].tolist(), s.order)


def associated_solution(s: GeneralizedLeftSemiBrace) -> SetSolution:
    """``r(a, b) = (a o (a^- + b), (a^- + b)^- o b)``; the braid relation is not asserted."""
    return SetSolution(lambda_table(s).tolist(), rho_table(s).tolist())


def _maybe_raise(v: Verdict, strict: bool, what: str) -> Verdict:
    if strict and not v:
        raise InternalInconsistency(f"{what} fails at {v.witness}", v.witness)
    return v


def check_lambda_identities(s: GeneralizedLeftSemiBrace, strict: bool = False) -> Verdict:
    """lambda_a is a ``+``-endomorphism and ``lambda_{ab}(x) = (ab)^0 + lambda_a lambda_b(x)``."""
    lam, add, mul = lambda_table(s), s.add.arr, s.mul.arr
    n = s.order
    a = np.arange(n)[:, None, None]
    bad = lam[a, add[None]] != add[lam[:, :, None], lam[:, None, :]]
    v = _fail_or_pass(bad, "lambda_a(x+y) != lambda_a(x) + lambda_a(y)")
    if v:
        idem = np.array(s.mul.idem)
        ab = mul  # [a, b]
        lhs = lam[ab]  # [a, b, x]
        inner = lam[np.arange(n)[:, None, None], lam[None, :, :]]  # [a, b, x] = lambda_a(lambda_b(x))
        rhs = add[idem[ab][:, :, None], inner]
        v = _fail_or_pass(lhs != rhs, "lambda_{ab}(x) != (ab)^0 + lambda_a lambda_b(x)")
    return _maybe_raise(v, strict, "lambda identity")


@dataclass(frozen=True)
class ZeroClauseReport:
    clauses: dict
    b_plus_zero: frozenset[int]
    zero_plus_b: frozenset[int]

    def __bool__(self):
        return all(bool(v) for v in self.clauses.values())


def _plus_set(s, left=None, right=None):
    n = s.order
    if left is None:
        return frozenset(s.plus(b, right) for b in range(n))
    return frozenset(s.plus(left, b) for b in range(n))


def _closure_verdict(g: FiniteGroup, subset, need_inverses: bool) -> Verdict:
    for a in sorted(subset):
        for b in sorted(subset):
            if g(a, b) not in subset:
                return Verdict(False, (a, b), "not closed under o")
    if need_inverses:
        for a in sorted(subset):
            if g.inv[a] not in subset:
                return Verdict(False, (a,), "not closed under inverses")
    return PASS


def check_zero_clauses(s: LeftSemiBrace, strict: bool = False) -> ZeroClauseReport:
    """Five structural facts about ``0`` in the additive semigroup of a left semi-brace."""
    z = s.zero
    n = s.order
    bz = _plus_set(s, right=z)
    zb = _plus_set(s, left=z)
    sums = frozenset(s.plus(a, b) for a in range(n) for b in range(n))
    clauses = {
        "zero_middle_unit": PASS if is_middle_unit(s.add, z) else Verdict(False, (z,), "0 not a middle unit"),
        "zero_idempotent": PASS if s.plus(z, z) == z else Verdict(False, (z,), "0 + 0 != 0"),
        "b_equals_b_plus_b": (PASS if len(sums) == n else
                              Verdict(False, (min(set(range(n)) - sums),), "not a sum")),
        "b_plus_zero_subgroup": _closure_verdict(s.mul, bz, True),
        "zero_plus_b_subsemigroup": _closure_verdict(s.mul, zb, False),
    }
    report = ZeroClauseReport(clauses, bz, zb)
    if strict and not report:
        bad = [k for k, v in clauses.items() if not v]
        raise InternalInconsistency(f"clauses fail: {bad}")
    return report


@dataclass(frozen=True)
class RectangularDecomposition:
    left: frozenset[int]   # I = E(B + 0), a left zero semigroup
    group: frozenset[int]  # G = 0 + B + 0
    right: frozenset[int]  # Lambda = E(0 + B), a right zero semigroup

    def sum(self, s, i, g, l):
        return s.plus(s.plus(i, g), l)


def rectangular_decomposition(s: LeftSemiBrace) -> RectangularDecomposition:
    """Split ``(B,+)`` as ``I + G + Lambda`` and certify the splitting."""
    z, n = s.zero, s.order
    zb = _plus_set(s, left=z)
    if not is_subgroup(s.mul, zb):
        raise NotCompletelySimple("0 + B is not a subgroup of the multiplicative group")
    bz = _plus_set(s, right=z)
    es = idempotents(s.add)
    I = frozenset(bz & es)
    G = frozenset(s.plus(s.plus(z, b), z) for b in range(n))
    L = frozenset(zb & es)
    dec = RectangularDecomposition(I, G, L)

    def fail(msg):
        raise InternalInconsistency(f"decomposition certificate fails: {msg}")

    if not is_completely_simple(s.add):
        fail("(B,+) not completely simple")
    if not is_subsemigroup(s.add, es):
        fail("E(B) not closed")
    sub, _ = restrict(s.add, es)
    if classify_band(sub) not in ("rectangular_band", "left_zero", "right_zero") and sub.order > 1:
        fail("E(B) is not a rectangular band")
    if frozenset(s.plus(i, l) for i in I for l in L) != es:
        fail("E(B) != I + Lambda")
    if any(s.plus(i, j) != i for i in I for j in I):
        fail("I is not a left zero semigroup")
    if any(s.plus(l, m) != m for l in L for m in L):
        fail("Lambda is not a right zero semigroup")
    gsub, _ = restrict(s.add, G)
    try:
        as_group(gsub)
    except NotAGroup:
        fail("0 + B + 0 is not a group")
    images = {dec.sum(s, i, g, l) for i in I for g in G for l in L}
    if len(I) * len(G) * len(L) != n or len(images) != n:
        fail("the sum map I x G x Lambda -> B is not bijective")
    return dec


def check_middle_units_idempotent(s: GeneralizedLeftSemiBrace, strict: bool = False) -> Verdict:
    for u in sorted(middle_units(s.add)):
        if s.plus(u, u) != u:
            return _maybe_raise(Verdict(False, (u,), "middle unit is not idempotent"), strict,
                                "middle-unit idempotency")
    return PASS


def check_rho_antihom(s: GeneralizedLeftSemiBrace) -> Verdict:
    """``rho_{a o b} = rho_b rho_a`` on the whole carrier."""
    rho, mul = rho_table(s), s.mul.arr
    n = s.order
    lhs = rho[mul]  # [a, b, c] = rho_{ab}(c)
    rhs = rho[np.arange(n)[None, :, None], rho[:, None, :]]  # rho_b(rho_a(c))
    return _fail_or_pass(lhs != rhs, "rho_{ab} != rho_b rho_a")


def check_solution_condition(s: LeftSemiBrace) -> Verdict:
    """``a + lambda_b(c) o (0 + rho_c(b)) = a + b o (0 + c)`` for all a, b, c."""
    lam, rho = lambda_table(s), rho_table(s)
    add, mul, z = s.add.arr, s.mul.arr, s.zero
    n = s.order
    # [b, c]
    left_inner = mul[lam, add[z][rho.T]]
    right_inner = mul[np.arange(n)[:, None], add[z][None, :]]
    lhs = add[:, left_inner]
    rhs = add[:, right_inner]
    return _fail_or_pass(lhs != rhs, "solution condition fails")


def check_solution_condition_any(s: GeneralizedLeftSemiBrace) -> Verdict:
    """The solution condition when ``o`` is a group, braid check of ``r`` otherwise."""
    if isinstance(s, LeftSemiBrace) or isinstance(s.mul, FiniteGroup):
        return check_solution_condition(as_left_semibrace(s))
    return is_solution(associated_solution(s))


def as_left_semibrace(s: GeneralizedLeftSemiBrace) -> LeftSemiBrace:
    if isinstance(s, LeftSemiBrace):
        return s
    return LeftSemiBrace(s.add, as_group(s.mul.base))


def build_fg_family(group: FiniteGroup, f: CarrierMap, g: CarrierMap) -> LeftSemiBrace:
    """``a + b := b o fg(b^-) o f(a)`` for commuting idempotent endomorphisms f, g."""
    for name, h in (("f", f), ("g", g)):
        if not check_homomorphism(h, group.base, group.base) or h.then(h) != h:
            raise NotIdempotentEndomorphism(f"{name} is not an idempotent endomorphism")
    if f.then(g) != g.then(f):
        raise NonCommutingPair("fg != gf")
    fg = g.then(f)
    t, inv = group.table, group.inv

    def plus(a, b):
        return t[t[b][fg(inv[b])]][f(a)]
    return LeftSemiBrace(table_from_op(group.order, plus), group)


def build_zappa_szep(G: FiniteGroup, H: FiniteGroup, act_HG: Sequence[Sequence[int]],
                     act_GH: Sequence[Sequence[int]], phi: CarrierMap) -> LeftSemiBrace:
    """Zappa-Szep product on ``G x H`` (index ``a*|H| + u``) with ``(a,u)+(b,v) = (a, u phi(b) v)``.

    ``act_HG[u][b]`` is the left action of u on b (in G) and ``act_GH[u][b]`` the
    right action of b on u (in H).
    """
    m = H.order
    if phi.source_order != G.order or phi.target_order != m:
        raise NotMatchedPair("phi must map G to H")
    if phi(G.identity) != H.identity:
        raise PhiIdentityViolated("phi(1) != 1")

    def mul(p, q):
        a, u = divmod(p, m)
        b, v = divmod(q, m)
        return G(a, act_HG[u][b]) * m + H(act_GH[u][b], v)

    def add(p, q):
        a, u = divmod(p, m)
        b, v = divmod(q, m)
        return a * m + H(H(u, phi(b)), v)

    try:
        grp = as_group(table_from_op(G.order * m, mul))
    except AlgebraError as exc:
        raise NotMatchedPair(f"actions do not form a matched pair: {exc}") from None
    if grp.identity != G.identity * m + H.identity:
        raise NotMatchedPair("identity of the product is not (1,1)")
    return LeftSemiBrace(table_from_op(G.order * m, add), grp)


def trivial_actions(G: FiniteGroup, H: FiniteGroup):
    act_HG = [[b for b in range(G.order)] for _ in range(H.order)]
    act_GH = [[u] * G.order for u in range(H.order)]
    return act_HG, act_GH


def inversion_actions(G: FiniteGroup, H: FiniteGroup):
    """G of order 2 acting on H by inversion: ``u^b = u^-1`` for b != 1; H acts trivially on G."""
    if G.order != 2:
        raise NotMatchedPair("inversion action needs a group of order 2")
    act_HG = [[b for b in range(G.order)] for _ in range(H.order)]
    act_GH = [[u if b == G.identity else H.inv[u] for b in range(G.order)] for u in range(H.order)]
    return act_HG, act_GH


def zappa_szep_rho_anti_coordinates(G, H, act_HG, act_GH, phi) -> bool:
    """Coordinate form of the anti-homomorphism property of rho:
    ``phi(b) v phi(c) = phi(b . v c) v^c`` for all b, c in G and v in H."""
    for b in range(G.order):
        for c in range(G.order):
            for v in range(H.order):
                lhs = H(H(phi(b), v), phi(c))
                rhs = H(phi(G(b, act_HG[v][c])), act_GH[v][c])
                if lhs != rhs:
                    return False
    return True


def build_clifford_semibrace(c: CompletelyRegularStructure) -> GeneralizedLeftSemiBrace:
    """``a + b := a o b`` on a Clifford semigroup."""
    if not is_clifford(c):
        raise NotClifford("idempotents are not central")
    return make_semibrace(c.base, c)


def build_rightzero_semibrace(c: CompletelyRegularStructure) -> GeneralizedLeftSemiBrace:
    """``a + b := b``."""
    return make_semibrace(table_from_op(c.order, lambda a, b: b), c)


def build_leftzero_semibrace(c: CompletelyRegularStructure) -> GeneralizedLeftSemiBrace:
    """``a + b := a``."""
    return make_semibrace(table_from_op(c.order, lambda a, b: a), c)
