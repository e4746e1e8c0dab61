"""Finite semigroups, groups and semilattices given by Cayley tables.

Elements are the dense indices ``0..n-1``; every structure is a table and
every check is an exhaustive scan.  Scans are vectorised with numpy, and a
failing check reports the lexicographically least failing tuple.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Literal, Sequence

import numpy as np

from .errors import (
    InternalInconsistency,
    MalformedMap,
    MalformedTable,
    NotAGroup,
    NotAssociative,
    NotCompletelyRegular,
    NotSemilattice,
)

Table = tuple[tuple[int, ...], ...]
BandKind = Literal["left_zero", "right_zero", "semilattice", "rectangular_band", "none"]


@dataclass(frozen=True)
class Verdict:
    ok: bool
    witness: tuple | None = None
    detail: str = ""

    def __bool__(self):
        return self.ok


PASS = Verdict(True)


def first_true(mask) -> tuple | None:
    idx = np.argwhere(mask)
    if len(idx) == 0:
        return None
    return tuple(int(i) for i in idx[0])


def _fail_or_pass(bad, detail="") -> Verdict:
    w = first_true(bad)
    return PASS if w is None else Verdict(False, w, detail)


def _is_index(v) -> bool:
    return isinstance(v, (int, np.integer)) and not isinstance(v, (bool, np.bool_))


def as_table(rows, order: int | None = None) -> Table:
    """Validate a square table of element indices and freeze it."""
    try:
        t = tuple(tuple(row) for row in rows)
    except TypeError as exc:
        raise MalformedTable(f"not a table: {exc}") from None
    n = len(t)
    if n == 0:
        raise MalformedTable("empty table")
    if order is not None and n != order:
        raise MalformedTable(f"expected order {order}, got {n}")
    for i, row in enumerate(t):
        if len(row) != n:
            raise MalformedTable(f"row {i} has length {len(row)}, expected {n}")
        for j, v in enumerate(row):
            if not _is_index(v) or not 0 <= v < n:
                raise MalformedTable(f"entry ({i},{j}) = {v!r} is not an element index")
    return tuple(tuple(int(v) for v in row) for row in t)


def table_from_op(n: int, op) -> Table:
    return tuple(tuple(op(a, b) for b in range(n)) for a in range(n))


def check_associative(table) -> Verdict:
    t = np.asarray(as_table(table))
    return _fail_or_pass(t[t] != t[:, t], "(ab)c != a(bc)")


@dataclass(frozen=True)
class FiniteSemigroup:
    table: Table

    def __post_init__(self):
        object.__setattr__(self, "table", as_table(self.table))
        v = check_associative(self.table)
        if not v:
            raise NotAssociative(f"not associative at {v.witness}", v.witness)

    @property
    def order(self) -> int:
        return len(self.table)

    @cached_property
    def arr(self) -> np.ndarray:
        a = np.array(self.table, dtype=np.intp)
        a.flags.writeable = False
        return a

    def __call__(self, a: int, b: int) -> int:
        return self.table[a][b]

    def elements(self) -> range:
        return range(self.order)


@dataclass(frozen=True)
class CompletelyRegularStructure:
    """A completely regular semigroup together with its inverse map ``a -> a^-``."""

    base: FiniteSemigroup
    inv: tuple[int, ...]

    def __post_init__(self):
        n = self.base.order
        inv = tuple(self.inv)
        if len(inv) != n or not all(_is_index(x) and 0 <= x < n for x in inv):
            raise MalformedMap("inverse array does not match the carrier")
        object.__setattr__(self, "inv", tuple(int(x) for x in inv))
        t, i = self.base.arr, np.array(self.inv)
        e = np.arange(n)
        bad = (t[t[e, i], e] != e) | (t[t[i, e], i] != i) | (t[e, i] != t[i, e])
        w = first_true(bad)
        if w is not None:
            raise NotCompletelyRegular(w[0])

    @property
    def order(self) -> int:
        return self.base.order

    @property
    def table(self) -> Table:
        return self.base.table

    @property
    def arr(self) -> np.ndarray:
        return self.base.arr

    @cached_property
    def inv_arr(self) -> np.ndarray:
        a = np.array(self.inv, dtype=np.intp)
        a.flags.writeable = False
        return a

    @cached_property
    def idem(self) -> tuple[int, ...]:
        """``a^0 = a a^-`` for every element."""
        return tuple(self.base.table[a][self.inv[a]] for a in range(self.order))

    def __call__(self, a: int, b: int) -> int:
        return self.base.table[a][b]


@dataclass(frozen=True)
class FiniteGroup(CompletelyRegularStructure):
    identity: int = 0

    def __post_init__(self):
        super().__post_init__()
        t, e = self.base.table, self.identity
        for a in range(self.order):
            if t[e][a] != a or t[a][e] != a:
                raise NotAGroup(f"{e} is not neutral for {a}", (a,))
            if t[a][self.inv[a]] != e:
                raise NotAGroup(f"{a} has no inverse", (a,))


def complete_regular_inverses(s: FiniteSemigroup) -> CompletelyRegularStructure:
    """Find the unique ``a^-`` with ``a a^- a = a``, ``a^- a a^- = a^-``, ``a a^- = a^- a``."""
    t = s.arr
    a = np.arange(s.order)[:, None]
    x = np.arange(s.order)[None, :]
    ok = (t[t[a, x], a] == a) & (t[t[x, a], x] == x) & (t[a, x] == t[x, a])
    inv = []
    for el in range(s.order):
        cands = np.flatnonzero(ok[el])
        if len(cands) == 0:
            raise NotCompletelyRegular(el)
        if len(cands) > 1:
            raise InternalInconsistency(f"element {el} has several inverses {cands.tolist()}")
        inv.append(int(cands[0]))
    return CompletelyRegularStructure(s, tuple(inv))


def as_group(s: FiniteSemigroup | Sequence[Sequence[int]]) -> FiniteGroup:
    if not isinstance(s, FiniteSemigroup):
        s = FiniteSemigroup(s)
    t = s.table
    n = s.order
    units = [e for e in range(n) if all(t[e][a] == a == t[a][e] for a in range(n))]
    if not units:
        raise NotAGroup("no identity element")
    e = units[0]
    inv = []
    for a in range(n):
        cands = [b for b in range(n) if t[a][b] == e == t[b][a]]
        if not cands:
            raise NotAGroup(f"element {a} is not invertible", (a,))
        inv.append(cands[0])
    return FiniteGroup(s, tuple(inv), e)


@dataclass(frozen=True)
class Semilattice:
    """Meet semilattice; ``a >= b`` iff ``ab = b``."""

    base: FiniteSemigroup

    def __post_init__(self):
        t = self.base.arr
        w = first_true(t != t.T)
        if w is not None:
            raise NotSemilattice(f"not commutative at {w}", w)
        d = np.flatnonzero(np.diag(t) != np.arange(self.order))
        if len(d):
            raise NotSemilattice(f"{int(d[0])} is not idempotent", (int(d[0]),))

    @classmethod
    def from_table(cls, rows) -> "Semilattice":
        return cls(FiniteSemigroup(rows))

    @property
    def order(self) -> int:
        return self.base.order

    @property
    def table(self) -> Table:
        return self.base.table

    def meet(self, a: int, b: int) -> int:
        return self.base.table[a][b]

    def geq(self, a: int, b: int) -> bool:
        return self.base.table[a][b] == b

    def comparable_pairs(self) -> list[tuple[int, int]]:
        """All ``(a, b)`` with ``a >= b``, diagonal included, in lexicographic order."""
        return [(a, b) for a in range(self.order) for b in range(self.order) if self.geq(a, b)]


def chain(m: int) -> Semilattice:
    """Chain ``m-1 > ... > 1 > 0`` (meet is ``min``)."""
    return Semilattice.from_table(table_from_op(m, min))


@dataclass(frozen=True)
class CarrierMap:
    source_order: int
    target_order: int
    map: tuple[int, ...]

    def __post_init__(self):
        m = tuple(self.map)
        if self.source_order < 1 or self.target_order < 1:
            raise MalformedMap("carriers must be non-empty")
        if len(m) != self.source_order:
            raise MalformedMap(f"map has {len(m)} entries, source has {self.source_order}")
        for x, v in enumerate(m):
            if not _is_index(v) or not 0 <= v < self.target_order:
                raise MalformedMap(f"image of {x} is {v!r}, outside the target")
        object.__setattr__(self, "map", tuple(int(v) for v in m))

    @classmethod
    def of(cls, images: Sequence[int], target_order: int) -> "CarrierMap":
        return cls(len(images), target_order, tuple(images))

    @classmethod
    def identity(cls, n: int) -> "CarrierMap":
        return cls(n, n, tuple(range(n)))

    @classmethod
    def constant(cls, n: int, m: int, value: int) -> "CarrierMap":
        return cls(n, m, (value,) * n)

    def __call__(self, x: int) -> int:
        return self.map[x]

    def then(self, g: "CarrierMap") -> "CarrierMap":
        """``g`` after ``self``."""
        if g.source_order != self.target_order:
            raise MalformedMap("maps are not composable")
        return CarrierMap(self.source_order, g.target_order, tuple(g.map[v] for v in self.map))

    def is_identity(self) -> bool:
        return self.source_order == self.target_order and self.map == tuple(range(self.source_order))


def compose(g: CarrierMap, f: CarrierMap) -> CarrierMap:
    return f.then(g)


def idempotents(s: FiniteSemigroup) -> frozenset[int]:
    return frozenset(int(a) for a in np.flatnonzero(np.diag(s.arr) == np.arange(s.order)))


def is_middle_unit(s: FiniteSemigroup, u: int) -> bool:
    t = s.arr
    return bool(np.array_equal(t[t[:, u]], t))


def middle_units(s: FiniteSemigroup) -> frozenset[int]:
    return frozenset(u for u in s.elements() if is_middle_unit(s, u))


def middle_unit_semigroup(s: FiniteSemigroup) -> frozenset[int]:
    """Elements having an inverse ``x'`` with ``x+x'`` and ``x'+x`` middle units.

    Closure of the returned set under the operation is certified.
    """
    t = s.table
    mu = middle_units(s)
    found = set()
    for x in s.elements():
        for y in s.elements():
            if (t[t[y][x]][y] == y and t[t[x][y]][x] == x
                    and t[x][y] in mu and t[y][x] in mu):
                found.add(x)
                break
    for a in found:
        for b in found:
            if t[a][b] not in found:
                raise InternalInconsistency(f"middle-unit set not closed at {(a, b)}", (a, b))
    return frozenset(found)


def is_band(s: FiniteSemigroup) -> bool:
    return len(idempotents(s)) == s.order


def classify_band(s: FiniteSemigroup) -> BandKind:
    """Most specific of left_zero, right_zero, semilattice, rectangular_band; else none."""
    if not is_band(s):
        return "none"
    t = s.arr
    e = np.arange(s.order)
    if np.all(t == e[:, None]):
        return "left_zero"
    if np.all(t == e[None, :]):
        return "right_zero"
    if np.array_equal(t, t.T):
        return "semilattice"
    # aba = a
    if np.all(t[t, e[:, None]] == e[:, None]):
        return "rectangular_band"
    return "none"


def is_clifford(c: CompletelyRegularStructure) -> bool:
    t = c.arr
    es = sorted(idempotents(c.base))
    return bool(np.array_equal(t[es, :], t[:, es].T))


def is_completely_simple(s: FiniteSemigroup) -> bool:
    """For a finite semigroup: simple iff ``S a S = S`` for every ``a``."""
    t = s.arr
    n = s.order
    for a in range(n):
        if len(np.unique(t[t[:, a]])) != n:
            return False
    return True


def is_subsemigroup(s: FiniteSemigroup, subset: Iterable[int]) -> bool:
    sub = set(subset)
    return bool(sub) and all(s(a, b) in sub for a in sub for b in sub)


def restrict(s: FiniteSemigroup, subset: Iterable[int]) -> tuple[FiniteSemigroup, tuple[int, ...]]:
    """Subsemigroup relabelled in increasing order; also returns the new-to-old labels."""
    labels = tuple(sorted(set(subset)))
    if not is_subsemigroup(s, labels):
        raise InternalInconsistency(f"{labels} is not closed")
    back = {x: i for i, x in enumerate(labels)}
    return FiniteSemigroup([[back[s(a, b)] for b in labels] for a in labels]), labels


def is_subgroup(g: FiniteGroup, subset: Iterable[int]) -> bool:
    sub = set(subset)
    return (is_subsemigroup(g.base, sub) and g.identity in sub
            and all(g.inv[a] in sub for a in sub))


def is_rectangular_group(s: FiniteSemigroup) -> bool:
    """Completely simple with a subsemigroup of idempotents (an orthodox completely simple semigroup)."""
    return is_completely_simple(s) and is_subsemigroup(s, idempotents(s))


def check_homomorphism(f: CarrierMap, s: FiniteSemigroup, t: FiniteSemigroup) -> Verdict:
    if f.source_order != s.order or f.target_order != t.order:
        raise MalformedMap(
            f"map {f.source_order}->{f.target_order} does not fit {s.order}->{t.order}")
    m = np.array(f.map)
    return _fail_or_pass(m[s.arr] != t.arr[m[:, None], m[None, :]], "f(ab) != f(a)f(b)")


def direct_product(s: FiniteSemigroup, t: FiniteSemigroup) -> FiniteSemigroup:
    """Carrier ``a*|t| + b``."""
    n, m = s.order, t.order
    return FiniteSemigroup([
        [s(p // m, q // m) * m + t(p % m, q % m) for q in range(n * m)]
        for p in range(n * m)
    ])


def left_zero(n: int) -> FiniteSemigroup:
    return FiniteSemigroup(table_from_op(n, lambda a, b: a))


def right_zero(n: int) -> FiniteSemigroup:
    return FiniteSemigroup(table_from_op(n, lambda a, b: b))


def rectangular_band(p: int, q: int) -> FiniteSemigroup:
    """``I x L`` with ``(i,l)(j,k) = (i,k)``, element index ``i*q + l``."""
    return FiniteSemigroup(table_from_op(p * q, lambda a, b: (a // q) * q + b % q))
