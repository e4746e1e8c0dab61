"""Exhaustive small-order search by partial-table backtracking.

Cells are filled in row-major order with ascending values, so results come out
in lexicographic order of their tables.  After every choice the partial table
is closed under forced cells (associativity, and the key identity when a
multiplicative group is fixed); a contradiction prunes the branch.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

import numpy as np

from .errors import AlgebraError
from .finalg import (
    CompletelyRegularStructure,
    FiniteGroup,
    FiniteSemigroup,
    Semilattice,
    complete_regular_inverses,
)
from .groups import SMALL_GROUPS, idempotent_endomorphisms, named_group
from .semibrace import LeftSemiBrace, build_fg_family
from .ybesol import check_right_cryptogroup_criterion

UNSET = -1


@dataclass
class _Rules:
    n: int
    mul: np.ndarray | None = None  # fixed group for key-identity propagation
    inv: np.ndarray | None = None
    commutative: bool = False
    idempotent: bool = False


def _set(t, a, b, v, changed) -> bool:
    cur = t[a][b]
    if cur == UNSET:
        t[a][b] = v
        changed.append((a, b))
        return True
    return cur == v


def _close(t, rules: _Rules) -> bool:
    """Add every forced cell; False on contradiction."""
    n = rules.n
    rng = range(n)
    while True:
        changed: list = []
        for x in rng:
            tx = t[x]
            for y in rng:
                u = tx[y]
                if rules.commutative and u != UNSET and not _set(t, y, x, u, changed):
                    return False
                for z in rng:
                    w = t[y][z]
                    # (xy)z = x(yz)
                    l = t[u][z] if u != UNSET else UNSET
                    r = tx[w] if w != UNSET else UNSET
                    if l != UNSET and r != UNSET:
                        if l != r:
                            return False
                    elif l != UNSET and w != UNSET:
                        _set(t, x, w, l, changed)
                    elif r != UNSET and u != UNSET:
                        _set(t, u, z, r, changed)
        if rules.mul is not None and not _close_key(t, rules, changed):
            return False
        if not changed:
            return True


def _close_key(t, rules: _Rules, changed) -> bool:
    """``a o (b + c) = a o b + a o (a^- + c)`` in both directions."""
    n, m, inv = rules.n, rules.mul, rules.inv
    for a in range(n):
        ai, ma = inv[a], m[a]
        for c in range(n):
            s = t[ai][c]
            if s == UNSET:
                continue
            right = ma[s]
            for b in range(n):
                lhs_cell = t[b][c]
                rhs = t[ma[b]][right]
                if lhs_cell != UNSET:
                    want = ma[lhs_cell]
                    if rhs != UNSET:
                        if rhs != want:
                            return False
                    else:
                        _set(t, ma[b], right, int(want), changed)
                elif rhs != UNSET:
                    # b + c = a^- o rhs
                    _set(t, b, c, int(m[ai][rhs]), changed)
    return True


def _search(rules: _Rules) -> Iterator[list[list[int]]]:
    n = rules.n
    t = [[UNSET] * n for _ in range(n)]
    if rules.idempotent:
        for a in range(n):
            t[a][a] = a
    if not _close(t, rules):
        return

    def rec(t):
        for p in range(n * n):
            a, b = divmod(p, n)
            if t[a][b] == UNSET:
                break
        else:
            yield [row[:] for row in t]
            return
        for v in range(n):
            nt = [row[:] for row in t]
            nt[a][b] = v
            if _close(nt, rules):
                yield from rec(nt)

    yield from rec(t)


def semigroup_tables(n: int) -> Iterator[list[list[int]]]:
    """All associative tables on ``{0..n-1}`` (labelled), lexicographically."""
    if n < 1:
        return iter(())
    return _search(_Rules(n))


@lru_cache(maxsize=None)
def semilattice_tables(m: int) -> tuple:
    """All labelled meet-semilattice tables of order ``m``."""
    return tuple(tuple(map(tuple, t)) for t in _search(_Rules(m, commutative=True, idempotent=True)))


def semilattices(m: int) -> list[Semilattice]:
    return [Semilattice.from_table(t) for t in semilattice_tables(m)]


def semibrace_tables(group: FiniteGroup) -> Iterator[list[list[int]]]:
    """Every ``+`` making ``(+, group)`` a left semi-brace."""
    return _search(_Rules(group.order, mul=group.arr, inv=group.inv_arr))


def left_semibraces(group: FiniteGroup) -> Iterator[LeftSemiBrace]:
    for add in semibrace_tables(group):
        yield LeftSemiBrace(add, group)


def groups_up_to(n: int) -> list[tuple[str, FiniteGroup]]:
    return [(name, named_group(name)) for k in range(1, n + 1) for name in SMALL_GROUPS.get(k, [])]


def all_left_semibraces(max_order: int) -> Iterator[tuple[str, LeftSemiBrace]]:
    """Left semi-braces over one labelled representative of each group of order <= max_order."""
    for name, g in groups_up_to(max_order):
        for s in left_semibraces(g):
            yield name, s


def completely_regular(n: int) -> Iterator[CompletelyRegularStructure]:
    for t in semigroup_tables(n):
        try:
            yield complete_regular_inverses(FiniteSemigroup(t))
        except AlgebraError:
            continue


def crypto_counterexample(max_order: int) -> CompletelyRegularStructure | None:
    """First completely regular table violating ``(ab)^0 = (a^0 b)^0``, by order then table."""
    for n in range(1, max_order + 1):
        for c in completely_regular(n):
            if not check_right_cryptogroup_criterion(c):
                return c
    return None


def fg_pairs(group: FiniteGroup) -> list[tuple]:
    """Commuting pairs of idempotent endomorphisms, lexicographic in (f, g)."""
    ends = idempotent_endomorphisms(group)
    return [(f, g) for f in ends for g in ends if f.then(g) == g.then(f)]


def fg_semibraces(group: FiniteGroup) -> Iterator[tuple]:
    for f, g in fg_pairs(group):
        yield f, g, build_fg_family(group, f, g)
