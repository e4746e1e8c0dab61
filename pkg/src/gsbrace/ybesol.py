"""Finite maps ``r(x, y) = (lambda_x(y), rho_y(x))`` on ``X x X``.

Braid verification, degeneracy and order classification, functional powers,
and the index/period pair, where ``r^0`` is the identity so a bijective map
has index 0.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import gcd

import numpy as np

from .errors import MalformedTable
from .finalg import (
    CompletelyRegularStructure,
    Table,
    Verdict,
    _fail_or_pass,
    as_table,
)


@dataclass(frozen=True)
class SetSolution:
    """``lam[x][y] = lambda_x(y)`` and ``rho[y][x] = rho_y(x)``; the braid relation is not assumed."""

    lam: Table
    rho: Table

    def __post_init__(self):
        lam, rho = as_table(self.lam), as_table(self.rho)
        if len(lam) != len(rho):
            raise MalformedTable("lambda and rho tables have different orders")
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "rho", rho)

    @classmethod
    def from_function(cls, n: int, r) -> "SetSolution":
        lam = [[0] * n for _ in range(n)]
        rho = [[0] * n for _ in range(n)]
        for x in range(n):
            for y in range(n):
                u, v = r(x, y)
                lam[x][y] = u
                rho[y][x] = v
        return cls(lam, rho)

    @classmethod
    def from_pair_map(cls, n: int, pairs) -> "SetSolution":
        """From a self-map of ``X x X`` given on pair codes ``x*n + y``."""
        return cls.from_function(n, lambda x, y: divmod(int(pairs[x * n + y]), n))

    @property
    def order(self) -> int:
        return len(self.lam)

    def __call__(self, x: int, y: int) -> tuple[int, int]:
        return self.lam[x][y], self.rho[y][x]

    @cached_property
    def lam_arr(self) -> np.ndarray:
        return np.array(self.lam, dtype=np.intp)

    @cached_property
    def rho_arr(self) -> np.ndarray:
        return np.array(self.rho, dtype=np.intp)

    @cached_property
    def pair_map(self) -> np.ndarray:
        """``r`` on pair codes: ``pair_map[x*n + y] = u*n + v``."""
        n = self.order
        out = self.lam_arr * n + self.rho_arr.T
        out = out.reshape(-1)
        out.flags.writeable = False
        return out


# Families used throughout the examples and tests.

def twist(n: int) -> SetSolution:
    return SetSolution.from_function(n, lambda x, y: (y, x))


def constant_solution(n: int, c: int = 0) -> SetSolution:
    return SetSolution.from_function(n, lambda x, y: (c, c))


def right_constant(n: int, c: int = 0) -> SetSolution:
    """``r(x, y) = (x, c)``, an idempotent solution."""
    return SetSolution.from_function(n, lambda x, y: (x, c))


def left_projection(n: int) -> SetSolution:
    """``r(x, y) = (x, x)``."""
    return SetSolution.from_function(n, lambda x, y: (x, x))


def right_projection(n: int) -> SetSolution:
    """``r(x, y) = (y, y)``."""
    return SetSolution.from_function(n, lambda x, y: (y, y))


def retraction_solution(f) -> SetSolution:
    """``r(x, y) = (f(x), x)`` for an idempotent map ``f``; satisfies ``r^3 = r^2``."""
    f = list(f)
    return SetSolution.from_function(len(f), lambda x, y: (f[x], x))


def permutation_solution(f, g) -> SetSolution:
    """``r(x, y) = (f(y), g(x))``; a solution iff ``fg = gf``."""
    f, g = list(f), list(g)
    return SetSolution.from_function(len(f), lambda x, y: (f[y], g[x]))


def dihedral_quandle_solution(n: int) -> SetSolution:
    """``r(x, y) = (y, 2y - x mod n)``; for n = 3 it has period 3."""
    return SetSolution.from_function(n, lambda x, y: (y, (2 * y - x) % n))


def _braid_sides(s: SetSolution):
    n = s.order
    P = s.pair_map
    x = np.arange(n)[:, None, None]
    y = np.arange(n)[None, :, None]
    z = np.arange(n)[None, None, :]
    # (r x id)(id x r)(r x id): rightmost factor acts first
    a, b = np.divmod(P[x * n + y], n)
    c, d = np.divmod(P[b * n + z], n)
    e, f = np.divmod(P[a * n + c], n)
    left = (e, f, d)
    # (id x r)(r x id)(id x r)
    a, b = np.divmod(P[y * n + z], n)
    c, d = np.divmod(P[x * n + a], n)
    e, f = np.divmod(P[d * n + b], n)
    right = (c, e, f)
    return left, right


def is_solution(s: SetSolution) -> Verdict:
    """Braid relation on all triples, evaluating both composites of ``r``."""
    left, right = _braid_sides(s)
    bad = (left[0] != right[0]) | (left[1] != right[1]) | (left[2] != right[2])
    return _fail_or_pass(bad, "braid relation fails")


def is_solution_lcr(s: SetSolution) -> Verdict:
    """Braid relation through its three component identities in lambda/rho form."""
    lam, rho = s.lam_arr, s.rho_arr
    n = s.order
    x = np.arange(n)[:, None, None]
    y = np.arange(n)[None, :, None]
    z = np.arange(n)[None, None, :]
    lxy, ryx, lyz, rzy = lam[x, y], rho[y, x], lam[y, z], rho[z, y]
    l_ok = lam[x, lyz] == lam[lxy, lam[ryx, z]]
    c_ok = lam[rho[lyz, x], rzy] == rho[lam[ryx, z], lxy]
    r_ok = rho[rzy, rho[lyz, x]] == rho[z, ryx]
    return _fail_or_pass(~(l_ok & c_ok & r_ok), "component identity fails")


def _identity_pairs(n: int) -> np.ndarray:
    return np.arange(n * n)


def power(s: SetSolution, k: int) -> np.ndarray:
    """``r^k`` as a self-map of pair codes; ``r^0`` is the identity."""
    if k < 0:
        raise ValueError("negative power")
    result = _identity_pairs(s.order)
    base = s.pair_map
    while k:
        if k & 1:
            result = base[result]
        base = base[base]
        k >>= 1
    return result


def index_period(s: SetSolution) -> tuple[int, int]:
    """Least ``i >= 0`` and ``p >= 1`` with ``r^(i+p) = r^i``, by iterating from ``r^0``."""
    seen: dict[bytes, int] = {}
    cur = _identity_pairs(s.order)
    P = s.pair_map
    k = 0
    while True:
        key = cur.tobytes()
        if key in seen:
            i = seen[key]
            return i, k - i
        seen[key] = k
        cur = P[cur]
        k += 1


def lcm(*xs: int) -> int:
    out = 1
    for x in xs:
        out = out * x // gcd(out, x)
    return out


def _bijective_rows(t: np.ndarray) -> bool:
    n = len(t)
    return all(len(np.unique(row)) == n for row in t)


@dataclass(frozen=True)
class SolutionProfile:
    is_ybe: bool
    left_nondegenerate: bool
    right_nondegenerate: bool
    bijective: bool
    involutive: bool
    idempotent: bool
    cubic: bool
    r3_is_r2: bool
    index: int
    period: int

    @property
    def degenerate(self) -> bool:
        return not self.left_nondegenerate and not self.right_nondegenerate

    @property
    def nondegenerate(self) -> bool:
        return self.left_nondegenerate and self.right_nondegenerate


def classify(s: SetSolution) -> SolutionProfile:
    r1, r2, r3 = power(s, 1), power(s, 2), power(s, 3)
    ident = _identity_pairs(s.order)
    i, p = index_period(s)
    return SolutionProfile(
        is_ybe=bool(is_solution(s)),
        left_nondegenerate=_bijective_rows(s.lam_arr),
        right_nondegenerate=_bijective_rows(s.rho_arr),
        bijective=len(np.unique(r1)) == len(r1),
        involutive=bool(np.array_equal(r2, ident)),
        idempotent=bool(np.array_equal(r2, r1)),
        cubic=bool(np.array_equal(r3, r1)),
        r3_is_r2=bool(np.array_equal(r3, r2)),
        index=i,
        period=p,
    )


def check_right_cryptogroup_criterion(c: CompletelyRegularStructure) -> Verdict:
    """``(a o b)^0 = (a^0 o b)^0`` for all a, b."""
    t, idem = c.arr, np.array(c.idem)
    return _fail_or_pass(idem[t] != idem[t[idem]], "(ab)^0 != (a^0 b)^0")


def check_left_cryptogroup_criterion(c: CompletelyRegularStructure) -> Verdict:
    """Mirror image: ``(a o b)^0 = (a o b^0)^0``."""
    t, idem = c.arr, np.array(c.idem)
    return _fail_or_pass(idem[t] != idem[t[:, idem]], "(ab)^0 != (a b^0)^0")


def restrict_solution(s: SetSolution, block: range) -> SetSolution:
    """Restriction to ``block x block`` relabelled from 0; the block must be invariant."""
    lo = block.start
    lam = [[s.lam[x][y] - lo for y in block] for x in block]
    rho = [[s.rho[y][x] - lo for x in block] for y in block]
    return SetSolution(lam, rho)

