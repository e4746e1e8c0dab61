"""Named small groups, generated on demand, and their endomorphisms.

Every group built here has its identity at index 0.  Direct products use
the row-major carrier ``a*|H| + b``.
"""
from __future__ import annotations

import re
from functools import lru_cache
from itertools import permutations, product

from .errors import AlgebraError
from .finalg import (
    CarrierMap,
    FiniteGroup,
    FiniteSemigroup,
    as_group,
    check_homomorphism,
    table_from_op,
)


def cyclic(n: int) -> FiniteGroup:
    return as_group(table_from_op(n, lambda a, b: (a + b) % n))


def dihedral(n: int) -> FiniteGroup:
    """Symmetries of the n-gon, order 2n; element ``r^i s^j`` has index ``j*n + i``."""
    def op(p, q):
        i, j = p % n, p // n
        k, l = q % n, q // n
        # s r^k = r^-k s
        rot = (i + (-k if j else k)) % n
        return ((j + l) % 2) * n + rot
    return as_group(table_from_op(2 * n, op))


def symmetric(k: int) -> FiniteGroup:
    perms = sorted(permutations(range(k)))
    index = {p: i for i, p in enumerate(perms)}
    # (p*q)(x) = p(q(x))
    return as_group(table_from_op(len(perms), lambda a, b: index[tuple(perms[a][x] for x in perms[b])]))


def quaternion() -> FiniteGroup:
    """Q8 as ``+-1, +-i, +-j, +-k``; index ``2*unit + sign``."""
    mult = {
        (0, 0): (0, 1), (0, 1): (1, 1), (0, 2): (2, 1), (0, 3): (3, 1),
        (1, 0): (1, 1), (1, 1): (0, -1), (1, 2): (3, 1), (1, 3): (2, -1),
        (2, 0): (2, 1), (2, 1): (3, -1), (2, 2): (0, -1), (2, 3): (1, 1),
        (3, 0): (3, 1), (3, 1): (2, 1), (3, 2): (1, -1), (3, 3): (0, -1),
    }

    def op(a, b):
        u, s = divmod(a, 2)
        v, t = divmod(b, 2)
        w, sign = mult[u, v]
        neg = (s + t + (sign < 0)) % 2
        return 2 * w + neg
    return as_group(table_from_op(8, op))


def group_product(g: FiniteGroup, h: FiniteGroup) -> FiniteGroup:
    m = h.order
    return as_group(table_from_op(
        g.order * m, lambda p, q: g(p // m, q // m) * m + h(p % m, q % m)))


def trivial_group() -> FiniteGroup:
    return cyclic(1)


_FACTOR = re.compile(r"^(C(\d+)|D(\d+)|S(\d+)|Q8)$")


def _factor(name: str) -> FiniteGroup:
    m = _FACTOR.match(name)
    if not m:
        raise AlgebraError(f"unknown group factor {name!r}")
    if m.group(2):
        return cyclic(int(m.group(2)))
    if m.group(3):
        # D4 is the dihedral group of order 8
        return dihedral(int(m.group(3)))
    if m.group(4):
        return symmetric(int(m.group(4)))
    return quaternion()


@lru_cache(maxsize=None)
def _named(name: str) -> tuple[FiniteGroup, tuple[int, ...]]:
    factors = [_factor(f) for f in name.split("x")]
    g = factors[0]
    for h in factors[1:]:
        g = group_product(g, h)
    return g, tuple(f.order for f in factors)


def named_group(name: str) -> FiniteGroup:
    """``C<n>``, ``D<n>`` (order 2n), ``S<k>``, ``Q8`` and ``x``-separated products thereof."""
    return _named(name)[0]


def factor_orders(name: str) -> tuple[int, ...]:
    return _named(name)[1]


# one representative per isomorphism type
SMALL_GROUPS = {
    1: ["C1"],
    2: ["C2"],
    3: ["C3"],
    4: ["C4", "C2xC2"],
    5: ["C5"],
    6: ["C6", "S3"],
    7: ["C7"],
    8: ["C8", "C2xC4", "C2xC2xC2", "D4", "Q8"],
}


def _digits(x: int, orders: tuple[int, ...]) -> list[int]:
    out = []
    for m in reversed(orders):
        x, d = divmod(x, m)
        out.append(d)
    return out[::-1]


def _undigits(ds, orders) -> int:
    x = 0
    for d, m in zip(ds, orders):
        x = x * m + d
    return x


def projection(name: str, keep) -> CarrierMap:
    """Idempotent endomorphism of a product group keeping the listed factors (1-based)."""
    orders = factor_orders(name)
    keep = set(keep)
    if not keep <= set(range(1, len(orders) + 1)):
        raise AlgebraError(f"{name} has {len(orders)} factors, cannot keep {sorted(keep)}")
    n = named_group(name).order
    images = []
    for x in range(n):
        ds = _digits(x, orders)
        images.append(_undigits([d if i + 1 in keep else 0 for i, d in enumerate(ds)], orders))
    return CarrierMap(n, n, tuple(images))


def named_map(group_name: str, name: str) -> CarrierMap:
    """``id``, ``zero`` or ``proj<digits>`` such as ``proj12``."""
    n = named_group(group_name).order
    if name == "id":
        return CarrierMap.identity(n)
    if name in ("zero", "0"):
        return CarrierMap.constant(n, n, 0)
    m = re.fullmatch(r"proj(\d*)", name)
    if m:
        return projection(group_name, [int(c) for c in m.group(1)])
    raise AlgebraError(f"unknown map {name!r}")


def generators(g: FiniteGroup) -> list[int]:
    """Greedy generating set: repeatedly add the least element not yet generated."""
    gens: list[int] = []
    span = {g.identity}
    for x in range(g.order):
        if x in span:
            continue
        gens.append(x)
        frontier = list(span)
        span = set(span)
        while frontier:
            y = frontier.pop()
            for s in gens:
                z = g(y, s)
                if z not in span:
                    span.add(z)
                    frontier.append(z)
    return gens


def _extend(g: FiniteGroup, h: FiniteGroup, gens, images) -> tuple[int, ...] | None:
    f = {g.identity: h.identity}
    frontier = [g.identity]
    while frontier:
        y = frontier.pop()
        for s, t in zip(gens, images):
            z, w = g(y, s), h(f[y], t)
            if z in f:
                if f[z] != w:
                    return None
            else:
                f[z] = w
                frontier.append(z)
    return tuple(f[x] for x in range(g.order))


def homomorphisms(g: FiniteGroup, h: FiniteGroup) -> list[CarrierMap]:
    """All homomorphisms ``g -> h`` in lexicographic order of their image tables."""
    gens = generators(g)
    found = set()
    for images in product(range(h.order), repeat=len(gens)):
        m = _extend(g, h, gens, images)
        if m is not None:
            found.add(m)
    out = [CarrierMap(g.order, h.order, m) for m in sorted(found)]
    for f in out:
        assert check_homomorphism(f, g.base, h.base)
    return out


def endomorphisms(g: FiniteGroup) -> list[CarrierMap]:
    return homomorphisms(g, g)


def idempotent_endomorphisms(g: FiniteGroup) -> list[CarrierMap]:
    return [f for f in endomorphisms(g) if f.then(f) == f]


def is_group_table(s: FiniteSemigroup) -> bool:
    try:
        as_group(s)
    except AlgebraError:
        return False
    return True
