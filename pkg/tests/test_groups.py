import pytest

from gsbrace.errors import AlgebraError
from gsbrace.finalg import CarrierMap, check_homomorphism
from gsbrace.groups import (
    SMALL_GROUPS,
    cyclic,
    endomorphisms,
    homomorphisms,
    idempotent_endomorphisms,
    named_group,
    named_map,
    projection,
)


@pytest.mark.parametrize("order", sorted(SMALL_GROUPS))
def test_small_groups_have_the_stated_order(order):
    for name in SMALL_GROUPS[order]:
        g = named_group(name)
        assert g.order == order and g.identity == 0


def test_abelian_and_not():
    def abelian(g):
        return all(g(a, b) == g(b, a) for a in range(g.order) for b in range(g.order))
    assert abelian(named_group("C2xC4"))
    assert not abelian(named_group("S3"))
    assert not abelian(named_group("D4"))
    assert not abelian(named_group("Q8"))


def test_q8_has_one_involution():
    g = named_group("Q8")
    assert sum(1 for a in range(8) if a != 0 and g(a, a) == 0) == 1


def test_homomorphism_counts():
    # |Hom(C_m, C_n)| = gcd(m, n)
    assert len(homomorphisms(cyclic(4), cyclic(6))) == 2
    assert len(endomorphisms(named_group("C2xC2"))) == 16
    # idempotent endomorphisms of C2^2: 0, id, and the 6 projections onto a line
    assert len(idempotent_endomorphisms(named_group("C2xC2"))) == 8
    assert len(endomorphisms(named_group("S3"))) == 10


def test_projections_are_idempotent_endomorphisms():
    g = named_group("C2xC2xC2")
    for keep in ([1], [1, 2], [2, 3], []):
        f = projection("C2xC2xC2", keep)
        assert check_homomorphism(f, g.base, g.base) and f.then(f) == f
    assert projection("C2xC2xC2", [1, 2, 3]).is_identity()


def test_named_map():
    assert named_map("C2xC2", "id") == CarrierMap.identity(4)
    assert named_map("C2xC2", "zero") == CarrierMap.constant(4, 4, 0)
    assert named_map("C2xC2", "proj1") == CarrierMap(4, 4, (0, 0, 2, 2))
    with pytest.raises(AlgebraError):
        named_map("C2", "bogus")
    with pytest.raises(AlgebraError):
        named_group("Z9")
