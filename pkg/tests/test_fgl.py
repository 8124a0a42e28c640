import pytest

from chernlab.errors import PrecisionExceeded, ResourceLimit
from chernlab.fgl import honda_fgl, multiplicative_fgl
from chernlab.field import GF
from chernlab.groebner import QuotientRing, buchberger
from chernlab.poly import PolyRing


def cap_ring(q, names, caps):
    ring = PolyRing(GF(q), names)
    return QuotientRing(buchberger([ring.gen(n) ** c for n, c in zip(names, caps)],
                                   ring.lex()))


def total_cap_ring(q, names, cap):
    from itertools import combinations_with_replacement

    ring = PolyRing(GF(q), names)
    gens = []
    for picks in combinations_with_replacement(range(len(names)), cap):
        e = [0] * len(names)
        for i in picks:
            e[i] += 1
        gens.append(ring.monomial(tuple(e)))
    return QuotientRing(buchberger(gens, ring.lex()))


# -- the printed series -------------------------------------------------------

def test_height2_p2_series():
    law = honda_fgl(2, 2, 32)
    assert law.mul_series(2) == {4: 1}
    assert law.mul_series(-1) == {1: 1, 4: 1, 10: 1, 16: 1, 22: 1}
    extra = [k for k in law.terms if k not in ((1, 0), (0, 1), (2, 2))]
    assert law.terms[(2, 2)] == 1
    assert all(i >= 4 and j >= 4 for i, j in extra)


def test_height2_p3_series():
    law = honda_fgl(3, 2, 16)
    assert law.mul_series(3) == {9: 1}
    assert law.mul_series(-1) == {1: 2}
    assert {d: c for d, c in law.mul_series(2).items() if d < 12} == {1: 2, 9: 1}
    extra = [k for k in law.terms if k not in ((1, 0), (0, 1))]
    assert all(i >= 3 and j >= 3 for i, j in extra)


def test_unit_axiom_all_laws():
    for law in (honda_fgl(2, 2, 16), honda_fgl(3, 2, 16), honda_fgl(2, 3, 16),
                multiplicative_fgl(3, 16)):
        assert all(c == 0 for (i, j), c in law.terms.items() if j == 0 and i != 1)
        assert all(c == 0 for (i, j), c in law.terms.items() if i == 0 and j != 1)
        assert law.terms[(1, 0)] == law.terms[(0, 1)] == 1


# -- axioms checked symbolically in capped rings ------------------------------

@pytest.mark.parametrize("p,n", [(2, 2), (3, 2)])
def test_associativity_and_commutativity(p, n):
    law = honda_fgl(p, n, 32)
    q = total_cap_ring(p, ["x", "y", "z"], 10)
    x, y, z = q.gen("x"), q.gen("y"), q.gen("z")
    left = law.add_in_ring(law.add_in_ring(x, y, q), z, q)
    right = law.add_in_ring(x, law.add_in_ring(y, z, q), q)
    assert left == right
    assert law.add_in_ring(x, y, q) == law.add_in_ring(y, x, q)
    assert law.add_in_ring(x, q.ring.zero(), q) == x


def test_jk_composition():
    law = honda_fgl(2, 2, 32)
    q = cap_ring(2, ["x"], [16])
    x = q.gen("x")
    for j in range(-2, 5):
        for k in range(-2, 5):
            lhs = law.mul_in_ring(j * k, x, q)
            rhs = law.mul_in_ring(j, law.mul_in_ring(k, x, q), q)
            assert lhs == rhs, (j, k)


def test_addition_law_of_series():
    # [j+k](x) = F([j](x), [k](x))
    law = honda_fgl(3, 2, 24)
    q = cap_ring(3, ["x"], [10])
    x = q.gen("x")
    for j in range(-2, 4):
        for k in range(-2, 4):
            lhs = law.mul_in_ring(j + k, x, q)
            rhs = law.add_in_ring(
                law.mul_in_ring(j, x, q), law.mul_in_ring(k, x, q), q
            )
            assert lhs == rhs, (j, k)


def test_height_property():
    for p, n in ((2, 2), (2, 3), (3, 2)):
        law = honda_fgl(p, n, 32)
        expected = {p ** n: 1} if p ** n < 32 else {}
        assert law.mul_series(p) == expected


def test_psi_periodicity():
    # where x^{p^{nw}} = 0, [k] and [l] agree when k = l mod p^w
    law = honda_fgl(2, 2, 32)
    for w, pairs in ((1, [(1, 5), (2, 6), (3, -1)]), (2, [(1, 17), (3, 19)])):
        q = cap_ring(2, ["x"], [2 ** (2 * w)])
        x = q.gen("x")
        for k, l in pairs:
            assert law.mul_in_ring(k, x, q) == law.mul_in_ring(l, x, q), (w, k, l)


def test_p_torsion():
    law = honda_fgl(2, 2, 32)
    q = cap_ring(2, ["x"], [30])
    a = q.gen("x")
    m = 0
    val = a
    while val and m < 10:
        val = law.mul_in_ring(2, val, q)
        m += 1
    assert not val and m <= 5


def test_multiplicative_law():
    law = multiplicative_fgl(2, 16)
    assert law.terms == {(1, 0): 1, (0, 1): 1, (1, 1): 1}
    # [k](x) = 1 - (1-x)^k
    q = cap_ring(2, ["x"], [8])
    x = q.gen("x")
    one = q.ring.one()
    for k in range(1, 6):
        expected = q.reduce(one - q.pow(q.reduce(one - x), k))
        assert law.mul_in_ring(k, x, q) == expected


def test_precision_guard():
    law = honda_fgl(2, 2, 8)
    q = cap_ring(2, ["x"], [12])
    with pytest.raises(PrecisionExceeded):
        law.add_in_ring(q.gen("x"), q.gen("x"), q)


def test_precision_ceiling():
    with pytest.raises(ResourceLimit):
        honda_fgl(2, 2, 100)


def test_add_in_big_ring_x_plus_x():
    law = honda_fgl(2, 2, 32)
    q = cap_ring(4, ["x"], [32])
    x = q.gen("x")
    assert law.add_in_ring(x, x, q) == q.pow(x, 4)
