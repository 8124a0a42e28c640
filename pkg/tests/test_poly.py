import random

import pytest

from chernlab.errors import UnassignedVariable
from chernlab.field import GF
from chernlab.poly import PolyRing, grlex_order, lex_order, parse_poly


@pytest.fixture
def ring():
    return PolyRing(GF(3), ["x", "y", "z"])


def random_poly(ring, rng, terms=4, deg=3):
    p = ring.zero()
    for _ in range(terms):
        exps = tuple(rng.randrange(deg) for _ in range(ring.nvars))
        p = p + ring.monomial(exps, rng.randrange(1, ring.field.q))
    return p


def test_ring_axioms_random(ring):
    rng = random.Random(11)
    for _ in range(60):
        a, b, c = (random_poly(ring, rng) for _ in range(3))
        assert a + b == b + a
        assert (a + b) + c == a + (b + c)
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a - a == ring.zero()
        assert a * ring.one() == a


def test_no_zero_coefficients_stored(ring):
    x = ring.gen("x")
    p = x + x + x  # 3x = 0 over F_3
    assert p.terms == {}


def test_orders():
    ring = PolyRing(GF(2), ["a", "b"])
    p = parse_poly(ring, "a*b + b^3")
    lex = lex_order(2)
    grlex = grlex_order(2)
    assert p.leading(lex)[0] == (1, 1)
    assert p.leading(grlex)[0] == (0, 3)


def test_text_round_trip_canonical():
    ring = PolyRing(GF(4), ["c2", "c3", "w"])
    text = "c2^4 + c2^3*w^2 + c2^2*w + c3*w^2"
    p = parse_poly(ring, text)
    assert p.text(ring.lex()) == text
    q = parse_poly(ring, "(g+1)*c2 + g*w^2 + 1")
    assert parse_poly(ring, q.text(ring.lex())) == q


def test_substitute_is_ring_hom(ring):
    rng = random.Random(5)
    target = PolyRing(GF(3), ["u", "v"])
    images = {
        "x": parse_poly(target, "u + v"),
        "y": parse_poly(target, "u*v"),
        "z": parse_poly(target, "2*v^2 + 1"),
    }
    for _ in range(20):
        a, b = random_poly(ring, rng), random_poly(ring, rng)
        assert (a * b).substitute(images) == a.substitute(images) * b.substitute(images)
        assert (a + b).substitute(images) == a.substitute(images) + b.substitute(images)


def test_substitute_missing_variable(ring):
    p = parse_poly(ring, "x*y")
    with pytest.raises(UnassignedVariable):
        p.substitute({"x": ring.gen("x")})


def test_substitute_identity_on_constants(ring):
    one = ring.one()
    assert one.substitute({}) == one


def test_substitute_chern_class_images():
    # evaluation maps of the order-24 computation, via plain substitution
    from chernlab.fgl import honda_fgl
    from chernlab.groebner import QuotientRing, buchberger

    law = honda_fgl(2, 2, 32)
    source = PolyRing(GF(4), ["c2", "c3"])
    target = PolyRing(GF(4), ["x"])
    tq = QuotientRing(buchberger([target.gen("x") ** 32], target.lex()))
    x = target.gen("x")
    xbar_series = law.mul_series(-1)
    xbar = target.zero()
    for d, c in xbar_series.items():
        if d < 32:
            xbar = xbar + target.monomial((d,), c)
    assignment = {"c2": tq.reduce(x * xbar), "c3": target.zero()}
    img = parse_poly(source, "c2").substitute(assignment)
    assert tq.reduce(img) == tq.reduce(
        parse_poly(target, "x^2 + x^5 + x^11 + x^17 + x^23")
    )
    # two-variable evaluation: c2^2 lands on x^2 y^2
    target2 = PolyRing(GF(4), ["x", "y"])
    tq2 = QuotientRing(
        buchberger([target2.gen("x") ** 4, target2.gen("y") ** 4], target2.lex())
    )
    xv, yv = target2.gen("x"), target2.gen("y")
    z = law.add_in_ring(tq2.reduce(xv), tq2.reduce(yv), tq2)
    c2_img = tq2.reduce(xv * yv + yv * z + z * xv)
    img2 = parse_poly(source, "c2^2").substitute({"c2": c2_img, "c3": target2.zero()})
    assert tq2.reduce(img2) == tq2.reduce(parse_poly(target2, "x^2*y^2"))
