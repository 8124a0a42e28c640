import random

import pytest

from chernlab.cyclotomic import Cyclo, cyclotomic_polynomial
from chernlab.errors import InexactDivision


def test_known_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(2) == (1, 1)
    assert cyclotomic_polynomial(3) == (1, 1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)


def test_root_powers_cycle():
    for e in (3, 4, 6, 12):
        cy = Cyclo(e)
        z = cy.root_power(1)
        acc = cy.one
        for k in range(1, 2 * e + 1):
            acc = cy.mul(acc, z)
            assert acc == cy.root_power(k % e)


def test_ring_axioms_random():
    cy = Cyclo(12)
    rng = random.Random(4)

    def rand():
        return tuple(rng.randint(-3, 3) for _ in range(cy.degree))

    for _ in range(40):
        a, b, c = rand(), rand(), rand()
        assert cy.mul(a, b) == cy.mul(b, a)
        assert cy.mul(cy.mul(a, b), c) == cy.mul(a, cy.mul(b, c))
        assert cy.mul(a, cy.add(b, c)) == cy.add(cy.mul(a, b), cy.mul(a, c))


def test_conjugation_is_ring_automorphism():
    cy = Cyclo(12)
    rng = random.Random(8)
    for _ in range(30):
        a = tuple(rng.randint(-3, 3) for _ in range(cy.degree))
        b = tuple(rng.randint(-3, 3) for _ in range(cy.degree))
        assert cy.conjugate(cy.mul(a, b)) == cy.mul(cy.conjugate(a), cy.conjugate(b))
        assert cy.conjugate(cy.conjugate(a)) == a


def test_rational_recognition():
    cy = Cyclo(3)
    s = cy.add(cy.root_power(1), cy.root_power(2))  # = -1
    assert cy.is_rational(s) and cy.rational_value(s) == -1
    with pytest.raises(InexactDivision):
        cy.rational_value(cy.root_power(1))


def test_embedding():
    big, small = Cyclo(12), Cyclo(3)
    img = big.embed_from(small, small.root_power(1))
    assert img == big.root_power(4)


def test_exact_division():
    cy = Cyclo(4)
    assert cy.divide_exact((4, -8), 4) == (1, -2)
    with pytest.raises(InexactDivision):
        cy.divide_exact((3, 0), 2)
