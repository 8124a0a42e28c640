import pytest

from chernlab.errors import ValidationError
from chernlab.fgl import honda_fgl
from chernlab.groebner import standard_monomials
from chernlab.presentation import build_presentation
from chernlab.repring import (
    RepRing,
    table_cyclic,
    table_cyclic_product,
    table_sigma3,
    table_trivial,
)


@pytest.fixture(scope="module")
def law22():
    return honda_fgl(2, 2, 32)


@pytest.fixture(scope="module")
def law32():
    return honda_fgl(3, 2, 64)


def test_trivial_group(law22):
    pres = build_presentation(RepRing(table_trivial()), law22)
    assert pres.dimension() == 1


def test_c2_dimension_four(law22):
    pres = build_presentation(RepRing(table_cyclic(2)), law22)
    assert pres.dimension() == 4
    assert pres.std_monomial_texts() == ["1", "c2_1", "c2_1^2", "c2_1^3"]


def test_c2xc2_dimension(law22):
    # three nontrivial characters, each contributing one rank-four direction,
    # with products pinning the third to the formal sum of the first two
    pres = build_presentation(RepRing(table_cyclic_product(2, 2)), law22)
    assert pres.dimension() == 16


def test_sigma3_presentation(law32):
    pres = build_presentation(RepRing(table_sigma3()), law32)
    assert pres.dimension() == 5
    subs, core, rels, iso = pres.elimination_summary()
    assert iso is not None and (iso[0], iso[2]) == (3, 5)
    assert pres.killed == ["c2_1"]
    gb_texts = [g.text(pres.qring.order) for g in pres.qring.basis.polys]
    assert gb_texts == ["c2_1", "c3_1", "c3_2^5"]


def test_sigma3_v_stability(law32):
    rep = RepRing(table_sigma3())
    assert build_presentation(rep, law32, v=2).dimension() == 5


def test_v_below_group_valuation_rejected(law32):
    rep = RepRing(table_sigma3())
    with pytest.raises(ValidationError):
        build_presentation(rep, law32, v=0)


def test_z_vd_dimensions():
    # the truncation scheme alone has dimension p^{ndv}
    from chernlab.field import GF
    from chernlab.groebner import buchberger
    from chernlab.poly import PolyRing

    for (p, n, v, d) in ((2, 2, 1, 1), (2, 2, 1, 2), (3, 2, 1, 1)):
        ring = PolyRing(GF(p), [f"c{i}" for i in range(1, d + 1)])
        gens = [ring.gen(f"c{i}") ** (p ** (n * v)) for i in range(1, d + 1)]
        gb = buchberger(gens, ring.lex())
        assert len(standard_monomials(gb)) == p ** (n * d * v)
