import pytest

from chernlab.groups import builtin_model, model_symmetric
from chernlab.lattice import LatticeDivisor, Theta
from chernlab.omega import (
    count_omega_dprime,
    enumerate_omega,
    enumerate_omega_ch,
    enumerate_omega_dprime,
    enumerate_omega_prime,
    kappa,
    pointwise_signature,
    theta_star_points,
    xi_class_map,
)
from chernlab.repring import (
    RepRing,
    builtin_fusion,
    builtin_group,
    restriction_kernel,
    table_dihedral8,
    table_sigma3,
    table_sigma4,
    table_trivial,
)


@pytest.fixture(scope="module")
def s3_ring():
    return RepRing(table_sigma3())


@pytest.fixture(scope="module")
def s4_ring():
    return RepRing(table_sigma4())


def test_omega_trivial_group():
    model = builtin_model("trivial")
    assert len(enumerate_omega(model, 2, 2)) == 1
    _, sigs, _ = enumerate_omega_prime(model, 2, 2)
    assert len(sigs) == 1
    _, dp = enumerate_omega_dprime(model, 2, 2)
    assert len(dp) == 1


def test_omega_sigma3_count():
    assert len(enumerate_omega(model_symmetric(3), 3, 2)) == 5


def test_omega_sigma4_count():
    assert len(enumerate_omega(model_symmetric(4), 2, 2)) == 17


def test_omega_ch_sigma3(s3_ring):
    och = enumerate_omega_ch(s3_ring, 3, 2)
    assert len(och) == 5


def test_omega_ch_sigma3_v2_same_count(s3_ring):
    assert len(enumerate_omega_ch(s3_ring, 3, 2, v=2)) == 5


def test_omega_ch_trivial():
    ring = RepRing(table_trivial())
    och = enumerate_omega_ch(ring, 2, 2)
    assert len(och) == 1


def test_kappa_trivial_hom(s4_ring):
    model = model_symmetric(4)
    hom = (model.identity, model.identity)
    elem = kappa(s4_ring.table, model, hom, 2, 2)
    theta = elem.divisors[0].theta
    for i, div in enumerate(elem.divisors):
        assert div == LatticeDivisor(theta, [theta.zero()] * s4_ring.dims[i])


def test_kappa_order4_element_rho_image(s4_ring):
    # u = (c, 1) with c a 4-cycle: the 3-dim standard character decomposes
    # as [t] + [2t] + [3t] on the dual lattice
    model = model_symmetric(4)
    c = model.index[(1, 2, 3, 0)]
    hom = (c, model.identity)
    elem = kappa(s4_ring.table, model, hom, 2, 2)
    theta = elem.divisors[0].theta
    t = (1, 0)
    expected = LatticeDivisor(theta, [t, theta.scale(2, t), theta.scale(3, t)])
    assert elem.divisors[3] == expected
    pi_image = elem.divisors[0] + elem.divisors[3]
    assert pi_image == LatticeDivisor(theta, [theta.zero(), t, (2, 0), (3, 0)])


def test_kappa_constant_on_conjugacy_orbits(s4_ring):
    model = model_symmetric(4)
    om = enumerate_omega(model, 2, 2)
    rep = om.reps[5]
    g = 7
    conj = (model.conj(g, rep[0]), model.conj(g, rep[1]))
    assert kappa(s4_ring.table, model, rep, 2, 2) == kappa(
        s4_ring.table, model, conj, 2, 2
    )


def test_kappa_bijective_sigma4(s4_ring):
    model = model_symmetric(4)
    om = enumerate_omega(model, 2, 2)
    och = enumerate_omega_ch(s4_ring, 2, 2)
    kimg = {kappa(s4_ring.table, model, r, 2, 2) for r in om.reps}
    assert len(kimg) == 17
    assert kimg == set(och)


def test_omega_ch_with_sylow_pruning_agrees(s4_ring):
    rd8 = RepRing(table_dihedral8())
    res = restriction_kernel(s4_ring, rd8, builtin_fusion("sigma4", "d8"))
    assert enumerate_omega_ch(s4_ring, 2, 2, sylow_restriction=res) == \
        enumerate_omega_ch(s4_ring, 2, 2)


def test_omega_prime_sigma4_equals_omega():
    om, sigs, proj = enumerate_omega_prime(model_symmetric(4), 2, 2)
    assert len(om) == len(sigs) == 17


def test_omega_dprime_sigma4_count():
    # independent count: three order-2 points, each covered by two Z-orbits
    # of order-4 points; per point either both orbits carry the 4-cycle class
    # (1 way) or both avoid it (3*3 ways): (1+9)^3
    _, dp = enumerate_omega_dprime(model_symmetric(4), 2, 2)
    assert len(dp) == 1000


def test_omega_dprime_closed_count_exponent_p():
    model = builtin_model("extraspecial(3,1)")
    assert count_omega_dprime(model, 3, 1) == 11
    assert count_omega_dprime(model, 3, 2) == 11 ** 4


def test_xi_injective_on_sigma3(s3_ring):
    model = model_symmetric(3)
    och = enumerate_omega_ch(s3_ring, 3, 2)
    images = {xi_class_map(f, s3_ring.table, model, 3, 2) for f in och}
    assert len(images) == len(och)


def test_xi_after_kappa_is_canonical_map(s4_ring):
    model = model_symmetric(4)
    om = enumerate_omega(model, 2, 2)
    pts = theta_star_points(2, 2, 2)
    for rep in om.reps:
        f = kappa(s4_ring.table, model, rep, 2, 2)
        assert xi_class_map(f, s4_ring.table, model, 2, 2) == pointwise_signature(
            model, rep, pts
        )


def test_chain_cardinalities_sigma3(s3_ring):
    model = model_symmetric(3)
    om = enumerate_omega(model, 3, 2)
    _, sigs, _ = enumerate_omega_prime(model, 3, 2)
    och = enumerate_omega_ch(s3_ring, 3, 2)
    _, dp = enumerate_omega_dprime(model, 3, 2)
    assert len(om) >= len(sigs) <= len(och) <= len(dp)
    assert (len(om), len(sigs), len(och), len(dp)) == (5, 5, 5, 16)


def test_abelian_identification():
    # for abelian A, OmegaCh(A) = Hom(A*, Theta(v)): each character goes to a
    # point; check the c4 case explicitly at v = 2
    ring = RepRing(builtin_group("c4"))
    och = enumerate_omega_ch(ring, 2, 2)
    theta = Theta(2, 2, 2)
    points = [pt for pt in theta.points()]
    gens = set()
    for elem in och:
        d = elem.divisors[1]
        assert d.dim() == 1
        gens.add(d.pairs[0][0])
    assert len(och) == 16 and gens == set(points)
