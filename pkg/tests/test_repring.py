import random

import pytest

from chernlab.errors import InconsistentFusion, NotACharacterTable, UnknownGroup
from chernlab.repring import (
    CharacterTable,
    RepRing,
    builtin_fusion,
    builtin_group,
    lambda_rho_brute,
    lambda_rho_closed_form,
    restriction_kernel,
    table_cyclic,
    table_cyclic_product,
    table_dihedral8,
    table_extraspecial,
    table_sigma3,
    table_sigma4,
    table_trivial,
)


@pytest.fixture(scope="module")
def r3():
    return RepRing(table_sigma3())


@pytest.fixture(scope="module")
def r4():
    return RepRing(table_sigma4())


def test_trivial_group():
    ring = RepRing(table_trivial())
    assert ring.mijk[0][0] == [1]


def test_sigma3_structure(r3):
    sigma, eps = r3.by_name("sigma"), r3.by_name("eps")
    assert (sigma * sigma).text() == "1 + eps + sigma"
    assert r3.lam_irreducible(2, 2) == eps
    assert (eps * sigma) == sigma
    assert (eps * eps) == r3.one()


def test_sigma3_psi2_not_positive(r3):
    sigma = r3.by_name("sigma")
    img = r3.adams(sigma, 2)
    assert img == r3.one() - r3.by_name("eps") + sigma
    assert not img.is_positive()


def test_sigma4_full_table(r4):
    one, eps, sg, rho, er = (r4.irreducible(i) for i in range(5))
    assert eps * eps == one
    assert eps * sg == sg
    assert sg * sg == one + eps + sg
    assert sg * rho == rho + er
    assert rho * rho == one + sg + rho + er
    assert r4.adams(eps, 2) == one
    assert r4.adams(eps, 3) == eps
    assert r4.adams(sg, 2) == one - eps + sg
    assert r4.adams(sg, 3) == one + eps
    assert r4.adams(rho, 2) == one + sg + rho - er
    assert r4.adams(rho, 3) == one + eps - sg + rho
    assert r4.lam_irreducible(2, 2) == eps
    assert r4.lam_irreducible(3, 2) == er
    assert r4.lam_irreducible(3, 3) == eps
    # tau = eps*rho: lambda^2 tau = tau, lambda^3 tau = 1
    assert r4.lam_irreducible(4, 2) == er
    assert r4.lam_irreducible(4, 3) == one


def test_psi_identity_and_composition(r4):
    rng = random.Random(6)
    e = r4.table.exponent
    for _ in range(25):
        v = r4.from_coeffs([rng.randint(-2, 2) for _ in range(r4.h)])
        assert r4.adams(v, 1) == v
        j, k = rng.randint(1, 12), rng.randint(1, 12)
        assert r4.adams(r4.adams(v, k), j) == r4.adams(v, j * k)
        assert r4.adams(v, e) == v.dim() * r4.one()


def test_psi_ring_homomorphism(r4):
    rng = random.Random(7)
    for _ in range(20):
        a = r4.from_coeffs([rng.randint(0, 2) for _ in range(r4.h)])
        b = r4.from_coeffs([rng.randint(0, 2) for _ in range(r4.h)])
        for k in (2, 3, 5):
            assert r4.adams(a * b, k) == r4.adams(a, k) * r4.adams(b, k)
            assert r4.adams(a + b, k) == r4.adams(a, k) + r4.adams(b, k)


def test_psi_coprime_permutes_irreducibles(r4):
    for k in (5, 7, 11):
        images = [r4.adams(r4.irreducible(i), k) for i in range(r4.h)]
        coeff_sets = sorted(img.coeffs for img in images)
        expected = sorted(r4.irreducible(i).coeffs for i in range(r4.h))
        assert coeff_sets == expected


def test_lambda_addition_law_on_reps(r4):
    rng = random.Random(12)
    for _ in range(10):
        v = r4.from_coeffs([rng.randint(0, 1) for _ in range(r4.h)])
        w = r4.from_coeffs([rng.randint(0, 1) for _ in range(r4.h)])
        if v.dim() > 6 or w.dim() > 6:
            continue
        sv, sw = r4.lambda_series(v), r4.lambda_series(w)
        stot = r4.lambda_series(v + w)
        for k in range(len(stot)):
            acc = r4.zero()
            for i in range(k + 1):
                if i < len(sv) and k - i < len(sw):
                    acc = acc + sv[i] * sw[k - i]
            assert acc == stot[k]


def test_restriction_kernel_sigma4_d8(r4):
    rd8 = RepRing(table_dihedral8())
    res = restriction_kernel(r4, rd8, builtin_fusion("sigma4", "d8"))
    assert res.rank == 4
    assert len(res.kernel_basis) == 1
    # the kernel is generated by sigma - 1 - eps
    gen = r4.by_name("sigma") - r4.one() - r4.by_name("eps")
    assert res.contains(gen)
    assert not res.contains(r4.by_name("sigma"))


def test_restriction_kernel_sigma3_c3(r3):
    rc3 = RepRing(table_cyclic(3))
    res = restriction_kernel(r3, rc3, builtin_fusion("sigma3", "c3"))
    assert len(res.kernel_basis) == 1
    assert res.contains(r3.by_name("eps") - r3.one())


def test_restriction_kernel_identity(r3):
    fusion = list(range(r3.table.nclasses))
    res = restriction_kernel(r3, r3, fusion)
    assert res.kernel_basis == []
    assert res.rank == 3


def test_quotient_psi_sigma4(r4):
    # psi^2 on R(G)/I in the basis (1, eps, tau, eps tau):
    # psi^2(tau) = 2 + eps + eps*tau - tau
    rd8 = RepRing(table_dihedral8())
    res = restriction_kernel(r4, rd8, builtin_fusion("sigma4", "d8"))
    tau = r4.irreducible(4)  # eps*rho
    eps = r4.by_name("eps")
    target = r4.adams(tau, 2) - (2 * r4.one() + eps + eps * tau - tau)
    assert res.contains(target)
    basis = [0, 1, 4, 3]  # 1, eps, tau, eps*tau = rho
    mat = res.quotient_psi(2, basis)
    assert mat[2] == [2, 1, -1, 1]


def test_inconsistent_fusion_rejected(r4):
    rd8 = RepRing(table_dihedral8())
    bad = list(builtin_fusion("sigma4", "d8"))
    bad[1], bad[4] = bad[4], bad[1]  # breaks element orders
    with pytest.raises(InconsistentFusion):
        restriction_kernel(r4, rd8, bad)


def test_builtin_groups():
    t = builtin_group("sigma4")
    assert t.nclasses == 5 and t.dims == [1, 1, 2, 3, 3]
    assert builtin_group("trivial").nclasses == 1
    x31 = builtin_group("extraspecial(3,1)")
    assert x31.nclasses == 11
    assert sorted(x31.dims) == [1] * 9 + [3, 3]
    with pytest.raises(UnknownGroup):
        builtin_group("sigma6")
    with pytest.raises(UnknownGroup):
        builtin_group("m11")


def test_corrupted_table_rejected():
    t = table_sigma3()
    rows = [list(r) for r in t.rows]
    rows[2][1] = t.cyclo.from_int(1)  # corrupt a character value
    with pytest.raises(NotACharacterTable):
        CharacterTable(
            "bad", t.order, t.exponent, t.class_sizes, t.class_orders,
            t.power_maps, rows,
        )


def test_cyclic_product_table():
    t = table_cyclic_product(2, 2)
    assert t.nclasses == 4 and all(d == 1 for d in t.dims)


def test_extraspecial_table_scale():
    t = table_extraspecial(3, 2)
    assert t.nclasses == 83
    assert sorted(t.dims) == [1] * 81 + [9, 9]


def test_lambda_rho_closed_form_odd_primes():
    for p, d in ((3, 1), (3, 2), (5, 1)):
        for k in range(p ** d + 1):
            assert lambda_rho_brute(p, d, k) == lambda_rho_closed_form(p, d, k)


def test_lambda_rho_p2_counterexample():
    # at p = 2 the odd-prime closed form fails at k = 2:
    # brute force gives 4*rho - 2, the displayed form gives 2*rho + 2
    assert lambda_rho_brute(2, 2, 2) == (-2, 4)
    assert lambda_rho_closed_form(2, 2, 2) == (2, 2)
    assert lambda_rho_brute(2, 2, 2) != lambda_rho_closed_form(2, 2, 2)
