"""Special L-values: identities, worked series, regulators, lattices."""

import pytest

from drinl import algebra as al
from drinl import lvalues as lv
from drinl.drinfeld import DrinfeldModule
from drinl.laurent import INF, TruncatedLaurent

gf = al.GF(3)
Fz = lv.zfield(gf)

C = DrinfeldModule.carlitz(gf)
PHI1 = DrinfeldModule.from_strings(3, ["theta^2", "-1"])
PSI1 = DrinfeldModule.from_strings(3, ["1", "-1"])
PHI2 = DrinfeldModule.from_strings(3, ["theta^2", "theta", "1"])
PSI2 = DrinfeldModule.from_strings(3, ["-1", "1"])
PHI3 = DrinfeldModule.from_strings(3, ["theta^2", "1", "1"])
PSI3 = DrinfeldModule.from_strings(3, ["1", "1", "1"])
PHI4 = DrinfeldModule.from_strings(3, ["theta^3", "1"])


def lau(d, trunc):
    return TruncatedLaurent(Fz, {n: Fz.from_poly(tuple(c)) for n, c in d.items()}, trunc)


# hand-checked windows of the worked special values
EX1_L = {
    0: (1,), 1: (2,), 2: (0, 1), 3: (2,), 4: (1,),
    5: (1, 2), 6: (0, 1), 8: (1, 2, 1), 9: (2, 2),
}
EX3_L = {0: (1,), 1: (1,), 2: (1,), 3: (1, 2)}
EX4_DET = {
    0: (1,), 1: (1,), 3: (2,), 4: (1, 2), 5: (1,),
    6: (0, 1), 7: (1, 2), 8: (1,), 9: (2, 2),
}


# -- Pellarin-type identities


def test_pellarin_value_equals_carlitz_log_expansion():
    N = 10
    assert lv.pellarin_L(gf, 1, N).eq_upto(lv.twisted_carlitz_log(gf, 1, N), N)


def test_pellarin_factor_is_reciprocal_of_the_value():
    N = 10
    fac = lv.pellarin_factor(gf, N).normalized()
    val = lv.twisted_carlitz_log(gf, 1, N + 2)
    assert fac.grade == 0
    prod = fac.body.mul(val)
    assert prod.eq_upto(TruncatedLaurent.one(Fz, N), N)


def test_twisted_carlitz_log_is_character_twisted_pellarin():
    # character ratio c = 2 for the pair with kappa_r != eta_r
    N = 6
    assert lv.twisted_carlitz_log(gf, 2, N).eq_upto(
        lv.pellarin_L(gf, 1, N, char=2), N
    )


# -- Goss dual L-series


@pytest.mark.parametrize("s", [0, 1])
@pytest.mark.parametrize("phi", [C, PHI1, PSI2], ids=["carlitz", "rank2", "rank2b"])
def test_goss_dual_euler_equals_dirichlet(phi, s):
    N = 3
    a = lv.goss_L_dual(phi, s, N)
    b = lv.goss_L_dual_euler(phi, s, N)
    assert a.eq_upto(b, min(int(a.trunc), int(b.trunc), N))


def test_goss_dual_at_zero_is_one_unit():
    for phi in (C, PHI1):
        assert lv.goss_L_dual(phi, 0, 3).is_one_unit()
    assert lv.goss_L_dual(PHI2, 0, 2).is_one_unit()


def test_carlitz_goss_dual_is_pellarin_without_z():
    # mu_C(a) = 1, so L(C-dual, s) = zeta(s+1) seen in the z-free column
    N = 4
    v = lv.goss_L_dual(C, 1, N)
    for n, c in v.coeffs.items():
        num, den = c
        assert len(num) <= 1 and len(den) == 1


# -- the dual L-value of E(phi x psi)


def test_carlitz_square_dual_L_is_pellarin_value():
    N = 3
    v = lv.L_E_dual(C, C, 0, N)
    assert v.eq_upto(lv.pellarin_L(gf, 1, N), N)
    reg = lv.regulator(C, C, N)
    assert reg.class_order_certificate == "proven-trivial"
    assert v.eq_upto(reg.value, N)
    assert lv.L_conv(C, C, 0, N).eq_upto(TruncatedLaurent.one(Fz, N), N)


def test_worked_rank2_value_via_regulator():
    N = 5
    reg = lv.regulator(PHI1, PSI1, N)
    assert reg.method == "series"
    assert reg.value.eq_upto(lau(EX1_L, INF), N)


def test_worked_rank3_value_via_regulator():
    N = 3
    reg = lv.regulator(PHI3, PSI3, N)
    assert reg.value.eq_upto(lau(EX3_L, INF), N)


def test_closed_form_matches_convolution_series():
    N = 4
    reg = lv.regulator(PHI1, PSI1, N)
    closed = lv.conv_closed_form(PHI1, PSI1, N, reg_value=reg.value)
    assert closed.eq_upto(lv.L_conv(PHI1, PSI1, 0, N), N)


def test_factorization_same_rank():
    out = lv.factorization_check(PHI1, PSI1, 0, 2)
    assert out["equal"]


def test_factorization_rank_mismatch():
    out = lv.factorization_check(C, PSI1, 0, 3)
    assert out["equal"]
    out = lv.factorization_check(PHI1, C, 0, 2)
    assert out["equal"]


def test_demeslay_product_equals_regulator():
    out = lv.demeslay_check(PHI1, PSI1, 2)
    assert out["equal"]
    assert out["regulator"].class_order_certificate == "proven-trivial"


# -- regulators and lattices


def test_regulator_refuses_outside_radius():
    with pytest.raises(ValueError):
        lv.regulator(PHI4, PHI4, 3)


def vec(dx, dy, trunc=INF):
    return [lau(dx, trunc), lau(dy, trunc)]


def test_lattice_route_for_the_shtuka_like_module():
    N = 6
    x1 = vec({0: (1,)}, {})
    x2 = vec({-1: (1,), 1: (1,)}, {0: (1,)})
    reg = lv.lattice_regulator(PHI4, PHI4, [x1, x2], N + 1)
    assert reg.method == "lattice"
    assert reg.value.truncate(N).eq_upto(lau(EX4_DET, INF), N)


def test_exp_at_small_point():
    # Exp(theta^-1, 0) = (theta^-1, theta^-3 + theta^-5 + theta^-7 + ...)
    N = 9
    x = vec({1: (1,)}, {})
    e = lv.exp_apply(PHI4, PHI4, x, N)
    assert e[0].eq_upto(lau({1: (1,)}, INF), N)
    assert e[1].eq_upto(lau({3: (1,), 5: (1,), 7: (1,), 9: (1,)}, INF), N)


def test_log_inverts_exp_inside_the_disc():
    N = 8
    x = vec({2: (1,)}, {3: (2, 1)})
    e = lv.exp_apply(PHI1, PSI1, x, N)
    back = lv.log_apply(PHI1, PSI1, e, N)
    for a, b in zip(back, x):
        assert a.eq_upto(b.truncate(int(a.trunc)), int(a.trunc))


# -- window stability


def test_doubling_cutoffs_preserves_certified_coefficients():
    for fn in (
        lambda n: lv.pellarin_L(gf, 1, n),
        lambda n: lv.goss_L_dual(PHI1, 0, n),
        lambda n: lv.L_conv(PHI1, PSI1, 0, n),
    ):
        small = fn(2)
        big = fn(4)
        assert big.truncate(2).eq_upto(small, 2)
    small = lv.L_E_dual(PHI1, PSI1, 0, 1)
    big = lv.L_E_dual(PHI1, PSI1, 0, 2)
    assert big.truncate(1).eq_upto(small, 1)
