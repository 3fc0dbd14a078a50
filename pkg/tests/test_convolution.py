"""The tensor module E(phi x psi): local orders, duality, mu/nu values."""

import pytest

from drinl import algebra as al
from drinl.convolution import (
    TensorLocal,
    TensorModule,
    bs_mu_degree_ok,
    bs_nu_degree_ok,
    dual_coeffs,
    local_bs_mu,
    local_bs_nu,
    order_oracle,
    swap_check,
)
from drinl.drinfeld import DrinfeldModule
from drinl.frobenius import FrobeniusData

gf = al.GF(3)

C = DrinfeldModule.carlitz(gf)
PHI1 = DrinfeldModule.from_strings(3, ["theta^2", "-1"])
PSI1 = DrinfeldModule.from_strings(3, ["1", "-1"])
PHI2 = DrinfeldModule.from_strings(3, ["theta^2", "theta", "1"])
PSI2 = DrinfeldModule.from_strings(3, ["-1", "1"])
PSI3 = DrinfeldModule.from_strings(3, ["1", "1", "1"])

F = (1, 0, 1)
G = (2, 2, 0, 1)

PAIRS = [(C, C), (PHI1, PSI1), (PHI2, PSI2), (PSI2, PSI3)]


def test_printed_orders_of_rank2_pair():
    # [E(F_f(z))] and [E(F_g(z))] as theta-polynomials over F_3[z]
    got_f = TensorLocal(PHI1, PSI1, F).order_formula()
    assert got_f == ((0, 0, 1, 2, 1), (0, 1, 1, 2), (1, 1), (2, 2), (1,))
    got_g = TensorLocal(PHI1, PSI1, G).order_formula()
    assert got_g == (
        (2, 1, 1, 2, 1, 0, 1),
        (2, 1, 0, 2),
        (1, 2, 0, 1),
        (2, 2, 0, 1),
        (),
        (),
        (1,),
    )


def test_carlitz_square_order_is_f_minus_fz():
    for d in (1, 2, 3):
        for f in al.irreducibles(gf, d):
            Rz = al.PolyRing(gf, "z")
            Az = al.PolyRing(Rz, "theta")
            fth = Az.normalize([(c,) if c else () for c in f])
            fz = Az.const(Rz.normalize(list(f)))
            assert TensorLocal(C, C, f).order_formula() == Az.sub(fth, fz)


@pytest.mark.parametrize("pair", PAIRS, ids=["CxC", "2x2", "3x2", "2x3"])
def test_order_formula_matches_raw_t_action(pair):
    phi, psi = pair
    for d in (1, 2, 3):
        for f in al.irreducibles(gf, d):
            assert TensorLocal(phi, psi, f).order_formula() == order_oracle(
                phi, psi, f
            ), (phi.kappas, psi.kappas, f)


def test_tensor_charpoly_evaluations_are_consistent():
    # det route at 1 and 0 against the full r*ell-dimensional charpoly
    tl = TensorLocal(PHI1, PSI1, F)
    K = tl.Kzt
    cp = tl.tensor_charpoly()
    at1 = K.zero()
    for c in reversed(cp):
        at1 = K.add(at1, c)
    assert K.sub(at1, tl.tensor_at_one())[0] == ()
    assert K.sub(cp[0], tl.tensor_at_zero())[0] == ()


def test_swap_duality():
    for f in [(0, 1), (1, 1), F]:
        assert swap_check(PHI1, PSI1, f)
    assert swap_check(PHI2, PSI2, (1, 1))


def test_dual_coeffs_involution():
    tl = TensorLocal(PHI1, PSI1, F)
    K = tl.Kzt
    cp = tl.tensor_charpoly()
    back = dual_coeffs(K, dual_coeffs(K, cp))
    # P is monic, so X^n P(1/X)/P(0) applied twice gives P back
    assert all(K.sub(x, y)[0] == () for x, y in zip(back, cp))


def test_bs_values_and_degree_bounds():
    for phi in (PHI1, PHI2):
        for f in [(0, 1), F]:
            d = len(f) - 1
            fd = FrobeniusData(phi, f)
            for ks in [(1,), (2,), (1, 1), (2, 1)]:
                if len(ks) >= phi.r:
                    continue
                mu = local_bs_mu(fd, ks)
                nu = local_bs_nu(fd, ks)
                assert bs_mu_degree_ok(phi, ks, d, mu)
                assert bs_nu_degree_ok(phi, ks, d, nu)


def test_bs_nu_single_index_is_plain_nu():
    fd = FrobeniusData(PHI2, F)
    for k in (1, 2, 3):
        assert local_bs_nu(fd, (k,)) == fd.nu_values(k)[k]


def test_theta_products_are_prefix_products():
    tm = TensorModule(PHI1, PSI1)
    Az = tm.Az
    pis = tm.theta_products(4)
    for i in range(1, 5):
        tw = [[Az.frob(e, i - 1) for e in row] for row in tm.theta_z]
        assert al.mat_mul(Az, pis[i - 1], tw) == pis[i]
