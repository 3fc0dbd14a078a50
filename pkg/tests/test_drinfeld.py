"""Drinfeld module data: characters, twist matrices, Exp/Log coefficients."""

from fractions import Fraction

import pytest

from drinl import algebra as al
from drinl import lvalues as lv
from drinl.drinfeld import DrinfeldModule
from drinl.laurent import TruncatedLaurent

gf = al.GF(3)
A = al.PolyRing(gf, "theta")
Fz = al.FracField(al.PolyRing(gf, "z"))

C = DrinfeldModule.carlitz(gf)
PHI1 = DrinfeldModule.from_strings(3, ["theta^2", "-1"])
PSI1 = DrinfeldModule.from_strings(3, ["1", "-1"])
PHI2 = DrinfeldModule.from_strings(3, ["theta^2", "theta", "1"])
PSI2 = DrinfeldModule.from_strings(3, ["-1", "1"])
PHI3 = DrinfeldModule.from_strings(3, ["theta^2", "1", "1"])
PSI3 = DrinfeldModule.from_strings(3, ["1", "1", "1"])
PHI4 = DrinfeldModule.from_strings(3, ["theta^3", "1"])

FIXTURES = [C, PHI1, PSI1, PHI2, PSI2, PHI3, PSI3, PHI4]


def test_carlitz_exp_log_leading_coefficients():
    # B_1 = 1/(theta^q - theta), C_1 = -B_1
    B = C.exp_coeffs(2)
    Cc = C.log_coeffs(2)
    d1 = (0, 2, 0, 1)  # theta^3 - theta
    assert B[0] == (A.one(), A.one())
    assert tuple(B[1][1]) == tuple(d1) and tuple(B[1][0]) == (1,)
    assert tuple(Cc[1][0]) == (2,) and tuple(Cc[1][1]) == tuple(d1)
    # D_2 = (theta^9 - theta)(theta^9 - theta^3)
    d2 = A.mul([0, 2] + [0] * 7 + [1], [0, 0, 0, 2] + [0] * 5 + [1])
    assert tuple(B[2][1]) == tuple(A.monic(d2))


def test_character_multiplicativity():
    for phi in (PHI1, PHI2, PHI3):
        a, b = (1, 1), (2, 0, 1)
        ab = A.mul(list(a), list(b))
        assert phi.chi(ab) == gf.mul(phi.chi(a), phi.chi(b))
        assert phi.chibar(ab) == gf.mul(phi.chibar(a), phi.chibar(b))


def test_chi_depends_only_on_degree():
    for phi in FIXTURES:
        c = phi.chi((0, 1))
        for a in [(1, 1), (2, 1), (0, 0, 1), (1, 2, 1)]:
            assert phi.chi(a) == gf.pow(c, len(a) - 1)


def test_radii_of_worked_examples():
    assert PHI1.log_radius() == Fraction(1, 2)
    assert PSI1.upsilon_degree() == Fraction(3, 8)
    assert PHI2.log_radius() == Fraction(1, 2)
    assert PSI2.upsilon_degree() == Fraction(3, 8)
    assert PHI3.log_radius() == Fraction(1, 2)
    assert PSI3.upsilon_degree() == Fraction(9, 26)
    assert PHI4.log_radius() == Fraction(0)
    assert PHI4.upsilon_degree() == Fraction(3, 2)


def test_gamma_theta_consistency():
    # constructing the twist matrices runs the determinant invariant check
    for phi in FIXTURES:
        phi.gamma_theta()


def test_deg_bounds_are_bounds():
    for phi in (C, PHI1, PHI4):
        bounds = phi.log_deg_bounds(5)
        for i, (num, den) in enumerate(phi.log_coeffs(5)):
            if num:
                assert A.deg(list(num)) - A.deg(list(den)) <= bounds[i]
        ebounds = phi.exp_deg_bounds(5)
        for i, (num, den) in enumerate(phi.exp_coeffs(5)):
            if num:
                assert A.deg(list(num)) - A.deg(list(den)) <= ebounds[i]


def _coeff_series(pair, depth):
    base, ser = lv._int_frac_series(list(pair[0]), list(pair[1]), depth, 3)
    return TruncatedLaurent(
        Fz,
        {base + j: Fz.from_int(c) for j, c in enumerate(ser) if c},
        base + depth,
    )


@pytest.mark.parametrize("phi", FIXTURES, ids=lambda m: "r%d-%s" % (m.r, m.kappas))
def test_exp_log_compose_to_identity(phi):
    """sum_{i+j=k} B_i C_j^(i) = delta_k0 through tau-order 6, certified
    to theta^-60 per coefficient."""
    N = 60
    B = phi.exp_coeffs(6)
    Cc = phi.log_coeffs(6)
    for k in range(7):
        acc = TruncatedLaurent.zero(Fz, N)
        for i in range(k + 1):
            j = k - i
            bi = _coeff_series(B[i], N + 5)
            cj = _coeff_series(Cc[j], N + 5).twist(i, 3)
            acc = acc.add(bi.mul(cj).truncate(N))
        want = TruncatedLaurent.one(Fz, N) if k == 0 else TruncatedLaurent.zero(Fz, N)
        assert acc.eq_upto(want, N), f"tau-order {k}"


def test_reduction_is_fq_linear():
    red = PHI1.reduce_mod((1, 0, 1))
    F = red.field
    for x in range(F.q):
        for y in range(F.q):
            lhs = red.phit.evaluate(F.add(x, y))
            rhs = F.add(red.phit.evaluate(x), red.phit.evaluate(y))
            assert lhs == rhs


def test_bad_reduction_has_no_character():
    bad = DrinfeldModule.from_strings(3, ["theta", "theta"])
    assert not bad.good_reduction
    with pytest.raises(ValueError):
        bad.chi((0, 1))
    with pytest.raises(ValueError):
        DrinfeldModule.from_strings(3, ["theta", "0"])  # vanishing lead
