"""Frobenius charpolys at primes: worked values, invariants, point counts."""

import pytest

from drinl import algebra as al
from drinl.cli import render_charpoly
from drinl.drinfeld import DrinfeldModule
from drinl.frobenius import (
    FrobeniusData,
    extension_order_check,
    gekeler_check,
    reduction_order,
)

gf = al.GF(3)
A = al.PolyRing(gf, "theta")

PHI1 = DrinfeldModule.from_strings(3, ["theta^2", "-1"])
PSI1 = DrinfeldModule.from_strings(3, ["1", "-1"])

F = (1, 0, 1)  # theta^2 + 1
G = (2, 2, 0, 1)  # theta^3 - theta - 1


def test_rank2_charpolys_at_f_and_g():
    got = render_charpoly(FrobeniusData(PHI1, F).P)
    assert got == "X^2 + (2*theta + 2)*X + (theta^2 + 1)"
    got = render_charpoly(FrobeniusData(PHI1, G).P)
    assert got == "X^2 + (2*theta + 1)*X + (theta^3 + 2*theta + 2)"
    got = render_charpoly(FrobeniusData(PSI1, G).P)
    assert got == "X^2 + 2*X + (theta^3 + 2*theta + 2)"


def test_twisted_rank2_charpoly_at_f_against_point_counts():
    # the linear coefficient at f is checked against the raw t-action
    # order rather than a hardcoded string
    fd = FrobeniusData(PSI1, F)
    ok, oracle, formula = gekeler_check(PSI1, F, frob=fd)
    assert ok and oracle == formula


def test_constant_term_and_degree_invariants_rechecked():
    # construction with check=True already enforces these; run a module
    # with larger primes through the same gate
    phi3 = DrinfeldModule.from_strings(3, ["theta^2", "1", "1"])
    for f in al.irreducibles(gf, 3):
        FrobeniusData(phi3, f)


@pytest.mark.parametrize("p", [2, 3])
def test_order_formula_against_point_counts(p):
    """[phi(F_f)] = (-1)^r chi(f) P_f(1) for all primes of degree <= 4."""
    gfp = al.GF(p)
    mods = [
        DrinfeldModule.carlitz(gfp),
        DrinfeldModule.from_strings(p, ["theta", "1", "1"]),
    ]
    if p == 3:
        mods.append(PHI1)
    for phi in mods:
        for d in range(1, 5):
            for f in al.irreducibles(gfp, d):
                ok, oracle, formula = gekeler_check(phi, f)
                assert ok, (phi.kappas, f, oracle, formula)


def test_extension_orders_probe_all_coefficients():
    for phi in (PHI1, PSI1):
        assert extension_order_check(phi, (0, 1))
        assert extension_order_check(phi, F, nmax=2)


def test_mu_nu_values_of_worked_pair():
    # mu_phi(f) = theta + 1, mu_phi(g) = theta - 1 for phi_t = theta + theta^2 tau - tau^2
    fd_f = FrobeniusData(PHI1, F)
    fd_g = FrobeniusData(PHI1, G)
    assert fd_f.mu_values(1)[1] == (1, 1)
    assert fd_g.mu_values(1)[1] == (2, 1)
    # nu_psi(f) = theta + 1 (z + 1 after theta -> z), nu_psi(g) = 1
    fd_fp = FrobeniusData(PSI1, F)
    fd_gp = FrobeniusData(PSI1, G)
    assert fd_fp.nu_values(1)[1] == (1, 1)
    assert fd_gp.nu_values(1)[1] == (1,)


def test_recursion_checks():
    for phi in (PHI1, PSI1):
        for f in [(0, 1), F, G]:
            assert FrobeniusData(phi, f).recursion_checks(8)


def test_carlitz_charpoly_is_linear():
    C = DrinfeldModule.carlitz(gf)
    for f in al.irreducibles(gf, 2):
        fd = FrobeniusData(C, f)
        assert len(fd.P) == 2
        assert fd.P[0] == A.neg(f)  # X - f


def test_nu_values_satisfy_defining_series():
    """1/Q_f(X) = sum nu(f^m) X^m as a formal identity through X^6."""
    fd = FrobeniusData(PHI1, G)
    nu = fd.nu_values(6)
    qc = fd.q_coeffs()
    for m in range(1, 7):
        acc = A.zero()
        for k in range(0, m + 1):
            c = qc[k] if k < len(qc) else A.zero()
            acc = A.add(acc, A.mul(c, nu[m - k]))
        assert acc == A.zero()
