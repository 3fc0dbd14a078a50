"""Truncated Laurent arithmetic and the graded product layer."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from drinl import algebra as al
from drinl import laurent
from drinl.laurent import INF, GradedLaurent, TruncatedLaurent, from_rational

gf = al.GF(3)
Fz = al.FracField(al.PolyRing(gf, "z"))
Q = 3


def series(terms, trunc=8):
    return TruncatedLaurent(
        Fz, {n: Fz.from_poly(tuple(c)) for n, c in terms.items()}, trunc
    )


small = st.dictionaries(
    st.integers(-3, 6),
    st.lists(st.integers(0, 2), min_size=1, max_size=3).filter(lambda c: any(c)),
    max_size=5,
)


@given(small, small)
def test_mul_window_rule(a, b):
    x, y = series(a), series(b)
    p = x.mul(y)
    if x.coeffs and y.coeffs:
        assert p.trunc == min(x.trunc + y.vmin(), y.trunc + x.vmin())
    q = y.mul(x)
    assert p.eq_upto(q, min(p.trunc, q.trunc))


@given(small)
def test_invert_is_inverse(a):
    x = series(a)
    if not x.coeffs:
        return
    inv = x.invert()
    one = TruncatedLaurent.one(Fz, inv.trunc + x.vmin())
    assert x.mul(inv).eq_upto(one, x.mul(inv).trunc)


@given(small)
def test_twist_untwist(a):
    x = series(a)
    assert x.twist(2, Q).untwist(2, Q).coeffs == x.coeffs


def test_from_rational_geometric():
    # 1/(theta - 1) = theta^-1 + theta^-2 + ...
    x = from_rational(Fz, (Fz.one(),), (Fz.neg(Fz.one()), Fz.one()), 5)
    assert x.coeffs == {n: Fz.one() for n in range(1, 6)}


def test_from_rational_vs_product():
    num = (Fz.from_poly((0, 1)), Fz.one())  # z + theta
    den = (Fz.one(), Fz.one(), Fz.one())  # 1 + theta + theta^2
    x = from_rational(Fz, num, den, 10)
    d = TruncatedLaurent(Fz, {0: Fz.one(), -1: Fz.one(), -2: Fz.one()}, INF)
    n = TruncatedLaurent(Fz, {0: Fz.from_poly((0, 1)), -1: Fz.one()}, INF)
    assert x.mul(d).eq_upto(n, x.mul(d).trunc)


def test_eq_upto_outside_window_raises():
    x = series({0: (1,)}, trunc=3)
    y = series({0: (1,)}, trunc=9)
    with pytest.raises(ValueError):
        x.eq_upto(y, 5)


def test_one_unit():
    assert series({0: (1,), 2: (0, 1)}).is_one_unit()
    assert not series({0: (2,)}).is_one_unit()
    assert not series({-1: (1,), 0: (1,)}).is_one_unit()


def test_omega_functional_equation():
    N = 30
    om = laurent.omega_z(Fz, N + 2 * Q, Q)
    z = Fz.from_poly((0, 1))
    lin = GradedLaurent(
        0,
        TruncatedLaurent(Fz, {-1: Fz.neg(Fz.one()), 0: z}, N + 2 * Q),
        Q,
    )
    assert om.twist(1).eq_upto(lin.mul(om), N)


def test_carlitz_period_vs_omega_grades():
    om = laurent.omega_z(Fz, 20, Q)
    pi = laurent.carlitz_period(Fz, 20, Q)
    assert om.grade == 1
    assert pi.grade == Q
    # bodies lead with a unit constant at theta^0
    assert om.body.is_one_unit()
    assert pi.body.is_one_unit() or pi.body.neg().is_one_unit()


def test_graded_normalized_roundtrip():
    g = GradedLaurent(5, series({0: (1,), 1: (2,)}, 10), Q)
    n = g.normalized()
    assert 0 <= n.grade <= Q - 2
    assert g.comparable(n)
    assert g.eq_upto(n, 8)


@settings(max_examples=25)
@given(small, small, small)
def test_distributive_in_window(a, b, c):
    x, y, w = series(a), series(b), series(c)
    lhs = x.mul(y.add(w))
    rhs = x.mul(y).add(x.mul(w))
    n = min(lhs.trunc, rhs.trunc)
    assert lhs.eq_upto(rhs, n)


def test_render_parse_coefficients():
    from drinl.cli import parse_fz_coeff

    x = series({0: (1,), 1: (1, 2), 3: (0, 0, 1)})
    js = laurent.series_json(x)
    for item in js["terms"]:
        got = parse_fz_coeff(Fz, item["coeff"], 3)
        assert got == x.coeffs[item["n"]]
