"""Parity of the compiled kernel against the pure-Python reference."""

import os
import subprocess
import sys

from hypothesis import given, settings
from hypothesis import strategies as st

from drinl import _kernel as ker
from drinl import _kernel_py as pure

POLY = st.lists(st.integers(0, 2), min_size=0, max_size=12)
NZPOLY = st.lists(st.integers(0, 2), min_size=1, max_size=12).filter(
    lambda a: any(a)
)


def norm(a):
    return pure.pnorm(list(a))


@given(POLY, POLY)
def test_add_sub_roundtrip(a, b):
    s = ker.padd(list(a), list(b), 3)
    assert norm(ker.psub(s, list(b), 3)) == norm(a)


@given(POLY, POLY)
def test_mul_matches_pure(a, b):
    assert norm(ker.pmul(list(a), list(b), 3)) == norm(pure.pmul(a, b, 3))


@given(POLY, NZPOLY)
def test_divmod_identity(a, b):
    b = pure.pnorm(list(b))  # divisor must carry its true leading term
    if not b:
        return
    q, r = ker.pdivmod(list(a), list(b), 3)
    back = ker.padd(ker.pmul(list(q), list(b), 3), list(r), 3)
    assert norm(back) == norm(a)
    assert len(r) < len(pure.pnorm(list(b))) or not any(r)


@given(NZPOLY, NZPOLY)
def test_gcd_divides(a, b):
    g = ker.pgcd(list(a), list(b), 3)
    for x in (a, b):
        _, r = ker.pdivmod(list(x), list(g), 3)
        assert not any(r)


@given(NZPOLY)
@settings(max_examples=40)
def test_series_inv(a):
    if a[0] == 0:
        a = [1] + list(a[1:])
    n = 10
    inv = ker.series_inv(list(a), n, 3)
    prod = ker.series_mul(list(a), inv, n, 3)
    assert prod[0] == 1 and not any(prod[1:])


@given(POLY, POLY)
def test_series_mul_truncates(a, b):
    n = 6
    full = pure.pmul(a, b, 3)
    got = ker.series_mul(list(a), list(b), n, 3)
    want = (list(full) + [0] * (n + 1))[: n + 1]
    got = (list(got) + [0] * (n + 1))[: n + 1]
    assert got == want


def test_pure_fallback_selected_by_env():
    code = (
        "import os; os.environ['DRINL_PURE']='1'; "
        "from drinl import _kernel; "
        "print(_kernel.IMPLEMENTATION)"
    )
    out = subprocess.run(
        [sys.executable, "-c", code], capture_output=True, text=True, check=True
    )
    assert out.stdout.strip() == "python"


def test_compiled_selected_by_default():
    env = dict(os.environ)
    env.pop("DRINL_PURE", None)
    out = subprocess.run(
        [sys.executable, "-c", "from drinl import _kernel; print(_kernel.IMPLEMENTATION)"],
        capture_output=True,
        text=True,
        check=True,
        env=env,
    )
    assert out.stdout.strip() in ("cython", "python")
