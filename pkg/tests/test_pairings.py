"""Torsion pairings: Gram nondegeneracy, adjointness, Galois equivariance.

Each fixture builds the full a-torsion of a finite t-module inside a
splitting extension, pairs the kernel of eta against the kernel of the
adjoint eta*, and checks the bracket against the Poonen-style residue
pairing.
"""

import pytest

from drinl import algebra as al
from drinl import pairings as pr
from drinl.drinfeld import DrinfeldModule
from drinl.twisted import kernel_basis, kernel_with_extension

P = 3
gf = al.GF(3)
A1 = al.PolyRing(al.GF(3), "t")

C = DrinfeldModule.carlitz(gf)
PHI1 = DrinfeldModule.from_strings(3, ["theta^2", "-1"])
PSI1 = DrinfeldModule.from_strings(3, ["1", "-1"])

F2 = (1, 0, 1)
F1 = (2, 1)


def _mc():
    return pr.FinTModule.from_reduction(C.reduce_mod(F2))


def _m2():
    return pr.FinTModule.from_reduction(PHI1.reduce_mod(F2))


def _mt():
    return pr.FinTModule.from_tensor(PHI1, PSI1, F1, z0=0)


FIXTURES = [
    ("carlitz-t", _mc, (0, 1), 1),
    ("carlitz-t2", _mc, (0, 0, 1), 1),
    ("carlitz-t-plus-1", _mc, (1, 1), 1),
    ("rank2-t", _m2, (0, 1), 2),
    ("rank2-t2", _m2, (0, 0, 1), 2),
    ("tensor-t", _mt, (0, 1), 4),
]


@pytest.mark.parametrize(
    "make,a,rank", [f[1:] for f in FIXTURES], ids=[f[0] for f in FIXTURES]
)
def test_torsion_pairing(make, a, rank):
    M = make()
    a = tuple(a)
    dega = len(a) - 1
    full = rank * dega
    E, xs, ys = M.torsion_basis(a, bound=full, cap=26)
    assert len(xs) == full and len(ys) == full
    eta = M.E_a(a)
    G = pr.gram_matrix(M, eta, E, xs, ys)
    assert pr.fq_rank(P, G) == full
    h = pr.kernel_order(M, E, xs)
    assert h == A1.monic(A1.pow(a, rank))
    assert h == pr.kernel_order(M, E, ys, adjoint=True)
    for b in [(0, 1), (1, 1), (2, 1, 1)]:
        assert pr.adjointness_check(M, eta, b, E, xs, ys)
    assert pr.galois_check(M, eta, E, xs, ys)
    # bracket pairing against the residue pairing, plus the linear
    # recurrence a(t) kills the bracket sequence
    x, y = xs[0], ys[-1]
    br = pr.bracket_pair(M, eta, x, y, E, h)
    assert br[0] == pr.poonen_pair(M, eta, x, y, E)
    opE = M.lift(M.Et, E)
    vals = []
    cur = list(x)
    for _ in range(len(h) - 1 + dega):
        vals.append(pr.poonen_pair(M, eta, cur, y, E))
        cur = opE.evaluate(cur)
    for i in range(len(h) - 1):
        assert sum(c * vals[i + k] for k, c in enumerate(a)) % P == 0


def test_frobenius_eta_gives_trace_form():
    M = _mc()
    d = 2
    eta = pr.frob_operator(M.field, M.ell, d)
    E, xs = kernel_with_extension(eta, bound=d * M.ell, cap=8)
    ys = kernel_basis(eta.star(), E, emb=M._embedding(E))
    assert len(xs) == d * M.ell and len(ys) == d * M.ell
    for x in xs:
        for y in ys:
            assert pr.poonen_pair(M, eta, x, y, E) == pr.trace_pair(E, x, y)


def test_pairing_compatible_with_t_action():
    assert pr.compat_check(_mc(), (0, 1), 1, bound=2, cap=26)
    assert pr.compat_check(_mc(), (1, 1), 1, bound=2, cap=26)
    assert pr.compat_check(_m2(), (0, 1), 1, bound=4, cap=26)
    assert pr.compat_check(_mt(), (0, 1), 1, bound=8, cap=26)


@pytest.mark.parametrize("phi", [C, PHI1], ids=["carlitz", "rank2"])
def test_det_one_minus_frobenius_gives_order(phi):
    for d in (1, 2, 3):
        for f in al.irreducibles(gf, d):
            assert pr.charpoly_order_route(phi, tuple(f))
