"""Schur polynomial evaluation and identity checks over finite fields.

S_{k_1..k_(n-1)} is the Schur polynomial of the partition
(k_1+...+k_(n-1), k_2+...+k_(n-1), ..., k_(n-1), 0), evaluated at concrete
field points.  The primary route is the Jacobi-Trudi determinant in the
complete homogeneous polynomials; the bialternant quotient serves as a
cross-check at points with distinct coordinates.  Also here: Pieri and dual
Pieri expansions, the reversal identity for inverted arguments, and both
Cauchy product decompositions (balanced and unbalanced), which underpin the
Euler factor decompositions of the convolution L-series.
"""

import itertools

from drinl import algebra as al


# -- T-power series with coefficients in a GF instance (dense lists)


def _ser_mul(F, a, b, n):
    out = [F.zero()] * (n + 1)
    for i, ai in enumerate(a[: n + 1]):
        if not F.is_zero(ai):
            for j, bj in enumerate(b[: n + 1 - i]):
                if not F.is_zero(bj):
                    out[i + j] = F.add(out[i + j], F.mul(ai, bj))
    return out


def _ser_inv(F, a, n):
    inv0 = F.inv(a[0])
    out = [inv0]
    for k in range(1, n + 1):
        acc = F.zero()
        for j in range(1, min(k, len(a) - 1) + 1):
            acc = F.add(acc, F.mul(a[j], out[k - j]))
        out.append(F.neg(F.mul(acc, inv0)))
    return out


def elementary(F, xs, kmax=None):
    """[e_0, e_1, ..., e_n] (truncated at kmax if given)."""
    out = [F.one()]
    for x in xs:
        new = list(out) + [F.zero()]
        for i in range(len(out), 0, -1):
            new[i] = F.add(new[i], F.mul(out[i - 1], x))
        out = new
    if kmax is not None:
        out = (out + [F.zero()] * kmax)[: kmax + 1]
    return out


def complete(F, xs, kmax):
    """[h_0, ..., h_kmax] via inversion of prod(1 - x_i T)."""
    poly = elementary(F, xs)
    signed = [c if i % 2 == 0 else F.neg(c) for i, c in enumerate(poly)]
    return _ser_inv(F, signed, kmax)


def schur(F, xs, ks):
    """S_{k_1..k_(n-1)}(xs) by Jacobi-Trudi; len(ks) == len(xs) - 1."""
    n = len(xs)
    if len(ks) != n - 1:
        raise ValueError("index tuple must have length n-1")
    if n == 1:
        return F.one()
    tails = [sum(ks[i:]) for i in range(n - 1)]
    h = complete(F, xs, max(tails[0] + n - 2, 0))
    M = [
        [_h(F, h, tails[i] - (i + 1) + (j + 1)) for j in range(n - 1)]
        for i in range(n - 1)
    ]
    return al.det(F, M)


def _h(F, h, i):
    if i < 0:
        return F.zero()
    return h[i]


def schur_bialternant(F, xs, ks):
    """S_{k} as the quotient of alternants; requires distinct coordinates."""
    n = len(xs)
    exps = [sum(ks[i:]) + (n - 1 - i) for i in range(n - 1)] + [0]
    num = al.det(F, [[F.pow(x, e) for x in xs] for e in exps])
    van = al.det(F, [[F.pow(x, n - 1 - i) for x in xs] for i in range(n)])
    return F.div(num, van)


def s_lambda(F, xs, lam):
    """Schur polynomial of an arbitrary partition via the factor
    (x_1...x_n)^lambda_n."""
    n = len(xs)
    lam = list(lam) + [0] * (n - len(lam))
    if any(lam[i] < lam[i + 1] for i in range(n - 1)):
        raise ValueError("not a partition")
    ks = [lam[i] - lam[i + 1] for i in range(n - 1)]
    prod = F.one()
    for x in xs:
        prod = F.mul(prod, x)
    return F.mul(F.pow(prod, lam[-1]), schur(F, xs, ks))


# -- identity checks


def reorder_check(F, xs, ks):
    """(x_1...x_n)^(k_1+...+k_(n-1)) S_k(1/x) == S_reversed(x)."""
    inv = [F.inv(x) for x in xs]
    prod = F.one()
    for x in xs:
        prod = F.mul(prod, x)
    lhs = F.mul(F.pow(prod, sum(ks)), schur(F, inv, ks))
    return lhs == schur(F, xs, list(reversed(ks)))


def pieri_check(F, xs, k, ks):
    """h_k * S_ks == sum over m-vectors of S_shifted * X^(m_(n-1))."""
    n = len(xs)
    h = complete(F, xs, k)
    lhs = F.mul(h[k], schur(F, xs, ks))
    X = F.one()
    for x in xs:
        X = F.mul(X, x)
    rhs = F.zero()
    for ms in _compositions(k, n):
        if any(ms[j + 1] > ks[j] for j in range(n - 1)):
            continue
        new = [ks[j] + ms[j] - ms[j + 1] for j in range(n - 1)]
        rhs = F.add(rhs, F.mul(schur(F, xs, new), F.pow(X, ms[-1])))
    return lhs == rhs


def dual_pieri_check(F, xs, k, ks):
    """e_k * S_ks, summed over 0/1 vectors in the admissible index set."""
    n = len(xs)
    if not 0 <= k <= n - 1:
        raise ValueError("need 0 <= k <= n-1")
    e = elementary(F, xs, k)
    lhs = F.mul(e[k], schur(F, xs, ks))
    X = F.one()
    for x in xs:
        X = F.mul(X, x)
    rhs = F.zero()
    for ms in itertools.product((0, 1), repeat=n):
        if sum(ms) != k:
            continue
        if any(
            ks[j - 1] == 0 and ms[j] == 1 and ms[j - 1] == 0
            for j in range(1, n)
        ):
            continue
        new = [ks[j] + ms[j] - ms[j + 1] for j in range(n - 1)]
        if any(v < 0 for v in new):
            # excluded by the index-set condition in all valid cases
            return False
        rhs = F.add(rhs, F.mul(schur(F, xs, new), F.pow(X, ms[-1])))
    return lhs == rhs


def _compositions(k, n):
    """All (m_0, ..., m_(n-1)) of nonnegative ints summing to k."""
    if n == 1:
        yield (k,)
        return
    for first in range(k + 1):
        for rest in _compositions(k - first, n - 1):
            yield (first,) + rest


def index_tuples(n, wmax):
    """All (k_1, ..., k_(n-1)) with weight k_1 + 2k_2 + ... <= wmax."""
    def rec(i, rem):
        if i == n:
            yield ()
            return
        for k in range(rem // i + 1):
            for tail in rec(i + 1, rem - i * k):
                yield (k,) + tail
    return list(rec(1, wmax))


def cauchy_check(F, xs, ys, wmax):
    """prod (1 - x_i y_j T)^(-1) == (1 - XYT^n)^(-1) sum S_k(x)S_k(y)T^wt,
    compared through T^wmax."""
    n = len(xs)
    if len(ys) != n:
        raise ValueError("balanced identity needs equally many x and y")
    lhs = [F.one()] + [F.zero()] * wmax
    for x in xs:
        for y in ys:
            lhs = _ser_mul(F, lhs, _ser_inv(F, [F.one(), F.neg(F.mul(x, y))], wmax), wmax)
    XY = F.one()
    for v in xs + ys:
        XY = F.mul(XY, v)
    rhs = [F.zero()] * (wmax + 1)
    for ks in index_tuples(n, wmax):
        w = sum((i + 1) * k for i, k in enumerate(ks))
        rhs[w] = F.add(rhs[w], F.mul(schur(F, xs, ks), schur(F, ys, ks)))
    geom = [F.zero()] * (wmax + 1)
    m = 0
    while m * n <= wmax:
        geom[m * n] = F.pow(XY, m)
        m += 1
    rhs = _ser_mul(F, rhs, geom, wmax)
    return lhs == rhs


def cauchy_unbalanced_check(F, xs, ys, wmax):
    """Bump's reduction for n = len(xs) < len(ys): the sum runs over
    (k_1..k_n) with S_{k_1..k_n,0..0}(y) X^(k_n)."""
    n = len(xs)
    ell = len(ys)
    if not n < ell:
        raise ValueError("unbalanced identity needs len(xs) < len(ys)")
    lhs = [F.one()] + [F.zero()] * wmax
    for x in xs:
        for y in ys:
            lhs = _ser_mul(F, lhs, _ser_inv(F, [F.one(), F.neg(F.mul(x, y))], wmax), wmax)
    X = F.one()
    for x in xs:
        X = F.mul(X, x)
    rhs = [F.zero()] * (wmax + 1)
    for ks in index_tuples(n + 1, wmax):
        w = sum((i + 1) * k for i, k in enumerate(ks))
        kp = list(ks) + [0] * (ell - 1 - n)
        term = F.mul(schur(F, xs, ks[:-1]) if n > 1 else F.one(), schur(F, ys, kp))
        rhs[w] = F.add(rhs[w], F.mul(term, F.pow(X, ks[-1])))
    return lhs == rhs
