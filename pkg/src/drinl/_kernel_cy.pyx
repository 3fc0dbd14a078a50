# cython: boundscheck=False, wraparound=False
"""Compiled twin of _kernel_py: dense GF(p)[x] kernels.

Same list-of-int representation and the same public names; selection happens
in drinl._kernel.  Coefficients stay well inside C long range (p <= a few
thousand in practice, products accumulate mod p each step).
"""

IMPLEMENTATION = "cython"


cdef list _norm(list a):
    cdef Py_ssize_t n = len(a)
    while n and a[n - 1] == 0:
        n -= 1
    return a[:n]


def pnorm(a):
    return _norm(list(a))


def padd(list a, list b, long p):
    cdef Py_ssize_t i
    if len(a) < len(b):
        a, b = b, a
    cdef list out = list(a)
    for i in range(len(b)):
        out[i] = (<long> out[i] + <long> b[i]) % p
    return _norm(out)


def psub(list a, list b, long p):
    cdef Py_ssize_t n = max(len(a), len(b))
    cdef list out = [0] * n
    cdef Py_ssize_t i
    for i in range(len(a)):
        out[i] = a[i]
    for i in range(len(b)):
        out[i] = (<long> out[i] - <long> b[i]) % p
    return _norm(out)


def pneg(list a, long p):
    cdef Py_ssize_t i
    cdef list out = [0] * len(a)
    for i in range(len(a)):
        out[i] = (p - <long> a[i]) % p
    return out


def pmul(list a, list b, long p):
    if not a or not b:
        return []
    cdef Py_ssize_t la = len(a), lb = len(b)
    cdef list out = [0] * (la + lb - 1)
    cdef Py_ssize_t i, j
    cdef long ai
    for i in range(la):
        ai = a[i]
        if ai:
            for j in range(lb):
                out[i + j] = (<long> out[i + j] + ai * <long> b[j]) % p
    return _norm(out)


def pscale(list a, long c, long p):
    c %= p
    if c == 0:
        return []
    cdef Py_ssize_t i
    cdef list out = [0] * len(a)
    for i in range(len(a)):
        out[i] = (c * <long> a[i]) % p
    return out


def pdivmod(list a, list b, long p):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    cdef list r = list(a)
    cdef Py_ssize_t db = len(b) - 1
    if len(r) - 1 < db:
        return [], _norm(r)
    cdef long inv_lead = pow(b[db], p - 2, p)
    cdef list q = [0] * (len(r) - db)
    cdef Py_ssize_t i, j
    cdef long c
    for i in range(len(r) - 1 - db, -1, -1):
        c = (<long> r[i + db] * inv_lead) % p
        if c:
            q[i] = c
            for j in range(db + 1):
                r[i + j] = (<long> r[i + j] - c * <long> b[j]) % p
    return _norm(q), _norm(r)


def pgcd(list a, list b, long p):
    cdef long inv
    cdef Py_ssize_t i
    while b:
        a, b = b, pdivmod(a, b, p)[1]
    if a:
        inv = pow(a[len(a) - 1], p - 2, p)
        a = [(inv * <long> c) % p for c in a]
    return a


def pegcd(list a, list b, long p):
    cdef list r0 = list(a), r1 = list(b)
    cdef list s0 = [1], s1 = []
    cdef list t0 = [], t1 = [1]
    cdef list q, r
    cdef long inv
    while r1:
        q, r = pdivmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, psub(s0, pmul(q, s1, p), p)
        t0, t1 = t1, psub(t0, pmul(q, t1, p), p)
    if r0:
        inv = pow(r0[len(r0) - 1], p - 2, p)
        r0 = pscale(r0, inv, p)
        s0 = pscale(s0, inv, p)
        t0 = pscale(t0, inv, p)
    return r0, s0, t0


def pinvmod(list a, list m, long p):
    g, s, _ = pegcd(a, m, p)
    if g != [1]:
        raise ZeroDivisionError("element not invertible modulo the given polynomial")
    return pdivmod(s, m, p)[1]


def pmulmod(list a, list b, list m, long p):
    return pdivmod(pmul(a, b, p), m, p)[1]


def ppowmod(list a, e, list m, long p):
    cdef list out = [1 % p]
    cdef list base = pdivmod(a, m, p)[1]
    e = int(e)
    while e:
        if e & 1:
            out = pmulmod(out, base, m, p)
        base = pmulmod(base, base, m, p)
        e >>= 1
    return out


def fqmul(list A, list B, list m, long p):
    if not A or not B:
        return []
    cdef Py_ssize_t dm = len(m) - 1
    cdef Py_ssize_t la = len(A), lb = len(B)
    cdef list out = []
    cdef Py_ssize_t k, i, lo, hi, s, t
    cdef list ai, bj, acc
    cdef long c, d
    for k in range(la + lb - 1):
        acc = [0] * (2 * dm)
        lo = k - lb + 1
        if lo < 0:
            lo = 0
        hi = k + 1
        if hi > la:
            hi = la
        for i in range(lo, hi):
            ai = A[i]
            bj = B[k - i]
            if ai and bj:
                for s in range(len(ai)):
                    c = ai[s]
                    if c:
                        for t in range(len(bj)):
                            d = bj[t]
                            if d:
                                acc[s + t] = (<long> acc[s + t] + c * d) % p
        out.append(pdivmod(_norm(acc), m, p)[1])
    while out and not out[len(out) - 1]:
        out.pop()
    return out


def series_mul(list a, list b, Py_ssize_t n, long p):
    cdef list out = [0] * (n + 1)
    cdef Py_ssize_t i, j, top
    cdef long ai
    for i in range(len(a)):
        if i > n:
            break
        ai = a[i]
        if ai:
            top = n - i
            for j in range(len(b)):
                if j > top:
                    break
                if b[j]:
                    out[i + j] = (<long> out[i + j] + ai * <long> b[j]) % p
    return out


def series_inv(list a, Py_ssize_t n, long p):
    cdef long inv0 = pow(a[0], p - 2, p)
    cdef list out = [0] * (n + 1)
    out[0] = inv0
    cdef Py_ssize_t k, j, top
    cdef long s
    for k in range(1, n + 1):
        s = 0
        top = k if k < len(a) - 1 else len(a) - 1
        for j in range(1, top + 1):
            if a[j]:
                s = (s + <long> a[j] * <long> out[k - j]) % p
        out[k] = (-s * inv0) % p
    return out
