"""Dense polynomial kernels over GF(p), pure Python reference version.

A polynomial a_0 + a_1 x + ... + a_n x^n is the list [a_0, ..., a_n] of ints
in {0, ..., p-1} with a_n != 0; [] is the zero polynomial.  These routines are
the hot loops of the package (Frobenius matrix products, Euler sweeps); the
Cython twin in _kernel_cy.pyx has identical semantics.
"""

IMPLEMENTATION = "python"


def pnorm(a):
    """Strip trailing zeros in place conventionally (returns a new list)."""
    n = len(a)
    while n and a[n - 1] == 0:
        n -= 1
    return a[:n]


def padd(a, b, p):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i in range(len(b)):
        out[i] = (out[i] + b[i]) % p
    return pnorm(out)


def psub(a, b, p):
    n = max(len(a), len(b))
    out = [0] * n
    for i in range(len(a)):
        out[i] = a[i]
    for i in range(len(b)):
        out[i] = (out[i] - b[i]) % p
    return pnorm(out)


def pneg(a, p):
    return [(-c) % p for c in a]


def pmul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return pnorm(out)


def pscale(a, c, p):
    c %= p
    if c == 0:
        return []
    return [(c * x) % p for x in a]


def pdivmod(a, b, p):
    """Quotient and remainder; b nonzero, coefficients in a field."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    db = len(b) - 1
    if len(r) - 1 < db:
        return [], pnorm(r)
    inv_lead = pow(b[db], p - 2, p)
    q = [0] * (len(r) - db)
    for i in range(len(r) - 1 - db, -1, -1):
        c = (r[i + db] * inv_lead) % p
        if c:
            q[i] = c
            for j in range(db + 1):
                r[i + j] = (r[i + j] - c * b[j]) % p
    return pnorm(q), pnorm(r)


def pgcd(a, b, p):
    """Monic gcd."""
    while b:
        a, b = b, pdivmod(a, b, p)[1]
    if a:
        inv = pow(a[-1], p - 2, p)
        a = [(c * inv) % p for c in a]
    return a


def pegcd(a, b, p):
    """Extended gcd: (g, s, t) with s*a + t*b = g, g monic (or zero)."""
    r0, r1 = list(a), list(b)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = pdivmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, psub(s0, pmul(q, s1, p), p)
        t0, t1 = t1, psub(t0, pmul(q, t1, p), p)
    if r0:
        inv = pow(r0[-1], p - 2, p)
        r0 = pscale(r0, inv, p)
        s0 = pscale(s0, inv, p)
        t0 = pscale(t0, inv, p)
    return r0, s0, t0


def pinvmod(a, m, p):
    g, s, _ = pegcd(a, m, p)
    if g != [1]:
        raise ZeroDivisionError("element not invertible modulo the given polynomial")
    return pdivmod(s, m, p)[1]


def pmulmod(a, b, m, p):
    return pdivmod(pmul(a, b, p), m, p)[1]


def ppowmod(a, e, m, p):
    out = [1 % p]
    base = pdivmod(a, m, p)[1]
    while e:
        if e & 1:
            out = pmulmod(out, base, m, p)
        base = pmulmod(base, base, m, p)
        e >>= 1
    return out


def fqmul(A, B, m, p):
    """Multiply polynomials over GF(p)[x]/(m): A, B are lists of residues.

    This is the inner product of the Frobenius matrix sweeps, so it avoids
    creating intermediates per term: one accumulator list per output slot.
    """
    if not A or not B:
        return []
    dm = len(m) - 1
    out = []
    for k in range(len(A) + len(B) - 1):
        acc = [0] * (2 * dm)
        lo = k - len(B) + 1
        if lo < 0:
            lo = 0
        hi = k + 1
        if hi > len(A):
            hi = len(A)
        for i in range(lo, hi):
            ai = A[i]
            bj = B[k - i]
            if ai and bj:
                for s, c in enumerate(ai):
                    if c:
                        for t, d in enumerate(bj):
                            acc[s + t] = (acc[s + t] + c * d) % p
        out.append(pdivmod(pnorm(acc), m, p)[1])
    while out and not out[-1]:
        out.pop()
    return out


def series_mul(a, b, n, p):
    """Product of power series prefixes, truncated to n+1 coefficients."""
    out = [0] * (n + 1)
    for i, ai in enumerate(a):
        if ai and i <= n:
            top = n - i
            for j, bj in enumerate(b):
                if j > top:
                    break
                if bj:
                    out[i + j] = (out[i + j] + ai * bj) % p
    return out


def series_inv(a, n, p):
    """Inverse of a power series with a[0] != 0, to n+1 coefficients."""
    inv0 = pow(a[0], p - 2, p)
    out = [0] * (n + 1)
    out[0] = inv0
    for k in range(1, n + 1):
        s = 0
        top = min(k, len(a) - 1)
        for j in range(1, top + 1):
            if a[j]:
                s += a[j] * out[k - j]
        out[k] = (-s * inv0) % p
    return out
