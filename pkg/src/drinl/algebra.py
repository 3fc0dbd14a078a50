"""Exact base arithmetic.

Prime fields and their finite extensions (with Frobenius and trace), dense
univariate polynomial rings over any coefficient ring, fraction fields
(rational functions in z, and the bivariate field F_q(z,theta)), matrix
helpers with a division-free characteristic polynomial, and enumeration /
factorization of monic polynomials.

Every ring here is a small context object exposing the same protocol
(zero/one/add/sub/neg/mul/is_zero, plus inv for fields) over opaque element
values, so matrix code and series code work uniformly at every level of the
tower.  Elements are plain hashable Python values (ints, tuples); equality is
structural.
"""

import functools
import itertools

from drinl import _kernel as K

NEG_INF = float("-inf")


# ---------------------------------------------------------------------------
# finite fields


class GF:
    """GF(p^d) with elements encoded as ints (base-p digit vectors).

    `q0` is the Frobenius base: frob(a) = a^q0.  It defaults to p; pass
    q0 = p^e when the field itself plays the role of F_q (e.g. coefficient
    fields F_9, F_27 in symmetric-function tests).  `modulus` is the defining
    irreducible over F_p as an int-coefficient list; when omitted the first
    irreducible in enumeration order is used.
    """

    def __init__(self, p, d=1, modulus=None, q0=None):
        self.p = p
        self.d = d
        self.q = p ** d
        self.q0 = q0 if q0 is not None else p
        e = 0
        qq = 1
        while qq < self.q0:
            qq *= p
            e += 1
        if qq != self.q0:
            raise ValueError("q0 must be a power of p")
        self.e = e
        if d % max(e, 1) != 0 and d > 1:
            raise ValueError("Frobenius base does not embed")
        self.frob_order = d // e if e and d % e == 0 else d
        if d == 1:
            self.modulus = [0, 1] if modulus is None else list(modulus)
        else:
            if modulus is None:
                modulus = _first_irreducible(p, d)
            self.modulus = list(modulus)
        self._frob_tables = {}

    def __repr__(self):
        return f"GF({self.p}^{self.d})" if self.d > 1 else f"GF({self.p})"

    # -- encoding

    def decode(self, a):
        out = []
        p = self.p
        while a:
            a, r = divmod(a, p)
            out.append(r)
        return out

    def encode(self, coeffs):
        out = 0
        for c in reversed(coeffs):
            out = out * self.p + (c % self.p)
        return out

    # -- protocol

    def zero(self):
        return 0

    def one(self):
        return 1

    def is_zero(self, a):
        return a == 0

    def from_int(self, n):
        return n % self.p

    def add(self, a, b):
        if self.d == 1:
            return (a + b) % self.p
        return self.encode(K.padd(self.decode(a), self.decode(b), self.p))

    def sub(self, a, b):
        if self.d == 1:
            return (a - b) % self.p
        return self.encode(K.psub(self.decode(a), self.decode(b), self.p))

    def neg(self, a):
        if self.d == 1:
            return (-a) % self.p
        return self.encode(K.pneg(self.decode(a), self.p))

    def mul(self, a, b):
        if self.d == 1:
            return (a * b) % self.p
        return self.encode(K.pmulmod(self.decode(a), self.decode(b), self.modulus, self.p))

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.d == 1:
            return pow(a, self.p - 2, self.p)
        return self.encode(K.pinvmod(self.decode(a), self.modulus, self.p))

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, n):
        if n < 0:
            a, n = self.inv(a), -n
        out = self.one()
        while n:
            if n & 1:
                out = self.mul(out, a)
            a = self.mul(a, a)
            n >>= 1
        return out

    def elements(self):
        return range(self.q)

    # -- Frobenius

    def _frob_table(self, k):
        # images of the power basis under a -> a^(q0^k), as residue lists
        k %= self.frob_order
        tab = self._frob_tables.get(k)
        if tab is None:
            xq = K.ppowmod([0, 1], self.q0 ** k, self.modulus, self.p)
            cur = [1]
            tab = []
            for _ in range(self.d):
                tab.append(cur)
                cur = K.pmulmod(cur, xq, self.modulus, self.p)
            self._frob_tables[k] = tab
        return tab

    def frob(self, a, k=1):
        """a^(q0^k); k may be negative (inverse Frobenius)."""
        if self.d == 1 or a <= 1:
            return a
        k %= self.frob_order
        if k == 0:
            return a
        tab = self._frob_table(k)
        acc = []
        for j, c in enumerate(self.decode(a)):
            if c:
                acc = K.padd(acc, K.pscale(tab[j], c, self.p), self.p)
        return self.encode(acc)

    def frob_inv(self, a, k=1):
        return self.frob(a, -k)

    def trace(self, a):
        """Trace to the Frobenius-base subfield F_q0."""
        out = 0
        for i in range(self.frob_order):
            out = self.add(out, self.frob(a, i))
        return out

    def theta_bar(self):
        """The residue class of the generator (theta mod f for F_f = A/fA)."""
        return self.p if self.d > 1 else 0


def _first_irreducible(p, d):
    for n in range(p ** d):
        coeffs = []
        a = n
        for _ in range(d):
            a, r = divmod(a, p)
            coeffs.append(r)
        coeffs.append(1)
        if _rabin_irreducible(coeffs, p):
            return coeffs
    raise AssertionError("no irreducible found")


def _rabin_irreducible(f, p):
    # distinct-degree splitting test: exact, works for any degree
    d = len(f) - 1
    if d <= 0:
        return False
    x = [0, 1]
    xq = K.ppowmod(x, p ** d, f, p)
    if K.psub(xq, K.pdivmod(x, f, p)[1], p):
        return False
    for ell in _prime_divisors(d):
        xe = K.ppowmod(x, p ** (d // ell), f, p)
        if K.pgcd(K.psub(xe, x, p), f, p) != [1]:
            return False
    return True


def _prime_divisors(n):
    out = []
    m = n
    f = 2
    while f * f <= m:
        if m % f == 0:
            out.append(f)
            while m % f == 0:
                m //= f
        f += 1
    if m > 1:
        out.append(m)
    return out


@functools.cache
def _field_root(E, mod):
    """A root in E of a monic polynomial over F_p that splits in E.

    Fixed-seed equal-degree splitting, so repeated calls give the same root
    (embeddings must be reproducible across modules).  Falls back to a scan
    for p = 2, where only tiny fields occur.
    """
    f = [E.from_int(c) for c in mod]
    if E.p == 2:
        for c in E.elements():
            acc = E.zero()
            for co in reversed(f):
                acc = E.add(E.mul(acc, c), co)
            if E.is_zero(acc):
                return c
        raise ValueError("modulus has no root in the big field")

    def strip(v):
        while v and E.is_zero(v[-1]):
            v.pop()
        return v

    def pmod(a, m):
        a = strip(list(a))
        inv = E.inv(m[-1])
        while len(a) >= len(m):
            c = E.mul(a[-1], inv)
            for i in range(len(m)):
                k = len(a) - len(m) + i
                a[k] = E.sub(a[k], E.mul(c, m[i]))
            a.pop()
            strip(a)
        return a

    def pmulmod(a, b, m):
        out = [E.zero()] * (len(a) + len(b) - 1 or 1)
        for i, ai in enumerate(a):
            if not E.is_zero(ai):
                for j, bj in enumerate(b):
                    out[i + j] = E.add(out[i + j], E.mul(ai, bj))
        return pmod(out, m)

    def pgcd(a, b):
        a, b = strip(list(a)), strip(list(b))
        while b:
            a = pmod(a, b)
            a, b = b, a
        return a

    import random

    rng = random.Random(0xD5)
    half = (E.q - 1) // 2
    # the polynomial splits into linear factors over E; split until linear
    guard = 0
    while len(f) > 2:
        guard += 1
        if guard > 200:
            raise ValueError("modulus does not split in the big field")
        # g = (y + a)^((q-1)/2) - 1 mod f for a random shift a
        base = pmod([rng.randrange(E.q), E.one()], f)
        acc = [E.one()]
        n = half
        while n:
            if n & 1:
                acc = pmulmod(acc, base, f)
            base = pmulmod(base, base, f)
            n >>= 1
        if acc:
            acc[0] = E.sub(acc[0], E.one())
        else:
            acc = [E.neg(E.one())]
        g = pgcd(f, strip(acc))
        if 1 < len(g) < len(f):
            inv = E.inv(g[-1])
            f = [E.mul(c, inv) for c in g]
    if len(f) != 2:
        raise ValueError("modulus has no root in the big field")
    return E.neg(E.mul(f[0], E.inv(f[1])))


def embedding(small, big):
    """Field embedding GF(p^a) -> GF(p^ab): returns an element-map callable.

    Sends the small generator to the first root (in enumeration order) of the
    small modulus inside the big field.
    """
    if small.p != big.p or big.d % small.d != 0:
        raise ValueError("no embedding")
    if small.d == 1:
        return lambda a: a % small.p
    root = _field_root(big, tuple(small.modulus))
    powers = [1]
    for _ in range(small.d - 1):
        powers.append(big.mul(powers[-1], root))

    def emb(a):
        out = 0
        for j, c in enumerate(small.decode(a)):
            if c:
                out = big.add(out, big.mul(powers[j], c))
        return out

    return emb


# ---------------------------------------------------------------------------
# polynomial rings


class PolyRing:
    """Dense univariate polynomials over an arbitrary base ring.

    Elements are tuples of base elements, low degree first, no trailing
    zeros; () is zero.  Division/gcd need the base to be a field.
    """

    def __init__(self, base, var):
        self.base = base
        self.var = var
        # fast path: kernel arithmetic when the base is a prime field
        self._prime = isinstance(base, GF) and base.d == 1
        self.p = base.p if self._prime else None

    def __repr__(self):
        return f"{self.base!r}[{self.var}]"

    def zero(self):
        return ()

    def one(self):
        return (self.base.one(),)

    def is_zero(self, a):
        return not a

    def gen(self):
        return (self.base.zero(), self.base.one())

    def from_int(self, n):
        c = self.base.from_int(n)
        return (c,) if not self.base.is_zero(c) else ()

    def const(self, c):
        return (c,) if not self.base.is_zero(c) else ()

    def deg(self, a):
        return len(a) - 1 if a else NEG_INF

    def lead(self, a):
        return a[-1] if a else self.base.zero()

    def normalize(self, coeffs):
        n = len(coeffs)
        while n and self.base.is_zero(coeffs[n - 1]):
            n -= 1
        return tuple(coeffs[:n])

    def add(self, a, b):
        if self._prime:
            return tuple(K.padd(list(a), list(b), self.p))
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = self.base.add(out[i], c)
        return self.normalize(out)

    def sub(self, a, b):
        if self._prime:
            return tuple(K.psub(list(a), list(b), self.p))
        out = list(a) + [self.base.zero()] * max(0, len(b) - len(a))
        for i, c in enumerate(b):
            out[i] = self.base.sub(out[i], c)
        return self.normalize(out)

    def neg(self, a):
        if self._prime:
            return tuple(K.pneg(list(a), self.p))
        return tuple(self.base.neg(c) for c in a)

    def mul(self, a, b):
        if self._prime:
            return tuple(K.pmul(list(a), list(b), self.p))
        if not a or not b:
            return ()
        out = [self.base.zero()] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if not self.base.is_zero(ai):
                for j, bj in enumerate(b):
                    out[i + j] = self.base.add(out[i + j], self.base.mul(ai, bj))
        return self.normalize(out)

    def scale(self, a, c):
        if self.base.is_zero(c):
            return ()
        return self.normalize([self.base.mul(x, c) for x in a])

    def shift(self, a, k):
        """Multiply by var^k."""
        if not a:
            return ()
        return (self.base.zero(),) * k + tuple(a)

    def divmod(self, a, b):
        if not b:
            raise ZeroDivisionError("polynomial division by zero")
        if self._prime:
            q, r = K.pdivmod(list(a), list(b), self.p)
            return tuple(q), tuple(r)
        db = len(b) - 1
        r = list(a)
        if len(r) - 1 < db:
            return (), tuple(r)
        inv_lead = self.base.inv(b[-1])
        q = [self.base.zero()] * (len(r) - db)
        for i in range(len(r) - 1 - db, -1, -1):
            c = self.base.mul(r[i + db], inv_lead)
            if not self.base.is_zero(c):
                q[i] = c
                for j in range(db + 1):
                    r[i + j] = self.base.sub(r[i + j], self.base.mul(c, b[j]))
        return self.normalize(q), self.normalize(r)

    def gcd(self, a, b):
        if self._prime:
            return tuple(K.pgcd(list(a), list(b), self.p))
        while b:
            a, b = b, self.divmod(a, b)[1]
        return self.monic(a)

    def monic(self, a):
        if not a:
            return a
        lead = a[-1]
        if self.base.is_zero(self.base.sub(lead, self.base.one())):
            return a
        return self.scale(a, self.base.inv(lead))

    def is_monic(self, a):
        return bool(a) and self.base.is_zero(self.base.sub(a[-1], self.base.one()))

    def pow(self, a, n):
        out = self.one()
        while n:
            if n & 1:
                out = self.mul(out, a)
            a = self.mul(a, a)
            n >>= 1
        return out

    def eval(self, a, x, ring=None, coerce=None):
        """Horner evaluation; `ring` hosts x (default: base), `coerce` maps
        coefficients into it."""
        ring = ring or self.base
        coerce = coerce or (lambda c: c)
        out = ring.zero()
        for c in reversed(a):
            out = ring.add(ring.mul(out, x), coerce(c))
        return out

    def subst_power(self, a, k):
        """a(var^k) — coefficients fixed, exponents scaled (a twist when the
        coefficients are Frobenius-fixed)."""
        if not a or k == 1:
            return a
        out = [self.base.zero()] * ((len(a) - 1) * k + 1)
        for i, c in enumerate(a):
            out[i * k] = c
        return tuple(out)

    @property
    def q0(self):
        b = self.base
        while not isinstance(b, GF):
            b = b.ring.base if isinstance(b, FracField) else b.base
        return b.q0

    def frob(self, a, k=1):
        """Frobenius twist.  The auxiliary variables t and z are fixed
        (coefficients twist); theta itself is raised to the q-th power."""
        out = tuple(self.base.frob(c, k) for c in a)
        if self.var == "theta" and k and out:
            if k < 0:
                raise ValueError("inverse twist not supported on theta-polynomials")
            out = self.subst_power(out, self.q0 ** k)
        return out


class FracField:
    """Fraction field of a PolyRing over a field: reduced, monic denominator.

    Elements are pairs (num, den) of PolyRing elements.
    """

    def __init__(self, ring, reduce=True):
        self.ring = ring
        self.var = ring.var
        self.reduce = reduce

    def __repr__(self):
        return f"Frac({self.ring!r})"

    def make(self, num, den):
        R = self.ring
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            return ((), R.one())
        if not self.reduce:
            # unreduced mode: cheap, equality must go through sub/is_zero
            return (num, den)
        g = R.gcd(num, den)
        if R.deg(g) > 0 or not R.is_monic(g):
            num = R.divmod(num, g)[0]
            den = R.divmod(den, g)[0]
        lead = den[-1]
        if not R.base.is_zero(R.base.sub(lead, R.base.one())):
            inv = R.base.inv(lead)
            num = R.scale(num, inv)
            den = R.scale(den, inv)
        return (num, den)

    def from_poly(self, a):
        return (self.ring.normalize(a), self.ring.one())

    def zero(self):
        return ((), self.ring.one())

    def one(self):
        return (self.ring.one(), self.ring.one())

    def is_zero(self, a):
        return not a[0]

    def from_int(self, n):
        return (self.ring.from_int(n), self.ring.one())

    def add(self, a, b):
        R = self.ring
        num = R.add(R.mul(a[0], b[1]), R.mul(b[0], a[1]))
        return self.make(num, R.mul(a[1], b[1]))

    def sub(self, a, b):
        R = self.ring
        num = R.sub(R.mul(a[0], b[1]), R.mul(b[0], a[1]))
        return self.make(num, R.mul(a[1], b[1]))

    def neg(self, a):
        return (self.ring.neg(a[0]), a[1])

    def mul(self, a, b):
        R = self.ring
        return self.make(R.mul(a[0], b[0]), R.mul(a[1], b[1]))

    def inv(self, a):
        return self.make(a[1], a[0])

    def div(self, a, b):
        R = self.ring
        return self.make(R.mul(a[0], b[1]), R.mul(a[1], b[0]))

    def pow(self, a, n):
        if n < 0:
            a, n = self.inv(a), -n
        out = self.one()
        while n:
            if n & 1:
                out = self.mul(out, a)
            a = self.mul(a, a)
            n >>= 1
        return out

    def is_poly(self, a):
        return self.ring.deg(a[1]) == 0

    def frob(self, a, k=1):
        return (self.ring.frob(a[0], k), self.ring.frob(a[1], k))


# ---------------------------------------------------------------------------
# matrices (lists of lists of ring elements)


def mat_identity(ring, n):
    return [[ring.one() if i == j else ring.zero() for j in range(n)] for i in range(n)]


def mat_zero(ring, rows, cols):
    return [[ring.zero() for _ in range(cols)] for _ in range(rows)]


def mat_add(ring, A, B):
    return [[ring.add(a, b) for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]

def mat_sub(ring, A, B):
    return [[ring.sub(a, b) for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_mul(ring, A, B):
    n, m = len(A), len(B[0])
    k = len(B)
    out = []
    for i in range(n):
        row = []
        Ai = A[i]
        for j in range(m):
            acc = ring.zero()
            for s in range(k):
                if not ring.is_zero(Ai[s]):
                    acc = ring.add(acc, ring.mul(Ai[s], B[s][j]))
            row.append(acc)
        out.append(row)
    return out


def mat_scale(ring, A, c):
    return [[ring.mul(a, c) for a in row] for row in A]


def mat_vec(ring, A, v):
    return [
        functools.reduce(ring.add, (ring.mul(a, x) for a, x in zip(row, v)), ring.zero())
        for row in A
    ]


def mat_transpose(A):
    return [list(row) for row in zip(*A)]


def mat_map(A, fn):
    return [[fn(a) for a in row] for row in A]


def mat_eq(ring, A, B):
    return all(
        ring.is_zero(ring.sub(a, b)) for ra, rb in zip(A, B) for a, b in zip(ra, rb)
    )


def mat_kron(ring, A, B):
    out = []
    for ra in A:
        for rb in B:
            out.append([ring.mul(a, b) for a in ra for b in rb])
    return out


def companion(ring, poly):
    """Companion matrix of a monic polynomial (coeff list, ascending)."""
    n = len(poly) - 1
    out = mat_zero(ring, n, n)
    for i in range(1, n):
        out[i][i - 1] = ring.one()
    for i in range(n):
        out[i][n - 1] = ring.neg(poly[i])
    return out


def charpoly(ring, M):
    """Monic characteristic polynomial, ascending coefficients; Berkowitz
    (division-free), valid over any commutative ring."""
    n = len(M)
    if n == 0:
        return [ring.one()]
    vec = [ring.one(), ring.neg(M[0][0])]  # descending
    for i in range(1, n):
        r = M[i][:i]
        c = [M[j][i] for j in range(i)]
        col = [ring.one(), ring.neg(M[i][i])]
        v = c
        for _ in range(i):
            acc = ring.zero()
            for a, b in zip(r, v):
                acc = ring.add(acc, ring.mul(a, b))
            col.append(ring.neg(acc))
            v = [
                functools.reduce(
                    ring.add,
                    (ring.mul(M[j][s], v[s]) for s in range(i)),
                    ring.zero(),
                )
                for j in range(i)
            ]
        new = []
        for k in range(i + 2):
            acc = ring.zero()
            for j in range(min(k, len(vec) - 1) + 1):
                if k - j < len(col):
                    acc = ring.add(acc, ring.mul(col[k - j], vec[j]))
            new.append(acc)
        vec = new
    return list(reversed(vec))


def det(ring, M):
    n = len(M)
    c0 = charpoly(ring, M)[0]
    return c0 if n % 2 == 0 else ring.neg(c0)


def poly_of_matrix(ring, poly, M):
    """Evaluate a polynomial (coeff list over `ring`) at a square matrix."""
    n = len(M)
    out = mat_zero(ring, n, n)
    for c in reversed(poly):
        out = mat_mul(ring, out, M)
        for i in range(n):
            out[i][i] = ring.add(out[i][i], c)
    return out


def nullspace(p, M):
    """Basis of the right nullspace of a matrix over GF(p) (prime), rows as
    int lists."""
    rows = [list(r) for r in M]
    n = len(rows[0]) if rows else 0
    pivots = []
    rank = 0
    for col in range(n):
        piv = None
        for r in range(rank, len(rows)):
            if rows[r][col] % p:
                piv = r
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][col], p - 2, p)
        rows[rank] = [(x * inv) % p for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col] % p:
                c = rows[r][col]
                rows[r] = [(x - c * y) % p for x, y in zip(rows[r], rows[rank])]
        pivots.append(col)
        rank += 1
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * n
        v[fc] = 1
        for r, pc in enumerate(pivots):
            v[pc] = (-rows[r][fc]) % p
        basis.append(v)
    return basis


# ---------------------------------------------------------------------------
# monic polynomial enumeration and factorization


def monics(gf, d):
    """All monic polynomials of degree d over a prime field, as tuples,
    in lexicographic order on the coefficient vector (constant term fastest)."""
    q = gf.q
    for n in range(q ** d):
        coeffs = []
        a = n
        for _ in range(d):
            a, r = divmod(a, q)
            coeffs.append(r)
        coeffs.append(1)
        yield tuple(coeffs)


def is_irreducible(gf, a):
    if gf.d != 1:
        raise NotImplementedError("irreducibility only over prime fields")
    return _rabin_irreducible(list(a), gf.p)


@functools.cache
def _irreducibles_cached(p, d):
    gf = GF(p)
    return tuple(f for f in monics(gf, d) if _rabin_irreducible(list(f), p))


def irreducibles(gf, d):
    """Monic irreducibles of degree d, deterministic order (see monics)."""
    if d < 1:
        raise ValueError("degree must be positive")
    return list(_irreducibles_cached(gf.p, d))


def factor(gf, a):
    """Factor a monic polynomial over a prime field into {prime: exponent}."""
    a = tuple(a)
    if not a or a[-1] != 1:
        raise ValueError("monic polynomial required")
    p = gf.p
    out = {}
    rem = list(a)
    d = 1
    while len(rem) - 1 >= 2 * d:
        for f in irreducibles(gf, d):
            fl = list(f)
            while True:
                q, r = K.pdivmod(rem, fl, p)
                if r:
                    break
                rem = q
                out[f] = out.get(f, 0) + 1
            if len(rem) - 1 < 2 * d:
                break
        d += 1
    if len(rem) > 1:
        f = tuple(rem)
        out[f] = out.get(f, 0) + 1
    return out


def spf_table(gf, D):
    """Smallest-prime-factor table for all monics of degree 1..D (bulk
    factorization for Dirichlet sweeps).  table[f] == f iff f is prime.

    Sieve: walk monics in (degree, lex) order; an unmarked entry is prime
    (any proper factor has lower degree and already marked its multiples),
    then mark all its multiples up to degree D.
    """
    p = gf.p
    table = {}
    for d in range(1, D + 1):
        for m in monics(gf, d):
            if m in table:
                continue
            table[m] = m
            fl = list(m)
            for dg in range(1, D - d + 1):
                for g in monics(gf, dg):
                    prod = tuple(K.pmul(fl, list(g), p))
                    if prod not in table:
                        table[prod] = m
    return table


def factor_with_table(gf, a, table):
    p = gf.p
    out = {}
    rem = tuple(a)
    while len(rem) > 1:
        f = table[rem]
        out[f] = out.get(f, 0) + 1
        rem = tuple(K.pdivmod(list(rem), list(f), p)[0])
    return out


# ---------------------------------------------------------------------------
# polynomial text syntax: `theta^2+1`, `z*theta - 2`, parenthesized subterms


class ParseError(ValueError):
    pass


def _tokens(s):
    i = 0
    while i < len(s):
        ch = s[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < len(s) and s[j].isdigit():
                j += 1
            yield ("int", int(s[i:j]), i)
            i = j
        elif ch.isalpha():
            j = i
            while j < len(s) and s[j].isalpha():
                j += 1
            yield ("name", s[i:j], i)
            i = j
        elif ch in "+-*^()":
            yield (ch, ch, i)
            i += 1
        else:
            raise ParseError(f"unexpected character {ch!r} at position {i}")
    yield ("end", None, len(s))


class _Parser:
    """Recursive descent over +,-,*,^ and parentheses; values are dicts
    {(theta_exp, z_exp): int mod p}."""

    def __init__(self, s, p, allowed):
        self.toks = list(_tokens(s))
        self.pos = 0
        self.p = p
        self.allowed = allowed

    def peek(self):
        return self.toks[self.pos]

    def take(self):
        t = self.toks[self.pos]
        self.pos += 1
        return t

    def parse(self):
        v = self.expr()
        kind, _, at = self.peek()
        if kind != "end":
            raise ParseError(f"trailing input at position {at}")
        return v

    def expr(self):
        kind, _, _ = self.peek()
        sign = 1
        if kind in "+-":
            sign = -1 if kind == "-" else 1
            self.take()
        v = _poly_scale(self.term(), sign, self.p)
        while True:
            kind, _, _ = self.peek()
            if kind not in "+-":
                return v
            self.take()
            w = self.term()
            v = _poly_add(v, _poly_scale(w, -1 if kind == "-" else 1, self.p), self.p)

    def term(self):
        v = self.factor()
        while True:
            kind, _, _ = self.peek()
            if kind == "*":
                self.take()
                v = _poly_mul(v, self.factor(), self.p)
            elif kind in ("name", "int", "("):
                # implicit product like 2theta is rejected; require *
                _, _, at = self.peek()
                raise ParseError(f"expected operator at position {at}")
            else:
                return v

    def factor(self):
        v = self.atom()
        kind, _, _ = self.peek()
        if kind == "^":
            self.take()
            kind, val, at = self.take()
            if kind != "int":
                raise ParseError(f"integer exponent expected at position {at}")
            out = {(0, 0): 1}
            for _ in range(val):
                out = _poly_mul(out, v, self.p)
            return out
        return v

    def atom(self):
        kind, val, at = self.take()
        if kind == "int":
            return {(0, 0): val % self.p} if val % self.p else {}
        if kind == "name":
            if val not in self.allowed:
                raise ParseError(f"unknown variable {val!r} at position {at}")
            key = (1, 0) if val == self.allowed[0] else (0, 1)
            return {key: 1}
        if kind == "(":
            v = self.expr()
            kind, _, at = self.take()
            if kind != ")":
                raise ParseError(f"missing ')' at position {at}")
            return v
        raise ParseError(f"unexpected token at position {at}")


def _poly_add(a, b, p):
    out = dict(a)
    for k, v in b.items():
        c = (out.get(k, 0) + v) % p
        if c:
            out[k] = c
        else:
            out.pop(k, None)
    return out


def _poly_scale(a, c, p):
    c %= p
    if not c:
        return {}
    return {k: (v * c) % p for k, v in a.items()}


def _poly_mul(a, b, p):
    out = {}
    for (i1, j1), v1 in a.items():
        for (i2, j2), v2 in b.items():
            k = (i1 + i2, j1 + j2)
            c = (out.get(k, 0) + v1 * v2) % p
            if c:
                out[k] = c
            else:
                out.pop(k, None)
    return out


def parse_poly(s, p, variables=("theta", "z")):
    """Parse the text syntax into {(exp_var1, exp_var2): coeff} over GF(p)."""
    return _Parser(s, p, tuple(variables)).parse()


def parse_univar(s, p, var="theta"):
    """Parse a univariate polynomial into a coefficient tuple."""
    d = parse_poly(s, p, (var, "__none__"))
    if any(j for (_, j) in d):
        raise ParseError("unexpected second variable")
    if not d:
        return ()
    n = max(i for (i, _) in d)
    return tuple(d.get((i, 0), 0) for i in range(n + 1))


def univar_str(a, var="theta"):
    """Render an int-coefficient tuple; inverse of parse_univar."""
    if not a:
        return "0"
    parts = []
    for i in range(len(a) - 1, -1, -1):
        c = a[i]
        if not c:
            continue
        if i == 0:
            parts.append(str(c))
        else:
            v = var if i == 1 else f"{var}^{i}"
            parts.append(v if c == 1 else f"{c}*{v}")
    return " + ".join(parts).replace("+ -", "- ")
