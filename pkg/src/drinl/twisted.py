"""Ore (twisted) polynomials and matrices in tau or sigma.

tau b = b^(1) tau and sigma b = b^(-1) sigma, where ^(k) is the k-th power of
the coefficient ring's Frobenius.  The ring context must provide
frob(a, k) (negative k needed for sigma and for star), plus the usual
protocol.  Matrices are stored as lists of coefficient matrices, which is the
form everything downstream (E_t, adjoints, kernels) naturally lives in.
"""

from drinl import algebra as al


def _sign(orientation):
    if orientation not in ("tau", "sigma"):
        raise ValueError("orientation must be 'tau' or 'sigma'")
    return 1 if orientation == "tau" else -1


class TwistedPoly:
    __slots__ = ("ring", "coeffs", "orientation")

    def __init__(self, ring, coeffs, orientation="tau"):
        _sign(orientation)
        self.ring = ring
        self.orientation = orientation
        c = list(coeffs)
        while c and ring.is_zero(c[-1]):
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def zero(cls, ring, orientation="tau"):
        return cls(ring, (), orientation)

    @classmethod
    def one(cls, ring, orientation="tau"):
        return cls(ring, (ring.one(),), orientation)

    def deg(self):
        return len(self.coeffs) - 1 if self.coeffs else al.NEG_INF

    def coeff(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.ring.zero()

    def add(self, other):
        R = self.ring
        n = max(len(self.coeffs), len(other.coeffs))
        return TwistedPoly(
            R, [R.add(self.coeff(i), other.coeff(i)) for i in range(n)], self.orientation
        )

    def neg(self):
        return TwistedPoly(self.ring, [self.ring.neg(c) for c in self.coeffs], self.orientation)

    def sub(self, other):
        return self.add(other.neg())

    def mul(self, other):
        R = self.ring
        s = _sign(self.orientation)
        if other.orientation != self.orientation:
            raise ValueError("orientation mismatch")
        out = [R.zero()] * (len(self.coeffs) + len(other.coeffs) - 1 or 1)
        for i, a in enumerate(self.coeffs):
            if R.is_zero(a):
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = R.add(out[i + j], R.mul(a, R.frob(b, s * i)))
        return TwistedPoly(R, out, self.orientation)

    def mul_trunc(self, other, n):
        """Product coefficients through tau-order n only (high-order twists
        of large coefficients are expensive and often unneeded)."""
        R = self.ring
        s = _sign(self.orientation)
        if other.orientation != self.orientation:
            raise ValueError("orientation mismatch")
        out = [R.zero()] * (n + 1)
        for i, a in enumerate(self.coeffs):
            if i > n or R.is_zero(a):
                continue
            for j, b in enumerate(other.coeffs):
                if i + j > n:
                    break
                out[i + j] = R.add(out[i + j], R.mul(a, R.frob(b, s * i)))
        return TwistedPoly(R, out, self.orientation)

    def scale(self, c):
        R = self.ring
        return TwistedPoly(R, [R.mul(c, a) for a in self.coeffs], self.orientation)

    def evaluate(self, x, ring=None, coerce=None):
        """Apply the operator to a point: sum a_i x^(+-i)."""
        R = ring or self.ring
        coerce = coerce or (lambda c: c)
        s = _sign(self.orientation)
        out = R.zero()
        for i, a in enumerate(self.coeffs):
            out = R.add(out, R.mul(coerce(a), R.frob(x, s * i)))
        return out

    def star(self):
        """(sum b_i tau^i)* = sum b_i^(-i) sigma^i, and the inverse map on
        the sigma side; an anti-involution."""
        R = self.ring
        s = _sign(self.orientation)
        flipped = "sigma" if self.orientation == "tau" else "tau"
        return TwistedPoly(R, [R.frob(b, -s * i) for i, b in enumerate(self.coeffs)], flipped)

    def divide(self, b, side):
        """Division with remainder by b: side='right' gives self = q*b + r,
        side='left' gives self = b*q + r, with deg r < deg b."""
        R = self.ring
        s = _sign(self.orientation)
        if not b.coeffs:
            raise ZeroDivisionError("twisted division by zero")
        n = b.deg()
        lead = b.coeffs[-1]
        r = list(self.coeffs)
        q = [R.zero()] * max(len(r) - n, 0)
        while len(r) - 1 >= n and r:
            m = len(r) - 1
            if side == "right":
                c = R.mul(r[-1], R.inv(R.frob(lead, s * (m - n))))
            else:
                c = R.frob(R.mul(R.inv(lead), r[-1]), -s * n)
            q[m - n] = R.add(q[m - n], c)
            # subtract c tau^(m-n) * b   (right)  or  b * c tau^(m-n)  (left)
            for j, bj in enumerate(b.coeffs):
                if side == "right":
                    term = R.mul(c, R.frob(bj, s * (m - n)))
                else:
                    term = R.mul(b.coeffs[j], R.frob(c, s * j))
                r[m - n + j] = R.sub(r[m - n + j], term)
            while r and R.is_zero(r[-1]):
                r.pop()
        return (
            TwistedPoly(R, q, self.orientation),
            TwistedPoly(R, r, self.orientation),
        )


class TwistedMatrix:
    """k x l matrix of twisted polynomials, stored as coefficient matrices."""

    __slots__ = ("ring", "mats", "orientation", "rows", "cols")

    def __init__(self, ring, mats, orientation="tau"):
        _sign(orientation)
        self.ring = ring
        self.orientation = orientation
        mats = [list(map(list, m)) for m in mats]
        while len(mats) > 1 and all(ring.is_zero(c) for row in mats[-1] for c in row):
            mats.pop()
        self.mats = mats
        self.rows = len(mats[0])
        self.cols = len(mats[0][0])

    @classmethod
    def identity(cls, ring, n, orientation="tau"):
        return cls(ring, [al.mat_identity(ring, n)], orientation)

    def deg(self):
        return len(self.mats) - 1

    def coeff(self, i):
        if 0 <= i < len(self.mats):
            return self.mats[i]
        return al.mat_zero(self.ring, self.rows, self.cols)

    def frob_mat(self, M, k):
        R = self.ring
        return [[R.frob(c, k) for c in row] for row in M]

    def add(self, other):
        n = max(len(self.mats), len(other.mats))
        return TwistedMatrix(
            self.ring,
            [al.mat_add(self.ring, self.coeff(i), other.coeff(i)) for i in range(n)],
            self.orientation,
        )

    def neg(self):
        R = self.ring
        return TwistedMatrix(
            R, [[[R.neg(c) for c in row] for row in m] for m in self.mats], self.orientation
        )

    def sub(self, other):
        return self.add(other.neg())

    def mul(self, other):
        R = self.ring
        s = _sign(self.orientation)
        if other.orientation != self.orientation:
            raise ValueError("orientation mismatch")
        out = [
            al.mat_zero(R, self.rows, other.cols)
            for _ in range(len(self.mats) + len(other.mats) - 1)
        ]
        for i, A in enumerate(self.mats):
            for j, B in enumerate(other.mats):
                out[i + j] = al.mat_add(
                    R, out[i + j], al.mat_mul(R, A, self.frob_mat(B, s * i))
                )
        return TwistedMatrix(R, out, self.orientation)

    def scale(self, c):
        R = self.ring
        return TwistedMatrix(
            R, [[[R.mul(c, x) for x in row] for row in m] for m in self.mats], self.orientation
        )

    def power(self, n):
        out = TwistedMatrix.identity(self.ring, self.rows, self.orientation)
        base = self
        while n:
            if n & 1:
                out = out.mul(base)
            base = base.mul(base)
            n >>= 1
        return out

    def eval_at_poly(self, a_coeffs):
        """For E = E_t, build E_a where a = sum c_j t^j with c_j integers
        (images of F_q-constants)."""
        R = self.ring
        out = TwistedMatrix(
            R, [al.mat_zero(R, self.rows, self.cols)], self.orientation
        )
        for j in range(len(a_coeffs) - 1, -1, -1):
            out = out.mul(self)
            cj = R.from_int(a_coeffs[j])
            const = al.mat_scale(R, al.mat_identity(R, self.rows), cj)
            out = out.add(TwistedMatrix(R, [const], self.orientation))
        return out

    def evaluate(self, x, ring=None, coerce=None):
        """Apply to a column vector (list of length cols), entries in `ring`
        (default: the coefficient ring), coefficients coerced by `coerce`."""
        R = ring or self.ring
        coerce = coerce or (lambda c: c)
        s = _sign(self.orientation)
        out = [R.zero()] * self.rows
        xt = list(x)
        for i, M in enumerate(self.mats):
            xi = [R.frob(v, s * i) for v in xt]
            for rr in range(self.rows):
                acc = out[rr]
                row = M[rr]
                for cc in range(self.cols):
                    if not self.ring.is_zero(row[cc]):
                        acc = R.add(acc, R.mul(coerce(row[cc]), xi[cc]))
                out[rr] = acc
        return out

    def star(self):
        """Adjoint: transpose of entrywise star; flips orientation."""
        R = self.ring
        s = _sign(self.orientation)
        flipped = "sigma" if self.orientation == "tau" else "tau"
        return TwistedMatrix(
            R,
            [al.mat_transpose(self.frob_mat(M, -s * i)) for i, M in enumerate(self.mats)],
            flipped,
        )

    def map_ring(self, ring, fn, orientation=None):
        return TwistedMatrix(
            ring,
            [[[fn(c) for c in row] for row in m] for m in self.mats],
            orientation or self.orientation,
        )


# ---------------------------------------------------------------------------
# kernels of twisted operators over finite fields


def _fq0_basis(E):
    """F_p-basis of the q0-Frobenius fixed subfield of E, as elements."""
    p, d = E.p, E.d
    cols = []
    for j in range(d):
        img = E.decode(E.frob(E.encode([0] * j + [1])))
        img += [0] * (d - len(img))
        base = [0] * d
        base[j] = 1
        cols.append([(a - b) % p for a, b in zip(img, base)])
    M = [[cols[j][i] for j in range(d)] for i in range(d)]
    return [E.encode(v) for v in al.nullspace(p, M)]


def kernel_basis(eta, E, emb=None):
    """F_q0-basis of {x in E^l : eta(x) = 0} for a square twisted matrix eta
    over a finite field F, solved inside the extension E.

    Linearizes the block-companion fixed-point equation v^(1) = M v over F_p
    (the Frobenius of E is F_p-linear) and extracts an F_q0-basis from the
    F_p-nullspace.  The leading coefficient matrix must be invertible.
    """
    F = eta.ring
    p = F.p
    if emb is None:
        emb = al.embedding(F, E)
    sign = _sign(eta.orientation)
    ell = eta.rows
    mats = [al.mat_map(M, emb) for M in eta.mats]
    if sign == -1:
        # sigma side: twist the whole equation by deg to make it a tau-type
        # system (sum A_i y^(-i) = 0  <=>  sum A_i^(m) y^(m-i) = 0)
        m = len(mats) - 1
        mats = [[[E.frob(c, m) for c in row] for row in M] for M in reversed(mats)]
    # strip a common tau^j factor (x -> x^(j) is bijective on E)
    j = 0
    while j < len(mats) - 1 and all(c == 0 for row in mats[j] for c in row):
        j += 1
    mats = mats[j:]
    m = len(mats) - 1
    if m == 0:
        # eta is an invertible (or zero) untwisted map; kernel via plain
        # linear algebra over E would need E-linear solve -- handle the
        # invertible case, which is all we use
        raise ValueError("operator has tau-degree 0 after reduction")
    top = mats[-1]
    top_inv = _mat_inv(E, top)
    n = m * ell
    # companion over E
    M = [[0] * n for _ in range(n)]
    for i in range((m - 1) * ell):
        M[i][i + ell] = 1
    for bi in range(m):
        blk = al.mat_mul(E, top_inv, mats[bi])
        for rr in range(ell):
            for cc in range(ell):
                M[(m - 1) * ell + rr][bi * ell + cc] = E.neg(blk[rr][cc])
    # F_p-linearization: Phi v - M v = 0 on coordinates
    d = E.d
    N = n * d
    big = [[0] * N for _ in range(N)]
    basis_elems = [E.encode([0] * jj + [1]) for jj in range(d)]
    # frobenius part
    for comp in range(n):
        for jj in range(d):
            img = E.decode(E.frob(basis_elems[jj]))
            for ii, c in enumerate(img):
                big[comp * d + ii][comp * d + jj] = c % p
    # minus multiplication part
    for rr in range(n):
        for cc in range(n):
            c = M[rr][cc]
            if c == 0:
                continue
            for jj in range(d):
                img = E.decode(E.mul(c, basis_elems[jj]))
                for ii, v in enumerate(img):
                    big[rr * d + ii][cc * d + jj] = (big[rr * d + ii][cc * d + jj] - v) % p
    sols = al.nullspace(p, big)
    xs = []
    for v in sols:
        x = []
        for comp in range(ell):
            x.append(E.encode(v[comp * d : (comp + 1) * d]))
        # undo the tau^j strip
        xs.append([E.frob(c, -j) for c in x])
    basis = _fq0_independent(E, xs, ell)
    # recheck
    for x in basis:
        img = eta.evaluate(x, ring=E, coerce=emb)
        if any(c != 0 for c in img):
            raise AssertionError("kernel vector fails recheck")
    return basis


def _mat_inv(E, M):
    n = len(M)
    aug = [list(row) + [1 if i == j else 0 for j in range(n)] for i, row in enumerate(M)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular leading coefficient matrix")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = E.inv(aug[col][col])
        aug[col] = [E.mul(inv, x) for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                c = aug[r][col]
                aug[r] = [E.sub(x, E.mul(c, y)) for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def _fq0_independent(E, xs, ell):
    """Greedy F_q0-basis extraction from a set of vectors in E^ell."""
    p, d = E.p, E.d
    sub = _fq0_basis(E)
    echelon = []
    basis = []

    def coords(x):
        out = []
        for c in x:
            dec = E.decode(c)
            out.extend(dec + [0] * (d - len(dec)))
        return out

    def reduce(vec):
        vec = list(vec)
        for piv, row in echelon:
            if vec[piv]:
                c = vec[piv]
                vec = [(a - c * b) % p for a, b in zip(vec, row)]
        return vec

    def insert(vec):
        vec = reduce(vec)
        for i, c in enumerate(vec):
            if c:
                inv = pow(c, p - 2, p)
                row = [(inv * a) % p for a in vec]
                echelon.append((i, row))
                return True
        return False

    for x in xs:
        if insert(coords(x)):
            basis.append(x)
            for u in sub:
                insert(coords([E.mul(u, c) for c in x]))
    return basis


def kernel_with_extension(eta, bound=None, cap=12):
    """Search extensions until the kernel reaches `bound` F_q0-dimensions
    (scanning degrees 1..cap) or stabilizes under doubling; returns
    (E, basis)."""
    F = eta.ring
    last = None
    if bound is not None:
        for k in range(1, cap + 1):
            E = al.GF(F.p, F.d * k, q0=F.q0)
            basis = kernel_basis(eta, E)
            if len(basis) >= bound:
                return E, basis
            last = (E, basis)
        return last
    k = 1
    while k <= cap:
        E = al.GF(F.p, F.d * k, q0=F.q0)
        basis = kernel_basis(eta, E)
        if last is not None and len(basis) == len(last[1]):
            return E, basis
        last = (E, basis)
        k *= 2
    return last
