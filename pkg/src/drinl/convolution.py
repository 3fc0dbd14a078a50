"""The tensor t-module E(phi x psi) and its local data.

For phi of rank r and psi of rank ell (both with everywhere good reduction),
E is the dimension-ell, rank-r*ell t-module

    E_t = theta*I + kappa_1 Th tau + kappa_2 Th Th^(1) tau^2 + ...
          + kappa_r Th Th^(1) ... Th^(r-1) tau^r,

with Th the z-specialized transpose-companion matrix of psi.  Local data at
a prime f: the tensor product charpoly bP_f = P_{phi,f} (x) P_dual_{psi,f(z)},
the order of E(F_f(z)) as an F_q(z)[t]-module (closed formula plus a raw
t-action oracle), and the multivariable mu/nu values given by Jacobi-Trudi
determinants in the one-variable nu values.
"""

import functools

from drinl import algebra as al
from drinl.frobenius import FrobeniusData
from drinl.twisted import TwistedMatrix


class TensorModule:
    """E(phi x psi); matrices live over Az = F_q[z][theta]."""

    def __init__(self, phi, psi):
        if phi.gf.q != psi.gf.q:
            raise ValueError("phi and psi must share the base field")
        self.phi = phi
        self.psi = psi
        self.gf = phi.gf
        self.r = phi.r
        self.ell = psi.r
        self.q = phi.q
        self.Rz = al.PolyRing(self.gf, "z")
        self.Az = al.PolyRing(self.Rz, "theta")
        _, _, self.theta_z = psi.gamma_theta()
        self._prefix = [al.mat_identity(self.Az, self.ell)]

    def theta_products(self, n):
        """Prefix products Pi_i = Th Th^(1) ... Th^(i-1) for i = 0..n."""
        Az = self.Az
        while len(self._prefix) <= n:
            i = len(self._prefix) - 1
            twisted = [[Az.frob(e, i) for e in row] for row in self.theta_z]
            self._prefix.append(al.mat_mul(Az, self._prefix[-1], twisted))
        return self._prefix[: n + 1]

    def E_t(self):
        """E_t as a TwistedMatrix over Az."""
        Az = self.Az
        pi = self.theta_products(self.r)
        mats = [al.mat_scale(Az, al.mat_identity(Az, self.ell), Az.gen())]
        for i in range(1, self.r + 1):
            kap = self._lift_A(self.phi.kappas[i - 1])
            mats.append(al.mat_scale(Az, pi[i], kap))
        return TwistedMatrix(Az, mats)

    def _lift_A(self, a):
        """A = F_q[theta] into Az (z-constant coefficients)."""
        return tuple((c,) if c else () for c in a)

    def exp_data(self, n):
        """[(B_i num, B_i den, Pi_i)] for i = 0..n: Exp_E = sum of
        B_i Pi_i tau^i with B_i = num/den in F_q(theta)."""
        B = self.phi.exp_coeffs(n)
        pi = self.theta_products(n)
        return [(B[i][0], B[i][1], pi[i]) for i in range(n + 1)]

    def log_data(self, n):
        C = self.phi.log_coeffs(n)
        pi = self.theta_products(n)
        return [(C[i][0], C[i][1], pi[i]) for i in range(n + 1)]


# ---------------------------------------------------------------------------
# the rational function field F_q(theta, z) as fractions over F_q(z)[theta]


def kzt_field(gf):
    Rz = al.PolyRing(gf, "z")
    Fz = al.FracField(Rz)
    Tz = al.PolyRing(Fz, "theta")
    return al.FracField(Tz)


def _a_to_tz(Kzt, a):
    """A = F_q[theta] -> K(z)[theta] numerator."""
    Fz = Kzt.ring.base
    return tuple(Fz.from_poly((c,)) if c else Fz.zero() for c in a)


def _z_to_tz(Kzt, a):
    """F_q[z] (int tuple) -> constant of K(z)[theta]."""
    Fz = Kzt.ring.base
    if not any(a):
        return ()
    return (Fz.from_poly(tuple(a)),)


class TensorLocal:
    """Local data of E(phi x psi) at a monic irreducible f."""

    def __init__(self, phi, psi, f, fphi=None, fpsi=None):
        self.phi, self.psi = phi, psi
        self.f = tuple(f)
        self.d = len(f) - 1
        self.fphi = fphi if fphi is not None else FrobeniusData(phi, f)
        self.fpsi = fpsi if fpsi is not None else FrobeniusData(psi, f)
        self.Kzt = kzt_field(phi.gf)
        self.Tz = self.Kzt.ring
        self.Fz = self.Tz.base

    # -- tensor characteristic polynomial

    def p_phi_coeffs(self):
        """P_{phi,f} over K(z)[theta], ascending."""
        K = self.Kzt
        return [K.from_poly(_a_to_tz(K, c)) for c in self.fphi.P]

    def p_psi_dual_coeffs(self):
        """P_dual_{psi,f(z)}: the dual of P_{psi,f} with theta -> z,
        ascending over F_q(theta, z)."""
        K = self.Kzt
        ell = self.psi.r
        cf = self.psi.chi(self.f)
        if ell % 2:
            cf = self.psi.gf.neg(cf)
        fz_inv = K.inv(K.from_poly(_z_to_tz(K, self.f)))
        scale = K.mul(K.from_int(cf), fz_inv)
        out = [scale]
        for j in range(1, ell):
            cz = _z_to_tz(K, self.fpsi.P[ell - j])
            out.append(K.mul(K.from_poly(cz), scale))
        out.append(K.one())
        return out

    def tensor_charpoly(self):
        """bP_f(X) over F_q(theta, z), ascending, via the Kronecker product
        of the two companion matrices."""
        K = self.Kzt
        Cp = al.companion(K, self.p_phi_coeffs())
        Cq = al.companion(K, self.p_psi_dual_coeffs())
        return al.charpoly(K, al.mat_kron(K, Cp, Cq))

    def tensor_at_one(self):
        """bP_f(1) = det(Q_{phi,f}(C)) with C the companion matrix of
        P_dual_{psi,f(z)}; avoids the (r*ell)-dimensional charpoly."""
        K = self.Kzt
        C = al.companion(K, self.p_psi_dual_coeffs())
        qc = [K.from_poly(_a_to_tz(K, c)) for c in self.fphi.q_coeffs()]
        return al.det(K, al.poly_of_matrix(K, qc, C))

    def tensor_at_zero(self):
        """bP_f(0) = (-1)^(r*ell) (chibar_phi(f) f)^ell (chi_psi(f)/f(z))^r."""
        K = self.Kzt
        phi, psi, f = self.phi, self.psi, self.f
        r, ell = phi.r, psi.r
        a = K.mul(K.from_int(phi.chibar(f)), K.from_poly(_a_to_tz(K, f)))
        b = K.div(K.from_int(psi.chi(f)), K.from_poly(_z_to_tz(K, f)))
        out = K.mul(K.pow(a, ell), K.pow(b, r))
        if (r * ell) % 2:
            out = K.neg(out)
        return out

    # -- order of E(F_f(z))

    def order_formula(self):
        """[E(F_f(z))] = (-1)^(r*ell) chi_phi(f)^ell chibar_psi(f)^r f(z)^r
        bP_f(1), returned as a theta-polynomial over F_q[z]."""
        K = self.Kzt
        phi, psi, f = self.phi, self.psi, self.f
        r, ell = phi.r, psi.r
        gf = phi.gf
        c = gf.mul(gf.pow(phi.chi(f), ell), gf.pow(psi.chibar(f), r))
        if (r * ell) % 2:
            c = gf.neg(c)
        val = K.mul(K.from_int(c), K.pow(K.from_poly(_z_to_tz(K, f)), r))
        val = K.mul(val, self.tensor_at_one())
        # cross-check the second closed form (bP_f(1)/bP_f(0)) f^ell
        alt = K.div(self.tensor_at_one(), self.tensor_at_zero())
        alt = K.mul(alt, K.pow(K.from_poly(_a_to_tz(K, f)), ell))
        if K.sub(val, alt)[0] != ():
            raise AssertionError("order formula forms disagree")
        return self._to_Az(val)

    def _to_Az(self, x):
        """F_q(theta,z) element that is in fact in F_q[z][theta]."""
        K = self.Kzt
        num, den = x
        if self.Tz.deg(den) != 0:
            raise AssertionError("unexpected theta denominator")
        dc = den[0] if den else self.Fz.zero()
        out = []
        for c in num:
            n2, d2 = self.Fz.div(c, dc) if not self.Fz.is_zero(c) else self.Fz.zero()
            if len(d2) - 1 != 0:
                raise AssertionError("unexpected z denominator")
            inv = self.phi.gf.inv(d2[0])
            out.append(tuple((v * inv) % self.phi.gf.p for v in n2))
        Az = al.PolyRing(al.PolyRing(self.phi.gf, "z"), "theta")
        return Az.normalize(out)


def order_oracle(phi, psi, f):
    """[E(F_f(z))] from the raw t-action of E_t on F_f(z)^ell, an
    F_q(z)-linear operator on a d*ell-dimensional space; char poly by the
    division-free algorithm over F_q[z], then t -> theta."""
    tm = TensorModule(phi, psi)
    Et = tm.E_t()
    red = phi.reduce_mod(f)
    field = red.field
    d = max(field.d, 1)
    ell = tm.ell
    Rz = tm.Rz
    Rzf = al.PolyRing(field, "z")

    def to_ff(e):
        # Az element -> F_f[z] by theta -> theta_bar
        acc = Rzf.zero()
        for c in reversed(e):
            acc = Rzf.scale(acc, red.theta_bar)
            acc = Rzf.add(acc, Rzf.normalize([field.from_int(v) for v in c]))
        return acc

    mats = [[[to_ff(e) for e in row] for row in Et.coeff(i)] for i in range(tm.r + 1)]
    n = d * ell
    M = [[Rz.zero() for _ in range(n)] for _ in range(n)]
    for s in range(ell):
        for u in range(d):
            y = field.encode([0] * u + [1])
            img = [Rzf.zero()] * ell
            for i, Mi in enumerate(mats):
                yi = field.frob(y, i)
                for t in range(ell):
                    img[t] = Rzf.add(img[t], Rzf.scale(Mi[t][s], yi))
            cidx = s * d + u
            for t in range(ell):
                for k, cz in enumerate(img[t]):
                    digits = field.decode(cz) if d > 1 else ([cz] if cz else [])
                    for j, dig in enumerate(digits):
                        if dig:
                            row = t * d + j
                            cur = list(M[row][cidx])
                            while len(cur) <= k:
                                cur.append(0)
                            cur[k] = (cur[k] + dig) % field.p
                            M[row][cidx] = Rz.normalize(cur)
    order = al.charpoly(Rz, M)
    return tm.Az.normalize([tuple(c) for c in order])


# ---------------------------------------------------------------------------
# swap duality of the tensor charpoly


def dual_coeffs(K, coeffs):
    """Ascending coefficients of X^n P(1/X) / P(0)."""
    n = len(coeffs) - 1
    c0 = coeffs[0]
    return [K.div(coeffs[n - j], c0) for j in range(n + 1)]


def _swap_poly(K, a):
    """K(z)[theta] element with theta and z exchanged, as a Kzt element."""
    Fz = K.ring.base
    Rz = Fz.ring
    den = Rz.one()
    for c in a:
        if not Fz.is_zero(c):
            den = Rz.mul(den, c[1])
    rows = []
    for c in a:
        if Fz.is_zero(c):
            rows.append(())
        else:
            qq, rr = Rz.divmod(den, c[1])
            if rr:
                raise AssertionError("denominator does not divide the product")
            rows.append(Rz.mul(c[0], qq))
    nz = max((len(r) for r in rows), default=0)
    num = []
    for j in range(nz):
        col = [r[j] if j < len(r) else 0 for r in rows]
        num.append(Fz.from_poly(tuple(col)))
    den_sw = K.ring.normalize([Fz.from_int(c) for c in den])
    return K.make(K.ring.normalize(num), den_sw)


def swap_zt(K, x):
    return K.div(_swap_poly(K, x[0]), _swap_poly(K, x[1]))


def swap_check(phi, psi, f):
    """bP_{psi x phi, f} equals the dual of bP_{phi x psi, f} with z and
    theta exchanged."""
    a = TensorLocal(phi, psi, f)
    b = TensorLocal(psi, phi, f)
    K = a.Kzt
    lhs = b.tensor_charpoly()
    rhs = [swap_zt(K, c) for c in dual_coeffs(K, a.tensor_charpoly())]
    return all(K.sub(x, y)[0] == () for x, y in zip(lhs, rhs))


# ---------------------------------------------------------------------------
# multivariable mu and nu


def local_bs_nu(fd, ks):
    """bs-nu at (f^(k_1), ..., f^(k_(n-1))) for n-1 = len(ks): the
    Jacobi-Trudi determinant in the one-variable nu values."""
    A = fd.A
    n1 = len(ks)
    if n1 == 0:
        return A.one()
    tails = [sum(ks[i:]) for i in range(n1)]
    mmax = max(tails[0] + n1 - 1, 0)
    nu = fd.nu_values(mmax)

    def hval(m):
        return nu[m] if m >= 0 else A.zero()

    M = [[hval(tails[i] - (i + 1) + (j + 1)) for j in range(n1)] for i in range(n1)]
    return al.det(A, M)


def local_bs_mu(fd, ks):
    """bs-mu at f^ks: chi(f)^(sum ks) times bs-nu at the reversed tuple."""
    val = local_bs_nu(fd, tuple(reversed(ks)))
    c = fd.phi.gf.pow(fd.phi.chi(fd.f), sum(ks))
    return fd.A.scale(val, c)


def bs_mu_degree_ok(phi, ks, d, val):
    """deg_theta bs-mu(f^ks) <= (d/r) sum (r-i) k_i."""
    r = phi.r
    bound = d * sum((r - i) * k for i, k in enumerate(ks, start=1))
    return phi.A.deg(val) * r <= bound


def bs_nu_degree_ok(phi, ks, d, val):
    """deg_theta bs-nu(f^ks) <= (d/r) sum i k_i."""
    bound = d * sum(i * k for i, k in enumerate(ks, start=1))
    return phi.A.deg(val) * phi.r <= bound
