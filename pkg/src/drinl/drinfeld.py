"""Drinfeld module descriptors over A = F_q[theta].

phi_t = theta + kappa_1 tau + ... + kappa_r tau^r with everywhere good
reduction (kappa_r a unit constant).  Derived data: the t-motive matrices
Gamma/Theta and the z-specialization Theta_z, the sign character chi, Exp/Log
coefficient streams with certified degree bounds, the logarithm convergence
radius and the Gauss degree of the rigid analytic trivialization.
"""

from fractions import Fraction

from drinl import algebra as al
from drinl.twisted import TwistedPoly


class DrinfeldModule:
    def __init__(self, gf, kappas):
        if not kappas or not kappas[-1]:
            raise ValueError("leading coefficient must be nonzero")
        self.gf = gf
        self.A = al.PolyRing(gf, "theta")
        self.kappas = [tuple(k) for k in kappas]
        self.r = len(kappas)
        self.q = gf.q
        self._exp = None
        self._log = None

    @classmethod
    def from_strings(cls, q, coeff_strs):
        gf = al.GF(q)
        return cls(gf, [al.parse_univar(s, q) for s in coeff_strs])

    @classmethod
    def carlitz(cls, gf):
        return cls(gf, [(1,)])

    def __repr__(self):
        terms = ["theta"] + [
            f"({al.univar_str(k)})*tau^{i + 1}" for i, k in enumerate(self.kappas)
        ]
        return "phi_t = " + " + ".join(terms)

    @property
    def good_reduction(self):
        return len(self.kappas[-1]) == 1

    @property
    def lead(self):
        """kappa_r as an element of F_q (requires good reduction)."""
        if not self.good_reduction:
            raise ValueError("kappa_r not a constant")
        return self.kappas[-1][0]

    def kappa(self, i):
        """kappa_i with kappa_0 := theta."""
        if i == 0:
            return (0, 1)
        return self.kappas[i - 1]

    # -- character

    def chi(self, a):
        """chi(a) = ((-1)^(r+1) kappa_r)^deg a, completely multiplicative."""
        gf = self.gf
        base = self.lead if self.r % 2 else gf.neg(self.lead)
        return gf.pow(base, len(a) - 1)

    def chibar(self, a):
        return self.gf.inv(self.chi(a))

    # -- t-motive matrices

    def gamma_theta(self):
        """(Gamma, Theta, Theta_z): Gamma/Theta over A[t], Theta_z over
        F_q[z][theta]."""
        gf, A, r = self.gf, self.A, self.r
        At = al.PolyRing(A, "t")
        inv_lead = gf.inv(self.lead)
        gamma = al.mat_zero(At, r, r)
        for i in range(r - 1):
            gamma[i][i + 1] = At.one()
        # last row: (t - theta)/kappa_r, -kappa_1/kappa_r, ..., -kappa_(r-1)/kappa_r
        gamma[r - 1][0] = At.normalize(
            [A.scale((0, 1), gf.neg(inv_lead)), A.const(inv_lead)]
        )
        for j in range(1, r):
            gamma[r - 1][j] = At.const(A.scale(self.kappas[j - 1], gf.neg(inv_lead)))
        theta_mat = al.mat_transpose(gamma)
        Rz = al.PolyRing(gf, "z")
        Az = al.PolyRing(Rz, "theta")

        def subz(e):
            # e is an A[t] element: sum_k (theta-poly)_k t^k  ->  z^k coeffs
            out = [Rz.zero()] * max((len(c) for c in e), default=1)
            for k, cpoly in enumerate(e):
                for i, c in enumerate(cpoly):
                    while len(out) <= i:
                        out.append(Rz.zero())
                    out[i] = Rz.add(out[i], Rz.shift(Rz.const(c), k) if c else Rz.zero())
            return Az.normalize(out)

        theta_z = [[subz(e) for e in row] for row in theta_mat]
        # determinant sanity: det Theta_z = (-1)^(r+1) (z - theta)/kappa_r
        d = al.det(Az, theta_z)
        expect = Az.normalize([Rz.gen(), Rz.const(gf.neg(1))])  # z - theta
        expect = Az.scale(expect, Rz.const(gf.inv(self.lead)))
        if (r + 1) % 2:
            expect = Az.neg(expect)
        if d != expect:
            raise AssertionError("Theta_z determinant check failed")
        return gamma, theta_mat, theta_z

    # -- Exp/Log streams over K = F_q(theta)

    def K(self):
        return al.FracField(self.A)

    def phi_t_K(self):
        K = self.K()
        coeffs = [K.from_poly((0, 1))] + [K.from_poly(k) for k in self.kappas]
        return TwistedPoly(K, coeffs)

    def exp_coeffs(self, n):
        """B_0..B_n with Exp = sum B_i tau^i."""
        K = self.K()
        A = self.A
        if self._exp is None:
            self._exp = [K.one()]
        B = self._exp
        while len(B) <= n:
            i = len(B)
            qi = self.q ** i
            acc = K.zero()
            for j in range(1, min(i, self.r) + 1):
                term = K.mul(K.from_poly(self.kappas[j - 1]), K.frob(B[i - j], j))
                acc = K.add(acc, term)
            den = A.sub(A.subst_power((0, 1), qi), (0, 1))  # theta^(q^i) - theta
            B.append(K.mul(acc, K.inv(K.from_poly(den))))
        return B[: n + 1]

    def log_coeffs(self, n):
        """C_0..C_n with Log = sum C_i tau^i."""
        K = self.K()
        A = self.A
        if self._log is None:
            self._log = [K.one()]
        C = self._log
        while len(C) <= n:
            i = len(C)
            qi = self.q ** i
            acc = K.zero()
            for j in range(1, min(i, self.r) + 1):
                kap = A.frob(self.kappas[j - 1], i - j)
                acc = K.add(acc, K.mul(C[i - j], K.from_poly(kap)))
            den = A.sub((0, 1), A.subst_power((0, 1), qi))  # theta - theta^(q^i)
            C.append(K.mul(acc, K.inv(K.from_poly(den))))
        return C[: n + 1]

    def exp_deg_bounds(self, n):
        """Integers b_i with deg_theta B_i <= b_i (tail certification)."""
        out = [0]
        degs = [len(k) - 1 for k in self.kappas]
        for i in range(1, n + 1):
            qi = self.q ** i
            best = None
            for j in range(1, min(i, self.r) + 1):
                v = degs[j - 1] + self.q ** j * out[i - j]
                if best is None or v > best:
                    best = v
            out.append(-qi + best)
        return out

    def log_deg_bounds(self, n):
        out = [0]
        degs = [len(k) - 1 for k in self.kappas]
        for i in range(1, n + 1):
            qi = self.q ** i
            best = None
            for j in range(1, min(i, self.r) + 1):
                v = out[i - j] + self.q ** (i - j) * degs[j - 1]
                if best is None or v > best:
                    best = v
            out.append(-qi + best)
        return out

    # -- norms

    def log_radius(self):
        """Exponent e with R_phi = |theta|^e."""
        vals = []
        for i in range(1, self.r + 1):
            k = self.kappas[i - 1]
            if k:
                vals.append(Fraction(len(k) - 1 - self.q ** i, self.q ** i - 1))
        return -max(vals)

    def upsilon_degree(self):
        """Exponent u with ||Upsilon_z|| = |theta|^u (Gauss norm)."""
        qr = self.q ** self.r
        best = max(
            Fraction(len(self.kappa(i)) - 1, qr - self.q ** i)
            for i in range(self.r)
            if self.kappa(i)
        )
        return self.q ** (self.r - 1) * best

    # -- reduction mod a prime

    def reduce_mod(self, f):
        return DrinfeldReduction(self, tuple(f))


class DrinfeldReduction:
    """phi mod f: a Drinfeld module over F_f = A/fA."""

    def __init__(self, phi, f):
        d = len(f) - 1
        if d < 1 or f[-1] != 1:
            raise ValueError("monic irreducible modulus required")
        gf = phi.gf
        if d == 1:
            field = al.GF(gf.p)
            theta_bar = (-f[0]) % gf.p
        else:
            field = al.GF(gf.p, d, modulus=list(f))
            theta_bar = field.theta_bar()
        self.phi = phi
        self.f = f
        self.d = d
        self.field = field
        self.theta_bar = theta_bar
        A = phi.A
        self.kappa_bars = [
            A.eval(k, theta_bar, ring=field, coerce=field.from_int) for k in phi.kappas
        ]
        self.phit = TwistedPoly(field, [theta_bar] + self.kappa_bars)

    def phi_a(self, a):
        """phi_a for a = sum c_j t^j over F_q, by Horner in F_f[tau]."""
        field = self.field
        out = TwistedPoly.zero(field)
        for c in reversed(a):
            out = out.mul(self.phit).add(
                TwistedPoly(field, [field.from_int(c)])
            )
        return out
