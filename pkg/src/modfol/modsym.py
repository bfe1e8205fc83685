"""Weight-2 modular symbols for Gamma0(N).

The space is presented by generators [c:d] indexed by P^1(Z/N) modulo the
two-term and three-term relations induced by the elliptic elements

    s = [[0, -1], [1, 0]]      (order 2)      x + x.s = 0
    t = [[0, -1], [1, -1]]     (order 3)      x + x.t + x.t^2 = 0

acting on the right of cosets (on bottom rows).  A symbol [g] stands for
the geodesic path {g.0, g.oo}; the boundary map sends it to the difference
of the cusp classes of its endpoints, and the cuspidal subspace is the
boundary kernel, of dimension twice the genus.

Coordinates: the relation module is eliminated once at construction; every
symbol, path and loop is afterwards expressed in a fixed basis of the
quotient (dimension 2*genus + #cusps - 1).
"""

from fractions import Fraction
from math import gcd

from .congruence import (
    P1Space,
    cusp_class_key,
    cusp_classes,
    curve_data,
    gamma0_contains,
    mat_det,
    mat_mul,
)
from .errors import DimensionError, DomainError, SingularMatrixError
from .linalg import QMatrix


def _sigma_image(c, d):
    return (d, -c)


def _tau_image(c, d):
    return (d, -c - d)


class ModularSymbolSpace:
    """Weight-2 modular symbol space of level N, with boundary and homology."""

    def __init__(self, N):
        data = curve_data(N)
        self.N = N
        self.genus = data["genus"]
        self.p1 = P1Space(N)
        self._build_quotient()
        self._build_boundary()
        self._generators = None
        self._star = None
        self._plus_basis = None

    # -- construction -------------------------------------------------------

    def _build_quotient(self):
        p1 = self.p1
        n = len(p1.reps)
        canon = p1.canonical

        sigma = [p1.index(*_sigma_image(*p1.reps[i])) for i in range(n)]
        tau = [p1.index(*_tau_image(*p1.reps[i])) for i in range(n)]

        # stage 1: two-term relations; keep one symbol per s-orbit
        # zero[i] marks symbols forced to vanish, pair sign links the others
        rep_of = [None] * n          # i -> (sign, representative index)
        reps = []
        for i in range(n):
            if rep_of[i] is not None:
                continue
            j = sigma[i]
            if j == i:
                rep_of[i] = (0, i)           # x + x.s = 2x = 0
            else:
                rep_of[i] = (1, i)
                rep_of[j] = (-1, i)
                reps.append(i)
        col_of = {i: k for k, i in enumerate(reps)}

        # stage 2: three-term relations over the surviving representatives
        rows = []
        seen = set()
        for i in range(n):
            orbit = (i, tau[i], tau[tau[i]])
            key = min(orbit)
            if key in seen:
                continue
            seen.add(key)
            row = [Fraction(0)] * len(reps)
            for j in orbit:
                sign, rep = rep_of[j]
                if sign != 0:
                    row[col_of[rep]] += sign
            if any(row):
                rows.append(row)

        if rows:
            rel = QMatrix.from_rows(rows)
            rref, pivots = rel.rref()
        else:
            rref, pivots = None, []
        pivot_set = set(pivots)
        free_cols = [c for c in range(len(reps)) if c not in pivot_set]
        self.dim = len(free_cols)
        self.free_symbols = [reps[c] for c in free_cols]

        # coordinates of each representative in the quotient basis
        rep_coords = {}
        free_pos = {c: k for k, c in enumerate(free_cols)}
        for c in free_cols:
            v = [Fraction(0)] * self.dim
            v[free_pos[c]] = Fraction(1)
            rep_coords[c] = tuple(v)
        for k, c in enumerate(pivots):
            v = [Fraction(0)] * self.dim
            for fc in free_cols:
                coeff = rref[k, fc]
                if coeff:
                    v[free_pos[fc]] -= coeff
            rep_coords[c] = tuple(v)

        zero = tuple([Fraction(0)] * self.dim)
        self._symbol_coords = []
        for i in range(n):
            sign, rep = rep_of[i]
            if sign == 0:
                self._symbol_coords.append(zero)
            else:
                base = rep_coords[col_of[rep]]
                self._symbol_coords.append(
                    base if sign == 1 else tuple(-x for x in base))

    def _build_boundary(self):
        self.cusp_keys = cusp_classes(self.N)
        key_pos = {k: i for i, k in enumerate(self.cusp_keys)}
        nu = len(self.cusp_keys)

        def divisor(i):
            a, b, c, d = self.lift(*self.p1.reps[i])
            v = [Fraction(0)] * nu
            v[key_pos[cusp_class_key((a, c), self.N)]] += 1
            v[key_pos[cusp_class_key((b, d), self.N)]] -= 1
            return v

        # columns of the boundary matrix come from the free symbols; the
        # relations must map to zero divisors, which we verify on every symbol
        cols = [divisor(i) for i in self.free_symbols]
        bm = QMatrix.from_rows(
            [[cols[j][r] for j in range(self.dim)] for r in range(nu)])
        self.boundary = bm
        for i in range(len(self.p1.reps)):
            expected = tuple(bm.apply(self._symbol_coords[i]))
            assert tuple(divisor(i)) == expected, \
                "boundary map inconsistent with relations at symbol %d" % i

        kernel = bm.kernel() if self.dim else []
        self._cuspidal_basis = [tuple(v) for v in kernel]
        self.cuspidal_dim = len(self._cuspidal_basis)
        assert self.cuspidal_dim == 2 * self.genus, \
            "cuspidal dimension %d != 2*genus %d" % (self.cuspidal_dim,
                                                     2 * self.genus)
        if self.cuspidal_dim:
            self._cuspidal_matrix = QMatrix.from_rows(
                [[self._cuspidal_basis[j][r] for j in range(self.cuspidal_dim)]
                 for r in range(self.dim)])
        else:
            self._cuspidal_matrix = None

    # -- symbols and lifts -----------------------------------------------------

    def lift(self, c, d):
        """An SL2(Z) matrix whose bottom row is congruent mod N to the
        canonical representative of (c, d)."""
        N = self.N
        c0, d0 = self.p1.canonical(c, d)
        if N == 1:
            return (1, 0, 0, 1)
        if c0 == 0:
            # canonical zero-first class is (0, 1); lift to the identity row
            cc, dd = 0, 1
        else:
            cc = c0
            dd = d0
            k = 0
            while gcd(cc, dd) != 1:
                k += 1
                dd = d0 + k * N
                if k > 4 * abs(cc) + 4:
                    raise AssertionError("no coprime lift for (%d, %d)" % (c0, d0))
        if cc == 0 and dd == 0:
            raise AssertionError("degenerate lift")
        # complete (cc, dd) to determinant 1: a*dd - b*cc = 1
        g, x, y = _xgcd(dd, -cc)
        assert g == 1
        return (x, y, cc, dd)

    def symbol_coords(self, c, d):
        """Quotient coordinates of the symbol [c:d]."""
        return self._symbol_coords[self.p1.index(c, d)]

    def zero_vector(self):
        return tuple([Fraction(0)] * self.dim)

    # -- paths -------------------------------------------------------------------

    def path(self, x, y):
        """Coordinates of the symbol of the geodesic path {x, y}.

        Endpoints are Fractions (or integers), or None for infinity.
        """
        return tuple(b - a for a, b in zip(self._path_from_infinity(x),
                                           self._path_from_infinity(y)))

    def _path_from_infinity(self, x):
        """Coordinates of {oo, x}."""
        out = [Fraction(0)] * self.dim
        if x is None:
            return out
        x = Fraction(x)
        p, q = x.numerator, x.denominator
        # continued-fraction convergents p_k/q_k of x, starting from 1/0
        pk_1, qk_1 = 1, 0
        pk, qk = None, None
        a, b = p, q
        first = True
        while True:
            if b == 0:
                break
            quo = a // b
            a, b = b, a - quo * b
            if first:
                pk, qk = quo, 1
                first = False
            else:
                pk, qk, pk_1, qk_1 = quo * pk + pk_1, quo * qk + qk_1, pk, qk
            # unimodular path {p_{k-1}/q_{k-1}, p_k/q_k} = [h.0, h.oo]
            h = (pk, pk_1, qk, qk_1)
            if mat_det(h) == -1:
                h = (pk, -pk_1, qk, -qk_1)
            assert mat_det(h) == 1
            idx = self.p1.index_of_matrix(h)
            for r, v in enumerate(self._symbol_coords[idx]):
                out[r] += v
        return out

    # -- cuspidal subspace ----------------------------------------------------------

    def cuspidal_basis(self):
        return list(self._cuspidal_basis)

    def boundary_of(self, vec):
        return tuple(self.boundary.apply(list(vec)))

    def is_cuspidal(self, vec):
        return all(x == 0 for x in self.boundary_of(vec))

    def express_cuspidal(self, vec):
        """Coordinates of a cuspidal vector in the cuspidal basis."""
        if self.cuspidal_dim == 0:
            if any(x != 0 for x in vec):
                raise DomainError("vector is not cuspidal")
            return ()
        try:
            sol = self._cuspidal_matrix.solve_general(
                QMatrix.from_rows([[x] for x in vec]))
        except SingularMatrixError as exc:
            raise DomainError("vector does not lie in the cuspidal subspace") \
                from exc
        return tuple(sol[i, 0] for i in range(self.cuspidal_dim))

    def restrict_to_cuspidal(self, op):
        """Restrict an operator on the quotient to the cuspidal subspace.

        op is a dim x dim QMatrix mapping the cuspidal subspace to itself;
        returns the (2g) x (2g) matrix in the cuspidal basis.
        """
        g2 = self.cuspidal_dim
        cols = []
        for b in self._cuspidal_basis:
            image = op.apply(list(b))
            cols.append(self.express_cuspidal(image))
        return QMatrix.from_rows(
            [[cols[j][i] for j in range(g2)] for i in range(g2)])

    # -- star involution ---------------------------------------------------------------

    def star_matrix(self):
        """Matrix of the involution [c:d] -> [-c:d] on the quotient.

        This is the map induced by z -> -conj(z) on paths; it squares to
        the identity and commutes with every Hecke operator.
        """
        if self._star is None:
            n = self.dim
            cols = [self.symbol_coords(-self.p1.reps[i][0], self.p1.reps[i][1])
                    for i in self.free_symbols]
            self._star = QMatrix.from_rows(
                [[cols[j][i] for j in range(n)] for i in range(n)])
        return self._star

    def star_on_cuspidal(self):
        """The star involution restricted to the cuspidal subspace."""
        return self.restrict_to_cuspidal(self.star_matrix())

    def cuspidal_plus_basis(self):
        """Basis of the +1 eigenspace of the star involution.

        Vectors are in cuspidal coordinates.  The involution splits the
        2g-dimensional cuspidal space into halves of dimension g, and on
        the +1 half each Hecke eigensystem appears exactly once (for
        prime level), which is what the orbit decomposition relies on.
        """
        if self._plus_basis is None:
            star = self.star_on_cuspidal()
            kernel = (star - QMatrix.identity(self.cuspidal_dim)).kernel()
            if len(kernel) != self.genus:
                raise DimensionError(
                    "star +1 eigenspace has dimension %d, expected genus %d"
                    % (len(kernel), self.genus))
            self._plus_basis = [tuple(v) for v in kernel]
        return list(self._plus_basis)

    # -- homology ----------------------------------------------------------------------

    def loop_class(self, gamma):
        """Cuspidal coordinates of the closed loop {0, gamma.0}."""
        if not gamma0_contains(gamma, self.N):
            raise DomainError("matrix is not in the level subgroup")
        a, b, c, d = gamma
        target = None if d == 0 else Fraction(b, d)
        vec = self.path(Fraction(0), target)
        return self.express_cuspidal(vec)

    def homology_generators(self):
        """2*genus group elements whose loops form a homology basis.

        Returns a list of (matrix, coords) pairs; coords are with respect to
        the cuspidal basis.  Deterministic greedy sweep over elements with
        lower-left entry k*N.
        """
        if self._generators is not None:
            return list(self._generators)
        need = self.cuspidal_dim
        out = []
        if need == 0:
            self._generators = []
            return []
        picked_rows = []
        k = 0
        while len(out) < need:
            k += 1
            if k > 40:
                raise AssertionError(
                    "homology generator sweep exhausted at level %d" % self.N)
            c = k * self.N
            for d in range(1, c + 1):
                if gcd(d, c) != 1:
                    continue
                a = pow(d, -1, c)
                b = (a * d - 1) // c
                gamma = (a, b, c, d)
                assert mat_det(gamma) == 1
                coords = self.loop_class(gamma)
                trial = picked_rows + [list(coords)]
                if QMatrix.from_rows(trial).rank() == len(trial):
                    picked_rows.append(list(coords))
                    out.append((gamma, coords))
                    if len(out) == need:
                        break
        self._generators = out
        return list(out)


def _xgcd(a, b):
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t
