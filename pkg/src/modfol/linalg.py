"""Dense exact linear algebra over Q, plus integer lattice utilities.

QMatrix stores Fractions row-major.  Everything is deliberately elementary:
Gaussian elimination with exact pivots, characteristic polynomials by
evaluation/interpolation with fraction-free integer determinants, and a
row-style Hermite normal form for integer lattices.
"""

from fractions import Fraction
from math import gcd, lcm

from .errors import DimensionError, DomainError, SingularMatrixError


def _frac(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError("expected int or Fraction, got %r" % (x,))


class QMatrix:
    """Immutable-ish dense matrix over Q."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows, cols, data):
        if len(data) != rows * cols:
            raise DimensionError("data length %d != %d x %d" % (len(data), rows, cols))
        self.rows = rows
        self.cols = cols
        self.data = [_frac(x) for x in data]

    # -- construction ---------------------------------------------------

    @classmethod
    def from_rows(cls, rows):
        rows = [list(r) for r in rows]
        if not rows:
            return cls(0, 0, [])
        n = len(rows[0])
        if any(len(r) != n for r in rows):
            raise DimensionError("ragged rows")
        return cls(len(rows), n, [x for r in rows for x in r])

    @classmethod
    def identity(cls, n):
        return cls(n, n, [Fraction(int(i == j)) for i in range(n) for j in range(n)])

    @classmethod
    def zeros(cls, rows, cols):
        return cls(rows, cols, [Fraction(0)] * (rows * cols))

    # -- access ----------------------------------------------------------

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i * self.cols + j]

    def row(self, i):
        return self.data[i * self.cols:(i + 1) * self.cols]

    def col(self, j):
        return [self.data[i * self.cols + j] for i in range(self.rows)]

    def to_rows(self):
        return [self.row(i) for i in range(self.rows)]

    def __eq__(self, other):
        return (isinstance(other, QMatrix) and self.rows == other.rows
                and self.cols == other.cols and self.data == other.data)

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(self.data)))

    def __repr__(self):
        return "QMatrix(%d x %d)" % (self.rows, self.cols)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        self._same_shape(other)
        return QMatrix(self.rows, self.cols,
                       [a + b for a, b in zip(self.data, other.data)])

    def __sub__(self, other):
        self._same_shape(other)
        return QMatrix(self.rows, self.cols,
                       [a - b for a, b in zip(self.data, other.data)])

    def __neg__(self):
        return QMatrix(self.rows, self.cols, [-a for a in self.data])

    def scale(self, c):
        c = _frac(c)
        return QMatrix(self.rows, self.cols, [c * a for a in self.data])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if self.cols != other.rows:
            raise DimensionError("cannot multiply %dx%d by %dx%d"
                                 % (self.rows, self.cols, other.rows, other.cols))
        n, m, k = self.rows, other.cols, self.cols
        out = [Fraction(0)] * (n * m)
        od = other.data
        for i in range(n):
            base = i * k
            rowvals = [(t, self.data[base + t]) for t in range(k) if self.data[base + t]]
            acc = out[i * m:(i + 1) * m]
            for t, a in rowvals:
                ob = t * m
                for j in range(m):
                    v = od[ob + j]
                    if v:
                        acc[j] += a * v
            out[i * m:(i + 1) * m] = acc
        return QMatrix(n, m, out)

    __rmul__ = scale

    def apply(self, vec):
        """Matrix times column vector (list of Fractions)."""
        if len(vec) != self.cols:
            raise DimensionError("vector length mismatch")
        return [sum((self.data[i * self.cols + j] * vec[j]
                     for j in range(self.cols) if vec[j]), Fraction(0))
                for i in range(self.rows)]

    def transpose(self):
        return QMatrix(self.cols, self.rows,
                       [self.data[i * self.cols + j]
                        for j in range(self.cols) for i in range(self.rows)])

    def _same_shape(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise DimensionError("shape mismatch")

    def is_zero(self):
        return all(x == 0 for x in self.data)

    # -- elimination -------------------------------------------------------

    def rref(self):
        """(reduced row echelon form, pivot column list)."""
        m = [r[:] for r in self.to_rows()]
        pivots = []
        r = 0
        for c in range(self.cols):
            if r == self.rows:
                break
            p = next((i for i in range(r, self.rows) if m[i][c] != 0), None)
            if p is None:
                continue
            m[r], m[p] = m[p], m[r]
            inv = 1 / m[r][c]
            m[r] = [x * inv for x in m[r]]
            for i in range(self.rows):
                if i != r and m[i][c] != 0:
                    f = m[i][c]
                    m[i] = [a - f * b for a, b in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
        return QMatrix.from_rows(m), pivots

    def rank(self):
        return len(self.rref()[1])

    def det(self):
        if self.rows != self.cols:
            raise DimensionError("determinant of non-square matrix")
        m = [r[:] for r in self.to_rows()]
        n = self.rows
        det = Fraction(1)
        for c in range(n):
            p = next((i for i in range(c, n) if m[i][c] != 0), None)
            if p is None:
                return Fraction(0)
            if p != c:
                m[c], m[p] = m[p], m[c]
                det = -det
            det *= m[c][c]
            inv = 1 / m[c][c]
            for i in range(c + 1, n):
                if m[i][c] != 0:
                    f = m[i][c] * inv
                    m[i] = [a - f * b for a, b in zip(m[i], m[c])]
        return det

    def solve(self, rhs):
        """Solve self * x = rhs for square nonsingular self.

        rhs may be a vector (list) or a QMatrix of column right-hand sides.
        """
        if self.rows != self.cols:
            raise DimensionError("solve needs a square matrix")
        vector_input = not isinstance(rhs, QMatrix)
        R = QMatrix(self.rows, 1, list(rhs)) if vector_input else rhs
        if R.rows != self.rows:
            raise DimensionError("rhs shape mismatch")
        n, k = self.rows, R.cols
        m = [self.row(i) + R.row(i) for i in range(n)]
        for c in range(n):
            p = next((i for i in range(c, n) if m[i][c] != 0), None)
            if p is None:
                raise SingularMatrixError("matrix is singular")
            m[c], m[p] = m[p], m[c]
            inv = 1 / m[c][c]
            m[c] = [x * inv for x in m[c]]
            for i in range(n):
                if i != c and m[i][c] != 0:
                    f = m[i][c]
                    m[i] = [a - f * b for a, b in zip(m[i], m[c])]
        sol = QMatrix(n, k, [m[i][n + j] for i in range(n) for j in range(k)])
        return sol.col(0) if vector_input else sol

    def solve_general(self, rhs_matrix):
        """Solve self * X = rhs for full-column-rank rectangular self.

        Raises SingularMatrixError if inconsistent or rank-deficient.
        """
        A, piv = self._augmented_rref(rhs_matrix)
        n = self.cols
        if len(piv) < n:
            raise SingularMatrixError("coefficient matrix not of full column rank")
        k = rhs_matrix.cols
        # consistency: non-pivot rows of the reduced augmented matrix must vanish
        for i in range(len(piv), self.rows):
            if any(A[i, n + j] != 0 for j in range(k)):
                raise SingularMatrixError("inconsistent system")
        data = [A[r, n + j] for r in range(n) for j in range(k)]
        return QMatrix(n, k, data)

    def _augmented_rref(self, rhs):
        if rhs.rows != self.rows:
            raise DimensionError("rhs shape mismatch")
        aug = QMatrix(self.rows, self.cols + rhs.cols,
                      [x for i in range(self.rows)
                       for x in self.row(i) + rhs.row(i)])
        m = [r[:] for r in aug.to_rows()]
        pivots = []
        r = 0
        for c in range(self.cols):
            if r == self.rows:
                break
            p = next((i for i in range(r, self.rows) if m[i][c] != 0), None)
            if p is None:
                continue
            m[r], m[p] = m[p], m[r]
            inv = 1 / m[r][c]
            m[r] = [x * inv for x in m[r]]
            for i in range(self.rows):
                if i != r and m[i][c] != 0:
                    f = m[i][c]
                    m[i] = [a - f * b for a, b in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
        return QMatrix.from_rows(m), pivots

    def kernel(self):
        """Basis of the right kernel, echelonized; returned as a list of vectors."""
        R, piv = self.rref()
        free = [c for c in range(self.cols) if c not in piv]
        basis = []
        for f in free:
            v = [Fraction(0)] * self.cols
            v[f] = Fraction(1)
            for r, c in enumerate(piv):
                v[c] = -R[r, f]
            basis.append(v)
        return basis

    # -- characteristic polynomial -----------------------------------------

    def charpoly(self):
        """Coefficients (ascending) of det(xI - M), a monic degree-n list."""
        if self.rows != self.cols:
            raise DimensionError("charpoly of non-square matrix")
        n = self.rows
        if n == 0:
            return [Fraction(1)]
        den = lcm(*[x.denominator for x in self.data]) if self.data else 1
        zi = [int(x * den) for x in self.data]
        # p_M(x) = det(xI - M) = det(den*x*I - den*M)/den^n evaluated exactly
        # at integer points x = 0..n and interpolated.
        ys = []
        for t in range(n + 1):
            entries = [den * t * (1 if i == j else 0) - zi[i * n + j]
                       for i in range(n) for j in range(n)]
            ys.append(Fraction(_int_det_bareiss(entries, n), den ** n))
        return _interpolate_monic(list(range(n + 1)), ys, n)


def _int_det_bareiss(a, n):
    """Determinant of an n x n integer matrix (flat list), Bareiss algorithm."""
    a = a[:]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k * n + k] == 0:
            p = next((i for i in range(k + 1, n) if a[i * n + k] != 0), None)
            if p is None:
                return 0
            for j in range(n):
                a[k * n + j], a[p * n + j] = a[p * n + j], a[k * n + j]
            sign = -sign
        akk = a[k * n + k]
        for i in range(k + 1, n):
            aik = a[i * n + k]
            for j in range(k + 1, n):
                a[i * n + j] = (a[i * n + j] * akk - aik * a[k * n + j]) // prev
            a[i * n + k] = 0
        prev = akk
    return sign * a[n * n - 1]


def _interpolate_monic(xs, ys, n):
    """Lagrange interpolation; returns ascending coefficients (length n+1)."""
    # Solve the Vandermonde system exactly; n is small here.
    V = QMatrix(n + 1, n + 1,
                [Fraction(x) ** j for x in xs for j in range(n + 1)])
    coeffs = V.solve([Fraction(y) for y in ys])
    assert coeffs[-1] == 1, "characteristic polynomial must be monic"
    return coeffs


def charpoly(M):
    """Module-level convenience wrapper."""
    return M.charpoly()


# -- integer lattice utilities ------------------------------------------------


def hnf(rows):
    """Row-style Hermite normal form of an integer matrix.

    Returns the list of nonzero rows: pivots positive, entries above each
    pivot reduced into [0, pivot).  Canonical for the row lattice.
    """
    m = [list(map(int, r)) for r in rows]
    if not m:
        return []
    ncols = len(m[0])
    if any(len(r) != ncols for r in m):
        raise DimensionError("ragged rows")
    r = 0
    for c in range(ncols):
        # find a nonzero entry in column c at or below row r
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        # gcd-eliminate below
        for i in range(r + 1, len(m)):
            while m[i][c] != 0:
                q = m[r][c] // m[i][c]
                m[r] = [a - q * b for a, b in zip(m[r], m[i])]
                m[r], m[i] = m[i], m[r]
        if m[r][c] < 0:
            m[r] = [-x for x in m[r]]
        # reduce entries above the pivot
        for i in range(r):
            q = m[i][c] // m[r][c]
            if q:
                m[i] = [a - q * b for a, b in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return [row for row in m[:r] if any(row)]


def lattice_key(rational_rows):
    """Canonical key for the Z-lattice spanned by rows of Fractions.

    Returns (denominator, tuple of HNF rows) in lowest terms: two generating
    sets give equal keys iff they span the same lattice in Q^n.
    """
    rows = [list(map(_frac, r)) for r in rational_rows]
    if not rows:
        return (1, ())
    den = 1
    for r in rows:
        for x in r:
            den = lcm(den, x.denominator)
    H = hnf([[int(x * den) for x in r] for r in rows])
    if not H:
        return (1, ())
    g = den
    for r in H:
        for x in r:
            g = gcd(g, x)
    g = g or 1
    return (den // g, tuple(tuple(x // g for x in r) for r in H))


def is_unimodular(rows):
    """True iff the integer matrix is square with determinant +-1."""
    m = [list(map(int, r)) for r in rows]
    n = len(m)
    if n == 0 or any(len(r) != n for r in m):
        return False
    return abs(_int_det_bareiss([x for r in m for x in r], n)) == 1


def unimodular_with_first_row(v):
    """A matrix in GL_n(Z) whose first row is the primitive vector v."""
    v = list(map(int, v))
    n = len(v)
    g = 0
    for x in v:
        g = gcd(g, x)
    if g != 1:
        raise DomainError("vector is not primitive")
    # Column-reduce v to e_1, tracking the inverse of the column operations:
    # v * E_1 ... E_k = e_1  =>  v = e_1 * W where W = E_k^-1 ... E_1^-1,
    # so W (maintained by the matching row operations) has first row v.
    w = [[int(i == j) for j in range(n)] for i in range(n)]
    u = v[:]
    while True:
        nz = [j for j in range(n) if u[j] != 0]
        if len(nz) == 1:
            j = nz[0]
            if u[j] < 0:
                u[j] = -u[j]
                w[j] = [-x for x in w[j]]
            if j != 0:
                u[0], u[j] = u[j], u[0]
                w[0], w[j] = w[j], w[0]
            break
        # reduce the largest entry by the smallest nonzero one
        jmin = min(nz, key=lambda j: abs(u[j]))
        for j in nz:
            if j != jmin:
                q = u[j] // u[jmin]
                if q:
                    u[j] -= q * u[jmin]
                    # column op C_j -= q C_jmin on the implicit matrix means
                    # row op R_jmin += q R_j on the tracked inverse
                    w[jmin] = [a + q * b for a, b in zip(w[jmin], w[j])]
    assert u[0] == 1 and all(x == 0 for x in u[1:])
    assert w[0] == v, "completion lost the target row"
    assert is_unimodular(w)
    return w


def _gram_schmidt_int(b):
    """Gram-Schmidt data for integer rows b: (mu, squared norms of b*_i)."""
    n = len(b)
    mu = [[Fraction(0)] * n for _ in range(n)]
    bstar = []
    norms = []
    for i in range(n):
        v = [Fraction(x) for x in b[i]]
        for j in range(i):
            dot = sum(Fraction(x) * y for x, y in zip(b[i], bstar[j]))
            coef = dot / norms[j]
            mu[i][j] = coef
            v = [a - coef * c for a, c in zip(v, bstar[j])]
        bstar.append(v)
        norms.append(sum(x * x for x in v))
    return mu, norms


def lll_reduce(rows, delta=Fraction(3, 4)):
    """Lenstra-Lenstra-Lovasz reduction of linearly independent integer rows.

    Exact arithmetic throughout; Gram-Schmidt data is recomputed after each
    basis change, which is fine at the small dimensions used here.  Returns a
    new list of integer rows spanning the same lattice.
    """
    b = [list(map(int, r)) for r in rows]
    if not b:
        return []
    width = len(b[0])
    if any(len(r) != width for r in b):
        raise DimensionError("lattice rows must share a common length")
    delta = Fraction(delta)
    if not Fraction(1, 4) < delta < 1:
        raise DomainError("LLL parameter must lie in (1/4, 1)")
    n = len(b)
    mu, norms = _gram_schmidt_int(b)
    if any(x == 0 for x in norms):
        raise DomainError("lattice rows must be linearly independent")
    k = 1
    while k < n:
        for j in range(k - 1, -1, -1):
            f = mu[k][j]
            q = (2 * f.numerator + f.denominator) // (2 * f.denominator)
            if q:
                b[k] = [a - q * c for a, c in zip(b[k], b[j])]
                mu, norms = _gram_schmidt_int(b)
        if norms[k] >= (delta - mu[k][k - 1] ** 2) * norms[k - 1]:
            k += 1
        else:
            b[k - 1], b[k] = b[k], b[k - 1]
            mu, norms = _gram_schmidt_int(b)
            k = max(k - 1, 1)
    return b
