"""Number fields Q[x]/(f): exact arithmetic, linear algebra, real embeddings.

Elements are coordinate vectors in the power basis 1, a, ..., a^(d-1) of a
root a of the monic irreducible defining polynomial.  Real embeddings carry
an isolating rational interval and support exact sign queries and rational
approximation to any requested accuracy, by interval refinement: no floating
point enters any exact decision.
"""

from fractions import Fraction

from .errors import DomainError, SingularMatrixError
from .polys import (
    QPolynomial,
    count_real_roots,
    is_irreducible,
    isolate_real_roots,
    poly_gcd,
)


def _frac(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError("expected int or Fraction, got %r" % (x,))


class NumberField:
    """Q[x]/(minpoly) for a monic irreducible minpoly."""

    __slots__ = ("minpoly", "degree", "_reduction", "_embeddings")

    def __init__(self, minpoly, check=True):
        if not isinstance(minpoly, QPolynomial):
            raise TypeError("minpoly must be a QPolynomial")
        if minpoly.degree < 1:
            raise DomainError("defining polynomial must be nonconstant")
        minpoly = minpoly.monic()
        if check and not is_irreducible(minpoly):
            raise DomainError("defining polynomial is not irreducible: %r"
                              % (minpoly,))
        self.minpoly = minpoly
        d = minpoly.degree
        self.degree = d
        # reduction table: row k = coordinates of a^(d+k) for k = 0..d-2
        rows = []
        cur = [-c for c in minpoly.coeffs[:-1]]          # a^d
        rows.append(tuple(cur))
        for _ in range(d - 2):
            shifted = [Fraction(0)] + cur[:-1]
            top = cur[-1]
            if top:
                shifted = [s + top * r for s, r in zip(shifted, rows[0])]
            cur = shifted
            rows.append(tuple(cur))
        self._reduction = rows
        self._embeddings = None

    def __eq__(self, other):
        return isinstance(other, NumberField) and self.minpoly == other.minpoly

    def __hash__(self):
        return hash(self.minpoly)

    def __repr__(self):
        return "NumberField(%r)" % (self.minpoly,)

    def zero(self):
        return NFElement(self, [0] * self.degree)

    def one(self):
        return self.from_rational(1)

    def gen(self):
        cs = [Fraction(0)] * self.degree
        if self.degree == 1:
            # a is rational: a = -c0
            return NFElement(self, [-self.minpoly.coeffs[0]])
        cs[1] = Fraction(1)
        return NFElement(self, cs)

    def from_rational(self, c):
        cs = [Fraction(0)] * self.degree
        cs[0] = _frac(c)
        return NFElement(self, cs)

    def element(self, coeffs):
        cs = [_frac(c) for c in coeffs]
        if len(cs) > self.degree:
            return self.from_poly(QPolynomial(cs))
        cs += [Fraction(0)] * (self.degree - len(cs))
        return NFElement(self, cs)

    def from_poly(self, p):
        """Image of a rational polynomial evaluated at the generator."""
        r = p % self.minpoly
        cs = list(r.coeffs) + [Fraction(0)] * (self.degree - len(r.coeffs))
        return NFElement(self, cs)

    def is_totally_real(self):
        return count_real_roots(self.minpoly) == self.degree

    def real_embeddings(self):
        """All real embeddings, ordered by the image of the generator."""
        if self._embeddings is None:
            ivs = isolate_real_roots(self.minpoly)
            self._embeddings = [RealEmbedding(self, lo, hi) for lo, hi in ivs]
        return list(self._embeddings)


class NFElement:
    """Element of a NumberField in power-basis coordinates."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        cs = [_frac(c) for c in coeffs]
        if len(cs) != field.degree:
            raise DomainError("coordinate vector has wrong length")
        self.field = field
        self.coeffs = tuple(cs)

    # -- predicates ---------------------------------------------------------

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    def is_rational(self):
        return all(c == 0 for c in self.coeffs[1:])

    def as_fraction(self):
        if not self.is_rational():
            raise DomainError("element is not rational: %r" % (self,))
        return self.coeffs[0]

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field.from_rational(other)
        if not isinstance(other, NFElement):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field.minpoly.coeffs, self.coeffs))

    def __repr__(self):
        from .polys import format_poly
        return "NFElement(%s)" % (format_poly(QPolynomial(self.coeffs), var="a"),)

    # -- arithmetic -----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, NFElement):
            if other.field != self.field:
                raise DomainError("elements of different fields")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.from_rational(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return NFElement(self.field, [a + b for a, b in zip(self.coeffs, o.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return NFElement(self.field, [-a for a in self.coeffs])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return NFElement(self.field, [a - b for a, b in zip(self.coeffs, o.coeffs)])

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = self.field.degree
        prod = [Fraction(0)] * (2 * d - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    if b:
                        prod[i + j] += a * b
        out = list(prod[:d])
        red = self.field._reduction
        for k in range(d, 2 * d - 1):
            c = prod[k]
            if c:
                for j, r in enumerate(red[k - d]):
                    out[j] += c * r
        return NFElement(self.field, out)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero field element")
        g = QPolynomial(self.coeffs)
        f = self.field.minpoly
        # extended Euclid: u*g + v*f = 1
        r0, r1 = f, g
        s0, s1 = QPolynomial([]), QPolynomial([1])
        while not r1.is_zero():
            q, r = r0.divmod(r1)
            r0, r1 = r1, r
            s0, s1 = s1, s0 - q * s1
        assert r0.degree == 0, "defining polynomial not irreducible?"
        inv_poly = s0 * (1 / r0.coeffs[0])
        return self.field.from_poly(inv_poly)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def trace(self):
        """Trace of multiplication-by-self, a rational number.

        Sums the diagonal of the multiplication matrix in the power
        basis: entry i is the coefficient of a^i in self * a^i.
        """
        d = self.field.degree
        total = self.coeffs[0]
        b = self
        gen = self.field.gen()
        for i in range(1, d):
            b = b * gen
            total += b.coeffs[i]
        return total


# -- linear algebra over a number field ------------------------------------------


def _as_nf(field, x):
    if isinstance(x, NFElement):
        if x.field != field:
            raise DomainError("mixed fields in matrix")
        return x
    return field.from_rational(_frac(x))


def nf_rref(field, rows):
    """Reduced row echelon form over the field; returns (rows, pivot_cols)."""
    m = [[_as_nf(field, x) for x in row] for row in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if not m[i][c].is_zero()), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = m[r][c].inverse()
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and not m[i][c].is_zero():
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def nf_kernel(field, rows):
    """Basis of the right kernel over the field, echelonized.

    Each basis vector has value 1 in its distinguishing (free) coordinate.
    """
    if not rows:
        return []
    ncols = len(rows[0])
    rref, pivots = nf_rref(field, rows)
    pivot_set = set(pivots)
    basis = []
    for c in range(ncols):
        if c in pivot_set:
            continue
        v = [field.zero()] * ncols
        v[c] = field.one()
        for k, pc in enumerate(pivots):
            v[pc] = -rref[k][c]
        basis.append(v)
    return basis


def nf_solve(field, rows, rhs):
    """Solve a square nonsingular linear system over the field."""
    n = len(rows)
    m = [[_as_nf(field, x) for x in row] + [_as_nf(field, b)]
         for row, b in zip(rows, rhs)]
    if any(len(row) != n + 1 for row in m):
        raise DomainError("system is not square")
    for c in range(n):
        piv = next((i for i in range(c, n) if not m[i][c].is_zero()), None)
        if piv is None:
            raise SingularMatrixError("singular system over number field")
        m[c], m[piv] = m[piv], m[c]
        inv = m[c][c].inverse()
        m[c] = [x * inv for x in m[c]]
        for i in range(n):
            if i != c and not m[i][c].is_zero():
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return [m[i][n] for i in range(n)]


# -- real embeddings ----------------------------------------------------------------


def _interval_add(a, b):
    return (a[0] + b[0], a[1] + b[1])


def _interval_mul(a, b):
    ps = (a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1])
    return (min(ps), max(ps))


class RealEmbedding:
    """A real place of a number field, held as an isolating interval.

    The generator's image is the unique root of the defining polynomial in
    the open interval (lo, hi).  All queries are exact: signs are decided by
    refining the interval until interval arithmetic becomes conclusive.
    """

    __slots__ = ("field", "lo", "hi")

    def __init__(self, field, lo, hi):
        self.field = field
        self.lo = _frac(lo)
        self.hi = _frac(hi)

    def __repr__(self):
        return "RealEmbedding(%r in (%s, %s))" % (self.field, self.lo, self.hi)

    def _refine(self):
        """One bisection step on the isolating interval."""
        f = self.field.minpoly
        mid = (self.lo + self.hi) / 2
        vm = f.evaluate(mid)
        if vm == 0:
            # rational root: shrink to a tiny interval still containing it
            w = (self.hi - self.lo) / 4
            self.lo, self.hi = mid - w, mid + w
            return
        if (f.evaluate(self.lo) > 0) != (vm > 0):
            self.hi = mid
        else:
            self.lo = mid

    def _interval_eval(self, coeffs):
        """Interval Horner evaluation of sum c_i a^i over (lo, hi)."""
        acc = (Fraction(0), Fraction(0))
        box = (self.lo, self.hi)
        for c in reversed(coeffs):
            acc = _interval_add(_interval_mul(acc, box), (c, c))
        return acc

    def sign(self, elt):
        """Exact sign (-1, 0, 1) of the image of elt under this embedding."""
        elt = _as_nf(self.field, elt)
        if elt.is_zero():
            return 0
        # elt is a nonzero polynomial of degree < [K:Q] in the generator, so
        # its image is nonzero; refine until the interval excludes 0.
        while True:
            lo, hi = self._interval_eval(elt.coeffs)
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            self._refine()

    def compare(self, a, b):
        return self.sign(_as_nf(self.field, a) - _as_nf(self.field, b))

    def approx(self, elt, eps):
        """Rational approximation of elt's image within eps (> 0)."""
        elt = _as_nf(self.field, elt)
        eps = _frac(eps)
        if eps <= 0:
            raise DomainError("eps must be positive")
        while True:
            lo, hi = self._interval_eval(elt.coeffs)
            if hi - lo < eps:
                return (lo + hi) / 2
            self._refine()

    def to_float(self, elt):
        ap = self.approx(elt, Fraction(1, 10 ** 17))
        return ap.numerator / ap.denominator
