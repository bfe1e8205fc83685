"""Univariate polynomials over Q: arithmetic, Sturm sequences, factorization.

Coefficients are stored ascending as Fractions; the zero polynomial has an
empty coefficient tuple and degree -1.

Factorization over Q is complete and deterministic: Yun's squarefree
decomposition, then for each squarefree part a monic reduction, Berlekamp
factorization modulo the first usable odd prime, quadratic Hensel lifting to
beyond the Mignotte bound, and subset recombination with exact trial
division.  Factors come back monic, sorted by degree then coefficients.
"""

from fractions import Fraction
from itertools import combinations
from math import gcd, isqrt, lcm

from .errors import DomainError


def _frac(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError("expected int or Fraction, got %r" % (x,))


class QPolynomial:
    """Dense univariate polynomial over Q, coefficients ascending."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    # -- basics -----------------------------------------------------------

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def leading(self):
        if self.is_zero():
            raise DomainError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_monic(self):
        return not self.is_zero() and self.coeffs[-1] == 1

    def __eq__(self, other):
        return isinstance(other, QPolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return "QPolynomial(%s)" % (format_poly(self),)

    def __bool__(self):
        return not self.is_zero()

    @classmethod
    def x(cls):
        return cls([0, 1])

    @classmethod
    def constant(cls, c):
        return cls([c])

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return QPolynomial([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        if self.is_zero() or other.is_zero():
            return QPolynomial([])
        a, b = self.coeffs, other.coeffs
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    if cb:
                        out[i + j] += ca * cb
        return QPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise DomainError("negative power")
        result = QPolynomial([1])
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divmod(self, other):
        other = _coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        q = [Fraction(0)] * max(0, self.degree - other.degree + 1)
        r = list(self.coeffs)
        d = other.degree
        lead = other.coeffs[-1]
        while len(r) - 1 >= d and any(r):
            while r and r[-1] == 0:
                r.pop()
            if len(r) - 1 < d:
                break
            k = len(r) - 1 - d
            c = r[-1] / lead
            q[k] = c
            for i, oc in enumerate(other.coeffs):
                r[k + i] -= c * oc
        return QPolynomial(q), QPolynomial(r)

    def __mod__(self, other):
        return self.divmod(other)[1]

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def monic(self):
        if self.is_zero():
            raise DomainError("cannot normalize zero polynomial")
        lead = self.coeffs[-1]
        return self if lead == 1 else QPolynomial([c / lead for c in self.coeffs])

    def derivative(self):
        return QPolynomial([i * c for i, c in enumerate(self.coeffs)][1:])

    def evaluate(self, x):
        """Horner evaluation; works for any x supporting + and * with Fractions."""
        acc = None
        for c in reversed(self.coeffs):
            acc = c if acc is None else acc * x + c
        if acc is None:
            return Fraction(0)
        return acc

    def shift_compose_scale(self, a):
        """p(a*x) for rational a."""
        a = _frac(a)
        return QPolynomial([c * a ** i for i, c in enumerate(self.coeffs)])


def _coerce(x):
    if isinstance(x, QPolynomial):
        return x
    if isinstance(x, (int, Fraction)):
        return QPolynomial([x])
    raise TypeError("cannot coerce %r to QPolynomial" % (x,))


def poly_gcd(a, b):
    """Monic gcd in Q[x]."""
    while not b.is_zero():
        a, b = b, a % b
    if a.is_zero():
        return a
    return a.monic()


def squarefree_decomposition(p):
    """Yun's algorithm on a monic polynomial: list of (part, multiplicity).

    Parts are monic, squarefree, pairwise coprime; p = prod part^mult.
    """
    if p.degree < 1:
        return []
    p = p.monic()
    d = p.derivative()
    g = poly_gcd(p, d)
    if g.degree == 0:
        return [(p, 1)]
    w = (p // g).monic()
    out = []
    i = 1
    while w.degree > 0:
        y = poly_gcd(w, g)
        z = (w // y).monic() if y.degree > 0 else w
        if z.degree > 0:
            out.append((z, i))
        w = y if y.degree > 0 else QPolynomial([1])
        if y.degree > 0:
            g = g // y
        i += 1
        if w.degree == 0:
            break
    return out


# -- Sturm sequences ----------------------------------------------------------


def sturm_chain(p):
    chain = [p, p.derivative()]
    while not chain[-1].is_zero() and chain[-1].degree > 0:
        rem = chain[-2] % chain[-1]
        if rem.is_zero():
            break
        chain.append(-rem)
    return [q for q in chain if not q.is_zero()]


def _sign_at(p, x):
    v = p.evaluate(x)
    return (v > 0) - (v < 0)

def _sign_at_inf(p, positive):
    if p.is_zero():
        return 0
    s = 1 if p.coeffs[-1] > 0 else -1
    if not positive and p.degree % 2 == 1:
        s = -s
    return s


def _variations(signs):
    signs = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_real_roots(p, lo=None, hi=None):
    """Number of distinct real roots of p, optionally in the interval (lo, hi]."""
    if p.is_zero():
        raise DomainError("zero polynomial")
    p = squarefree_part(p)
    if p.degree == 0:
        return 0
    chain = sturm_chain(p)
    va = (_variations([_sign_at_inf(q, False) for q in chain]) if lo is None
          else _variations([_sign_at(q, lo) for q in chain]))
    vb = (_variations([_sign_at_inf(q, True) for q in chain]) if hi is None
          else _variations([_sign_at(q, hi) for q in chain]))
    return va - vb


def squarefree_part(p):
    g = poly_gcd(p, p.derivative())
    if g.degree <= 0:
        return p.monic()
    return (p // g).monic()


def cauchy_bound(p):
    """Rational M with all real roots of p inside (-M, M)."""
    lead = abs(p.coeffs[-1])
    m = max((abs(c) for c in p.coeffs[:-1]), default=Fraction(0))
    return 1 + m / lead


def isolate_real_roots(p):
    """Disjoint open rational intervals, one per distinct real root, sorted.

    Returns (lo, hi) pairs with lo < hi, p(lo) != 0 != p(hi), and exactly one
    real root of p strictly inside each; consecutive intervals are disjoint.
    Because each isolated root is simple (squarefree part) and interior,
    p(lo) and p(hi) have opposite signs, so the interval can be refined by
    sign bisection.
    """
    p = squarefree_part(p)
    if p.degree < 1:
        return []
    chain = sturm_chain(p)
    deg = p.degree

    def var(x):
        return _variations([_sign_at(q, x) for q in chain])

    def interior_nonroot(lo, hi):
        # p has at most deg roots, so one of deg+1 equispaced interior
        # points is not a root
        for k in range(1, deg + 2):
            m = lo + (hi - lo) * Fraction(k, deg + 2)
            if p.evaluate(m) != 0:
                return m
        raise AssertionError("no non-root cut point found")

    M = cauchy_bound(p)
    out = []
    stack = [(-M, M, var(-M), var(M))]
    while stack:
        lo, hi, vlo, vhi = stack.pop()
        n = vlo - vhi
        if n == 0:
            continue
        if n == 1:
            out.append((lo, hi))
            continue
        mid = interior_nonroot(lo, hi)
        vm = var(mid)
        stack.append((lo, mid, vlo, vm))
        stack.append((mid, hi, vm, vhi))
    return sorted(out)


# -- arithmetic in GF(p)[x] (dense int lists, ascending) ----------------------


def _gfp_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _gfp_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] = (out[i + j] + ca * cb) % p
    return _gfp_trim(out)


def _gfp_divmod(a, b, p):
    if not b:
        raise ZeroDivisionError
    a = a[:]
    inv = pow(b[-1], p - 2, p)
    q = [0] * max(0, len(a) - len(b) + 1)
    while len(a) >= len(b):
        c = (a[-1] * inv) % p
        k = len(a) - len(b)
        q[k] = c
        for i, cb in enumerate(b):
            a[k + i] = (a[k + i] - c * cb) % p
        _gfp_trim(a)
        if not a:
            break
    return _gfp_trim(q), a


def _gfp_gcd(a, b, p):
    a, b = a[:], b[:]
    while b:
        a, b = b, _gfp_divmod(a, b, p)[1]
    if a:
        inv = pow(a[-1], p - 2, p)
        a = [(c * inv) % p for c in a]
    return a


def _gfp_xgcd(a, b, p):
    """(g, s, t) with s*a + t*b = g (monic) in GF(p)[x]."""
    r0, r1 = a[:], b[:]
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = _gfp_divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _gfp_sub(s0, _gfp_mul(q, s1, p), p)
        t0, t1 = t1, _gfp_sub(t0, _gfp_mul(q, t1, p), p)
    if r0:
        inv = pow(r0[-1], p - 2, p)
        r0 = [(c * inv) % p for c in r0]
        s0 = [(c * inv) % p for c in s0]
        t0 = [(c * inv) % p for c in t0]
    return r0, s0, t0


def _gfp_sub(a, b, p):
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % p
    return _gfp_trim(out)


def _gfp_powmod(base, e, mod, p):
    result = [1]
    base = _gfp_divmod(base, mod, p)[1]
    while e:
        if e & 1:
            result = _gfp_divmod(_gfp_mul(result, base, p), mod, p)[1]
        base = _gfp_divmod(_gfp_mul(base, base, p), mod, p)[1]
        e >>= 1
    return result


def _berlekamp(f, p):
    """Monic irreducible factors of a monic squarefree f in GF(p)[x]."""
    n = len(f) - 1
    if n <= 1:
        return [f]
    # Frobenius matrix: column i holds x^(i*p) mod f
    xp = _gfp_powmod([0, 1], p, f, p)
    cols = [[1] + [0] * (n - 1)]
    cur = [1]
    for _ in range(1, n):
        cur = _gfp_divmod(_gfp_mul(cur, xp, p), f, p)[1]
        cols.append(cur + [0] * (n - len(cur)))
    # kernel of (Q - I) over GF(p); Q has columns cols
    m = [[(cols[j][i] - (1 if i == j else 0)) % p for j in range(n)]
         for i in range(n)]
    basis = _gfp_nullspace(m, p)
    r = len(basis)
    if r == 1:
        return [f]
    factors = [f]
    for v in basis:
        vv = _gfp_trim(list(v))
        if len(vv) <= 1:          # the constant vector never splits anything
            continue
        for c in range(p):
            if len(factors) == r:
                return sorted(factors, key=_poly_sort_key)
            nxt = []
            for g in factors:
                if len(g) - 1 <= 1:
                    nxt.append(g)
                    continue
                vc = _gfp_sub(vv, [c], p)
                h = _gfp_gcd(vc, g, p)
                if 0 < len(h) - 1 < len(g) - 1:
                    nxt.append(h)
                    nxt.append(_gfp_divmod(g, h, p)[0])
                else:
                    nxt.append(g)
            factors = nxt
    assert len(factors) == r, "Berlekamp basis failed to separate all factors"
    return sorted(factors, key=_poly_sort_key)


def _poly_sort_key(g):
    return (len(g), tuple(reversed(g)))


def _gfp_nullspace(m, p):
    """Nullspace basis of a square matrix over GF(p) (list of rows)."""
    n = len(m)
    m = [row[:] for row in m]
    pivots = {}
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, n) if m[i][c] % p), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], p - 2, p)
        m[r] = [(x * inv) % p for x in m[r]]
        for i in range(n):
            if i != r and m[i][c] % p:
                f = m[i][c]
                m[i] = [(a - f * b) % p for a, b in zip(m[i], m[r])]
        pivots[c] = r
        r += 1
    basis = []
    for c in range(n):
        if c in pivots:
            continue
        v = [0] * n
        v[c] = 1
        for pc, pr in pivots.items():
            v[pc] = (-m[pr][c]) % p
        basis.append(v)
    return basis


# -- Hensel lifting ------------------------------------------------------------


def _zp_mul(a, b, m):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] = (out[i + j] + ca * cb) % m
    while out and out[-1] == 0:
        out.pop()
    return out


def _zp_sub(a, b, m):
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] = c % m
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % m
    while out and out[-1] == 0:
        out.pop()
    return out


def _zp_add(a, b, m):
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] = c % m
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % m
    while out and out[-1] == 0:
        out.pop()
    return out


def _zp_divmod_monic(a, b, m):
    """Division by a monic b in (Z/m)[x]."""
    assert b and b[-1] == 1
    a = [c % m for c in a]
    while a and a[-1] == 0:
        a.pop()
    q = [0] * max(0, len(a) - len(b) + 1)
    while len(a) >= len(b):
        c = a[-1]
        k = len(a) - len(b)
        q[k] = c
        for i, cb in enumerate(b):
            a[k + i] = (a[k + i] - c * cb) % m
        while a and a[-1] == 0:
            a.pop()
    while q and q[-1] == 0:
        q.pop()
    return q, a


def _hensel_step(f, g, h, s, t, m):
    """One quadratic lift: from mod m to mod m*m.

    Requires f = g*h (mod m), s*g + t*h = 1 (mod m), f, g, h monic.
    Returns g*, h*, s*, t* with the same relations mod m*m.
    """
    mm = m * m
    e = _zp_sub(f, _zp_mul(g, h, mm), mm)
    q, r = _zp_divmod_monic(_zp_mul(s, e, mm), h, mm)
    # g + t*e + q*g and h + r; phantom top coefficients of g_ are 0 mod m*m
    # (the product must stay monic of the right degree) and get trimmed.
    g_ = _zp_add(g, _zp_add(_zp_mul(t, e, mm), _zp_mul(q, g, mm), mm), mm)
    h_ = _zp_add(h, r, mm)
    b = _zp_sub(_zp_add(_zp_mul(s, g_, mm), _zp_mul(t, h_, mm), mm), [1], mm)
    c, d = _zp_divmod_monic(_zp_mul(s, b, mm), h_, mm)
    s_ = _zp_sub(s, d, mm)
    t_ = _zp_sub(t, _zp_add(_zp_mul(t, b, mm), _zp_mul(c, g_, mm), mm), mm)
    return g_, h_, s_, t_


def _hensel_lift_pair(f, g, h, p, target):
    """Lift f = g*h from mod p to mod m >= target (m a power of p squared up)."""
    gp, s, t = _gfp_xgcd(g, h, p)
    assert gp == [1], "factors not coprime mod p"
    m = p
    while m < target:
        g, h, s, t = _hensel_step(f, g, h, s, t, m)
        m *= m
    return g, h, m


def _hensel_lift_tree(f, factors, p, target):
    """Lift a list of monic coprime factors of monic f from mod p to mod >= target."""
    if len(factors) == 1:
        return [[c % _pow_at_least(p, target) for c in f]]
    k = len(factors) // 2
    g = [1]
    for fac in factors[:k]:
        g = _gfp_mul(g, fac, p)
    h = [1]
    for fac in factors[k:]:
        h = _gfp_mul(h, fac, p)
    g_, h_, m = _hensel_lift_pair(f, g, h, p, target)
    left = _hensel_lift_tree(g_, factors[:k], p, m)
    right = _hensel_lift_tree(h_, factors[k:], p, m)
    return [[c % m for c in fac] for fac in left + right]


def _pow_at_least(p, target):
    m = p
    while m < target:
        m *= m
    return m


# -- Zassenhaus over Z (monic squarefree) --------------------------------------


def _mignotte_bound(f):
    """Coefficient bound for monic factors of monic integer f."""
    n = len(f) - 1
    norm2 = isqrt(sum(c * c for c in f)) + 1
    return (2 ** n) * norm2


def _sym(c, m):
    c %= m
    return c - m if 2 * c > m else c


def _zx_divmod_monic(a, b):
    """Exact division in Z[x] by monic b; returns None if not divisible."""
    a = list(a)
    q = [0] * max(0, len(a) - len(b) + 1)
    while len(a) >= len(b):
        c = a[-1]
        k = len(a) - len(b)
        q[k] = c
        for i, cb in enumerate(b):
            a[k + i] -= c * cb
        while a and a[-1] == 0:
            a.pop()
    return q if not a else None


def _factor_monic_squarefree_z(f):
    """Monic irreducible Z[x] factors of a monic squarefree integer poly."""
    n = len(f) - 1
    if n <= 1:
        return [f]
    # pick the first odd prime where f stays squarefree
    p = 3
    while True:
        fp = [c % p for c in f]
        if len(_gfp_trim(fp[:])) == n + 1:
            if len(_gfp_gcd(fp, _gfp_trim([(i * c) % p for i, c in enumerate(fp)][1:]), p)) == 1:
                break
        p = _next_prime(p)
    modular = _berlekamp([c % p for c in f], p)
    if len(modular) == 1:
        return [f]
    bound = 2 * _mignotte_bound(f) + 1
    m = _pow_at_least(p, bound)
    lifted = _hensel_lift_tree([c % m for c in f], modular, p, m)
    # recombination
    remaining = list(range(len(lifted)))
    result = []
    rest = f[:]
    size = 1
    while 2 * size <= len(remaining):
        found = True
        while found:
            found = False
            for subset in combinations(remaining, size):
                cand = [1]
                for i in subset:
                    cand = _zp_mul(cand, lifted[i], m)
                cand = [_sym(c, m) for c in cand]
                while cand and cand[-1] == 0:
                    cand.pop()
                if cand[-1] != 1:
                    continue
                if rest[0] != 0 and cand[0] != 0 and rest[0] % cand[0] != 0:
                    continue
                q = _zx_divmod_monic(rest, cand)
                if q is not None:
                    result.append(cand)
                    rest = q
                    remaining = [i for i in remaining if i not in subset]
                    found = True
                    break
            if 2 * size > len(remaining):
                break
        size += 1
    if len(rest) > 1:
        result.append(rest)
    return result


def _next_prime(p):
    while True:
        p += 2
        if all(p % q for q in range(3, isqrt(p) + 1, 2)):
            return p


# -- public factorization -------------------------------------------------------


def factor_poly(p):
    """Factor p in Q[x]: list of (monic irreducible QPolynomial, multiplicity).

    Sorted by degree, then lexicographically on ascending coefficients.
    The product of factors^multiplicities equals p up to the rational
    scalar p.leading().
    """
    if not isinstance(p, QPolynomial):
        raise TypeError("factor_poly expects a QPolynomial")
    if p.is_zero():
        raise DomainError("cannot factor the zero polynomial")
    if p.degree < 1:
        return []
    out = []
    # strip powers of x first (Zassenhaus needs nonzero constant term)
    coeffs = list(p.coeffs)
    k = 0
    while coeffs[k] == 0:
        k += 1
    if k:
        out.append((QPolynomial.x(), k))
        p = QPolynomial(coeffs[k:])
    if p.degree >= 1:
        for part, mult in squarefree_decomposition(p.monic()):
            for g in _factor_squarefree_rational(part):
                out.append((g, mult))
    out.sort(key=lambda fm: (fm[0].degree, fm[0].coeffs))
    return out


def _factor_squarefree_rational(q):
    """Monic irreducible factors of a monic squarefree rational polynomial."""
    n = q.degree
    if n == 1:
        return [q]
    d = lcm(*[c.denominator for c in q.coeffs])
    # G(x) = d^n q(x/d) is monic with integer coefficients
    G = [int(c * d ** (n - i)) for i, c in enumerate(q.coeffs)]
    factors = _factor_monic_squarefree_z(G)
    out = []
    for g in factors:
        deg = len(g) - 1
        # map back: root r of G corresponds to root r/d of q
        out.append(QPolynomial([Fraction(c, d ** (deg - i))
                                for i, c in enumerate(g)]))
    return out


def is_irreducible(p):
    if p.degree < 1:
        return False
    fs = factor_poly(p)
    return len(fs) == 1 and fs[0][1] == 1 and fs[0][0].degree == p.degree


# -- formatting / parsing --------------------------------------------------------


def format_poly(p, var="x"):
    """Human form, descending powers: 'x^2 + x - 1'."""
    if p.is_zero():
        return "0"
    parts = []
    for i in range(p.degree, -1, -1):
        c = p.coeffs[i]
        if c == 0:
            continue
        if i == 0:
            term = str(abs(c))
        else:
            xs = var if i == 1 else "%s^%d" % (var, i)
            term = xs if abs(c) == 1 else "%s*%s" % (abs(c), xs)
        if not parts:
            parts.append(term if c > 0 else "-" + term)
        else:
            parts.append(("+ " if c > 0 else "- ") + term)
    return " ".join(parts)


def parse_poly(text, var="x"):
    """Parse expressions like 'x^2 - x - 1' or '2*x^3 + 1/2' into a QPolynomial."""
    try:
        return _parse_poly(text, var)
    except (ValueError, IndexError) as exc:
        raise DomainError("malformed polynomial %r" % text) from exc


def _parse_poly(text, var):
    s = text.replace(" ", "").replace("**", "^")
    if not s:
        raise DomainError("empty polynomial")
    # split into signed terms
    terms = []
    i = 0
    cur = ""
    for ch in s:
        if ch in "+-" and cur and cur[-1] not in "+-^*/(":
            terms.append(cur)
            cur = ch
        else:
            cur += ch
    terms.append(cur)
    coeffs = {}
    for term in terms:
        if not term or term in "+-":
            raise DomainError("malformed polynomial %r" % text)
        sign = 1
        while term and term[0] in "+-":
            if term[0] == "-":
                sign = -sign
            term = term[1:]
        if var in term:
            head, _, tail = term.partition(var)
            if head in ("", "*"):
                coef = Fraction(1)
            else:
                coef = Fraction(head.rstrip("*"))
            if tail.startswith("^"):
                power = int(tail[1:])
                if power < 0:
                    raise DomainError("negative exponent in %r" % term)
            elif tail == "":
                power = 1
            else:
                raise DomainError("malformed term %r" % term)
        else:
            coef = Fraction(term)
            power = 0
        coeffs[power] = coeffs.get(power, Fraction(0)) + sign * coef
    top = max(coeffs)
    return QPolynomial([coeffs.get(i, Fraction(0)) for i in range(top + 1)])
