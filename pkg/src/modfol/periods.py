"""Numeric period integrals of eigenforms, and rank detection for the
resulting real-number collections.

An eigenform orbit (from :mod:`modfol.eigen`) determines a holomorphic
differential on the level curve once its field is embedded into the reals.
Integrating that differential along the closed loops attached to group
elements gives the classical periods.  Three layers live here:

* exact coefficients: :func:`ensure_series` extends an orbit's q-expansion
  to any order, using a dual eigenvector so that the cost of the
  coefficient at a large prime p stays near-linear in p;
* numerics: :func:`period_integral` evaluates the loop integral for a
  single group element by summing the antiderivative series at the two
  endpoints of a balanced path, and :func:`numeric_jacobian` collects the
  real parts over a whole homology basis into a :class:`PeriodVector`;
* arithmetic detection: :func:`detect_rank` finds the rank of the
  Z-module spanned by a list of real numbers via exact lattice reduction,
  with explicit accept/reject thresholds and a hard error in between.

All floating work uses mpmath with a guard margin over the requested
decimal precision; all certificates (integer relations, eigenvalue
checks) are verified exactly or against stated thresholds.
"""

import math
from fractions import Fraction
from math import gcd

from mpmath import mp

from .congruence import gamma0_contains
from .errors import (
    DomainError,
    IndeterminateRankError,
    PrecisionError,
    TruncationError,
)
from .hecke import eigenvalue_from_functional, hecke_matrix, qexp_from_primes
from .linalg import lll_reduce, unimodular_with_first_row
from .numfield import NFElement, nf_kernel

# Extra decimal digits carried internally beyond the requested precision.
_GUARD = 25

# Floor on the precision argument of detect_rank: below this the accept
# and reject thresholds are too close to random noise to mean anything.
MIN_RANK_PRECISION = 40


def required_terms(c, precision):
    """Series length needed for `precision` digits along a path whose
    group element has lower-left entry c.

    The summed terms decay like exp(-2 pi n / |c|), so matching 10**-precision
    needs |c| * precision * ln(10) / (2 pi) terms; a flat margin of 50 terms
    absorbs the slowly growing coefficient sizes.
    """
    c = abs(int(c))
    if c == 0:
        raise DomainError("degenerate path: lower-left entry is zero")
    return math.ceil(c * int(precision) * math.log(10) / (2 * math.pi)) + 50


# -- exact q-expansions ---------------------------------------------------------------


def ensure_series(space, orbit, terms):
    """Extend `orbit`'s exact q-expansion to order >= `terms` and return it.

    The list is cached on the orbit (index n holds c_n; index 0 is unused).
    Prime coefficients come from the orbit's verified eigenvalue map when
    available; new primes are evaluated through a dual eigenvector, which
    needs only a single operator column per prime.  Orbits flagged
    possibly_old are refused: their systems repeat inside the block, so a
    dual vector does not pin down one form.
    """
    if orbit.possibly_old:
        raise DomainError(
            "q-expansion is only defined for orbits that are certainly new; "
            "this one is flagged possibly_old")
    if space.N != orbit.N:
        raise DomainError(
            "space level %d does not match orbit level %d" % (space.N, orbit.N))
    terms = int(terms)
    if orbit._series is not None and len(orbit._series) > terms:
        return orbit._series
    w, j = _dual_functional(space, orbit)

    def prime_value(p):
        got = orbit.coefficient_map.get(p)
        if got is not None:
            return got
        c = eigenvalue_from_functional(space, p, w, j)
        orbit.coefficient_map[p] = c
        return c

    orbit._series = qexp_from_primes(space.N, prime_value, terms)
    return orbit._series


def _dual_functional(space, orbit):
    """A row vector w over the orbit's field with w^T T_p = c_p w^T for all
    verified primes, plus the index of a nonzero coordinate.

    The joint left kernel of the verified operators cuts out exactly this
    orbit's dual block, so any vector in it evaluates coefficients of this
    orbit alone.  The returned functional is re-checked exactly against
    every verified eigenvalue before use.
    """
    K = orbit.field
    dim = space.dim
    rows = []
    for p in sorted(orbit.coefficient_map):
        cp = orbit.coefficient_map[p]
        m = hecke_matrix(space, p)
        for i in range(dim):
            row = [K.from_rational(m[k, i]) for k in range(dim)]
            row[i] = row[i] - cp
            rows.append(row)
    kern = nf_kernel(K, rows)
    if not kern:
        raise DomainError("orbit data admits no dual eigenvector")
    w = kern[0]
    j = next(i for i, x in enumerate(w) if not x.is_zero())
    for p, cp in orbit.coefficient_map.items():
        if eigenvalue_from_functional(space, p, w, j) != cp:
            raise DomainError(
                "dual eigenvector failed verification at prime %d" % p)
    return w, j


def _embedded_series(orbit, count, digits):
    """Numeric coefficients c_1..c_count under the designated embedding,
    rounded to `digits` decimal digits; cached per digit count."""
    series = orbit._series
    if series is None or len(series) <= count:
        have = 0 if series is None else len(series) - 1
        raise TruncationError(
            "orbit carries %d q-expansion coefficients but %d are needed; "
            "call ensure_series first" % (have, count),
            required_order=count)
    cache = orbit._embedded.get(digits)
    if cache is None:
        cache = [mp.mpf(0)]
        orbit._embedded[digits] = cache
    if len(cache) > count:
        return cache
    emb = orbit.designated_embedding()
    eps = Fraction(1, 10 ** (digits + 5))
    with mp.workdps(digits + 10):
        while len(cache) <= count:
            val = series[len(cache)]
            if isinstance(val, NFElement):
                fr = emb.approx(val, eps)
            else:
                fr = Fraction(val)
            cache.append(mp.mpf(fr.numerator) / mp.mpf(fr.denominator))
    return cache


# -- period integrals -----------------------------------------------------------------


def period_integral(orbit, gamma, terms, precision):
    """Integral of the orbit's differential along the loop of `gamma`.

    Returns (value, bound): a complex number and the reported error
    estimate |c_terms| * exp(-2 pi terms / |c|).  The path runs from the
    balanced base point z0 = (-d + i)/c to gamma z0 = (a + i)/c, where both
    endpoints sit at height 1/|c|, and each endpoint is evaluated by the
    truncated antiderivative series sum c_n / n * exp(2 pi i n z).

    pre: gamma lies in the level subgroup with nonzero lower-left entry;
    the orbit's series (see ensure_series) reaches order `terms`, and
    `terms` covers required_terms(c, precision).
    """
    a, b, c, d = (int(x) for x in gamma)
    if not gamma0_contains((a, b, c, d), orbit.N):
        raise DomainError("matrix is not in the level-%d subgroup" % orbit.N)
    if c == 0:
        raise DomainError("degenerate path: lower-left entry is zero")
    precision = int(precision)
    if precision < 1:
        raise DomainError("precision must be a positive digit count")
    terms = int(terms)
    need = required_terms(c, precision)
    if terms < need:
        raise PrecisionError(
            "%d terms cannot deliver %d digits along a path with |c| = %d; "
            "%d terms are required" % (terms, precision, abs(c), need),
            required_terms=need)
    if c < 0:
        a, b, c, d = -a, -b, -c, -d
    digits = precision + _GUARD
    coeffs = _embedded_series(orbit, terms, digits)
    with mp.workdps(digits):
        i2pi = 2 * mp.pi * mp.mpc(0, 1)
        q1 = mp.exp(i2pi * mp.mpc(mp.mpf(a) / c, mp.mpf(1) / c))
        q0 = mp.exp(i2pi * mp.mpc(mp.mpf(-d) / c, mp.mpf(1) / c))
        total = mp.mpc(0)
        pow1 = mp.mpc(1)
        pow0 = mp.mpc(1)
        for n in range(1, terms + 1):
            pow1 *= q1
            pow0 *= q0
            cn = coeffs[n]
            if cn:
                total += cn / n * (pow1 - pow0)
        bound = abs(coeffs[terms]) * mp.exp(-2 * mp.pi * terms / c)
    return total, bound


class PeriodVector:
    """Real parts of one orbit's period integrals over a homology basis.

    Fields: the level, the orbit's index in its level's decomposition (or
    None when unknown), the values in basis order, a per-value count of
    digits believed correct, and their minimum as the overall estimate.
    """

    __slots__ = ("N", "orbit", "values", "value_digits", "precision_estimate")

    def __init__(self, N, orbit, values, value_digits, precision_estimate):
        self.N = int(N)
        self.orbit = None if orbit is None else int(orbit)
        self.values = tuple(values)
        self.value_digits = tuple(int(x) for x in value_digits)
        self.precision_estimate = int(precision_estimate)

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def __repr__(self):
        return ("PeriodVector(N=%d, orbit=%r, %d values, ~%d digits)"
                % (self.N, self.orbit, len(self.values),
                   self.precision_estimate))


def numeric_jacobian(orbit, basis, precision, orbit_index=None):
    """Period vector of `orbit` over a spanning list of group elements.

    `basis` may hold bare matrices or (matrix, coords) pairs as produced
    by the symbol space's homology_generators().  Each value is computed
    with exactly the term count its path requires for `precision` digits.

    pre: basis spans the cuspidal homology; the orbit's series reaches the
    largest required term count (TruncationError reports it otherwise).
    """
    precision = int(precision)
    if precision < 1:
        raise DomainError("precision must be a positive digit count")
    gammas = []
    for item in basis:
        g = item if len(item) == 4 else item[0]
        gammas.append(tuple(int(x) for x in g))
    if not gammas:
        raise DomainError("homology basis is empty")
    needs = [required_terms(g[2], precision) for g in gammas]
    top = max(needs)
    series = orbit._series
    if series is None or len(series) <= top:
        have = 0 if series is None else len(series) - 1
        raise TruncationError(
            "orbit carries %d q-expansion coefficients but %d are needed; "
            "call ensure_series first" % (have, top),
            required_order=top)
    values = []
    digits = []
    floor_err = mp.mpf(10) ** (-(precision + 5))
    for g, need in zip(gammas, needs):
        val, bound = period_integral(orbit, g, need, precision)
        values.append(val.real)
        with mp.workdps(20):
            est = int(mp.floor(-mp.log10(bound + floor_err)))
        digits.append(min(est, precision))
    return PeriodVector(orbit.N, orbit_index, values, digits, min(digits))


# -- integer-relation rank detection --------------------------------------------------


def detect_rank(values, precision):
    """Rank of the Z-module generated by the given real numbers.

    Builds the standard relation-finding lattice rows (e_i, round(10**precision
    * v_i)), reduces it exactly, and hunts for integer relations.  A candidate
    relation is accepted when its true residual is below 10**(-precision/2)
    and its coefficients stay below 10**(precision/4); it is discarded when
    the residual exceeds 10**(-precision/4); residuals in between raise
    IndeterminateRankError.  Each accepted relation eliminates one value
    through a unimodular change of generators, and the count left at the end
    is the rank.

    pre: precision >= 40 decimal digits.
    """
    if isinstance(values, PeriodVector):
        values = values.values
    precision = int(precision)
    if precision < MIN_RANK_PRECISION:
        raise DomainError(
            "rank detection needs at least %d digits, got %d"
            % (MIN_RANK_PRECISION, precision))
    items = list(values)
    with mp.workdps(precision + 2 * _GUARD):
        nums = [_as_mpf(x) for x in items]
        return _rank_step(nums, precision)


def _as_mpf(x):
    if isinstance(x, Fraction):
        return mp.mpf(x.numerator) / mp.mpf(x.denominator)
    return mp.mpf(x)


def _rank_step(v, precision):
    n = len(v)
    if n == 0:
        return 0
    accept = mp.mpf(10) ** (mp.mpf(-precision) / 2)
    reject = mp.mpf(10) ** (mp.mpf(-precision) / 4)
    cap = 10 ** (precision // 4)
    if n == 1:
        size = abs(v[0])
        if size < accept:
            return 0
        if size > reject:
            return 1
        raise IndeterminateRankError(
            "single value sits between the zero and nonzero thresholds; "
            "rerun with higher precision")
    scale = mp.mpf(10) ** precision
    rows = []
    for i, x in enumerate(v):
        rows.append([int(i == k) for k in range(n)] + [int(mp.nint(x * scale))])
    reduced = lll_reduce(rows)
    found = None
    deadband = False
    for row in reduced:
        m = row[:n]
        if max(abs(c) for c in m) > cap:
            # Rows this unbalanced exist for every input (pigeonhole on the
            # scaled column), so neither their acceptance nor their ambiguity
            # carries arithmetic information; only modest rows are candidates.
            continue
        residual = abs(mp.fsum(c * x for c, x in zip(m, v)))
        if residual < accept:
            found = m
            break
        if residual <= reject:
            deadband = True
    if found is None:
        if deadband:
            raise IndeterminateRankError(
                "integer-relation residual fell between the accept and "
                "reject thresholds; rerun with higher precision")
        return n
    g = 0
    for c in found:
        g = gcd(g, c)
    primitive = [c // g for c in found]
    change = unimodular_with_first_row(primitive)
    remaining = [mp.fsum(change[i][k] * v[k] for k in range(n))
                 for i in range(1, n)]
    return _rank_step(remaining, precision)
