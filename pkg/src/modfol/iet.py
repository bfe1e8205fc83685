"""Interval exchange transformations with exact arithmetic.

An IET cuts [0, L) into finitely many half-open intervals and rearranges
them by a translation on each piece.  Everything here is exact: lengths
are rational numbers or elements of a real number field compared through
a designated embedding, so orbit questions (periodicity, connections
between discontinuities) are decided, never estimated.

The three dynamical entry points mirror the trichotomy the rest of the
package detects on homology: :func:`periodicity_report` settles the fully
rational case by counting unit cells, :func:`minimality_probe` runs the
Keane connection check when the lengths have rational rank at least two,
and :func:`rauzy_step` performs one step of Rauzy induction.
"""

from fractions import Fraction
from math import gcd, lcm

from .errors import DegenerateStepError, DomainError, WrongCaseError
from .foliation import JacobianModule, module_rank
from .numfield import NFElement


class IET:
    """Exchange of k intervals: lengths in domain order plus a permutation.

    ``permutation`` uses one-line notation on {1..k}: the i-th interval
    from the left is sent to slot permutation[i-1] of the rearranged
    order.  The permutation must be irreducible — no proper prefix
    {1..j} may be invariant, otherwise the map splits into two smaller
    exchanges.  Lengths are Fractions, or elements of one real number
    field together with an embedding fixing their numeric meaning (the
    largest real place by default).
    """

    __slots__ = ("lengths", "permutation", "field", "embedding",
                 "_cuts", "_shifts", "total")

    def __init__(self, lengths, permutation, embedding=None):
        perm = tuple(int(p) for p in permutation)
        k = len(perm)
        if k == 0:
            raise DomainError("an exchange needs at least one interval")
        if sorted(perm) != list(range(1, k + 1)):
            raise DomainError(
                "permutation must list each of 1..%d exactly once" % k)
        for j in range(1, k):
            if max(perm[:j]) == j:
                raise DomainError(
                    "reducible permutation: {1..%d} is invariant" % j)
        if len(lengths) != k:
            raise DomainError(
                "%d lengths against %d permutation entries" % (len(lengths), k))
        field = None
        for x in lengths:
            if isinstance(x, NFElement):
                if field is None:
                    field = x.field
                elif x.field is not field:
                    raise DomainError("lengths mix distinct number fields")
        if field is None:
            vals = tuple(_as_fraction(x) for x in lengths)
            if embedding is not None:
                raise DomainError("an embedding is only meaningful with "
                                  "number field lengths")
        else:
            if embedding is None:
                embedding = field.real_embeddings()[-1]
            elif embedding.field is not field:
                raise DomainError("embedding belongs to a different field")
            vals = tuple(x if isinstance(x, NFElement)
                         else field.from_rational(_as_fraction(x))
                         for x in lengths)
        self.lengths = vals
        self.permutation = perm
        self.field = field
        self.embedding = embedding
        for x in vals:
            if self._sign(x) <= 0:
                raise DomainError("interval lengths must be positive")
        # left endpoints in the domain, and the translation on each piece
        cuts = []
        acc = self._zero()
        for x in vals:
            cuts.append(acc)
            acc = acc + x
        self.total = acc
        starts_image = {}
        acc = self._zero()
        for slot in range(1, k + 1):
            i = perm.index(slot)
            starts_image[i] = acc
            acc = acc + vals[i]
        self._cuts = tuple(cuts)
        self._shifts = tuple(starts_image[i] - cuts[i] for i in range(k))

    def _zero(self):
        return Fraction(0) if self.field is None else self.field.from_rational(0)

    def _sign(self, x):
        if self.field is None:
            return -1 if x < 0 else (0 if x == 0 else 1)
        return self.embedding.sign(x)

    def coerce(self, x):
        """Bring a point into this exchange's arithmetic world."""
        if isinstance(x, NFElement):
            if self.field is None or x.field is not self.field:
                raise DomainError("point lies in a different field")
            return x
        x = _as_fraction(x)
        return x if self.field is None else self.field.from_rational(x)

    def interval_index(self, x):
        """0-based index of the piece containing x; x must lie in [0, total)."""
        x = self.coerce(x)
        if self._sign(x) < 0 or self._sign(self.total - x) <= 0:
            raise DomainError("point outside [0, total)")
        lo, hi = 0, len(self.lengths) - 1
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if self._sign(x - self._cuts[mid]) >= 0:
                lo = mid
            else:
                hi = mid - 1
        return lo

    def invert(self):
        """The inverse exchange (image pieces translated back)."""
        k = len(self.lengths)
        order = [self.permutation.index(s) for s in range(1, k + 1)]
        inv_lengths = [self.lengths[i] for i in order]
        inv_perm = [i + 1 for i in order]
        return IET(inv_lengths, inv_perm, embedding=self.embedding)

    def __repr__(self):
        return "IET(k=%d, permutation=%s)" % (len(self.lengths),
                                              list(self.permutation))


def _as_fraction(x):
    if isinstance(x, float):
        raise DomainError("lengths must be exact (Fraction, int, or "
                          "number field element), not float")
    return Fraction(x)


def iet_apply(T, x):
    """Image of the point x under the exchange; exact, piecewise translation."""
    x = T.coerce(x)
    return x + T._shifts[T.interval_index(x)]


def periodicity_report(T):
    """Certify the all-rational case: every orbit is periodic.

    Clearing denominators turns the exchange into a permutation of equal
    unit cells; the report carries the lcm of its cycle lengths, which is
    the global period of the map.  Irrational lengths are the wrong case.
    """
    if T.field is not None:
        raise WrongCaseError(
            "periodicity certification needs all-rational lengths")
    den = 1
    for x in T.lengths:
        den = lcm(den, x.denominator)
    cells = [int(x * den) for x in T.lengths]
    shifts = [int(w * den) for w in T._shifts]
    starts = [int(c * den) for c in T._cuts]
    m = sum(cells)
    sigma = [0] * m
    for i, n in enumerate(cells):
        for j in range(starts[i], starts[i] + n):
            sigma[j] = j + shifts[i]
    seen = [False] * m
    period = 1
    for j in range(m):
        if seen[j]:
            continue
        length = 0
        at = j
        while not seen[at]:
            seen[at] = True
            at = sigma[at]
            length += 1
        period = period * length // gcd(period, length)
    return {"periodic": True, "period_lcm": period}


def minimality_probe(T, max_steps):
    """Keane connection check for exchanges of rational rank at least two.

    Follows the forward orbit of every interior discontinuity for up to
    max_steps exact iterations and records any step that lands exactly on
    a discontinuity (a connection).  Finding none is the classical
    sufficient condition for minimality up to the probed depth.  Lengths
    of rational rank < 2 are the wrong case: such exchanges are never
    within reach of the criterion.
    """
    max_steps = int(max_steps)
    if max_steps < 1:
        raise DomainError("max_steps must be positive")
    if T.field is None:
        raise WrongCaseError(
            "rational lengths have rank 1: the connection criterion "
            "cannot apply")
    if module_rank(JacobianModule(T.field, T.lengths)) < 2:
        raise WrongCaseError(
            "lengths span a rank-<2 module: the connection criterion "
            "cannot apply")
    # sharpen the embedding once so the per-step sign checks almost never
    # need further interval refinement
    T.embedding.approx(T.field.gen(), Fraction(1, 10 ** 40))
    sign = T.embedding.sign
    cuts = T._cuts[1:]
    shifts = T._shifts
    violations = []
    for start, d in enumerate(cuts, 1):
        x = d
        for step in range(max_steps + 1):
            # one pass of signs serves both jobs: locating the piece that
            # holds x (cuts are increasing, so the index is the number of
            # interior cuts at or below x) and testing whether x IS a cut
            index = 0
            at_cut = None
            for j, c in enumerate(cuts, 1):
                s = sign(x - c)
                if s >= 0:
                    index += 1
                if s == 0:
                    at_cut = j
            if step > 0 and at_cut is not None:
                violations.append({"discontinuity": start,
                                   "after_steps": step,
                                   "hits": at_cut})
                break
            if step == max_steps:
                break
            x = x + shifts[index]
    return {"no_periodic_orbit_found": not violations,
            "keane_violations": violations}


def rauzy_step(T):
    """One step of Rauzy induction: first-return map to [0, total - m)
    where m is the smaller of the two rightmost interval lengths.

    The longer of the rightmost domain interval and the rightmost image
    interval loses length m; the permutation is rewired accordingly and
    stays irreducible.  Equal rightmost lengths leave no first-return
    exchange of the same size, so they raise DegenerateStepError.
    """
    k = len(T.lengths)
    if k < 2:
        raise DegenerateStepError("a single interval admits no induction")
    perm = T.permutation
    top = list(range(k))
    bottom = [perm.index(s) for s in range(1, k + 1)]
    alpha = top[-1]
    beta = bottom[-1]
    diff = T.lengths[alpha] - T.lengths[beta]
    s = T._sign(diff)
    if s == 0:
        raise DegenerateStepError(
            "rightmost intervals have equal length: induction degenerates")
    lengths = list(T.lengths)
    if s > 0:
        lengths[alpha] = diff
        bottom.pop()
        bottom.insert(bottom.index(alpha) + 1, beta)
    else:
        lengths[beta] = -diff
        top.pop()
        top.insert(top.index(beta) + 1, alpha)
    relabel = {old: new for new, old in enumerate(top)}
    new_lengths = [lengths[old] for old in top]
    new_perm = [0] * k
    for slot, old in enumerate(bottom, 1):
        new_perm[relabel[old]] = slot
    return IET(new_lengths, new_perm, embedding=T.embedding)
