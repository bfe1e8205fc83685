"""Hecke operators on weight-2 modular symbols, by two independent routes.

Route one acts on Manin symbols through a finite family of integer matrices
of determinant p (enumerated directly from the inequality description
a > b >= 0, d > c >= 0).  Route two acts on paths through the p+1 degeneracy
cosets z -> (z+i)/p and z -> pz, decomposing the images by continued
fractions.  The two must produce identical matrices; the tests enforce it,
and the path route additionally powers single-column eigenvalue extraction
for large p, where building the whole matrix would be wasteful.

Also provides prime sieving and the standard multiplicative/recursive
extension of prime eigenvalues to a full coefficient sequence:

    c(p^(k+1)) = c(p) c(p^k) - p c(p^(k-1))   if p does not divide the level
    c(p^(k+1)) = c(p) c(p^k)                  if p divides the level
    c(mn) = c(m) c(n)                         for coprime m, n
"""

from fractions import Fraction
from math import gcd, isqrt

from .errors import DomainError
from .linalg import QMatrix


# -- primes ---------------------------------------------------------------------


def is_prime(n):
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def next_prime(n):
    n += 1
    while not is_prime(n):
        n += 1
    return n


def primes_up_to(m):
    if m < 2:
        return []
    sieve = bytearray([1]) * (m + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, isqrt(m) + 1):
        if sieve[p]:
            sieve[p * p:: p] = bytearray(len(sieve[p * p:: p]))
    return [i for i, b in enumerate(sieve) if b]


# -- determinant-p family --------------------------------------------------------


def merel_family(p):
    """All integer matrices (a, b, c, d), det = p, a > b >= 0, d > c >= 0."""
    if not is_prime(p):
        raise DomainError("expected a prime, got %d" % p)
    fam = [(1, 0, c, p) for c in range(p)]
    fam += [(p, b, 0, 1) for b in range(p)]
    # interior matrices: all entries positive; bc = ad - p forces a + d <= p + 1
    for a in range(2, p + 1):
        for d in range(2, p + 2 - a):
            e = a * d - p
            if e <= 0:
                continue
            b = 1
            while b * b <= e:
                if e % b == 0:
                    c = e // b
                    if b < a and c < d:
                        fam.append((a, b, c, d))
                    if c != b and c < a and b < d:
                        fam.append((a, c, b, d))
                b += 1
    fam.sort()
    return fam


# -- operators on the symbol quotient ------------------------------------------------


def hecke_matrix(space, p):
    """T_p on the full symbol quotient via the determinant-p family."""
    N = space.N
    fam = merel_family(p)
    dim = space.dim
    cols = []
    for sym in space.free_symbols:
        c, d = space.p1.reps[sym]
        acc = [Fraction(0)] * dim
        for (ma, mb, mc, md) in fam:
            c2 = (c * ma + d * mc) % N
            d2 = (c * mb + d * md) % N
            if gcd(gcd(c2, d2), N) != 1:
                continue          # possible only when p divides N
            for r, v in enumerate(space.symbol_coords(c2, d2)):
                if v:
                    acc[r] += v
        cols.append(acc)
    return QMatrix.from_rows(
        [[cols[j][i] for j in range(dim)] for i in range(dim)])


def _coset_images(x, p, with_scaling):
    """Images of a point of P^1(Q) under the p+1 degeneracy maps."""
    out = []
    for i in range(p):
        if x is None:
            out.append(None)
        else:
            out.append((x + i) / p)
    if with_scaling:
        out.append(None if x is None else p * x)
    return out


def hecke_column_paths(space, p, j):
    """Column j of T_p (image of the j-th basis symbol), via paths."""
    if not is_prime(p):
        raise DomainError("expected a prime, got %d" % p)
    sym = space.free_symbols[j]
    a, b, c, d = space.lift(*space.p1.reps[sym])
    alpha = None if d == 0 else Fraction(b, d)      # image of 0
    beta = None if c == 0 else Fraction(a, c)       # image of infinity
    with_scaling = space.N % p != 0
    acc = [Fraction(0)] * space.dim
    for xa, xb in zip(_coset_images(alpha, p, with_scaling),
                      _coset_images(beta, p, with_scaling)):
        for r, v in enumerate(space.path(xa, xb)):
            acc[r] += v
    return acc


def hecke_matrix_paths(space, p):
    """T_p on the full symbol quotient via the degeneracy-coset route."""
    dim = space.dim
    cols = [hecke_column_paths(space, p, j) for j in range(dim)]
    return QMatrix.from_rows(
        [[cols[j][i] for j in range(dim)] for i in range(dim)])


def cuspidal_hecke_matrix(space, p):
    """T_p restricted to the cuspidal subspace, in the cuspidal basis."""
    return space.restrict_to_cuspidal(hecke_matrix(space, p))


def eigenvalue_from_functional(space, p, row, j):
    """Eigenvalue c_p given a left eigenvector `row` of the T_p family.

    row is a length-dim sequence over Q or a number field satisfying
    row^T T_q = c_q row^T for all primes q; j indexes a coordinate with
    row[j] != 0.  Only one matrix column is computed, by the path route,
    so this stays cheap for large p.
    """
    col = hecke_column_paths(space, p, j)
    num = None
    for ri, ci in zip(row, col):
        if ci == 0:
            continue
        term = ri * ci
        num = term if num is None else num + term
    if num is None:
        num = 0 * row[j]
    return num / row[j]


# -- coefficient sequences -----------------------------------------------------------


def qexp_from_primes(N, prime_value, terms):
    """Coefficient list c[0..terms] with c[0] = 0, c[1] = 1, built from
    prime eigenvalues by the standard recursion and multiplicativity.

    prime_value(p) supplies c_p; values may be Fractions or number field
    elements (anything closed under +, *, and int multiples).
    """
    c = [0] * (terms + 1)
    if terms < 1:
        return c
    c[1] = 1
    for p in primes_up_to(terms):
        cp = prime_value(p)
        c[p] = cp
        pk = p * p
        prev, cur = c[1], cp
        while pk <= terms:
            if N % p == 0:
                nxt = cp * cur
            else:
                nxt = cp * cur - p * prev
            c[pk] = nxt
            prev, cur = cur, nxt
            pk *= p
    # multiplicative fill: split off the largest power of the smallest prime
    for m in range(2, terms + 1):
        sp = _smallest_prime_factor(m)
        q = sp
        rest = m // sp
        while rest % sp == 0:
            rest //= sp
            q *= sp
        if rest > 1:
            c[m] = c[q] * c[rest]
    return c


def _smallest_prime_factor(m):
    if m % 2 == 0:
        return 2
    f = 3
    while f * f <= m:
        if m % f == 0:
            return f
        f += 2
    return m
