"""Hecke eigenform orbits: the cuspidal space split into Galois orbits.

The commuting Hecke operators act on the 2g-dimensional cuspidal space.
The star involution splits that space into two halves of dimension g,
and on the +1 half each eigensystem appears exactly once when the level
is prime.  The decomposition therefore refines the +1 half into joint
generalized eigenspaces of the supplied operators; a block is certified
to be a single orbit once the eigenvalue of some supplied prime has
minimal polynomial of degree equal to the block dimension, in which
case that polynomial defines the eigenvalue field K and the eigenvector
can be rescaled into K^g with first nonzero coordinate 1.

Composite levels can carry eigensystems repeated across copies coming
from lower levels; such systems cannot be separated by operators at
primes coprime to the level.  Blocks whose dimension exceeds the field
degree are therefore reported as one orbit with ``possibly_old=True``
and a multiplicity, after verifying that every supplied operator really
does act as a scalar on the chosen eigenvector.
"""

from .errors import (
    DimensionError,
    DomainError,
    MultiplicityError,
    UndecidedSplitError,
)
from .hecke import cuspidal_hecke_matrix, is_prime, next_prime
from .linalg import QMatrix
from .numfield import NumberField, nf_kernel
from .polys import QPolynomial, factor_poly, is_irreducible


class EigenformOrbit:
    """One Galois orbit of eigenforms at level N.

    Fields: the eigenvalue field ``field`` (of degree ``degree``), the
    ``defining_prime`` p* whose eigenvalue generates the field, that
    ``eigenvalue`` as the field generator, an ``eigenvector`` in the +1
    star eigenspace (length genus, first nonzero coordinate 1), and a
    ``coefficient_map`` of exactly verified eigenvalues per prime.
    ``multiplicity`` counts how often the eigensystem repeats inside its
    block (1 unless the level is composite and the system may come from
    a lower level, in which case ``possibly_old`` is set).
    """

    __slots__ = ("N", "field", "degree", "defining_prime", "eigenvalue",
                 "eigenvector", "coefficient_map", "multiplicity",
                 "possibly_old", "_series", "_embedded")

    def __init__(self, N, field, defining_prime, eigenvalue, eigenvector,
                 coefficient_map, multiplicity=1, possibly_old=False):
        self.N = N
        self.field = field
        self.degree = field.degree
        self.defining_prime = defining_prime
        self.eigenvalue = eigenvalue
        self.eigenvector = tuple(eigenvector)
        self.coefficient_map = dict(coefficient_map)
        self.multiplicity = multiplicity
        self.possibly_old = possibly_old
        self._series = None      # q-expansion cache, filled by periods
        self._embedded = {}      # numeric coefficient cache, keyed by digits

    def designated_embedding(self):
        """The real place used for all numeric work on this orbit.

        Fixed, deterministic choice: the smallest real root of the field's
        defining polynomial.  Other choices give Galois-conjugate forms with
        the same rational invariants.
        """
        return self.field.real_embeddings()[0]

    def __repr__(self):
        return ("EigenformOrbit(N=%d, degree=%d, defining_prime=%d%s)"
                % (self.N, self.degree, self.defining_prime,
                   ", possibly_old" if self.possibly_old else ""))


def eigen_field(poly):
    """Number field defined by a monic irreducible rational polynomial."""
    if not isinstance(poly, QPolynomial):
        raise DomainError("eigen_field expects a QPolynomial")
    if poly.degree < 1 or poly.coeffs[-1] != 1:
        raise DomainError("defining polynomial must be monic of degree >= 1")
    if not is_irreducible(poly):
        raise DomainError("defining polynomial is reducible")
    return NumberField(poly)


def rescale_eigenvector(T, lam):
    """The eigenvector of T for lam, normalised at its first nonzero entry.

    T is a square rational matrix; lam, an element of a number field K,
    must be an eigenvalue whose eigenspace over K is one-dimensional
    (equivalently rank(T - lam*I) = n - 1).  Returns the unique
    eigenvector x in K^n whose first nonzero coordinate equals 1, so the
    result is invariant under rescaling and canonical for the K-line.
    """
    if T.rows != T.cols:
        raise DimensionError("rescale_eigenvector needs a square matrix")
    field = lam.field
    n = T.rows
    rows = [[T[i, j] - lam if i == j else T[i, j] for j in range(n)]
            for i in range(n)]
    kernel = nf_kernel(field, rows)
    if not kernel:
        raise DomainError("value is not an eigenvalue of the matrix")
    if len(kernel) > 1:
        raise MultiplicityError(
            "eigenspace has dimension %d > 1; eigenvalue is not simple"
            % len(kernel))
    vec = kernel[0]
    lead = next(i for i, x in enumerate(vec) if not x.is_zero())
    inv = vec[lead].inverse()
    out = tuple(x * inv for x in vec)
    assert all(_row_dot(T, i, out, field) == lam * out[i] for i in range(n))
    return out


def decompose(space, primes):
    """Split the cuspidal space of ``space`` into eigenform orbits.

    ``primes`` is a nonempty collection of primes not dividing the
    level.  Orbits come back sorted by field degree, then by the trace
    of the eigenvalue at the smallest supplied prime.  If two orbits
    agree at every supplied prime, an UndecidedSplitError names the next
    prime worth adding.
    """
    N = space.N
    ps = sorted({int(p) for p in primes})
    if not ps:
        raise DomainError("at least one prime is required")
    for p in ps:
        if not is_prime(p):
            raise DomainError("%d is not prime" % p)
        if N % p == 0:
            raise DomainError(
                "prime %d divides the level %d; orbit separation needs "
                "primes coprime to the level" % (p, N))
    if space.genus == 0:
        return []

    plus = plus_basis_matrix(space)
    tplus = {p: _restrict_to_span(plus, cuspidal_hecke_matrix(space, p))
             for p in ps}

    blocks = [QMatrix.identity(space.genus)]
    for p in ps:
        refined = []
        for block in blocks:
            mat = _restrict_to_span(block, tplus[p])
            factors = factor_poly(QPolynomial(mat.charpoly()))
            if len(factors) == 1:
                refined.append(block)
                continue
            for poly, mult in factors:
                primary = _matrix_power(_poly_at_matrix(poly, mat), mult)
                blk = block * _columns_matrix(primary.kernel())
                refined.append(blk)
        blocks = refined
    assert sum(b.cols for b in blocks) == space.genus

    orbits = [_orbit_from_block(space, block, tplus, ps) for block in blocks]
    p0 = ps[0]
    orbits.sort(key=lambda o: (o.degree,
                               o.coefficient_map[p0].trace(),
                               o.field.minpoly.coeffs,
                               o.coefficient_map[p0].coeffs))
    return orbits


def auto_decompose(space, limit=25):
    """decompose() with automatic prime escalation.

    Starts from the smallest prime coprime to the level and, on every
    undecided split, adds the suggested next prime; once ``limit``
    primes have been tried the error propagates.
    """
    p = 2
    while space.N % p == 0:
        p = next_prime(p)
    ps = [p]
    while True:
        try:
            return decompose(space, ps)
        except UndecidedSplitError as err:
            if len(ps) >= limit or err.next_prime is None:
                raise
            ps.append(err.next_prime)


def plus_basis_matrix(space):
    """Columns: basis of the +1 star eigenspace, in cuspidal coordinates."""
    return _columns_matrix(space.cuspidal_plus_basis())


def plus_hecke_matrix(space, p):
    """Hecke operator at p restricted to the +1 star eigenspace."""
    return _restrict_to_span(plus_basis_matrix(space),
                             cuspidal_hecke_matrix(space, p))


# -- internals ------------------------------------------------------------------


def _orbit_from_block(space, block, tplus, ps):
    dim = block.cols
    mats = {}
    charfac = {}
    defining = None
    for p in ps:
        mat = _restrict_to_span(block, tplus[p])
        factors = factor_poly(QPolynomial(mat.charpoly()))
        assert len(factors) == 1, "refined block must be primary"
        mats[p] = mat
        charfac[p] = factors[0][0]
        if defining is None and charfac[p].degree == dim:
            defining = p
    if defining is not None:
        return _new_orbit(space, block, mats, ps, defining, charfac[defining])
    if _is_prime_level(space.N):
        raise UndecidedSplitError(
            "a %d-dimensional block is not generated by any supplied "
            "eigenvalue; distinct orbits share all supplied primes -- "
            "try adding prime %d" % (dim, _next_split_prime(ps, space.N)),
            next_prime=_next_split_prime(ps, space.N))
    return _old_orbit(space, block, mats, ps, charfac)


def _new_orbit(space, block, mats, ps, p_star, minpoly):
    field = NumberField(minpoly)
    lam = field.gen()
    local = rescale_eigenvector(mats[p_star], lam)
    coeffs = {}
    lead = next(i for i, x in enumerate(local) if not x.is_zero())
    for p in ps:
        c = _scalar_action(mats[p], local, lead, field)
        assert c is not None, "commuting operator must act as a scalar"
        coeffs[p] = c
    assert coeffs[p_star] == lam
    vec = _lift_through(block, local, field)
    return EigenformOrbit(space.N, field, p_star, lam, vec, coeffs)


def _old_orbit(space, block, mats, ps, charfac):
    dim = block.cols
    best = max(q.degree for q in charfac.values())
    p_star = min(p for p in ps if charfac[p].degree == best)
    field = NumberField(charfac[p_star])
    lam = field.gen()
    mult, rem = divmod(dim, field.degree)
    assert rem == 0, "primary block dimension must be a multiple of the degree"
    m = mats[p_star]
    rows = [[m[i, j] - lam if i == j else m[i, j] for j in range(dim)]
            for i in range(dim)]
    kernel = nf_kernel(field, rows)
    assert kernel, "field generator must be an eigenvalue on its block"
    local = kernel[0]
    lead = next(i for i, x in enumerate(local) if not x.is_zero())
    inv = local[lead].inverse()
    local = [x * inv for x in local]
    coeffs = {}
    for p in ps:
        c = _scalar_action(mats[p], local, lead, field)
        if c is None:
            raise UndecidedSplitError(
                "block mixes eigensystems that agree at all supplied primes; "
                "try adding prime %d" % _next_split_prime(ps, space.N),
                next_prime=_next_split_prime(ps, space.N))
        coeffs[p] = c
    assert coeffs[p_star] == lam
    vec = _lift_through(block, local, field)
    return EigenformOrbit(space.N, field, p_star, lam, vec, coeffs,
                          multiplicity=mult, possibly_old=True)


def _scalar_action(mat, vec, lead, field):
    """The scalar c with mat*vec = c*vec, or None if vec is not eigen.

    ``vec`` must have vec[lead] = 1; entries of ``mat`` are rational.
    """
    image = [_row_dot(mat, i, vec, field) for i in range(mat.rows)]
    c = image[lead]
    for img, x in zip(image, vec):
        if img != c * x:
            return None
    return c


def _row_dot(mat, i, vec, field):
    total = field.zero()
    for j, x in enumerate(vec):
        a = mat[i, j]
        if a:
            total = total + a * x
    return total


def _lift_through(block, local, field):
    """Map block coordinates to ambient ones, renormalised to lead with 1."""
    out = []
    for i in range(block.rows):
        s = field.zero()
        for j, x in enumerate(local):
            b = block[i, j]
            if b:
                s = s + b * x
        out.append(s)
    lead = next(i for i, x in enumerate(out) if not x.is_zero())
    inv = out[lead].inverse()
    return tuple(x * inv for x in out)


def _columns_matrix(vectors):
    """Matrix whose columns are the given equal-length vectors."""
    n = len(vectors[0])
    return QMatrix.from_rows([[v[i] for v in vectors] for i in range(n)])


def _restrict_to_span(basis, mat):
    """Matrix of ``mat`` on the column span of ``basis``.

    ``basis`` must have independent columns spanning a mat-invariant
    subspace; returns the small matrix M with mat * basis = basis * M.
    """
    image = mat * basis
    _, pivot_rows = basis.transpose().rref()
    sub = QMatrix.from_rows([basis.row(i) for i in pivot_rows])
    rhs = QMatrix.from_rows([image.row(i) for i in pivot_rows])
    small = sub.solve(rhs)
    if basis * small != image:
        raise DomainError("column span is not invariant under the operator")
    return small


def _poly_at_matrix(poly, mat):
    """Evaluate a rational polynomial at a square matrix (Horner)."""
    n = mat.rows
    out = QMatrix.zeros(n, n)
    ident = QMatrix.identity(n)
    for c in reversed(poly.coeffs):
        out = out * mat
        if c:
            out = out + ident.scale(c)
    return out


def _matrix_power(mat, e):
    out = mat
    for _ in range(e - 1):
        out = out * mat
    return out


def _is_prime_level(N):
    return is_prime(N)


def _next_split_prime(ps, N):
    q = next_prime(ps[-1])
    while N % q == 0:
        q = next_prime(q)
    return q
