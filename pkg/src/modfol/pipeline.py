"""Whole-level analysis records.

analyze_level runs the full chain (symbol space, orbit decomposition,
foliation classification) for one level and flattens everything into a
plain JSON-ready dict: curve invariants, the primes used, the cuspidal
Hecke matrices at those primes, one record per orbit, and one
classification entry per orbit.  Records round-trip through the cache
byte-exactly, and orbit_from_record rebuilds a working EigenformOrbit
from its record, so downstream consumers (period integrals, the CLI)
behave identically on fresh and cached data.

Rationals are serialized as JSON ints when integral and as exact "p/q"
strings otherwise; no floats appear in records.
"""

from fractions import Fraction

from .cache import SCHEMA_VERSION
from .congruence import curve_data
from .eigen import EigenformOrbit, auto_decompose, decompose
from .errors import DomainError
from .foliation import classify
from .hecke import cuspidal_hecke_matrix
from .modsym import ModularSymbolSpace
from .numfield import NumberField
from .polys import QPolynomial


def rat_to_json(x):
    """Fraction -> int (when integral) or exact "p/q" string."""
    f = Fraction(x)
    if f.denominator == 1:
        return int(f)
    return "%d/%d" % (f.numerator, f.denominator)


def rat_from_json(s):
    return Fraction(s)


def _element_coeffs(x):
    return [rat_to_json(c) for c in x.coeffs]


def _matrix_rows(m):
    return [[rat_to_json(m[i, j]) for j in range(m.cols)]
            for i in range(m.rows)]


def _orbit_record(index, orbit):
    return {
        "orbit": index,
        "degree": orbit.degree,
        "minpoly": [rat_to_json(c) for c in orbit.field.minpoly.coeffs],
        "defining_prime": orbit.defining_prime,
        "eigenvalue": _element_coeffs(orbit.eigenvalue),
        "eigenvector": [_element_coeffs(x) for x in orbit.eigenvector],
        "coefficient_map": {str(p): _element_coeffs(c)
                            for p, c in sorted(orbit.coefficient_map.items())},
        "multiplicity": orbit.multiplicity,
        "possibly_old": orbit.possibly_old,
    }


def classification_entry(level, index, fc):
    entry = {
        "level": level,
        "orbit": index,
        "degree": fc.degree,
        "genus": fc.genus,
        "class": fc.kind.value,
    }
    if fc.separatrix_excess is not None:
        entry["separatrix_excess"] = fc.separatrix_excess
    return entry


def analyze_level(N, primes=None):
    """Full analysis record for one level.

    With primes=None the orbit split escalates primes automatically;
    an explicit prime list is used as-is (and may raise the undecided
    split error).  Genus-0 levels yield empty orbit and classification
    lists.
    """
    N = int(N)
    space = ModularSymbolSpace(N)
    curve = curve_data(N)
    if primes is None:
        orbits = auto_decompose(space)
    else:
        orbits = decompose(space, primes)
    used = sorted({p for o in orbits for p in o.coefficient_map})
    return {
        "schema": SCHEMA_VERSION,
        "level": N,
        "curve": curve,
        "primes": used,
        "hecke": {str(p): _matrix_rows(cuspidal_hecke_matrix(space, p))
                  for p in used},
        "orbits": [_orbit_record(i, o) for i, o in enumerate(orbits)],
        "classification": [classification_entry(N, i, classify(o, curve))
                           for i, o in enumerate(orbits)],
    }


def orbit_from_record(record, index):
    """Rebuild the index-th EigenformOrbit of a level record."""
    orbits = record["orbits"]
    if not 0 <= index < len(orbits):
        raise DomainError("level %d has %d orbits; index %d is out of range"
                          % (record["level"], len(orbits), index))
    rec = orbits[index]
    field = NumberField(
        QPolynomial([rat_from_json(c) for c in rec["minpoly"]]))
    return EigenformOrbit(
        record["level"],
        field,
        rec["defining_prime"],
        field.element([rat_from_json(c) for c in rec["eigenvalue"]]),
        [field.element([rat_from_json(c) for c in coeffs])
         for coeffs in rec["eigenvector"]],
        {int(p): field.element([rat_from_json(c) for c in coeffs])
         for p, coeffs in rec["coefficient_map"].items()},
        multiplicity=rec["multiplicity"],
        possibly_old=rec["possibly_old"],
    )
