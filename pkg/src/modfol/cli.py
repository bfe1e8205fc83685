"""Command-line driver: JSON on stdout, stable exit codes, level cache.

Subcommands: genus, decompose, classify, periods, iet, torus.  Output is
canonical JSON (sorted keys, compact separators) so repeated runs with
identical inputs produce identical bytes, with or without the cache;
--pretty switches to indented form.  Errors are also JSON, shaped
{"error": ..., "hint": ...}, with exit codes 0 (success), 2 (usage),
3 (computation failed), 4 (numerically indeterminate).  genus, decompose
and classify accept --range A..B to process a batch of levels, one JSON
line per level in ascending order, optionally on a process pool
(--jobs).  Level records are cached under $MODFOL_CACHE (default
.modfol-cache/); explicit --primes runs bypass the cache, whose files
describe the default decomposition only.
"""

import argparse
import json
import re
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from mpmath import libmp

from . import cache
from .congruence import curve_data
from .errors import (IndeterminateRankError, ModfolError, NoCuspFormsError,
                     PrecisionError, TruncationError, UndecidedSplitError)
from .foliation import (JacobianModule, TorusKind, classify_torus,
                        module_rank)
from .iet import IET, minimality_probe, periodicity_report
from .modsym import ModularSymbolSpace
from .numfield import NumberField
from .periods import (detect_rank, ensure_series, numeric_jacobian,
                      required_terms)
from .pipeline import analyze_level, orbit_from_record, rat_to_json
from .polys import QPolynomial

_USAGE_HINT = "run 'modfol --help' or 'modfol <subcommand> --help' for usage"
_DILATATION_DIGITS = 30


class _UsageError(Exception):
    """Bad command line; reported as JSON with exit code 2."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


# -- output and error plumbing ---------------------------------------------------------


def _emit(obj, pretty):
    if pretty:
        print(json.dumps(obj, sort_keys=True, indent=2))
    else:
        print(json.dumps(obj, sort_keys=True, separators=(",", ":")))


def _error_code_hint(err):
    if isinstance(err, IndeterminateRankError):
        return 4, "rerun with a higher --prec"
    if isinstance(err, PrecisionError):
        need = getattr(err, "required_terms", None)
        if need:
            return 4, "the requested precision needs %d series terms" % need
        return 4, "rerun with a higher --prec or more series terms"
    if isinstance(err, UndecidedSplitError):
        p = getattr(err, "next_prime", None)
        if p:
            return 3, "add more primes to --primes (try %d)" % p
        return 3, "add more primes to --primes"
    if isinstance(err, TruncationError):
        need = getattr(err, "required_order", None)
        if need:
            return 3, "extend the series to order %d first" % need
        return 3, "extend the series first"
    if isinstance(err, NoCuspFormsError):
        return 3, "this level has genus 0, so there are no orbits"
    return 3, "check the argument values"


def _emit_error(err, pretty):
    code, hint = _error_code_hint(err)
    _emit({"error": str(err), "hint": hint}, pretty)
    return code


# -- shared helpers ---------------------------------------------------------------------


def _level_record(N, primes=None, use_cache=True):
    """Analysis record for a level, through the cache when allowed.

    Explicit prime lists bypass the cache both ways: cached files hold
    the default (auto-escalated) decomposition only.
    """
    if primes is not None:
        return analyze_level(N, primes)
    if use_cache:
        record = cache.load(N)
        if record is not None:
            return record
    record = analyze_level(N)
    if use_cache:
        cache.store(record)
    return record


def _decompose_obj(N, primes, use_cache):
    record = _level_record(N, primes, use_cache)
    return {
        "level": record["level"],
        "genus": record["curve"]["genus"],
        "primes": record["primes"],
        "orbits": [{key: rec[key]
                    for key in ("orbit", "degree", "minpoly",
                                "defining_prime", "multiplicity",
                                "possibly_old")}
                   for rec in record["orbits"]],
    }


def _classify_entries(N, use_cache):
    record = _level_record(N, None, use_cache)
    if record["curve"]["genus"] == 0:
        raise NoCuspFormsError(
            "level %d has genus 0: no cusp forms, nothing to classify" % N)
    return record["classification"]


def _decimal(value, digits):
    """Fixed-point decimal string of a Fraction, round-half-up."""
    value = Fraction(value)
    sign = "-" if value < 0 else ""
    scaled = abs(value) * 10 ** digits
    units = scaled.numerator // scaled.denominator
    if 2 * (scaled - units) >= 1:
        units += 1
    text = str(units).rjust(digits + 1, "0")
    if digits == 0:
        return sign + text
    return sign + text[:-digits] + "." + text[-digits:]


def _mpf_fraction(x):
    num, den = libmp.to_rational(x._mpf_)
    return Fraction(int(num), int(den))


def _parse_int_list(text, what):
    try:
        return [int(part) for part in text.split(",")]
    except ValueError:
        raise _UsageError("%s must be a comma-separated integer list, "
                          "got %r" % (what, text))


def _parse_fraction(text, what):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise _UsageError("%s must be an exact rational like 3 or 5/7, "
                          "got %r" % (what, text))


def _parse_combo(text):
    """Parse one length token: rational, or polynomial in w.

    Accepts sums of terms c, c*w, c*w^k, w, w^k with rational c; returns
    a {power: Fraction} dict.
    """
    raw = text.replace(" ", "")
    if not raw:
        raise _UsageError("empty length entry")
    pieces = []
    for i, ch in enumerate(raw):
        if ch == "-" and i > 0 and raw[i - 1] not in "+-*^/":
            pieces.append("+")
        pieces.append(ch)
    combo = {}
    for term in "".join(pieces).split("+"):
        if not term:
            raise _UsageError("malformed length entry %r" % text)
        if "w" in term:
            head, _, tail = term.partition("w")
            if head in ("", "-"):
                coeff = Fraction(-1 if head else 1)
            elif head.endswith("*"):
                coeff = _parse_fraction(head[:-1], "length coefficient")
            else:
                raise _UsageError("malformed length entry %r (write c*w)"
                                  % text)
            if tail.startswith("^") and tail[1:].isdigit():
                power = int(tail[1:])
            elif tail:
                raise _UsageError("malformed length entry %r" % text)
            else:
                power = 1
            combo[power] = combo.get(power, Fraction(0)) + coeff
        else:
            combo[0] = combo.get(0, Fraction(0)) \
                + _parse_fraction(term, "length entry")
    return combo


# -- subcommand handlers ---------------------------------------------------------------


def _genus_handler(args):
    return _run_levels(args, "genus")


def _decompose_handler(args):
    if args.primes is not None:
        if args.range is not None:
            raise _UsageError("--primes cannot be combined with --range")
        if args.level is None:
            raise _UsageError("--primes needs an explicit level N")
        primes = _parse_int_list(args.primes, "--primes")
        _emit(_decompose_obj(args.level, primes, False), args.pretty)
        return 0
    return _run_levels(args, "decompose")


def _classify_handler(args):
    if args.orbit is not None:
        if args.range is not None:
            raise _UsageError("--orbit cannot be combined with --range")
        entries = _classify_entries(args.level, not args.no_cache)
        if not 0 <= args.orbit < len(entries):
            raise _UsageError("level %d has %d orbits; --orbit %d is out "
                              "of range" % (args.level, len(entries),
                                            args.orbit))
        _emit(entries[args.orbit], args.pretty)
        return 0
    return _run_levels(args, "classify")


def _periods_handler(args):
    record = _level_record(args.level, None, not args.no_cache)
    if not 0 <= args.orbit < len(record["orbits"]):
        raise _UsageError("level %d has %d orbits; --orbit %d is out of "
                          "range" % (args.level, len(record["orbits"]),
                                     args.orbit))
    orbit = orbit_from_record(record, args.orbit)
    space = ModularSymbolSpace(args.level)
    basis = space.homology_generators()
    top = max(required_terms(g[2], args.prec) for g, _ in basis)
    ensure_series(space, orbit, top)
    vector = numeric_jacobian(orbit, basis, args.prec,
                              orbit_index=args.orbit)
    detected = detect_rank(vector, args.prec)
    exact = module_rank(JacobianModule(orbit.field, list(orbit.eigenvector)))
    _emit({
        "level": args.level,
        "orbit": args.orbit,
        "precision": args.prec,
        "values": [_decimal(_mpf_fraction(v), d)
                   for v, d in zip(vector.values, vector.value_digits)],
        "value_digits": list(vector.value_digits),
        "precision_estimate": vector.precision_estimate,
        "detected_rank": detected,
        "exact_rank": exact,
        "rank_agreement": detected == exact,
    }, args.pretty)
    return 0


def _iet_handler(args):
    combos = [_parse_combo(tok) for tok in args.lengths.split(",")]
    perm = _parse_int_list(args.perm, "--perm")
    if args.poly is None:
        if any(set(c) - {0} for c in combos):
            raise _UsageError("lengths use the generator w; pass its "
                              "defining polynomial with --poly")
        lengths = [c.get(0, Fraction(0)) for c in combos]
        table = IET(lengths, perm)
        report = periodicity_report(table)
    else:
        coeffs = [_parse_fraction(c, "--poly coefficient")
                  for c in args.poly.split(",")]
        try:
            field = NumberField(QPolynomial(coeffs))
        except ModfolError as err:
            raise _UsageError("bad --poly: %s" % err)
        lengths = []
        for combo in combos:
            dense = [Fraction(0)] * (max(combo) + 1)
            for power, coeff in combo.items():
                dense[power] = coeff
            lengths.append(field.element(dense))
        table = IET(lengths, perm)
        report = minimality_probe(table, args.steps)
    _emit(report, args.pretty)
    return 0


def _torus_handler(args):
    entries = _parse_int_list(args.matrix, "--matrix")
    if len(entries) != 4:
        raise _UsageError("--matrix needs exactly four entries a,b,c,d")
    result = classify_torus(entries)
    obj = {"kind": result.kind.value, "trace": result.trace}
    if result.kind is TorusKind.ANOSOV:
        approx = result.embedding.approx(
            result.dilatation, Fraction(1, 10 ** (_DILATATION_DIGITS + 5)))
        obj["dilatation"] = _decimal(approx, _DILATATION_DIGITS)
        obj["dilatation_minpoly"] = [
            rat_to_json(c) for c in result.dilatation.field.minpoly.coeffs]
    _emit(obj, args.pretty)
    return 0


# -- batch plumbing ---------------------------------------------------------------------


def _batch_eval(task):
    """One level of a batch; returns (level, json-ready object, failed)."""
    kind, N, use_cache = task
    try:
        return N, _single_level(kind, N, use_cache), False
    except ModfolError as err:
        _, hint = _error_code_hint(err)
        return N, {"level": N, "error": str(err), "hint": hint}, True


def _single_level(kind, N, use_cache):
    if kind == "genus":
        return curve_data(N)
    if kind == "decompose":
        return _decompose_obj(N, None, use_cache)
    return _classify_entries(N, use_cache)


def _run_levels(args, kind):
    """Dispatch one level or a --range batch for genus/decompose/classify."""
    use_cache = not getattr(args, "no_cache", True)
    if args.range is None:
        if args.level is None:
            raise _UsageError("give a level N or --range A..B")
        _emit(_single_level(kind, args.level, use_cache), args.pretty)
        return 0
    if args.level is not None:
        raise _UsageError("give either a level N or --range A..B, not both")
    match = re.fullmatch(r"(\d+)\.\.(\d+)", args.range)
    if not match:
        raise _UsageError("--range must look like A..B, got %r" % args.range)
    lo, hi = int(match.group(1)), int(match.group(2))
    if not 1 <= lo <= hi:
        raise _UsageError("--range needs 1 <= A <= B")
    tasks = [(kind, N, use_cache) for N in range(lo, hi + 1)]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_batch_eval, tasks))
    else:
        results = [_batch_eval(task) for task in tasks]
    any_failed = False
    for _, obj, failed in sorted(results, key=lambda item: item[0]):
        any_failed = any_failed or failed
        _emit(obj, args.pretty)
    return 3 if any_failed else 0


# -- parser -----------------------------------------------------------------------------


def _build_parser():
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--pretty", action="store_true",
                        help="indented JSON instead of one compact line")
    batch = argparse.ArgumentParser(add_help=False)
    batch.add_argument("--range", metavar="A..B",
                       help="process every level in the range, one JSON "
                            "line per level")
    batch.add_argument("--jobs", type=int, default=1, metavar="J",
                       help="worker processes for --range (default 1)")
    cached = argparse.ArgumentParser(add_help=False)
    cached.add_argument("--no-cache", action="store_true",
                        help="skip the on-disk level cache")

    parser = _Parser(prog="modfol",
                     description="Eigenform orbits of modular curves, their "
                                 "foliation classes, period lattices, and "
                                 "interval exchange probes.")
    subs = parser.add_subparsers(dest="command", parser_class=_Parser)

    genus = subs.add_parser("genus", parents=[shared, batch],
                            help="curve invariants of a level")
    genus.add_argument("level", type=int, nargs="?")
    genus.set_defaults(handler=_genus_handler)

    decompose = subs.add_parser("decompose", parents=[shared, batch, cached],
                                help="orbit decomposition of a level")
    decompose.add_argument("level", type=int, nargs="?")
    decompose.add_argument("--primes", metavar="P1,P2,...",
                           help="use exactly these primes (bypasses the "
                                "cache)")
    decompose.set_defaults(handler=_decompose_handler)

    classify = subs.add_parser("classify", parents=[shared, batch, cached],
                               help="foliation class of each orbit")
    classify.add_argument("level", type=int, nargs="?")
    classify.add_argument("--orbit", type=int, metavar="K",
                          help="report a single orbit")
    classify.set_defaults(handler=_classify_handler)

    periods = subs.add_parser("periods", parents=[shared, cached],
                              help="period vector and rank of one orbit")
    periods.add_argument("level", type=int)
    periods.add_argument("--orbit", type=int, required=True, metavar="K")
    periods.add_argument("--prec", type=int, default=60, metavar="D",
                         help="working precision in digits (default 60)")
    periods.set_defaults(handler=_periods_handler)

    iet = subs.add_parser("iet", parents=[shared],
                          help="periodicity or minimality report of an "
                               "interval exchange")
    iet.add_argument("--lengths", required=True, metavar="L1,L2,...",
                     help="exact rationals like 1/2, or field elements "
                          "like 1+2*w (then pass --poly)")
    iet.add_argument("--perm", required=True, metavar="S1,S2,...",
                     help="one-line permutation, 1-based")
    iet.add_argument("--poly", metavar="C0,C1,...",
                     help="defining polynomial of w, ascending "
                          "coefficients")
    iet.add_argument("--steps", type=int, default=10000, metavar="S",
                     help="orbit steps for the minimality probe "
                          "(default 10000)")
    iet.set_defaults(handler=_iet_handler)

    torus = subs.add_parser("torus", parents=[shared],
                            help="trace trichotomy of an SL(2,Z) matrix")
    torus.add_argument("--matrix", required=True, metavar="A,B,C,D")
    torus.set_defaults(handler=_torus_handler)
    return parser


def main(argv=None):
    try:
        args = _build_parser().parse_args(argv)
    except _UsageError as err:
        _emit({"error": str(err), "hint": _USAGE_HINT}, False)
        return 2
    if getattr(args, "handler", None) is None:
        _emit({"error": "no subcommand given", "hint": _USAGE_HINT}, False)
        return 2
    try:
        return args.handler(args)
    except _UsageError as err:
        _emit({"error": str(err), "hint": _USAGE_HINT}, args.pretty)
        return 2
    except ModfolError as err:
        return _emit_error(err, args.pretty)


if __name__ == "__main__":
    sys.exit(main())
