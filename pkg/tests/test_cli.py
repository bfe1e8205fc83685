"""End-to-end CLI tests: golden outputs, exit codes, cache determinism."""

import io
import contextlib
import json
import subprocess
import sys

import pytest

from modfol import cache
from modfol.cli import _error_code_hint, main
from modfol.errors import (DomainError, IndeterminateRankError,
                           NoCuspFormsError, PrecisionError,
                           TruncationError, UndecidedSplitError,
                           WrongCaseError)


@pytest.fixture(autouse=True)
def isolated_cache(tmp_path, monkeypatch):
    monkeypatch.setenv("MODFOL_CACHE", str(tmp_path / "cache"))


def run(*argv):
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = main(list(argv))
    return code, buf.getvalue()


def run_json(*argv):
    code, out = run(*argv)
    return code, json.loads(out)


# -- golden outputs ---------------------------------------------------------------------


def test_genus_golden():
    code, obj = run_json("genus", "11")
    assert code == 0
    assert obj == {"N": 11, "mu": 12, "nu2": 0, "nu3": 0, "nu_inf": 2,
                   "genus": 1}


def test_genus_is_one_compact_line():
    code, out = run("genus", "37")
    assert code == 0
    assert out.count("\n") == 1 and " " not in out


def test_torus_parabolic_golden_bytes():
    code, out = run("torus", "--matrix", "1,1,0,1")
    assert code == 0
    assert out == '{"kind":"parabolic_strebel","trace":2}\n'


def test_torus_anosov():
    code, obj = run_json("torus", "--matrix", "2,1,1,1")
    assert code == 0
    assert obj["kind"] == "anosov" and obj["trace"] == 3
    assert obj["dilatation_minpoly"] == [1, -3, 1]
    assert obj["dilatation"].startswith("2.61803398874989484820458683436")


def test_torus_negative_trace_dilatation():
    code, obj = run_json("torus", "--matrix=-2,1,1,-1")
    assert code == 0
    assert obj["kind"] == "anosov" and obj["trace"] == -3
    assert obj["dilatation"].startswith("-0.3819660112501051517954131656")


def test_torus_finite_order():
    code, obj = run_json("torus", "--matrix", "0,-1,1,0")
    assert (code, obj) == (0, {"kind": "finite_order", "trace": 0})


def test_classify_23_matches_specified_shape():
    code, obj = run_json("classify", "23")
    assert code == 0
    assert obj == [{"level": 23, "orbit": 0, "degree": 2, "genus": 2,
                    "class": "pseudo_anosov"}]
    code, single = run_json("classify", "23", "--orbit", "0")
    assert code == 0 and single == obj[0]


def test_classify_11_and_37_strebel():
    assert run_json("classify", "11")[1][0]["class"] == "strebel"
    entries = run_json("classify", "37")[1]
    assert [e["class"] for e in entries] == ["strebel", "strebel"]
    assert [e["orbit"] for e in entries] == [0, 1]


def test_decompose_23():
    code, obj = run_json("decompose", "23")
    assert code == 0
    assert obj["genus"] == 2 and obj["primes"] == [2]
    assert obj["orbits"] == [{"orbit": 0, "degree": 2, "minpoly": [-1, 1, 1],
                              "defining_prime": 2, "multiplicity": 1,
                              "possibly_old": False}]


def test_decompose_explicit_primes_agree_with_auto():
    assert run("decompose", "23", "--primes", "2")[1] \
        == run("decompose", "23")[1]


def test_decompose_genus_zero():
    code, obj = run_json("decompose", "13")
    assert code == 0
    assert obj == {"level": 13, "genus": 0, "primes": [], "orbits": []}


# -- cache determinism -------------------------------------------------------------------


def test_cold_warm_nocache_bytes_identical(tmp_path, monkeypatch):
    monkeypatch.setenv("MODFOL_CACHE", str(tmp_path / "fresh"))
    cold = run("decompose", "23")
    assert (tmp_path / "fresh" / "level-23.bin").exists()
    warm = run("decompose", "23")
    bare = run("decompose", "23", "--no-cache")
    assert cold == warm == bare


def test_classify_warm_path_bytes_identical():
    cold = run("classify", "37")
    warm = run("classify", "37")
    assert cold == warm


def test_corrupt_cache_recomputes(tmp_path, monkeypatch):
    monkeypatch.setenv("MODFOL_CACHE", str(tmp_path / "c2"))
    cold = run("decompose", "11")
    path = cache.record_path(11)
    blob = bytearray(open(path, "rb").read())
    blob[16] ^= 0xFF
    open(path, "wb").write(bytes(blob))
    assert cache.load(11) is None
    assert run("decompose", "11") == cold


def test_pretty_same_object():
    code, out = run("classify", "23", "--pretty")
    assert code == 0 and "\n  " in out
    assert json.loads(out) == run_json("classify", "23")[1]


# -- periods ----------------------------------------------------------------------------


def test_periods_level_11():
    code, obj = run_json("periods", "11", "--orbit", "0", "--prec", "45")
    assert code == 0
    assert obj["detected_rank"] == 1 and obj["exact_rank"] == 1
    assert obj["rank_agreement"] is True
    assert obj["value_digits"] == [45, 45]
    assert obj["precision_estimate"] == 45
    v0, v1 = obj["values"]
    assert v0.startswith("-1.26920930427955342168879461675454730521949224")
    assert len(v0.split(".")[1]) == 45
    assert abs(float(v0) - 2 * float(v1)) < 1e-12


def test_periods_orbit_out_of_range():
    code, obj = run_json("periods", "11", "--orbit", "3", "--prec", "45")
    assert code == 2 and "out of range" in obj["error"]


def test_periods_precision_floor():
    code, obj = run_json("periods", "11", "--orbit", "0", "--prec", "20")
    assert code == 3 and "error" in obj


# -- iet --------------------------------------------------------------------------------


def test_iet_rational_periodicity():
    code, obj = run_json("iet", "--lengths", "1/2,1/3,1/6", "--perm",
                         "3,2,1")
    assert (code, obj) == (0, {"periodic": True, "period_lcm": 6})


def test_iet_golden_ratio_minimal():
    code, obj = run_json("iet", "--lengths", "1,w", "--perm", "2,1",
                         "--poly=-1,-1,1", "--steps", "2000")
    assert code == 0
    assert obj == {"no_periodic_orbit_found": True, "keane_violations": []}


def test_iet_connection_detected():
    code, obj = run_json("iet", "--lengths", "w,1,w", "--perm", "3,2,1",
                         "--poly=-1,-1,1", "--steps", "50")
    assert code == 0
    assert obj["no_periodic_orbit_found"] is False
    assert obj["keane_violations"] == [
        {"discontinuity": 1, "after_steps": 1, "hits": 1},
        {"discontinuity": 2, "after_steps": 2, "hits": 2},
    ]


def test_iet_field_symbol_requires_poly():
    code, obj = run_json("iet", "--lengths", "1/2,w", "--perm", "2,1")
    assert code == 2 and "--poly" in obj["error"]


def test_iet_rational_lengths_in_field_mode_rejected():
    code, obj = run_json("iet", "--lengths", "1/2,1/2", "--perm", "2,1",
                         "--poly=-1,-1,1")
    assert code == 3 and "error" in obj


def test_iet_bad_length_token():
    code, obj = run_json("iet", "--lengths", "1/2,zebra", "--perm", "2,1")
    assert code == 2


# -- batches ----------------------------------------------------------------------------


def test_range_matches_singles():
    code, out = run("genus", "--range", "11..14")
    assert code == 0
    singles = "".join(run("genus", str(n))[1] for n in range(11, 15))
    assert out == singles


def test_range_parallel_matches_serial():
    serial = run("decompose", "--range", "11..14")
    parallel = run("decompose", "--range", "11..14", "--jobs", "3")
    assert serial == parallel == (0, serial[1])


def test_range_reports_per_level_errors():
    code, out = run("classify", "--range", "12..13")
    assert code == 3
    lines = [json.loads(line) for line in out.splitlines()]
    assert [line["level"] for line in lines] == [12, 13]
    assert all("error" in line for line in lines)


def test_range_usage_errors():
    assert run("genus", "11", "--range", "12..13")[0] == 2
    assert run("genus", "--range", "13..11")[0] == 2
    assert run("genus", "--range", "11-13")[0] == 2
    assert run("genus")[0] == 2


# -- exit codes and error JSON ------------------------------------------------------------


def test_no_subcommand_is_usage_error():
    code, obj = run_json()
    assert code == 2 and "hint" in obj


def test_usage_error_emits_json():
    code, obj = run_json("torus", "--matrix", "1,1,0")
    assert code == 2 and set(obj) == {"error", "hint"}


def test_computation_error_emits_json():
    code, obj = run_json("torus", "--matrix", "1,2,3,4")
    assert code == 3 and set(obj) == {"error", "hint"}


def test_nonprime_rejected_with_code_3():
    code, obj = run_json("decompose", "37", "--primes", "4")
    assert code == 3 and "prime" in obj["error"]


def test_error_code_mapping():
    assert _error_code_hint(IndeterminateRankError("x"))[0] == 4
    assert _error_code_hint(PrecisionError("x", required_terms=99)) \
        == (4, "the requested precision needs 99 series terms")
    code, hint = _error_code_hint(UndecidedSplitError("x", next_prime=7))
    assert code == 3 and "7" in hint
    assert _error_code_hint(TruncationError("x", required_order=12))[0] == 3
    assert _error_code_hint(NoCuspFormsError("x"))[0] == 3
    assert _error_code_hint(WrongCaseError("x"))[0] == 3
    assert _error_code_hint(DomainError("x"))[0] == 3


def test_module_entry_point(tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "modfol.cli", "torus", "--matrix", "1,1,0,1"],
        capture_output=True, text=True, cwd=tmp_path)
    assert proc.returncode == 0
    assert proc.stdout == '{"kind":"parabolic_strebel","trace":2}\n'
