"""The nine acceptance criteria, one test each, with a PASS/FAIL line apiece."""

from __future__ import annotations

import subprocess
import sys
import time
from pathlib import Path

from qdfcheck import model
from qdfcheck.claims.charts import chart_entries
from qdfcheck.claims.checks import _component_claims
from qdfcheck.fields import GF
from qdfcheck.geometry import bundle_atlas, singular_locus_ideal, verify_decomposition
from qdfcheck.ideal import krull_dimension
from qdfcheck.runner import RunConfig, run_claims

ROOT = Path(__file__).resolve().parents[1]


def _run(patterns, field=None):
    start = time.perf_counter()
    report = run_claims(patterns, RunConfig(field=field))
    return {r.id: r for r in report.results}, time.perf_counter() - start


def _statuses(results):
    return ", ".join(f"{k}={v.status}" for k, v in sorted(results.items()))


def test_criterion_1_birational_identity(acceptance_line):
    res, secs = _run(["ID-BIRATIONAL"])
    r = res["ID-BIRATIONAL"]
    ok = r.status == "pass" and r.field == "qq" and secs < 1.0
    acceptance_line(1, ok, f"ID-BIRATIONAL {r.status} over {r.field} in {secs:.2f}s (limit 1s)")
    assert ok


def test_criterion_2_singular_locus_components(acceptance_line):
    K = GF(10007)
    slowest = 0.0
    failures = []
    for ch in bundle_atlas(K):
        start = time.perf_counter()
        sing = singular_locus_ideal([ch.dehomogenize(model.special_equation(K))], ch)
        rep = verify_decomposition(sing, _component_claims(ch, K))
        dim = krull_dimension(sing)
        slowest = max(slowest, time.perf_counter() - start)
        if not rep.ok or dim != 1:
            failures.append(f"{ch.name}: ok={rep.ok} dim={dim}")
    res, _ = _run(["SL-SPECIAL-COMPONENTS", "SL-SPECIAL-DIM"])
    ok = not failures and slowest < 60 and all(r.status == "pass" for r in res.values())
    acceptance_line(
        2, ok,
        f"{_statuses(res)}; nine charts, slowest {slowest:.2f}s (limit 60s)" + (f"; {failures}" if failures else ""),
    )
    assert ok


def test_criterion_3_incidence_points(acceptance_line):
    exact, secs_exact = _run(["PTS-INCIDENCE"], field="qq-i")
    modular, secs_mod = _run(["PTS-INCIDENCE"])
    secs = secs_exact + secs_mod
    a, b = exact["PTS-INCIDENCE"], modular["PTS-INCIDENCE"]
    ok = a.status == b.status == "pass" and a.field == "qq-i" and secs < 30
    acceptance_line(3, ok, f"PTS-INCIDENCE {a.status} over {a.field}, {b.status} over {b.field}; {secs:.2f}s (limit 30s)")
    assert ok


def test_criterion_4_chart_suite(acceptance_line):
    res, secs = _run(["CHART-*"])
    expected = {e["id"]: e["expect"]["verdict"] for _, e in chart_entries() if e["id"] in res}
    failed = sorted(k for k, r in res.items() if r.status != "pass")
    ok = not failed and secs < 600
    detail = f"{len(res) - len(failed)}/{len(res)} chart claims pass in {secs:.1f}s (limit 600s)"
    for k in failed:
        detail += f"; {k} expected {expected.get(k, 'smooth')}, got {res[k].status} with witness {res[k].witness}"
    acceptance_line(4, ok, detail)
    assert ok, detail


def test_criterion_5_normal_forms(acceptance_line):
    res, secs = _run(["NF-NORMAL1-RES", "NF-NORMAL2-FACTOR", "NF-QX"])
    ok = all(r.status == "pass" and r.field == "qq" for r in res.values()) and secs < 10
    acceptance_line(5, ok, f"{_statuses(res)} over qq in {secs:.2f}s (limit 10s)")
    assert ok


def test_criterion_6_quadric_bundle(acceptance_line):
    res, secs = _run(["QB-*"])
    exact = [res[k] for k in ("QB-MATRIX", "QB-DET-FORM", "QB-DEGREE-8", "QB-TANGENCY-IDENT")]
    count = res["QB-TANGENCY-1632"]
    ok = (
        all(r.status == "pass" and r.field == "qq" for r in exact)
        and count.status == "pass"
        and count.field == "fp:10007"
        and secs < 300
    )
    acceptance_line(6, ok, f"{_statuses(res)}; count: {count.detail.split(';')[0]}; {secs:.2f}s (limit 300s)")
    assert ok


def test_criterion_7_parameter_counts(acceptance_line):
    res, secs = _run(["PARAM-*"])
    ok = all(r.status == "pass" for r in res.values()) and secs < 1
    acceptance_line(7, ok, f"{_statuses(res)}: {res['PARAM-53'].detail}; {res['PARAM-34'].detail}")
    assert ok


PROPERTY_TESTS = [
    "tests/test_groebner.py::test_basis_is_idempotent",
    "tests/test_groebner.py::test_s_polynomials_reduce_to_zero",
    "tests/test_ideal.py::test_saturation_is_idempotent",
    "tests/test_ideal.py::test_nullstellensatz_agrees_with_enumeration",
    "tests/test_geometry.py::test_singular_points_match_components_over_f5",
]


def test_criterion_8_property_suites(acceptance_line):
    start = time.perf_counter()
    proc = subprocess.run(
        [sys.executable, "-m", "pytest", "-q", "-p", "no:cacheprovider", *PROPERTY_TESTS],
        cwd=ROOT, capture_output=True, text=True,
    )
    secs = time.perf_counter() - start
    tail = proc.stdout.strip().splitlines()[-1] if proc.stdout.strip() else proc.stderr[-200:]
    ok = proc.returncode == 0 and secs < 300
    acceptance_line(8, ok, f"property suites: {tail} ({secs:.1f}s, limit 300s)")
    assert ok, proc.stdout[-2000:]


def test_criterion_9_determinism(acceptance_line, tmp_path):
    outs = []
    for k in range(2):
        path = tmp_path / f"run{k}.json"
        subprocess.run(
            [sys.executable, "-m", "qdfcheck", "run", "--report", "json-like-structured", "--seed", "0",
             "--out", str(path)],
            cwd=ROOT, capture_output=True,
        )
        outs.append(path.read_bytes())
    ok = outs[0] == outs[1] and len(outs[0]) > 0
    acceptance_line(9, ok, f"two structured reports of {len(outs[0])} bytes are {'identical' if ok else 'different'}")
    assert ok
