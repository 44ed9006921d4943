"""Blowup chart suites driven by the shipped manifest."""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .. import model
from ..fields import field_from_label
from ..geometry.blowup import blowup_charts, center_images_divisible, strict_presentation
from ..geometry.charts import bundle_chart
from ..geometry.singular import verify_point_set
from ..geometry.smooth import hessian_rank_at_point, smoothness_certificate
from ..ideal import (
    Ideal,
    count_distinct_points,
    krull_dimension,
    radical_membership,
    rational_points,
    saturate,
)
from .base import Outcome


def load_manifest() -> dict:
    text = resources.files("qdfcheck.data").joinpath("chart_claims.json").read_text(encoding="utf-8")
    return json.loads(text)


def suites() -> list:
    return load_manifest()["suites"]


def chart_entries():
    """``(suite, entry)`` for every chart in the manifest."""
    for suite in suites():
        for entry in suite["charts"]:
            yield suite, entry


def find_entry(chart_id: str):
    for suite, entry in chart_entries():
        if entry["id"] == chart_id:
            return suite, entry
    raise KeyError(chart_id)


@dataclass
class ComputedChart:
    transform: object
    total: list
    presentation: object
    ambient_chart: object  # the bundle chart the suite starts from
    lift: object  # bundle polynomials -> total transforms in this chart


def _ambient(suite, field_label):
    """Ambient equation, its ring, and a map from bundle polynomials into it."""
    amb = suite["ambient"]
    K = field_from_label(field_label)
    if "parent" in amb:
        parent = compute_chart(amb["parent"], field_label)
        eqs = list(parent.presentation.equations)
        T = parent.transform
        prev = parent.lift

        def lift(p, T=T, prev=prev):
            return T.apply(prev(p))

        return eqs, T.ring, parent.ambient_chart, lift, T.exceptional
    base, fiber = amb["chart"]
    ch = bundle_chart(base, fiber, K)
    f = ch.dehomogenize(model.special_equation(K))
    return [f], ch.ring, ch, ch.dehomogenize, None


@lru_cache(maxsize=None)
def compute_suite(name: str, field_label: str):
    suite = next(s for s in suites() if s["name"] == name)
    eqs, ring, ch, lift, _ = _ambient(suite, field_label)
    center = [ring(c) for c in suite["center"]]
    out = []
    for T, total in blowup_charts(center, eqs):
        out.append((T, total))
    return out, ch, lift


@lru_cache(maxsize=None)
def compute_chart(chart_id: str, field_label: str) -> ComputedChart:
    suite, entry = find_entry(chart_id)
    charts, ch, lift = compute_suite(suite["name"], field_label)
    T, total = charts[entry["index"]]
    pres = strict_presentation(total, T.exceptional, T.relations)

    def chart_lift(p, T=T, lift=lift):
        return T.apply(lift(p))

    return ComputedChart(T, total, pres, ch, chart_lift)


def _fmt(polys):
    return [str(p) for p in polys]


def check_chart(chart_id: str, field_label: str, seed: int = 0) -> Outcome:
    suite, entry = find_entry(chart_id)
    expect = entry["expect"]
    c = compute_chart(chart_id, field_label)
    T = c.transform
    R = T.ring
    if not center_images_divisible(T):
        return Outcome(False, ["center generator not divisible by the exceptional coordinate"], str(T))
    pres = c.presentation
    excluded = R(entry["excluded"]) if entry.get("excluded") else None
    cert = smoothness_certificate(pres.equations, along=T.exceptional, excluded=excluded)
    if cert.verdict == "resource-limited":
        return Outcome(None, [cert.detail], "resource-limited")
    detail = f"{T}; strict transform: {', '.join(_fmt(pres.equations))} [{pres.method}]"
    bad = Ideal(list(cert.basis), R) if not cert.smooth else None
    if expect["verdict"] == "smooth":
        if cert.smooth:
            return Outcome(True, [], detail)
        dim = krull_dimension(bad)
        return Outcome(False, _fmt(cert.basis) + [f"dim={dim}"], detail + "; singular on the exceptional divisor")
    if cert.smooth:
        return Outcome(False, ["criterion ideal is <1>"], detail + "; expected singular points, found none")
    if expect["verdict"] == "odp":
        return _check_odp(expect, cert, bad, pres, R, detail)
    if expect["verdict"] == "singular-curve":
        return _check_curve(expect, bad, c, detail)
    raise ValueError(f"unknown verdict {expect['verdict']!r}")


def _check_odp(expect, cert, bad, pres, R, detail) -> Outcome:
    if krull_dimension(bad) != 0:
        return Outcome(False, _fmt(cert.basis), detail + "; singular locus is not finite")
    n = count_distinct_points(bad)
    if n != expect["points"]:
        return Outcome(False, _fmt(cert.basis) + [f"points={n}"], detail)
    on = R(expect["on"])
    if not radical_membership(on, bad):
        return Outcome(False, [str(on)], detail + "; singular points off the expected locus")
    pts = rational_points(bad)
    if len(pts) != n:
        return Outcome(False, [f"only {len(pts)} of {n} points are rational"], detail + "; field lacks the points")
    ranks = []
    for p in pts:
        h = hessian_rank_at_point(pres.equations, p, threshold=expect["rank"])
        ranks.append(h.rank)
        if h.rank != expect["rank"]:
            coords = ", ".join(f"{a}={R.field.format(b)}" for a, b in zip(R.names, p))
            return Outcome(False, [f"({coords})", f"rank={h.rank}", str(h.quadratic)], detail)
    return Outcome(True, [], detail + f"; {n} points, Hessian ranks {ranks}")


def _check_curve(expect, bad, c, detail) -> Outcome:
    R = c.transform.ring
    dim = krull_dimension(bad)
    if dim != expect["dim"]:
        return Outcome(False, _fmt(bad.groebner().elements) + [f"dim={dim}"], detail)
    locus = Ideal([R(g) for g in expect["locus"]], R)
    for g in locus.generators:
        if not radical_membership(g, bad):
            return Outcome(False, [str(g)], detail + "; singular locus is not the expected curve")
    for g in bad.groebner().elements:
        if not radical_membership(g, locus):
            return Outcome(False, [str(g)], detail + "; singular locus is not the expected curve")
    meets = expect.get("meets")
    if meets:
        K = R.field
        gens = [c.lift(g) for g in model.component_ideal_gens(meets["component"], K)]
        proper = saturate(Ideal(gens, R), c.transform.exceptional)
        inter = proper + locus
        n = count_distinct_points(inter)
        if n != meets["points"]:
            return Outcome(False, [f"{meets['component']} meets the curve in {n} points"], detail)
        on = R(meets["on"])
        if not radical_membership(on, inter):
            return Outcome(False, [str(on)], detail + "; meeting points off the expected locus")
        pts = rational_points(inter)
        report = verify_point_set(inter, pts)
        if not report.ok:
            return Outcome(False, [report.reason], detail)
    return Outcome(True, [], detail + f"; singular along a curve of dimension {dim}")


def check_suite(name: str, field_label: str, seed: int = 0) -> Outcome:
    """Every chart of one suite; fails on the first failing chart."""
    suite = next(s for s in suites() if s["name"] == name)
    limited = None
    parts = []
    for entry in suite["charts"]:
        o = check_chart(entry["id"], field_label, seed)
        if o.passed is False:
            return Outcome(False, [entry["id"]] + o.witness, o.detail)
        if o.passed is None:
            limited = Outcome(None, [entry["id"]] + o.witness, o.detail)
        parts.append(f"{entry['id']}: {entry['expect']['verdict']}")
    return limited or Outcome(True, [], "; ".join(parts))
