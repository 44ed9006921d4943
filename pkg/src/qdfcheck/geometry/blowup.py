"""Affine charts of blowups along complete-intersection centers.

A center is a list of generators ``g_1..g_k``. In chart ``j`` the generator
``g_j`` becomes the exceptional coordinate ``e`` and every other ``g_i`` is
rewritten as ``g_i' * e``. How that rewrite is realized depends on the shape
of ``g_i``:

* a bare variable ``x`` is replaced by ``x' * e`` with a fresh ``x'``;
* a generator ``c*x + r`` whose variable ``x`` occurs nowhere else in the
  center is solved for ``x``;
* anything else keeps its variables and contributes a relation
  ``g_i - w * e`` with a fresh ``w``.

New names follow the usual convention: the base name plus a stage index
(``s -> s1``, then ``s1 -> s2``), and ``w`` for relation variables. In its
own chart a bare variable keeps its name, so the exceptional divisor of the
``t`` chart is ``t = 0``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations

from ..errors import UnsupportedCenterError
from ..ideal import Ideal, ideal_membership, saturate
from ..poly import PolyRing, Polynomial, VariableSet, divide_out, exact_quotient


@dataclass(frozen=True)
class CenterGenerator:
    poly: Polynomial
    kind: str  # "var", "solvable" or "relation"
    var: str = None
    coeff: object = None
    rest: Polynomial = None


@dataclass(frozen=True)
class ChartTransform:
    """One chart of a blowup.

    ``substitution`` sends source variables to polynomials in ``ring``;
    ``relations`` are extra equations of the chart (``g_i - w*e``).
    """

    index: int
    label: str
    source: PolyRing
    ring: PolyRing
    substitution: dict
    exceptional: Polynomial
    relations: tuple
    center: tuple

    def apply(self, p: Polynomial) -> Polynomial:
        return p.subs(self.substitution, ring=self.ring)

    def lift(self, p: Polynomial) -> Polynomial:
        """Same polynomial viewed in the chart ring (untouched variables only)."""
        return p.to_ring(self.ring)

    def __str__(self):
        subs = ", ".join(f"{k}={v}" for k, v in self.substitution.items())
        rel = "; ".join(f"{r}=0" for r in self.relations)
        return f"E: {self.label}=0 | {subs}" + (f" | {rel}" if rel else "")


def _stem(name: str) -> str:
    return re.sub(r"\d+$", "", name)


def _index(name: str) -> int:
    m = re.search(r"(\d+)$", name)
    return int(m.group(1)) if m else 0


def classify_center(center) -> list:
    gens = [g for g in center]
    if not gens:
        raise UnsupportedCenterError("empty center")
    supports = [set(g.variables_used()) for g in gens]
    out = []
    for i, g in enumerate(gens):
        if g.is_zero or g.is_constant():
            raise UnsupportedCenterError(f"center generator {g} is constant")
        others = set().union(*(supports[j] for j in range(len(gens)) if j != i))
        chosen = None
        for name in g.ring.names:
            if name not in supports[i] or name in others:
                continue
            if g.degree(name) != 1:
                continue
            linear = [(m, c) for m, c in g.items() if m[g.ring.index[name]]]
            if len(linear) != 1 or sum(linear[0][0]) != 1:
                continue
            chosen = (name, linear[0][1])
            break
        if chosen is None:
            out.append(CenterGenerator(g, "relation"))
            continue
        name, c = chosen
        x = g.ring.var(name)
        rest = g - x.scale(c)
        if rest.is_zero and c == g.ring.field.one:
            out.append(CenterGenerator(g, "var", name, c, rest))
        else:
            out.append(CenterGenerator(g, "solvable", name, c, rest))
    return out


def _fresh(taken: set, name: str) -> str:
    out = name
    while out in taken:
        out = out + "_"
    taken.add(out)
    return out


def blowup_charts(center, F, stage: int = None):
    """Charts of the blowup along ``center`` with the total transforms of ``F``.

    Returns a list of ``(ChartTransform, equations)`` where ``equations`` are
    the exact substituted ``F`` followed by the chart relations.
    """
    if isinstance(center, Ideal):
        center = list(center.generators)
    center = list(center)
    F = list(F)
    src = center[0].ring
    K = src.field
    if len(center) == 1:
        T = ChartTransform(0, str(center[0]), src, src, {}, center[0], (), tuple(center))
        return [(T, list(F))]
    kinds = classify_center(center)
    if stage is None:
        used = set().union(*(g.variables_used() for g in center))
        stage = 1 + max((_index(n) for n in used), default=0)
    charts = []
    for j, gj in enumerate(kinds):
        taken = set(src.names)
        names = list(src.names)
        rename = {}  # source variable -> new variable name (same slot)
        extra = []  # relation variables appended at the end
        rel_of = {}
        for i, gi in enumerate(kinds):
            if gi.kind == "relation":
                if i != j:
                    w = _fresh(taken, "w" if stage == 1 else f"w{stage}")
                    rel_of[i] = w
                    extra.append(w)
                continue
            if i == j and gi.kind == "var":
                continue
            taken.discard(gi.var)
            rename[gi.var] = _fresh(taken, f"{_stem(gi.var)}{stage}")
        names = [rename.get(n, n) for n in names] + extra
        ring = PolyRing(VariableSet(tuple(names)), K, src.order)
        # exceptional coordinate in the chart ring
        if gj.kind == "var":
            e = ring.var(gj.var)
        elif gj.kind == "solvable":
            e = ring.var(rename[gj.var])
        else:
            e = gj.poly.to_ring(ring)
        subst = {}
        relations = []
        for i, gi in enumerate(kinds):
            if i == j:
                if gj.kind == "solvable":
                    # c*x + r = E  =>  x = (E - r)/c
                    r = gi.rest.to_ring(ring)
                    subst[gi.var] = (e - r).scale(K.inv(gi.coeff))
                continue
            if gi.kind == "var":
                subst[gi.var] = ring.var(rename[gi.var]) * e
            elif gi.kind == "solvable":
                r = gi.rest.to_ring(ring)
                subst[gi.var] = (ring.var(rename[gi.var]) * e - r).scale(K.inv(gi.coeff))
            else:
                relations.append(gi.poly.to_ring(ring) - ring.var(rel_of[i]) * e)
        label = gj.var if gj.kind == "var" else str(gj.poly)
        T = ChartTransform(j, label, src, ring, subst, e, tuple(relations), tuple(center))
        eqs = [T.apply(f) for f in F] + relations
        charts.append((T, eqs))
    return charts


def center_images_divisible(T: ChartTransform) -> bool:
    """Each center generator pulls back into ``<e>`` modulo the chart relations."""
    e = T.exceptional
    rel = Ideal(list(T.relations) + [e], T.ring)
    for g in T.center:
        img = T.apply(g)
        if T.relations:
            if not ideal_membership(img, rel):
                return False
        elif exact_quotient(img, e) is None:
            return False
    return True


def strict_transform(total, exceptional: Polynomial) -> Ideal:
    total = list(total)
    return saturate(Ideal(total, exceptional.ring), exceptional)


def presentation(total, exceptional: Polynomial):
    """Total equations with the largest power of ``e`` removed from each."""
    out = []
    for f in total:
        rest, _ = divide_out(f, exceptional)
        out.append(rest)
    return out


def presentation_is_saturated(pres, exceptional: Polynomial) -> bool:
    """Whether ``<pres> : e^inf == <pres>``.

    ``<pres>`` always lies between the total transform and its saturation,
    so equality here certifies that ``pres`` generates the strict transform.
    """
    I = Ideal(pres, exceptional.ring)
    S = saturate(I, exceptional)
    return all(ideal_membership(g, I) for g in S.generators)


@dataclass
class StrictPresentation:
    """Generators of a strict transform and how they were certified."""

    equations: list
    exceptional: Polynomial
    method: str  # "divided", "basis-search" or "basis"
    complete_intersection: bool
    ideal: Ideal = None


def strict_presentation(total, exceptional: Polynomial, relations=(), search_limit: int = 12) -> StrictPresentation:
    """A certified generating set of the strict transform.

    First the powers of ``e`` are divided out of each equation. If that set
    is not saturated, small elements of the saturation's basis are tried in
    place of the non-relation equations; each candidate is accepted only
    after ``<candidate> == saturation`` is checked by mutual membership.
    Without a hit the full basis is returned (not a complete intersection).
    """
    total = list(total)
    relations = list(relations)
    pres = presentation(total, exceptional)
    if presentation_is_saturated(pres, exceptional):
        return StrictPresentation(pres, exceptional, "divided", True)
    S = strict_transform(total, exceptional)
    G = sorted(S.groebner().elements, key=lambda g: (len(g), g.total_degree()))
    need = len(total) - len(relations)
    gens = S.generators
    for combo in combinations(G[:search_limit], need):
        cand = list(combo) + relations
        I = Ideal(cand, exceptional.ring)
        if all(ideal_membership(g, I) for g in gens):
            return StrictPresentation(cand, exceptional, "basis-search", True, S)
    return StrictPresentation(list(G), exceptional, "basis", False, S)
