"""Singular loci, component decompositions and point sets."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from ..errors import NotZeroDimensionalError
from ..ideal import (
    Ideal,
    count_distinct_points,
    intersect_all,
    krull_dimension,
    radical_membership,
)
from ..poly import Polynomial, determinant


def jacobian_matrix(F):
    names = F[0].ring.names
    return [[f.diff(n) for n in names] for f in F]


def jacobian_minors(F, size: int):
    """All ``size x size`` minors of the Jacobian matrix of ``F``."""
    J = jacobian_matrix(F)
    n = len(J[0])
    out = []
    for rows in combinations(range(len(J)), size):
        for cols in combinations(range(n), size):
            m = determinant([[J[r][c] for c in cols] for r in rows])
            if not m.is_zero:
                out.append(m)
    return out


def singular_locus_ideal(F, chart=None, codim: int = None) -> Ideal:
    """``F`` together with the maximal minors of its Jacobian matrix.

    ``codim`` defaults to ``len(F)``, i.e. ``F`` is taken as a complete
    intersection presentation.
    """
    F = [f for f in F if not f.is_zero]
    if not F:
        raise ValueError("no equations")
    size = len(F) if codim is None else codim
    return Ideal(list(F) + jacobian_minors(F, size), F[0].ring)


@dataclass
class SubschemeClaim:
    label: str
    ideal: Ideal
    expected_dim: int = None


@dataclass
class DecompositionReport:
    ok: bool
    witness: Polynomial = None
    reason: str = ""
    components: list = field(default_factory=list)


def verify_decomposition(sing: Ideal, components) -> DecompositionReport:
    """Whether ``V(sing)`` is the union of the claimed components.

    Components whose ideal is the unit ideal (absent from the chart) are
    skipped. Both containments are checked by radical membership.
    """
    present = [c for c in components if not c.ideal.is_unit()]
    labels = [c.label for c in present]
    if not present:
        if sing.is_unit():
            return DecompositionReport(True, components=labels)
        return DecompositionReport(False, sing.generators[0], "singular locus nonempty but no component claimed")
    union = intersect_all([c.ideal for c in present])
    # every point of a component is singular
    for c in present:
        for g in sing.generators:
            if not radical_membership(g, c.ideal):
                return DecompositionReport(False, g, f"does not vanish on {c.label}", labels)
    # every singular point lies on some component
    for h in union.generators:
        if not radical_membership(h, sing):
            return DecompositionReport(False, h, "vanishes on the components but not on the singular locus", labels)
    return DecompositionReport(True, components=labels)


@dataclass
class PointSetReport:
    ok: bool
    found: int
    expected: int
    witness: object = None
    reason: str = ""


def verify_point_set(I: Ideal, points) -> PointSetReport:
    """Whether ``V(I)`` is exactly the given set of points.

    Each point must be a zero of every generator, and the number of distinct
    points of ``V(I)`` (the length of its zero-dimensional radical) must match.
    """
    pts = list(dict.fromkeys(tuple(p) for p in points))
    if I.is_unit():
        return PointSetReport(not pts, 0, len(pts), pts[0] if pts else None, "empty intersection" if pts else "")
    if krull_dimension(I) != 0:
        raise NotZeroDimensionalError("point set ideal is not zero-dimensional")
    K = I.ring.field
    for p in pts:
        for g in I.generators:
            if not K.is_zero(g.evaluate(p)):
                return PointSetReport(False, -1, len(pts), p, f"point is not a zero of {g}")
    n = count_distinct_points(I)
    if n != len(pts):
        return PointSetReport(False, n, len(pts), n, f"{n} distinct points, {len(pts)} listed")
    return PointSetReport(True, n, len(pts))
