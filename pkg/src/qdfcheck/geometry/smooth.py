"""Smoothness certificates and Hessian ranks at singular points."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import ReductionError, ResourceLimitExceeded
from ..ideal import Ideal, krull_dimension, saturate
from ..poly import Polynomial
from .singular import jacobian_minors


@dataclass
class SmoothnessCertificate:
    """Outcome of the Jacobian criterion on a presented chart.

    ``verdict`` is ``smooth``, ``singular`` or ``resource-limited``. For a
    singular verdict ``singular_ideal`` holds the Groebner basis of the
    criterion ideal, which cuts out the bad locus.
    """

    verdict: str
    codimension: int = None
    complete_intersection: bool = None
    singular_ideal: Ideal = None
    basis: tuple = ()
    excluded: Polynomial = None
    along: Polynomial = None
    detail: str = ""

    @property
    def smooth(self) -> bool:
        return self.verdict == "smooth"


def criterion_ideal(F, codim: int, excluded=None, along=None) -> Ideal:
    ring = F[0].ring
    gens = list(F) + jacobian_minors(F, codim)
    if along is not None:
        gens.append(along)
    I = Ideal(gens, ring)
    if excluded is not None:
        I = saturate(I, excluded)
    return I


def smoothness_certificate(F, chart=None, excluded: Polynomial = None, along: Polynomial = None, codim: int = None):
    """Jacobian-criterion check of ``V(F)``.

    With ``along`` the check is restricted to the hypersurface ``along = 0``
    (typically an exceptional divisor); with ``excluded`` the locus
    ``excluded = 0`` is removed by saturation. ``smooth`` is reported only
    when the criterion ideal is the unit ideal.
    """
    F = [f for f in F if not f.is_zero]
    try:
        if codim is None:
            codim = F[0].ring.nvars - krull_dimension(Ideal(F))
        I = criterion_ideal(F, codim, excluded, along)
        G = I.groebner()
    except ResourceLimitExceeded as exc:
        return SmoothnessCertificate("resource-limited", codim, detail=str(exc))
    ci = len(F) == codim
    if G.is_unit():
        return SmoothnessCertificate("smooth", codim, ci, None, G.elements, excluded, along)
    return SmoothnessCertificate("singular", codim, ci, I, G.elements, excluded, along)


@dataclass
class HessianReport:
    rank: int
    nvars: int
    threshold: int
    eliminated: tuple = ()
    quadratic: Polynomial = None
    odp: bool = field(init=False)

    def __post_init__(self):
        self.odp = self.rank >= self.threshold


def _linear_part(f: Polynomial):
    return {m: c for m, c in f.items() if sum(m) == 1}


def _solve_quadratic_order(eq: Polynomial, name: str) -> Polynomial:
    """``phi`` with ``eq(name=phi) = O(3)``, from an equation linear in ``name``."""
    ring = eq.ring
    x = ring.var(name)
    a = eq.coeff(x.leading_term()[0])
    rest = eq - x.scale(a)
    inv = ring.field.neg(ring.field.inv(a))
    phi = rest.truncate(1).scale(inv)
    for _ in range(2):
        phi = rest.subs({name: phi}).truncate(2).scale(inv)
    return phi


def hessian_rank_at_point(F, point, threshold: int = None) -> HessianReport:
    """Rank of the quadratic part of the local equation at ``point``.

    Equations with a nonzero linear part are used to eliminate one variable
    each, to second order. Exactly one equation (up to a scalar) must remain;
    its degree-2 part is the quadratic form whose rank is returned. The ODP
    threshold defaults to the number of remaining variables.
    """
    F = [f for f in F if not f.is_zero]
    ring = F[0].ring
    K = ring.field
    pt = [K.from_int(a) if isinstance(a, int) else a for a in point]
    shift = {n: ring.var(n) + ring.constant(c) for n, c in zip(ring.names, pt)}
    eqs = []
    for f in F:
        g = f.subs(shift)
        if not K.is_zero(g.constant_coeff()):
            raise ReductionError(f"point is not on {f} = 0")
        eqs.append(g.truncate(2))
    eliminated = []
    while True:
        pick = None
        for k, g in enumerate(eqs):
            lin = _linear_part(g)
            if lin:
                m = min(lin, key=lambda e: e.index(1))
                pick = (k, ring.names[m.index(1)])
                break
        if pick is None:
            break
        k, name = pick
        phi = _solve_quadratic_order(eqs.pop(k), name)
        eqs = [g.subs({name: phi}).truncate(2) for g in eqs]
        eliminated.append(name)
    local = [n for n in ring.names if n not in eliminated]
    remaining = [g for g in eqs if not g.is_zero]
    if not remaining and not eqs:
        raise ReductionError("point is smooth: every equation has a linear part")
    if not remaining:
        return HessianReport(0, len(local), threshold if threshold is not None else len(local), tuple(eliminated), ring.zero)
    q = remaining[0]
    for g in remaining[1:]:
        lm, lc = q.leading_term()
        if not (g - q.scale(K.div(g.coeff(lm), lc))).is_zero:
            raise ReductionError("more than one independent equation remains at the point")
    idx = [ring.index[n] for n in local]
    M = [[K.zero] * len(idx) for _ in idx]
    half = K.inv(K.from_int(2))
    for m, c in q.items():
        pos = [a for a, i in enumerate(idx) if m[i]]
        if len(pos) == 1:
            M[pos[0]][pos[0]] = c
        else:
            a, b = pos
            M[a][b] = M[b][a] = K.mul(c, half)
    r = matrix_rank(K, M)
    return HessianReport(r, len(local), threshold if threshold is not None else len(local), tuple(eliminated), q)


def matrix_rank(K, M) -> int:
    M = [list(row) for row in M]
    rank = 0
    ncols = len(M[0]) if M else 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(M)) if not K.is_zero(M[r][col])), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        inv = K.inv(M[rank][col])
        for r in range(len(M)):
            if r != rank and not K.is_zero(M[r][col]):
                f = K.mul(M[r][col], inv)
                M[r] = [K.sub(a, K.mul(f, b)) for a, b in zip(M[r], M[rank])]
        rank += 1
    return rank


def verify_substitution_identity(lhs: Polynomial, rhs: Polynomial, assignment, multiplier: Polynomial = None) -> bool:
    """``lhs(assignment) == multiplier * rhs`` exactly."""
    image = lhs.subs(assignment, ring=rhs.ring)
    mult = rhs.ring.one if multiplier is None else multiplier
    return image == mult * rhs
