"""Sequences of blowups, followed chart by chart."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import ResourceLimitExceeded
from ..ideal import Ideal, ideal_membership, saturate
from .blowup import blowup_charts, strict_presentation
from .smooth import matrix_rank, smoothness_certificate


@dataclass
class ChartState:
    """One affine chart reached after some blowups."""

    equations: list
    lift: object  # original polynomials -> this chart
    exceptional: object  # product of the exceptional coordinates so far
    path: tuple = ()
    methods: list = field(default_factory=list)

    @property
    def ring(self):
        return self.equations[0].ring


def _identity(p):
    return p


def _center_here(state: ChartState, center):
    """Generators of the proper transform of a center, or None.

    The center is cut with the chart equations before saturating, so that
    stray pieces of the ambient center lying in the exceptional locus drop
    out. Basis elements already implied by the equations are skipped.
    """
    ring = state.ring
    eqs = list(state.equations)
    I = Ideal([state.lift(g) for g in center] + eqs, ring)
    if state.exceptional is not None:
        I = saturate(I, state.exceptional)
    if I.is_unit():
        return None
    basis = sorted(I.groebner().elements, key=lambda g: (g.total_degree(), len(g), str(g)))
    kept = []
    for g in basis:
        if not ideal_membership(g, Ideal(eqs + kept, ring)):
            kept.append(g)
    return kept


def blow_up_in_sequence(equations, centers, names=None):
    """Blow up ``centers`` one after another, following proper transforms.

    ``centers`` are generator lists in the ring of ``equations``. A center
    whose proper transform misses a chart leaves that chart alone. Returns
    the final list of :class:`ChartState`.
    """
    states = [ChartState(list(equations), _identity, None)]
    names = names or [f"C{k}" for k in range(len(centers))]
    for label, center in zip(names, centers):
        nxt = []
        for st in states:
            gens = _center_here(st, center)
            if gens is None:
                nxt.append(st)
                continue
            for T, total in blowup_charts(gens, st.equations):
                pres = strict_presentation(total, T.exceptional, T.relations)

                def lift(p, T=T, prev=st.lift):
                    return T.apply(prev(p))

                exc = T.exceptional if st.exceptional is None else T.apply(st.exceptional) * T.exceptional
                nxt.append(
                    ChartState(
                        list(pres.equations),
                        lift,
                        exc,
                        st.path + (f"{label}:{T.label}",),
                        st.methods + [pres.method],
                    )
                )
        states = nxt
    return states


@dataclass
class SequenceVerdict:
    smooth: bool
    charts: int
    failures: list


def certify_sequence(states, excluded=None) -> SequenceVerdict:
    """Smoothness of every final chart, away from ``excluded`` if given.

    A budget hit in any chart propagates instead of counting as a failure.
    """
    failures = []
    for st in states:
        exc = st.lift(excluded) if excluded is not None else None
        cert = smoothness_certificate(st.equations, excluded=exc)
        if cert.verdict == "resource-limited":
            raise ResourceLimitExceeded(cert.detail)
        if not cert.smooth:
            failures.append((st.path, cert))
    return SequenceVerdict(not failures, len(states), failures)


def fiber_quadric_rank(f, center_vars, values) -> int:
    """Rank of the exceptional fiber quadric over one point of the center.

    The center is ``{v = 0 for v in center_vars}`` and ``f`` vanishes to
    order two along it; the fiber is the quadric given by the part of ``f``
    of degree two in ``center_vars``, evaluated at ``values`` (a map for the
    remaining variables).
    """
    R = f.ring
    K = R.field
    idx = [R.index[v] for v in center_vars]
    M = [[K.zero] * len(idx) for _ in idx]
    half = K.inv(K.from_int(2))
    for m, c in f.items():
        if sum(m[i] for i in idx) != 2:
            continue
        coeff = c
        for n, e in zip(R.names, m):
            if R.index[n] in idx or not e:
                continue
            coeff = K.mul(coeff, K.power(values[n], e))
        where = [k for k, i in enumerate(idx) for _ in range(m[i])]
        a, b = where
        if a == b:
            M[a][a] = K.add(M[a][a], coeff)
        else:
            h = K.mul(coeff, half)
            M[a][b] = K.add(M[a][b], h)
            M[b][a] = K.add(M[b][a], h)
    return matrix_rank(K, M)
