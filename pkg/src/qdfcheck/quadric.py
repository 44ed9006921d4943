"""Quadric surface bundles over the plane.

A bundle is given by one equation

    c*s^2 + F1*t^2 + 2*F2*t*u + F3*u^2 + 2*G1*t*v + 2*G2*u*v + H*v^2

with forms in ``x, y, z`` of degrees 0, 2, 2, 2, 3, 3, 4. Its symmetric matrix
is block diagonal with a 1x1 block ``c``; the determinant cuts out the
degeneracy curve ``D`` of degree 8, which is tangent to the quartic
``C = F1*F3 - F2^2`` wherever it meets it.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .errors import NotZeroDimensionalError, PreconditionError
from .fields import Field, PrimeField
from .ideal import Ideal, count_distinct_points, ideal_membership, krull_dimension, quotient_dimension, saturate
from .poly import PolyRing, Polynomial, VariableSet, determinant

ENTRIES = ("c", "F1", "F2", "F3", "G1", "G2", "H")
PROFILE = {"c": 0, "F1": 2, "F2": 2, "F3": 2, "G1": 3, "G2": 3, "H": 4}
BASE = ("x", "y", "z")
FIBER = ("s", "t", "u", "v")

# fiber monomial (s, t, u, v) exponents -> (entry, factor)
_SLOTS = {
    (2, 0, 0, 0): ("c", 1),
    (0, 2, 0, 0): ("F1", 1),
    (0, 1, 1, 0): ("F2", 2),
    (0, 0, 2, 0): ("F3", 1),
    (0, 1, 0, 1): ("G1", 2),
    (0, 0, 1, 1): ("G2", 2),
    (0, 0, 0, 2): ("H", 1),
}


def base_ring(field: Field) -> PolyRing:
    return PolyRing(VariableSet(BASE), field)


@dataclass(frozen=True)
class QuadricBundleForm:
    c: Polynomial
    F1: Polynomial
    F2: Polynomial
    F3: Polynomial
    G1: Polynomial
    G2: Polynomial
    H: Polynomial

    @property
    def ring(self) -> PolyRing:
        return self.c.ring

    @property
    def matrix(self):
        z = self.ring.zero
        return [
            [self.c, z, z, z],
            [z, self.F1, self.F2, self.G1],
            [z, self.F2, self.F3, self.G2],
            [z, self.G1, self.G2, self.H],
        ]

    def entries(self) -> dict:
        return {name: getattr(self, name) for name in ENTRIES}

    def profile_violations(self):
        """Entries that are neither zero nor homogeneous of the profile degree."""
        bad = []
        for name, p in self.entries().items():
            if p.is_zero:
                continue
            if not p.is_homogeneous() or p.total_degree() != PROFILE[name]:
                bad.append(name)
        return bad

    def reassemble(self, ring: PolyRing) -> Polynomial:
        """The quadratic form in ``s, t, u, v`` inside ``ring``."""
        out = ring.zero
        for exp, (name, factor) in _SLOTS.items():
            coeff = getattr(self, name).to_ring(ring)
            mono = ring.one
            for var, k in zip(FIBER, exp):
                if k:
                    mono = mono * ring.var(var) ** k
            out = out + coeff * mono * factor
        return out


def extract_matrix(F: Polynomial, check_profile: bool = True) -> QuadricBundleForm:
    """Read off ``c, F1, ..., H`` from a quadratic form in ``s, t, u, v``."""
    ring = F.ring
    K = ring.field
    base = base_ring(K)
    fidx = [ring.index[n] for n in FIBER]
    bidx = [ring.index[n] for n in BASE]
    other = [n for n in ring.names if n not in FIBER + BASE]
    if other:
        raise PreconditionError(f"unexpected variables {other}")
    parts = {name: {} for name in ENTRIES}
    half = K.inv(K.from_int(2))
    for m, c in F.items():
        key = tuple(m[i] for i in fidx)
        if key not in _SLOTS:
            if sum(key) == 2 and key[0] == 1:
                raise PreconditionError(f"cross term involving s: {ring.monomial(m, c)}")
            raise PreconditionError(f"term {ring.monomial(m, c)} is not quadratic in the fiber")
        name, factor = _SLOTS[key]
        coeff = K.mul(c, half) if factor == 2 else c
        parts[name][tuple(m[i] for i in bidx)] = coeff
    form = QuadricBundleForm(*(Polynomial(base, parts[name]) for name in ENTRIES))
    if check_profile:
        bad = form.profile_violations()
        if bad:
            raise PreconditionError(f"degree profile violated by {', '.join(bad)}")
    return form


@dataclass(frozen=True)
class DegeneracyDivisor:
    D: Polynomial
    degree: int
    closed_form: Polynomial
    matches_closed_form: bool


def closed_form(Q: QuadricBundleForm) -> Polynomial:
    c, F1, F2, F3, G1, G2, H = (Q.c, Q.F1, Q.F2, Q.F3, Q.G1, Q.G2, Q.H)
    return c * ((F1 * F3 - F2**2) * H - F3 * G1**2 + 2 * F2 * G1 * G2 - F1 * G2**2)


def degeneracy_determinant(Q: QuadricBundleForm) -> DegeneracyDivisor:
    D = determinant(Q.matrix)
    cf = closed_form(Q)
    deg = D.total_degree() if not D.is_zero else -1
    return DegeneracyDivisor(D, deg, cf, D == cf)


def conic_discriminant(Q: QuadricBundleForm) -> Polynomial:
    return Q.F1 * Q.F3 - Q.F2**2


def tangency_congruence(Q: QuadricBundleForm) -> bool:
    """``D`` restricted to ``C`` is minus a square over ``F1`` (and over ``F3``).

    Denominators are cleared: ``F1*D - c*F1*C*H + c*(F2*G1 - F1*G2)^2`` must
    lie in ``<C>``, and likewise with ``F3`` and ``F3*G1 - F2*G2``.
    """
    c, F1, F2, F3, G1, G2, H = (Q.c, Q.F1, Q.F2, Q.F3, Q.G1, Q.G2, Q.H)
    C = conic_discriminant(Q)
    D = determinant(Q.matrix)
    I = Ideal([C], Q.ring)
    first = F1 * D - c * F1 * C * H + c * (F2 * G1 - F1 * G2) ** 2
    second = F3 * D - c * F3 * C * H + c * (F3 * G1 - F2 * G2) ** 2
    return ideal_membership(first, I) and ideal_membership(second, I)


def indeterminate_form(field: Field) -> QuadricBundleForm:
    """The form with every entry an independent indeterminate."""
    R = PolyRing(VariableSet(ENTRIES), field)
    return QuadricBundleForm(*(R.var(n) for n in ENTRIES))


def random_form(field: PrimeField, seed: int = 0) -> QuadricBundleForm:
    """A pseudo-random profile-respecting form; reproducible from ``seed``."""
    rng = random.Random(seed)
    R = base_ring(field)
    p = field.p

    def form(d):
        out = R.zero
        for a in range(d + 1):
            for b in range(d + 1 - a):
                out = out + R.monomial((a, b, d - a - b), field.from_int(rng.randrange(p)))
        return out

    c = R.constant(rng.randrange(1, p))
    return QuadricBundleForm(c, *(form(PROFILE[n]) for n in ENTRIES[1:]))


def _chart(p: Polynomial, var: str, ring: PolyRing) -> Polynomial:
    return p.subs({var: 1}, ring=ring)


def _local_length(I: Ideal, maximal, cap: int = 64) -> int:
    """Length of ``R/I`` localized at the origin, assumed isolated."""
    prev = None
    for k in range(1, cap):
        gens = list(I.generators)
        m = Ideal(maximal, I.ring)
        power = [I.ring.one]
        for _ in range(k):
            power = list({a * b for a in power for b in m.generators})
        n = quotient_dimension(Ideal(gens + power, I.ring))
        if n == prev:
            return n
        prev = n
    raise NotZeroDimensionalError("local length did not stabilize")


@dataclass(frozen=True)
class TangencyCount:
    length: int
    points: int
    charts: tuple  # (length, points) per chart piece


def tangency_count(Q: QuadricBundleForm) -> TangencyCount:
    """Length and number of distinct points of ``C ∩ D`` in the plane.

    The plane is covered by ``z=1``, then ``y=1`` restricted to ``z=0``,
    then the single point ``(1:0:0)``. Lengths come from quotient dimensions,
    point counts from the radical of each zero-dimensional piece.
    """
    K = Q.ring.field
    C = conic_discriminant(Q)
    D = determinant(Q.matrix)
    if C.is_zero or D.is_zero:
        raise PreconditionError("C or D vanishes identically")
    pieces = []
    # z = 1
    Rz = PolyRing(VariableSet(("x", "y")), K)
    Iz = Ideal([_chart(C, "z", Rz), _chart(D, "z", Rz)], Rz)
    # y = 1, points with z = 0
    Ry = PolyRing(VariableSet(("x", "z")), K)
    Iy = Ideal([_chart(C, "y", Ry), _chart(D, "y", Ry)], Ry)
    # x = 1, the point y = z = 0
    Rx = PolyRing(VariableSet(("y", "z")), K)
    Ix = Ideal([_chart(C, "x", Rx), _chart(D, "x", Rx)], Rx)
    for I, label in ((Iz, "z=1"), (Iy, "y=1"), (Ix, "x=1")):
        if not I.is_unit() and krull_dimension(I) != 0:
            raise PreconditionError(f"C and D share a component (chart {label})")
    pieces.append((quotient_dimension(Iz), count_distinct_points(Iz)))
    zvar = Ry.var("z")
    off = saturate(Iy, zvar)
    on_line = Iy + [zvar]
    pieces.append((quotient_dimension(Iy) - quotient_dimension(off), count_distinct_points(on_line)))
    origin = Ideal(list(Ix.generators) + [Rx.var("y"), Rx.var("z")], Rx)
    if origin.is_unit():
        pieces.append((0, 0))
    else:
        pieces.append((_local_length(Ix, [Rx.var("y"), Rx.var("z")]), 1))
    return TangencyCount(sum(a for a, _ in pieces), sum(b for _, b in pieces), tuple(pieces))


def parameter_arithmetic() -> dict:
    """The two displayed counts, recomputed."""
    series = math.comb(8, 4) - 5 - 12
    moduli = 14 + 44 - 16 - 8
    return {
        "binom_8_4": math.comb(8, 4),
        "linear_series": series,
        "linear_series_stated": 53,
        "moduli": moduli,
        "moduli_stated": 34,
        "reduction_53_to_34": "stated without the automorphism group dimension; not checked",
    }
