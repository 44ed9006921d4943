"""Ideals and the operations decided through Groebner bases."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .errors import NotZeroDimensionalError, RingMismatchError
from .groebner import BasisStats, active_order, buchberger, reduce_polynomial
from .orders import TermOrder, block_order
from .poly import Polynomial, PolyRing
from .univariate import poly_trim, roots_in_prime_field, squarefree_part


@dataclass(frozen=True)
class GroebnerBasis:
    elements: tuple
    order: TermOrder
    source: "Ideal"
    stats: BasisStats = field(default=None, compare=False)

    @property
    def ring(self) -> PolyRing:
        return self.source.ring

    @property
    def leading_monomials(self):
        return [g.leading_term(self.order)[0] for g in self.elements]

    def is_unit(self) -> bool:
        return len(self.elements) == 1 and self.elements[0].is_constant()

    def normal_form(self, f: Polynomial) -> Polynomial:
        return normal_form(f, self)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)


class Ideal:
    """A finitely generated ideal; zero generators are dropped.

    Bases are memoized per term order, so repeated questions about one
    ideal share a single Buchberger run.
    """

    def __init__(self, generators, ring: PolyRing = None):
        gens = [g for g in generators]
        if ring is None:
            if not gens:
                raise ValueError("an empty generator list needs an explicit ring")
            ring = gens[0].ring
        for g in gens:
            if g.ring != ring:
                raise RingMismatchError(f"generator in {g.ring}, ideal in {ring}")
        self.ring = ring
        self.generators = tuple(g for g in gens if not g.is_zero)
        self._bases = {}

    def __repr__(self):
        return f"Ideal([{', '.join(str(g) for g in self.generators)}])"

    def __add__(self, other):
        if isinstance(other, Ideal):
            return Ideal(self.generators + other.generators, self.ring)
        return Ideal(self.generators + tuple(other), self.ring)

    def groebner(self, order: TermOrder = None) -> GroebnerBasis:
        order = order or active_order()
        gb = self._bases.get(order)
        if gb is None:
            stats = BasisStats()
            elements = buchberger(self.generators, order, stats=stats)
            gb = GroebnerBasis(tuple(elements), order, self, stats)
            self._bases[order] = gb
        return gb

    def is_unit(self) -> bool:
        return self.groebner().is_unit()

    def contains(self, f: Polynomial) -> bool:
        return ideal_membership(f, self)

    def __contains__(self, f):
        return self.contains(f)


def groebner_basis(I: Ideal, order: TermOrder = None) -> GroebnerBasis:
    return I.groebner(order)


def normal_form(f: Polynomial, G: GroebnerBasis) -> Polynomial:
    if f.ring != G.ring:
        raise RingMismatchError("polynomial and basis live in different rings")
    return reduce_polynomial(f, G.elements, G.order)


def ideal_membership(f: Polynomial, I: Ideal, order: TermOrder = None) -> bool:
    if f.is_zero:
        return True
    G = I.groebner(order)
    if G.is_unit():
        return True
    return normal_form(f, G).is_zero


def ideals_equal(I: Ideal, J: Ideal) -> bool:
    """Equality by mutual generator membership."""
    return all(J.contains(g) for g in I.generators) and all(I.contains(g) for g in J.generators)


def _fresh(ring: PolyRing, stem: str) -> str:
    name = stem
    k = 0
    while name in ring.index:
        k += 1
        name = f"{stem}{k}"
    return name


def radical_membership(f: Polynomial, I: Ideal, quick_powers: int = 3) -> bool:
    """Whether some power of ``f`` lies in ``I``.

    Small powers are tried against the (cached) basis of ``I`` first; a hit
    is a proof. Otherwise the decision is made by testing whether
    ``I + <1 - T*f>`` is the unit ideal in a ring with a fresh variable T.
    """
    if f.is_zero:
        return True
    G = I.groebner()
    if G.is_unit():
        return True
    if f.is_constant():
        return False
    power = f
    for _ in range(quick_powers):
        if normal_form(power, G).is_zero:
            return True
        power = power * f
    ring = I.ring
    T = _fresh(ring, "T_rad")
    big = ring.extend([T])
    lift = [g.to_ring(big) for g in G.elements]
    lift.append(big.one - big.var(T) * f.to_ring(big))
    return Ideal(lift, big).is_unit()


def eliminate(I: Ideal, drop) -> Ideal:
    """``I`` intersected with the subring without the variables in ``drop``.

    The result lives in that smaller ring.
    """
    drop = [d for d in drop if d in I.ring.index]
    sub = I.ring.drop(drop)
    if not drop:
        return Ideal(I.generators, I.ring)
    G = I.groebner(block_order(drop))
    dropped = {I.ring.index[d] for d in drop}
    kept = []
    for g in G.elements:
        if all(not any(m[i] for i in dropped) for m in g._terms):
            kept.append(g.to_ring(sub))
    return Ideal(kept, sub)


def saturate(I: Ideal, f: Polynomial) -> Ideal:
    """``I : f^infinity``, via ``I + <1 - T*f>`` and elimination of T."""
    if f.is_zero:
        raise ValueError("cannot saturate by zero")
    ring = I.ring
    if f.is_constant():
        return Ideal(I.generators, ring)
    T = _fresh(ring, "T_sat")
    big = ring.extend([T], front=True)
    gens = [g.to_ring(big) for g in I.generators]
    gens.append(big.one - big.var(T) * f.to_ring(big))
    out = eliminate(Ideal(gens, big), [T])
    # reorder back to the original variable order
    return Ideal([g.to_ring(ring) for g in out.generators], ring)


def intersect(I: Ideal, J: Ideal) -> Ideal:
    """``I ∩ J = eliminate(t*I + (1-t)*J, t)``."""
    ring = I.ring
    if J.ring != ring:
        raise RingMismatchError("ideals in different rings")
    if I.is_unit():
        return Ideal(J.generators, ring)
    if J.is_unit():
        return Ideal(I.generators, ring)
    t = _fresh(ring, "T_int")
    big = ring.extend([t], front=True)
    tv = big.var(t)
    gens = [tv * g.to_ring(big) for g in I.generators]
    gens += [(big.one - tv) * g.to_ring(big) for g in J.generators]
    out = eliminate(Ideal(gens, big), [t])
    return Ideal([g.to_ring(ring) for g in out.generators], ring)


def intersect_all(ideals) -> Ideal:
    ideals = list(ideals)
    acc = ideals[0]
    for J in ideals[1:]:
        acc = intersect(acc, J)
    return acc


def krull_dimension(I: Ideal) -> int:
    """Dimension of ``R/I`` from the leading-term ideal (-1 for the unit ideal)."""
    G = I.groebner()
    if G.is_unit():
        return -1
    n = I.ring.nvars
    supports = [frozenset(i for i, k in enumerate(m) if k) for m in G.leading_monomials]
    for size in range(n, -1, -1):
        for S in combinations(range(n), size):
            s = set(S)
            if all(not sup <= s for sup in supports):
                return size
    return 0


def standard_monomials(G: GroebnerBasis, limit: int = 1_000_000):
    """Monomials outside the leading-term ideal of a 0-dimensional basis."""
    ring = G.ring
    n = ring.nvars
    lms = G.leading_monomials
    if G.is_unit():
        return []
    bounds = []
    for i in range(n):
        pure = [m[i] for m in lms if m[i] and all(k == 0 for j, k in enumerate(m) if j != i)]
        if not pure:
            raise NotZeroDimensionalError(f"no pure power of {ring.names[i]} among leading terms")
        bounds.append(min(pure))
    out = []

    def divisible(e):
        return any(all(a <= b for a, b in zip(m, e)) for m in lms)

    def walk(prefix):
        i = len(prefix)
        if i == n:
            out.append(tuple(prefix))
            if len(out) > limit:
                raise NotZeroDimensionalError("too many standard monomials")
            return
        for k in range(bounds[i]):
            e = prefix + [k] + [0] * (n - i - 1)
            if divisible(e):
                break
            walk(prefix + [k])

    walk([])
    return out


def quotient_dimension(I: Ideal) -> int:
    """``dim_k R/I`` for a zero-dimensional ideal."""
    G = I.groebner()
    if G.is_unit():
        return 0
    if krull_dimension(I) != 0:
        raise NotZeroDimensionalError("ideal is not zero-dimensional")
    return len(standard_monomials(G))


def minimal_polynomial(f: Polynomial, I: Ideal):
    """Minimal polynomial of ``f`` in ``R/I`` as a coefficient list (monic).

    Found by linear algebra on normal forms of ``1, f, f^2, ...``.
    """
    G = I.groebner()
    K = I.ring.field
    if G.is_unit():
        return [K.one]
    # echelon rows: pivot monomial -> (vector, combination of powers)
    rows = []
    power = I.ring.one
    k = 0
    rank = I.ring._rank
    while True:
        vec = dict(normal_form(power, G)._terms)
        combo = {k: K.one}
        for pivot, rvec, rcombo in rows:
            c = vec.get(pivot)
            if c is None or K.is_zero(c):
                continue
            for m, a in rvec.items():
                v = K.sub(vec.get(m, K.zero), K.mul(c, a))
                if K.is_zero(v):
                    vec.pop(m, None)
                else:
                    vec[m] = v
            for d, a in rcombo.items():
                v = K.sub(combo.get(d, K.zero), K.mul(c, a))
                combo[d] = v
        if not vec:
            coeffs = [combo.get(d, K.zero) for d in range(k + 1)]
            return poly_trim(K, coeffs)
        pivot = min(vec, key=rank)
        inv = K.inv(vec[pivot])
        vec = {m: K.mul(inv, a) for m, a in vec.items()}
        combo = {d: K.mul(inv, a) for d, a in combo.items()}
        # keep earlier rows reduced against the new pivot is unnecessary:
        # new vectors are reduced against all rows in insertion order
        rows.append((pivot, vec, combo))
        power = power * f
        k += 1
        if k > 10_000:
            raise NotZeroDimensionalError("minimal polynomial degree runaway")


def _univariate_to_poly(coeffs, var: Polynomial) -> Polynomial:
    ring = var.ring
    out = ring.zero
    pw = ring.one
    for c in coeffs:
        if not ring.field.is_zero(c):
            out = out + pw.scale(c)
        pw = pw * var
    return out


def zero_dimensional_radical(I: Ideal) -> Ideal:
    """Radical of a zero-dimensional ideal over a perfect field.

    Adds the squarefree part of each variable's minimal polynomial
    (Seidenberg); the result is radical, hence its quotient dimension counts
    the distinct points over the algebraic closure.
    """
    if krull_dimension(I) > 0:
        raise NotZeroDimensionalError("ideal is not zero-dimensional")
    if I.is_unit():
        return I
    K = I.ring.field
    extra = []
    for x in I.ring.gens:
        mp = minimal_polynomial(x, I)
        extra.append(_univariate_to_poly(squarefree_part(K, mp), x))
    return Ideal(I.generators + tuple(extra), I.ring)


def count_distinct_points(I: Ideal) -> int:
    """Number of points of ``V(I)`` over the algebraic closure (0-dim ``I``)."""
    if I.is_unit():
        return 0
    return quotient_dimension(zero_dimensional_radical(I))


def rational_points(I: Ideal):
    """All points of a zero-dimensional ideal with coordinates in the prime field.

    Candidates for each coordinate come from the roots of that variable's
    minimal polynomial; partial assignments are pruned by a unit-ideal test.
    """
    ring = I.ring
    K = ring.field
    if not hasattr(K, "p"):
        raise TypeError("rational_points needs a prime field")
    if I.is_unit():
        return []
    if krull_dimension(I) != 0:
        raise NotZeroDimensionalError("ideal is not zero-dimensional")
    candidates = [roots_in_prime_field(K, minimal_polynomial(x, I)) for x in ring.gens]
    points = []

    def search(i, gens):
        if i == ring.nvars:
            points.append(tuple(gens_values))
            return
        for r in candidates[i]:
            trial = gens + [ring.gens[i] - r]
            if Ideal(trial, ring).is_unit():
                continue
            gens_values.append(r)
            search(i + 1, trial)
            gens_values.pop()

    gens_values = []
    search(0, list(I.groebner().elements))
    return points
