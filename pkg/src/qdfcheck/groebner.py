"""Buchberger's algorithm.

Internally a polynomial is a dict ``{exponent tuple: coefficient}`` and the
monomial order is a rank function (see :mod:`qdfcheck.orders`). Reduction
keeps the pending terms of the dividend in a heap keyed by rank, so each step
touches only the terms of the reducer. Pairs are pruned with the product and
chain criteria in the Gebauer–Möller bookkeeping.
"""

from __future__ import annotations

import heapq
import os
from contextlib import contextmanager
from contextvars import ContextVar
from dataclasses import dataclass
from operator import add, le, sub

from .errors import ResourceLimitExceeded
from .orders import GREVLEX, TermOrder
from .poly import Polynomial


@dataclass(frozen=True)
class Budget:
    """Hard limits for a single basis computation."""

    max_pairs: int = 100_000
    max_terms: int = 100_000

    @classmethod
    def from_env(cls) -> "Budget":
        pairs = os.environ.get("QDFCHECK_BUDGET_PAIRS")
        return cls(max_pairs=int(pairs)) if pairs else cls()


_BUDGET: ContextVar[Budget] = ContextVar("qdfcheck_budget", default=None)
_SELECTION: ContextVar[str] = ContextVar("qdfcheck_selection", default="sugar")
_ORDER: ContextVar[TermOrder] = ContextVar("qdfcheck_order", default=GREVLEX)


def active_order() -> TermOrder:
    """Order used for geometric checks when none is requested explicitly."""
    return _ORDER.get()


@contextmanager
def order_scope(order: TermOrder):
    token = _ORDER.set(order)
    try:
        yield order
    finally:
        _ORDER.reset(token)


def active_budget() -> Budget:
    b = _BUDGET.get()
    return b if b is not None else Budget.from_env()


@contextmanager
def budget_scope(budget: Budget):
    token = _BUDGET.set(budget)
    try:
        yield budget
    finally:
        _BUDGET.reset(token)


@contextmanager
def selection_strategy(name: str):
    if name not in ("normal", "sugar"):
        raise ValueError(f"unknown selection strategy {name!r}")
    token = _SELECTION.set(name)
    try:
        yield
    finally:
        _SELECTION.reset(token)


def _mask(m):
    bits = 0
    for i, k in enumerate(m):
        if k:
            bits |= 1 << i
    return bits


def _lcm(a, b):
    return tuple(map(max, a, b))


def _divides(a, b):
    return all(map(le, a, b))


class _Reducer:
    """Holds a list of monic polynomials usable as reducers."""

    def __init__(self, field, rank):
        self.K = field
        self.rank = rank
        self.lms = []
        self.masks = []
        self.tails = []
        self.active = []

    def add(self, terms: dict) -> int:
        """Register a monic polynomial; returns its index."""
        rank = self.rank
        ordered = sorted(terms.items(), key=lambda t: rank(t[0]))
        lm = ordered[0][0]
        self.lms.append(lm)
        self.masks.append(_mask(lm))
        self.tails.append(ordered[1:])
        return len(self.lms) - 1

    def divisor(self, m, active):
        mm = _mask(m)
        lms, masks = self.lms, self.masks
        for j in active:
            if not (masks[j] & ~mm) and all(map(le, lms[j], m)):
                return j
        return None

    def reduce(self, terms: dict, active, full: bool = True, max_terms: int = None):
        """Reduce ``terms`` by the reducers in ``active``.

        With ``full=False`` stop at the first irreducible term (top
        reduction). Returns a new dict.
        """
        K = self.K
        mul, fsub, fneg, is_zero = K.mul, K.sub, K.neg, K.is_zero
        rank = self.rank
        lms, tails = self.lms, self.tails
        coeffs = dict(terms)
        heap = [(rank(m), m) for m in coeffs]
        heapq.heapify(heap)
        out = {}
        pop, push = heapq.heappop, heapq.heappush
        while heap:
            m = pop(heap)[1]
            c = coeffs.pop(m)
            if is_zero(c):
                continue
            j = self.divisor(m, active)
            if j is None:
                out[m] = c
                if not full:
                    for mm, cc in coeffs.items():
                        if not is_zero(cc):
                            out[mm] = cc
                    return out
                continue
            q = tuple(map(sub, m, lms[j]))
            for tm, tc in tails[j]:
                mm = tuple(map(add, tm, q))
                d = mul(c, tc)
                old = coeffs.get(mm)
                if old is None:
                    coeffs[mm] = fneg(d)
                    push(heap, (rank(mm), mm))
                else:
                    coeffs[mm] = fsub(old, d)
            if max_terms is not None and len(coeffs) > max_terms:
                raise ResourceLimitExceeded(f"intermediate polynomial exceeds {max_terms} terms")
        return out


def _monic(K, terms: dict, rank):
    lm = min(terms, key=rank)
    inv = K.inv(terms[lm])
    if inv == K.one:
        return terms
    mul = K.mul
    return {m: mul(c, inv) for m, c in terms.items()}


@dataclass
class BasisStats:
    pairs_total: int = 0
    pairs_reduced: int = 0
    zero_reductions: int = 0


def buchberger(polys, order: TermOrder = GREVLEX, budget: Budget = None, stats: BasisStats = None):
    """Reduced Groebner basis of the ideal generated by ``polys``.

    Returns a list of monic polynomials sorted by decreasing leading
    monomial. Raises :class:`ResourceLimitExceeded` when the budget runs out.
    """
    polys = [p for p in polys if not p.is_zero]
    if not polys:
        return []
    ring = polys[0].ring
    K = ring.field
    rank = order.rank_function(ring.names)
    budget = budget or active_budget()
    stats = stats if stats is not None else BasisStats()
    strategy = _SELECTION.get()

    red = _Reducer(K, rank)
    sugar = []
    for p in polys:
        if p.is_constant():
            return [ring.one]

    # the basis is the set G of indices; B holds pending pairs
    G: set = set()
    B: dict = {}  # pair -> selection key

    def pair_key(i, j):
        lcm = _lcm(red.lms[i], red.lms[j])
        if strategy == "sugar":
            di = sum(lcm) - sum(red.lms[i])
            dj = sum(lcm) - sum(red.lms[j])
            return (max(sugar[i] + di, sugar[j] + dj), rank(lcm), i, j)
        return (rank(lcm), i, j)

    def update(ih):
        nonlocal G, B
        mh = red.lms[ih]
        lms = red.lms
        C = sorted(G)
        D = []
        lcm_h = {ig: _lcm(mh, lms[ig]) for ig in C}
        for pos, ig in enumerate(C):
            mg = lms[ig]
            lhg = lcm_h[ig]
            disjoint = all(a == 0 or b == 0 for a, b in zip(mh, mg))
            if disjoint:
                D.append((ig, True))
                continue
            others = C[pos + 1 :]
            if any(_divides(lcm_h[ip], lhg) for ip in others):
                continue
            if any(_divides(lcm_h[jg], lhg) for jg, _ in D):
                continue
            D.append((ig, False))
        new_pairs = [ig for ig, disjoint in D if not disjoint]
        kept = {}
        for (i1, i2), key in B.items():
            l12 = _lcm(lms[i1], lms[i2])
            if (
                not _divides(mh, l12)
                or _lcm(lms[i1], mh) == l12
                or _lcm(lms[i2], mh) == l12
            ):
                kept[(i1, i2)] = key
        for ig in new_pairs:
            pr = (min(ig, ih), max(ig, ih))
            kept[pr] = pair_key(*pr)
        B = kept
        G = {ig for ig in G if not _divides(mh, lms[ig])}
        G.add(ih)

    def register(terms):
        terms = _monic(K, terms, rank)
        idx = red.add(terms)
        sugar.append(max(sum(m) for m in terms))
        return idx

    # interreduce the input a little: sort by leading monomial, smallest first
    inputs = [dict(p._terms) for p in polys]
    inputs.sort(key=lambda t: rank(min(t, key=rank)), reverse=True)
    for terms in inputs:
        h = red.reduce(terms, sorted(G), full=False)
        if not h:
            continue
        if len(h) == 1 and next(iter(h)) == ring.zero_exp:
            return [ring.one]
        update(register(h))

    while B:
        if stats.pairs_reduced >= budget.max_pairs:
            raise ResourceLimitExceeded(f"pair budget of {budget.max_pairs} exhausted")
        pair = min(B, key=B.__getitem__)
        key = B.pop(pair)
        i, j = pair
        stats.pairs_total += 1
        lcm = _lcm(red.lms[i], red.lms[j])
        s = _spoly(red, i, j, lcm, K)
        stats.pairs_reduced += 1
        h = red.reduce(s, sorted(G), full=False, max_terms=budget.max_terms)
        if not h:
            stats.zero_reductions += 1
            continue
        if len(h) == 1 and next(iter(h)) == ring.zero_exp:
            return [ring.one]
        if len(h) > budget.max_terms:
            raise ResourceLimitExceeded(f"basis element exceeds {budget.max_terms} terms")
        idx = register(h)
        if strategy == "sugar":
            sugar[idx] = max(sugar[idx], key[0])
        update(idx)

    # minimal basis is G; now fully interreduce tails
    final = []
    active = sorted(G)
    for ig in active:
        others = [j for j in active if j != ig]
        lm = red.lms[ig]
        tail = dict(red.tails[ig])
        reduced_tail = red.reduce(tail, others, full=True) if tail else {}
        reduced_tail[lm] = K.one
        final.append(reduced_tail)
    final.sort(key=lambda t: rank(min(t, key=rank)))
    return [Polynomial(ring, t) for t in final]


def _spoly(red, i, j, lcm, K):
    fsub, is_zero = K.sub, K.is_zero
    qi = tuple(map(sub, lcm, red.lms[i]))
    qj = tuple(map(sub, lcm, red.lms[j]))
    out = {}
    for tm, tc in red.tails[i]:
        out[tuple(map(add, tm, qi))] = tc
    for tm, tc in red.tails[j]:
        mm = tuple(map(add, tm, qj))
        old = out.get(mm)
        out[mm] = K.neg(tc) if old is None else fsub(old, tc)
    return {m: c for m, c in out.items() if not is_zero(c)}


def reduce_polynomial(f: Polynomial, basis, order: TermOrder = GREVLEX) -> Polynomial:
    """Full remainder of ``f`` by a list of polynomials (monic-ized here)."""
    ring = f.ring
    K = ring.field
    rank = order.rank_function(ring.names)
    red = _Reducer(K, rank)
    active = []
    for g in basis:
        if g.is_zero:
            continue
        active.append(red.add(_monic(K, dict(g._terms), rank)))
    if f.is_zero:
        return f
    return Polynomial(ring, red.reduce(dict(f._terms), active, full=True))


def s_polynomial(f: Polynomial, g: Polynomial, order: TermOrder = GREVLEX) -> Polynomial:
    ring = f.ring
    rank = order.rank_function(ring.names)
    red = _Reducer(ring.field, rank)
    i = red.add(_monic(ring.field, dict(f._terms), rank))
    j = red.add(_monic(ring.field, dict(g._terms), rank))
    lcm = _lcm(red.lms[i], red.lms[j])
    return Polynomial(ring, _spoly(red, i, j, lcm, ring.field))
