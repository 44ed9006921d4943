from __future__ import annotations

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from qdfcheck.errors import ResourceLimitExceeded
from qdfcheck.fields import GF, QQ
from qdfcheck.groebner import Budget, budget_scope, buchberger, order_scope, reduce_polynomial, s_polynomial
from qdfcheck.ideal import Ideal
from qdfcheck.orders import GREVLEX, LEX
from qdfcheck.poly import ring_of

from .oracles import to_sympy

R = ring_of("x y z", QQ)

SYSTEMS = [
    ["x^2 + 2*x*y^2", "x*y + 2*y^3 - 1"],
    ["x - z^2", "y - z^3"],
    ["x^3 - 2*x*y", "x^2*y + x - 2*y^2"],
    ["-x^2 + y", "-x^3 + z"],
    ["x^2 + y^2 + z^2 - 1", "x - y", "y*z - x^2"],
]


def _as_sympy_set(G, order):
    out = set()
    for g in G:
        p = sympy.Poly(to_sympy(g), *sympy.symbols("x y z"))
        out.add(p.monic().as_expr())
    return out


@pytest.mark.parametrize("gens", SYSTEMS)
@pytest.mark.parametrize("order,name", [(GREVLEX, "grevlex"), (LEX, "lex")])
def test_reduced_basis_matches_sympy(gens, order, name):
    polys = [R(g) for g in gens]
    ours = buchberger(polys, order)
    ref = sympy.groebner([to_sympy(p) for p in polys], *sympy.symbols("x y z"), order=name)
    theirs = {sympy.Poly(g, *sympy.symbols("x y z")).monic().as_expr() for g in ref.exprs}
    assert _as_sympy_set(ours, name) == {sympy.expand(t) for t in theirs}


coeff = st.integers(-3, 3)
exps = st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(0, 2))
K7 = GF(7)
S = ring_of("x y z", K7)
small = st.dictionaries(exps, coeff, min_size=1, max_size=4).map(
    lambda d: sum((S.monomial(e, K7.from_int(c)) for e, c in d.items()), S.zero)
)


@settings(max_examples=40)
@given(st.lists(small, min_size=1, max_size=3))
def test_basis_is_idempotent(gens):
    G = buchberger(gens, GREVLEX)
    assert buchberger(G, GREVLEX) == G


@settings(max_examples=40)
@given(st.lists(small, min_size=1, max_size=3))
def test_s_polynomials_reduce_to_zero(gens):
    # Buchberger's criterion, re-checked independently of the run
    G = buchberger(gens, GREVLEX)
    for i in range(len(G)):
        for j in range(i + 1, len(G)):
            assert reduce_polynomial(s_polynomial(G[i], G[j], GREVLEX), G, GREVLEX).is_zero


@settings(max_examples=40)
@given(st.lists(small, min_size=1, max_size=3))
def test_generators_reduce_to_zero(gens):
    G = buchberger(gens, GREVLEX)
    for g in gens:
        assert reduce_polynomial(g, G, GREVLEX).is_zero


def test_budget_exhaustion_raises():
    polys = [R(g) for g in SYSTEMS[4]]
    with pytest.raises(ResourceLimitExceeded):
        buchberger(polys, GREVLEX, Budget(max_pairs=1))
    with budget_scope(Budget(max_pairs=1)):
        with pytest.raises(ResourceLimitExceeded):
            Ideal(polys).groebner()


def test_order_scope_changes_default_order():
    I = Ideal([R(g) for g in SYSTEMS[1]])
    with order_scope(LEX):
        G = I.groebner()
    assert G.order == LEX


def test_unit_ideal():
    assert buchberger([R("x"), R("x - 1")], GREVLEX) == [R.one]
