from __future__ import annotations

import pytest
import sympy
from hypothesis import given, strategies as st

from qdfcheck.errors import ParseError, RingMismatchError, UnknownVariableError
from qdfcheck.fields import GF, QQ
from qdfcheck.model import SPECIAL, bundle_ring, special_equation
from qdfcheck.poly import PolyRing, VariableSet, determinant, divide_out, exact_quotient, ring_of

from .oracles import sympy_poly, to_sympy

R = ring_of("x y z", QQ)

coeff = st.integers(-5, 5)
exps = st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3))
polys = st.dictionaries(exps, coeff, max_size=6).map(
    lambda d: sum((R.monomial(e, QQ.from_int(c)) for e, c in d.items()), R.zero)
)


@given(polys, polys)
def test_product_matches_sympy(f, g):
    assert sympy.expand(to_sympy(f * g) - to_sympy(f) * to_sympy(g)) == 0


@given(polys, polys, polys)
def test_ring_axioms(f, g, h):
    assert (f + g) * h == f * h + g * h
    assert (f * g) * h == f * (g * h)
    assert f - f == R.zero


@given(polys)
def test_derivative_matches_sympy(f):
    x = sympy.Symbol("x")
    assert sympy.expand(to_sympy(f.diff("x")) - sympy.diff(to_sympy(f), x)) == 0


def test_special_equation_term_count():
    # the special fiber expands to nine monomials
    F = special_equation()
    assert len(F) == len(sympy_poly(F).terms()) == 9


def test_special_equation_bidegree():
    F = special_equation()
    assert F.bidegree() == (2, 2)
    assert bundle_ring().variables.bigrade[-1] == (-1, 1)


def test_parse_errors():
    with pytest.raises(ParseError):
        R("x +* y")
    with pytest.raises(UnknownVariableError):
        R("w + 1")


def test_ring_mismatch():
    S = ring_of("x y z", GF(7))
    with pytest.raises(RingMismatchError):
        R("x") + S("x")


def test_substitution():
    f = R("x^2 + y*z")
    assert f.subs({"x": R("y + z")}) == R("y^2 + 3*y*z + z^2")


def test_evaluate_rational():
    f = R("x^2 - 2*y + z/2")
    assert f.evaluate([QQ.from_int(3), QQ.from_int(1), QQ.from_int(4)]) == QQ.from_int(9)


def test_determinant_matches_sympy():
    S = PolyRing(VariableSet(tuple("abcdefghi")), QQ)
    M = [[S.var(n) for n in "abc"], [S.var(n) for n in "def"], [S.var(n) for n in "ghi"]]
    ref = sympy.Matrix([[sympy.Symbol(n) for n in row] for row in ("abc", "def", "ghi")]).det()
    assert sympy.expand(to_sympy(determinant(M)) - ref) == 0


def test_exact_quotient_and_divide_out():
    e = R("x")
    assert exact_quotient(R("x^2*y + x*z"), e) == R("x*y + z")
    assert exact_quotient(R("x + 1"), e) is None
    rest, k = divide_out(R("x^3*y"), e)
    assert (rest, k) == (R("y"), 3)


def test_weighted_homogeneity():
    W = ring_of("s x", QQ, weights=(2, 1))
    assert W("s + x^2").is_homogeneous()
    assert not W("s + x").is_homogeneous()


def test_master_string_parses_in_both_field_kinds():
    for K in (QQ, GF(10007)):
        assert bundle_ring(K)(SPECIAL).total_degree() == 6
