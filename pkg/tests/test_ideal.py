from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from qdfcheck.errors import NotZeroDimensionalError
from qdfcheck.fields import GF, QQ
from qdfcheck.ideal import (
    Ideal,
    count_distinct_points,
    eliminate,
    ideal_membership,
    ideals_equal,
    intersect,
    krull_dimension,
    quotient_dimension,
    radical_membership,
    rational_points,
    saturate,
)
from qdfcheck.poly import ring_of

from .oracles import points, vanish_all

R = ring_of("x y z", QQ)


def test_saturation_removes_exceptional_factor():
    e = R("z")
    S = saturate(Ideal([R("x*z"), R("y*z^2")]), e)
    assert ideals_equal(S, Ideal([R("x"), R("y")]))


def test_elimination():
    I = Ideal([R("x - y^2"), R("z - y^3")])
    E = eliminate(I, ["y"])
    assert ideal_membership(E.ring("x^3 - z^2"), E)
    assert E.ring.names == ("x", "z")
    assert all("y" not in g.variables_used() for g in E.generators)


def test_intersection_of_lines():
    I = intersect(Ideal([R("x"), R("y")]), Ideal([R("y"), R("z")]))
    assert ideals_equal(I, Ideal([R("y"), R("x*z")]))


def test_dimension():
    assert krull_dimension(Ideal([R("x"), R("y")])) == 1
    assert krull_dimension(Ideal([R("x*y")])) == 2
    assert krull_dimension(Ideal([R("1")], R)) == -1


def test_radical_membership():
    I = Ideal([R("x^3"), R("y^2")])
    assert radical_membership(R("x + y"), I)
    assert not ideal_membership(R("x + y"), I)
    assert not radical_membership(R("z"), I)


def test_quotient_dimension_and_points():
    I = Ideal([R("x^2 - 1"), R("y - x"), R("z^2")])
    assert quotient_dimension(I) == 4
    assert count_distinct_points(I) == 2


def test_counting_needs_finite_ideal():
    with pytest.raises(NotZeroDimensionalError):
        count_distinct_points(Ideal([R("x")]))


def test_rational_points_over_prime_field():
    K = GF(13)
    S = ring_of("x y", K)
    I = Ideal([S("x^2 + 1"), S("y - 2*x")])
    # 5^2 = -1 mod 13
    assert sorted(rational_points(I)) == sorted([(K.from_int(5), K.from_int(10)), (K.from_int(8), K.from_int(3))])


# -- brute-force Nullstellensatz agreement over small prime fields ---------

FIELD_SIZES = (2, 3, 5, 7)


def _small_system(p, nvars):
    K = GF(p)
    names = "abcd"[:nvars]
    S = ring_of(" ".join(names), K)
    exps = st.tuples(*[st.integers(0, 2)] * nvars)
    poly = st.dictionaries(exps, st.integers(0, p - 1), min_size=1, max_size=3).map(
        lambda d: sum((S.monomial(e, K.from_int(c)) for e, c in d.items()), S.zero)
    )
    return S, poly


@st.composite
def systems(draw):
    p = draw(st.sampled_from(FIELD_SIZES))
    n = draw(st.integers(1, 4 if p <= 5 else 3))
    S, poly = _small_system(p, n)
    gens = draw(st.lists(poly, min_size=1, max_size=3))
    f = draw(poly)
    return p, S, gens, f


def _field_equations(S, p):
    return [S.var(n) ** p - S.var(n) for n in S.names]


@settings(max_examples=60)
@given(systems())
def test_nullstellensatz_agrees_with_enumeration(case):
    p, S, gens, f = case
    K = S.field
    # adding x^p - x makes V(I) the F_p-points, so the algebra must match enumeration
    J = Ideal(list(gens) + _field_equations(S, p), S)
    pts = [pt for pt in points(p, S.nvars) if vanish_all(gens, K, [K.from_int(c) for c in pt])]
    assert J.is_unit() == (not pts)
    assert count_distinct_points(J) == len(pts)
    vanishes = all(K.is_zero(f.evaluate([K.from_int(c) for c in pt])) for pt in pts)
    assert radical_membership(f, J) == vanishes


@settings(max_examples=40)
@given(systems())
def test_saturation_is_idempotent(case):
    p, S, gens, f = case
    if f.is_zero:
        return
    I = Ideal(gens, S)
    once = saturate(I, f)
    twice = saturate(once, f)
    assert ideals_equal(once, twice)
    # and it contains the original ideal
    assert all(ideal_membership(g, once) for g in I.generators)


def test_squarefree_part_in_small_characteristic():
    from qdfcheck.univariate import poly_mul, squarefree_part

    K = GF(7)
    f = [K.one, K.zero, K.one]  # x^2 + 1
    power = [K.one]
    for _ in range(7):
        power = poly_mul(K, power, f)
    assert squarefree_part(K, power) == f
    # x^7 - x splits into seven distinct linear factors
    g = [K.zero, K.neg(K.one)] + [K.zero] * 5 + [K.one]
    assert squarefree_part(K, g) == g
