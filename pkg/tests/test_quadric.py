from __future__ import annotations

import pytest
import sympy

from qdfcheck import model
from qdfcheck import quadric as qb
from qdfcheck.errors import PreconditionError
from qdfcheck.fields import GF, QQ
from qdfcheck.ideal import Ideal, quotient_dimension
from qdfcheck.poly import PolyRing, VariableSet

from .oracles import to_sympy

RING = PolyRing(VariableSet(qb.BASE + qb.FIBER), QQ)


def _special():
    return qb.extract_matrix(model.special_equation().to_ring(RING))


def test_extract_special_fiber():
    Q = _special()
    B = Q.ring
    assert (Q.c, Q.F1, Q.F2, Q.F3, Q.G1, Q.G2) == (B.one, B("x*y"), B.zero, B("x*z"), B.zero, B.zero)
    assert Q.H == B(f"y*z*({model.QUARTIC})")
    assert Q.reassemble(RING) == model.special_equation().to_ring(RING)


def test_cross_term_with_s_rejected():
    with pytest.raises(PreconditionError):
        qb.extract_matrix(RING("s*t + t^2"))


def test_profile_violation_rejected():
    with pytest.raises(PreconditionError):
        qb.extract_matrix(RING("s^2 + x*t^2 + y*z*u^2"))


def test_determinant_matches_sympy_in_indeterminates():
    Q = qb.indeterminate_form(QQ)
    c, F1, F2, F3, G1, G2, H = sympy.symbols("c F1 F2 F3 G1 G2 H")
    M = sympy.Matrix([[c, 0, 0, 0], [0, F1, F2, G1], [0, F2, F3, G2], [0, G1, G2, H]])
    D = qb.degeneracy_determinant(Q)
    assert sympy.expand(to_sympy(D.D) - M.det()) == 0
    assert D.matches_closed_form


def test_special_degeneracy_curve():
    D = qb.degeneracy_determinant(_special())
    assert D.degree == 8 and D.matches_closed_form
    B = D.D.ring
    assert D.D == B(f"x^2*y^2*z^2*({model.QUARTIC})")


def test_diagonal_degree_additivity():
    B = qb.base_ring(QQ)
    z = B.zero
    Q = qb.QuadricBundleForm(B("3"), B("x^2 + y*z"), z, B("y^2"), z, z, B("x^4 + z^4"))
    D = qb.degeneracy_determinant(Q)
    assert D.degree == 0 + 2 + 2 + 4 == 8


def test_tangency_congruence():
    assert qb.tangency_congruence(qb.indeterminate_form(QQ))
    assert qb.tangency_congruence(_special())


@pytest.mark.parametrize("seed", [0, 1, 2])
def test_generic_tangency_count(seed):
    tc = qb.tangency_count(qb.random_form(GF(10007), seed))
    assert (tc.length, tc.points) == (32, 16)


def test_random_form_is_reproducible():
    K = GF(10007)
    assert qb.random_form(K, 5) == qb.random_form(K, 5)
    assert qb.random_form(K, 5) != qb.random_form(K, 6)


def test_each_tangency_point_has_multiplicity_two():
    K = GF(10007)
    Q = qb.random_form(K, 0)
    C = qb.conic_discriminant(Q)
    D = qb.degeneracy_determinant(Q).D
    R2 = PolyRing(VariableSet(("x", "y")), K)
    I = Ideal([C.subs({"z": 1}, ring=R2), D.subs({"z": 1}, ring=R2)], R2)
    from qdfcheck.ideal import count_distinct_points

    # length twice the number of points, with every point counted once
    assert quotient_dimension(I) == 2 * count_distinct_points(I)


def test_special_fiber_count_rejected():
    with pytest.raises(PreconditionError):
        qb.tangency_count(qb.extract_matrix(model.special_equation(GF(10007)).to_ring(
            PolyRing(VariableSet(qb.BASE + qb.FIBER), GF(10007)))))


def test_parameter_arithmetic():
    a = qb.parameter_arithmetic()
    assert a["binom_8_4"] == 70
    assert a["linear_series"] == 53
    assert a["moduli"] == 34
