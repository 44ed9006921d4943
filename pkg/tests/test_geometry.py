from __future__ import annotations

import random

import pytest

from qdfcheck import model
from qdfcheck.errors import NotZeroDimensionalError
from qdfcheck.fields import GF, QQ
from qdfcheck.geometry import (
    SubschemeClaim,
    blowup_charts,
    bundle_atlas,
    bundle_chart,
    hessian_rank_at_point,
    singular_locus_ideal,
    smoothness_certificate,
    strict_transform,
    verify_decomposition,
    verify_point_set,
    verify_substitution_identity,
    weighted_atlas,
    weighted_chart,
)
from qdfcheck.geometry.blowup import center_images_divisible, strict_presentation
from qdfcheck.geometry.charts import ChartError
from qdfcheck.geometry.resolve import blow_up_in_sequence, certify_sequence, fiber_quadric_rank
from qdfcheck.ideal import Ideal, ideal_membership, ideals_equal, radical_membership
from qdfcheck.poly import ring_of

from .oracles import points

K5 = GF(5)


# -- charts --------------------------------------------------------------------


def test_weighted_atlas_skips_weight_two():
    assert [c.name for c in weighted_atlas()] == ["x=1", "y=1", "z=1", "t=1", "u=1"]
    with pytest.raises(ChartError):
        weighted_chart("s")


def test_bundle_atlas_has_nine_charts():
    names = [c.name for c in bundle_atlas()]
    assert len(names) == 9 and "x=1,v=1" in names


def test_bundle_point_uses_the_twist():
    # scaling the base by lam multiplies v by lam^-1 and s by lam
    K = GF(10009)
    ch = bundle_chart("x", "v", K)
    pt = [K.from_int(c) for c in (2, 2, 0, 0, 0, 0, 1)]
    assert ch.point(pt) == tuple(K.from_int(c) for c in (1, 0, 0, 0, 0))


# -- singular loci -----------------------------------------------------------------


def test_double_cover_locus_lies_in_s_zero():
    ch = weighted_chart("x")
    F = ch.dehomogenize(model.candidate_equation())
    sing = singular_locus_ideal([F], ch)
    assert ideal_membership(ch.ring("2*s"), sing)


def test_odp_normal_form_locus_is_origin():
    R = ring_of("a b c d", QQ)
    sing = singular_locus_ideal([R("a^2 + b^2 + c*d")])
    assert all(radical_membership(R(v), sing) for v in "abcd")


def test_hyperplane_is_smooth():
    R = ring_of("x y", QQ)
    assert singular_locus_ideal([R("x")]).is_unit()


def _components(ch, K, names=("E_z", "E_y", "R_x", "C_x")):
    return [
        SubschemeClaim(n, Ideal([ch.dehomogenize(g) for g in model.component_ideal_gens(n, K)], ch.ring), 1)
        for n in names
    ]


def test_decomposition_in_chart_y_u():
    K = GF(10007)
    ch = bundle_chart("y", "u", K)
    sing = singular_locus_ideal([ch.dehomogenize(model.special_equation(K))], ch)
    assert verify_decomposition(sing, _components(ch, K)).ok


def test_decomposition_detects_missing_component():
    K = GF(10007)
    ch = bundle_chart("y", "u", K)
    sing = singular_locus_ideal([ch.dehomogenize(model.special_equation(K))], ch)
    rep = verify_decomposition(sing, _components(ch, K, ("E_z", "E_y", "R_x")))
    assert not rep.ok and rep.witness is not None


def test_point_set_examples():
    K = GF(10009)
    R = ring_of("x y", K)
    assert verify_point_set(Ideal([R("x - 1"), R("y")]), [(K.one, K.zero)]).ok
    assert not verify_point_set(Ideal([R("x^2 - 1"), R("y")]), [(K.one, K.zero)]).ok
    with pytest.raises(NotZeroDimensionalError):
        verify_point_set(Ideal([R("x")]), [])


def test_r_plus_minus_as_a_point_set():
    K = GF(10009)
    ch = bundle_chart("y", "u", K)
    gens = [ch.dehomogenize(g) for n in ("R_x", "C_x") for g in model.component_ideal_gens(n, K)]
    pts = [ch.point(model.point_values(n, K)) for n in ("r_+", "r_-")]
    assert verify_point_set(Ideal(gens, ch.ring), pts).ok


# -- brute force over F_5 -------------------------------------------------------


@pytest.mark.parametrize("chart", bundle_atlas(K5), ids=lambda c: c.name)
def test_singular_points_match_components_over_f5(chart):
    """Every F_5 point of the chart: singular iff on a claimed component."""
    F = chart.dehomogenize(model.special_equation(K5))
    checks = [F] + [F.diff(n) for n in chart.ring.names]
    comps = [[chart.dehomogenize(g) for g in model.component_ideal_gens(n, K5)] for n in ("E_z", "E_y", "R_x", "C_x")]
    for pt in points(5, chart.ring.nvars):
        vals = [K5.from_int(c) for c in pt]
        singular = all(K5.is_zero(f.evaluate(vals)) for f in checks)
        on_curve = any(all(K5.is_zero(g.evaluate(vals)) for g in comp) for comp in comps)
        assert singular == on_curve, pt


def test_singularity_agrees_on_chart_overlaps():
    K = GF(10007)
    rng = random.Random(1)
    atlas = bundle_atlas(K)
    F = model.special_equation(K)
    amb = F.ring
    # sample points on the components, plus random points
    samples = []
    for _ in range(60):
        samples.append([K.from_int(rng.randrange(1, 50)) for _ in amb.names])
    for t in range(1, 30):
        # points of R_x: x=0, y=z, s=0, u^2 + t^2 = 4 v^2
        tt, vv = K.from_int(t), K.from_int(1)
        u2 = K.sub(K.mul(K.from_int(4), K.mul(vv, vv)), K.mul(tt, tt))
        r = [a for a in range(K.p) if K.mul(K.from_int(a), K.from_int(a)) == u2][:1]
        if r:
            samples.append([K.zero, K.one, K.one, K.zero, tt, K.from_int(r[0]), vv])
    for pt in samples:
        verdicts = set()
        for ch in atlas:
            local = ch.point(pt)
            if local is None:
                continue
            f = ch.dehomogenize(F)
            polys = [f] + [f.diff(n) for n in ch.ring.names]
            verdicts.add(all(K.is_zero(g.evaluate(local)) for g in polys))
        assert len(verdicts) <= 1, pt


# -- blowups ----------------------------------------------------------------------


def test_node_blowup_t_chart_substitution():
    ch = bundle_chart("x", "v")
    F = ch.dehomogenize(model.special_equation())
    R = ch.ring
    center = [R(g) for g in ("s", "t", "z", "y - 1", "u")]
    T, _ = blowup_charts(center, [F])[1]
    assert T.exceptional == T.ring("t")
    want = {"s": "s1*t", "u": "u1*t", "z": "z1*t", "y": "y1*t + 1"}
    assert {k: v for k, v in T.substitution.items()} == {k: T.ring(v) for k, v in want.items()}


def test_normal_form_first_blowup():
    R = ring_of("a b c p q", QQ)
    f = R("a^2 + b^2 + c^2 - p^2*q^2")
    T, total = blowup_charts([R(v) for v in "abcp"], [f])[3]
    pres = strict_presentation(total, T.exceptional)
    assert pres.equations == [T.ring("a1^2 + b1^2 + c1^2 - q^2")]


def test_single_generator_center_is_identity():
    R = ring_of("x y", QQ)
    T, total = blowup_charts([R("x")], [R("x*y")])[0]
    assert T.substitution == {} and T.exceptional == R("x") and total == [R("x*y")]


def test_strict_transform_is_saturation():
    R = ring_of("x e", QQ)
    S = strict_transform([R("x*e")], R("e"))
    assert ideals_equal(S, Ideal([R("x")]))
    assert ideals_equal(strict_transform(S.generators, R("e")), S)


def test_center_images_divisible_in_every_chart():
    ch = bundle_chart("z", "u")
    F = ch.dehomogenize(model.special_equation())
    center = [ch.ring(g) for g in ("y*t^2 + 1", "x", "s", "v")]
    for T, _ in blowup_charts(center, [F]):
        assert center_images_divisible(T)


def test_c_x_chart_s_is_smooth():
    K = GF(10007)
    ch = bundle_chart("z", "u", K)
    F = ch.dehomogenize(model.special_equation(K))
    center = [ch.ring(g) for g in ("y*t^2 + 1", "x", "s", "v")]
    T, total = blowup_charts(center, [F])[2]
    pres = strict_presentation(total, T.exceptional, T.relations)
    assert smoothness_certificate(pres.equations, along=T.exceptional).smooth


def test_sphere_is_smooth():
    R = ring_of("x y z", QQ)
    cert = smoothness_certificate([R("x^2 + y^2 + z^2 - 1")])
    assert cert.smooth and cert.verdict == "smooth"


def test_cone_is_not_smooth():
    R = ring_of("x y z", QQ)
    cert = smoothness_certificate([R("x^2 + y^2 - z^2")])
    assert not cert.smooth


def test_normal_form_resolves_in_both_orders():
    R = ring_of("a b c p q", QQ)
    f = R("a^2 + b^2 + c^2 - p^2*q^2")
    P, Q = [R(v) for v in "abcp"], [R(v) for v in "abcq"]
    for centers in ([P, Q], [Q, P]):
        assert certify_sequence(blow_up_in_sequence([f], centers)).smooth
    # one blowup is not enough
    assert not certify_sequence(blow_up_in_sequence([f], [P])).smooth


def test_fiber_quadric_ranks():
    R = ring_of("a b c p q", QQ)
    f = R("a^2 + b^2 + c^2 - p^2*q^2")
    assert fiber_quadric_rank(f, list("abcp"), {"q": QQ.one}) == 4
    assert fiber_quadric_rank(f, list("abcp"), {"q": QQ.zero}) == 3


# -- Hessian ranks -----------------------------------------------------------------


def test_hessian_of_odp_normal_form():
    R = ring_of("a b c d", QQ)
    h = hessian_rank_at_point([R("a^2 + b^2 + c*d")], (0, 0, 0, 0), threshold=4)
    assert h.rank == 4 and h.odp


def test_hessian_of_degenerate_quadric():
    R = ring_of("a b c d", QQ)
    h = hessian_rank_at_point([R("a^2 + b^2")], (0, 0, 0, 0), threshold=4)
    assert h.rank == 2 and not h.odp


def test_hessian_at_r_z_double_point():
    K = GF(10009)
    R = ring_of("s2 t2 z2 y1", K)
    f = R("s2^2 + t2^2 - 4*z2^2 + z2*(1 + y1^2)")
    i = K.sqrt_minus_one()
    h = hessian_rank_at_point([f], (K.zero, K.zero, K.zero, i), threshold=4)
    assert h.rank == 4 and h.odp


# -- substitution identities ---------------------------------------------------------


def test_birational_substitution_identity():
    R = model.bundle_ring().extend(["t1", "u1", "v1"])
    lhs = model.absorbed_equation().to_ring(R)
    rhs = model.homogenize_candidate().to_ring(R)
    assert verify_substitution_identity(lhs, rhs, {"t1": R("y*t"), "u1": R("z*u"), "v1": R("y*z*v")}, R("y*z"))
    assert not verify_substitution_identity(lhs, rhs, {"t1": R("t"), "u1": R("u"), "v1": R("v")}, R("y*z"))


def test_completion_of_squares_identity():
    R = ring_of("s1 t1 u1 y z y1 z1", QQ)
    lhs = R("s1^2 + y1*z1 - t1^2*u1^2")
    rhs = R("s1^2 + y*t1^2 + z*u1^2 + y*z")
    assert verify_substitution_identity(lhs, rhs, {"y1": R("y + u1^2"), "z1": R("z + t1^2")})


def test_trivial_identity():
    R = ring_of("x", QQ)
    assert verify_substitution_identity(R("x + 1"), R("x + 1"), {})
