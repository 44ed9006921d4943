"""The equations and named loci of the special quartic double fourfold.

Everything here is generated from one master string for the special fiber so
that chart equations are never copied by hand. Rings are built on demand for
a requested coefficient field.
"""

from __future__ import annotations

from .fields import QQ, Field
from .poly import PolyRing, Polynomial, VariableSet

QUARTIC = "x^2 + y^2 + z^2 - 2*(x*y + x*z + y*z)"

# the special fiber inside the projectivized bundle
SPECIAL = f"s^2 + x*y*t^2 + x*z*u^2 + y*z*({QUARTIC})*v^2"

# the double fourfold in P(2,1,1,1,1,1) before absorbing squares
CANDIDATE = f"s^2 + x*y*t^2 + x*z*u^2 + y*z*({QUARTIC})"

# the same form with squares absorbed into new fiber coordinates
ABSORBED = f"y*z*s^2 + x*z*t1^2 + x*y*u1^2 + ({QUARTIC})*v1^2"

BUNDLE_NAMES = ("x", "y", "z", "s", "t", "u", "v")
BUNDLE_BIGRADE = ((1, 0), (1, 0), (1, 0), (1, 1), (0, 1), (0, 1), (-1, 1))
BASE_NAMES = ("x", "y", "z")
FIBER_NAMES = ("s", "t", "u", "v")

WEIGHTED_NAMES = ("s", "x", "y", "z", "t", "u")
WEIGHTED_WEIGHTS = (2, 1, 1, 1, 1, 1)

# singular curves of the special fiber, as bundle ideals
COMPONENTS = {
    "E_z": ("v^2*y*(y - x)^2 + u^2*x", "z", "s", "t"),
    "E_y": ("v^2*z*(z - x)^2 + t^2*x", "y", "s", "u"),
    "R_x": ("u^2 - 4*v^2 + t^2", "x", "z - y", "s"),
    "C_x": ("z*u^2 + y*t^2", "s", "v", "x"),
}

# nodes of the two singular cubics
NODES = {
    "n_z": ("z", "s", "t", "y - x", "u"),
    "n_y": ("y", "s", "u", "z - x", "t"),
}

# distinguished points as (base, fiber) coordinates; "i" and "-i" stand for
# a square root of -1 in the working field
POINTS = {
    "q_x": ((1, 0, 0), (0, 0, 0, 1)),
    "q_y": ((0, 1, 0), (0, 0, 1, 0)),
    "q_z": ((0, 0, 1), (0, 1, 0, 0)),
    "r_+": ((0, 1, 1), (0, 1, "-i", 0)),
    "r_-": ((0, 1, 1), (0, 1, "i", 0)),
    "n_z": ((1, 1, 0), (0, 0, 0, 1)),
    "n_y": ((1, 0, 1), (0, 0, 0, 1)),
}

# which pairs of curves meet, and where
INCIDENCES = {
    ("E_z", "E_y"): ("q_x",),
    ("E_z", "C_x"): ("q_y",),
    ("E_y", "C_x"): ("q_z",),
    ("R_x", "C_x"): ("r_+", "r_-"),
    ("R_x", "E_z"): (),
    ("R_x", "E_y"): (),
}


def bundle_ring(field: Field = QQ) -> PolyRing:
    return PolyRing(VariableSet(BUNDLE_NAMES, None, BUNDLE_BIGRADE), field)


def weighted_ring(field: Field = QQ) -> PolyRing:
    return PolyRing(VariableSet(WEIGHTED_NAMES, WEIGHTED_WEIGHTS), field)


def special_equation(field: Field = QQ) -> Polynomial:
    return bundle_ring(field)(SPECIAL)


def candidate_equation(field: Field = QQ) -> Polynomial:
    """The double fourfold ``s^2 + f(x, y, z, t, u)`` with the special quartic."""
    return weighted_ring(field)(CANDIDATE)


def homogenize_candidate(field: Field = QQ) -> Polynomial:
    """The candidate with ``v`` inserted to make it bihomogeneous in the bundle.

    Only the term free of ``t``, ``u`` and ``s`` has fiber degree 0, so it
    picks up ``v^2``.
    """
    R = bundle_ring(field)
    p = candidate_equation(field).to_ring(R)
    v2 = R("v^2")
    out = R.zero
    for m, c in p.items():
        term = R.monomial(m, c)
        out = out + (term if term.bidegree()[1] == 2 else term * v2)
    return out


def absorbed_equation(field: Field = QQ) -> Polynomial:
    R = PolyRing(VariableSet(("x", "y", "z", "s", "t1", "u1", "v1")), field)
    return R(ABSORBED)


def component_ideal_gens(name: str, field: Field = QQ):
    R = bundle_ring(field)
    gens = COMPONENTS.get(name) or NODES[name]
    return [R(g) for g in gens]


def involution(p: Polynomial) -> Polynomial:
    """The symmetry exchanging ``y <-> z`` and ``t <-> u``."""
    R = p.ring
    swap = {"y": "z", "z": "y", "t": "u", "u": "t"}
    return p.subs({a: R.var(b) for a, b in swap.items() if a in R.index and b in R.index})


def point_values(name: str, field: Field):
    """Bundle coordinates of a named point as field elements."""
    base, fiber = POINTS[name]
    return tuple(field_value(c, field) for c in base + fiber)


def field_value(c, field: Field):
    if isinstance(c, int):
        return field.from_int(c)
    if c in ("i", "-i"):
        i = field.sqrt_minus_one()
        if i is None:
            from .errors import FieldError

            raise FieldError(f"{field.label} has no square root of -1")
        return i if c == "i" else field.neg(i)
    return c
