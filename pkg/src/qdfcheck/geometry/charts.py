"""Affine charts of the weighted projective space and of the bundle."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from ..errors import QdfError
from ..model import BASE_NAMES, FIBER_NAMES, bundle_ring, weighted_ring
from ..poly import PolyRing, Polynomial, VariableSet


class ChartError(QdfError):
    pass


@dataclass(frozen=True)
class AmbientChart:
    """An affine chart: the named ambient variables set to 1.

    ``ring`` holds the remaining variables (the chart coordinates) and
    ``ambient`` the homogeneous ring the chart was cut from.
    """

    name: str
    ring: PolyRing
    ambient: PolyRing
    fixed: tuple = ()
    kind: str = field(default="affine", compare=False)

    @property
    def coordinates(self):
        return self.ring.names

    def dehomogenize(self, p: Polynomial) -> Polynomial:
        return p.subs({n: 1 for n in self.fixed}, ring=self.ring)

    def point(self, values):
        """Chart coordinates of an ambient point, or None if it lies off the chart."""
        if self.kind == "bundle":
            return _bundle_point(self, values)
        if self.kind == "weighted":
            return _weighted_point(self, values)
        return tuple(values)

    def __str__(self):
        return self.name


def affine_chart(ring: PolyRing, name: str = "affine") -> AmbientChart:
    return AmbientChart(name, ring, ring, ())


def bundle_chart(base: str, fiber: str, field=None) -> AmbientChart:
    """The chart ``base=1, fiber=1`` of the projectivized bundle."""
    amb = bundle_ring(field) if field is not None else bundle_ring()
    if base not in BASE_NAMES or fiber not in FIBER_NAMES:
        raise ChartError(f"no chart {base}=1,{fiber}=1")
    keep = [n for n in amb.names if n not in (base, fiber)]
    bg = amb.variables.bigrade
    ring = PolyRing(
        VariableSet(tuple(keep), None, tuple(bg[amb.index[n]] for n in keep)),
        amb.field,
        amb.order,
    )
    return AmbientChart(f"{base}=1,{fiber}=1", ring, amb, (base, fiber), "bundle")


def bundle_atlas(field=None, fibers=("t", "u", "v")):
    """The nine charts with one base and one fiber variable set to 1.

    The fiber coordinate ``s`` is left out: no singular point has ``s != 0``.
    """
    return [bundle_chart(b, f, field) for b, f in product(BASE_NAMES, fibers)]


def weighted_chart(var: str, field=None) -> AmbientChart:
    amb = weighted_ring(field) if field is not None else weighted_ring()
    w = amb.variables.weights[amb.index[var]]
    if w != 1:
        raise ChartError(f"{var} has weight {w}; only weight-1 variables give affine charts")
    ring = amb.drop([var])
    return AmbientChart(f"{var}=1", ring, amb, (var,), "weighted")


def weighted_atlas(field=None):
    amb = weighted_ring(field) if field is not None else weighted_ring()
    return [weighted_chart(n, field) for n, w in zip(amb.names, amb.variables.weights) if w == 1]


def _bundle_point(chart: AmbientChart, values):
    amb = chart.ambient
    K = amb.field
    vals = dict(zip(amb.names, values))
    base, fiber = chart.fixed
    b = vals[base]
    if K.is_zero(b):
        return None
    lam = K.inv(b)
    bg = amb.variables.bigrade
    # rescaling the base by lam acts on a fiber coordinate by lam^(base degree)
    scaled = {}
    for n in amb.names:
        d = bg[amb.index[n]][0] if n in FIBER_NAMES else 1
        scaled[n] = K.mul(vals[n], K.power(lam, d))
    f = scaled[fiber]
    if K.is_zero(f):
        return None
    mu = K.inv(f)
    for n in FIBER_NAMES:
        scaled[n] = K.mul(scaled[n], mu)
    return tuple(scaled[n] for n in chart.ring.names)


def _weighted_point(chart: AmbientChart, values):
    amb = chart.ambient
    K = amb.field
    vals = dict(zip(amb.names, values))
    (var,) = chart.fixed
    a = vals[var]
    if K.is_zero(a):
        return None
    lam = K.inv(a)
    w = dict(zip(amb.names, amb.variables.weights))
    return tuple(K.mul(vals[n], K.power(lam, w[n])) for n in chart.ring.names)
