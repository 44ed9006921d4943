"""The shipped claim registry."""

from __future__ import annotations

import fnmatch

from .base import Claim
from .charts import suites

_C = "qdfcheck.claims.checks"

_STATIC = [
    Claim("ID-BIRATIONAL", "candidate double fourfold and its absorbed form",
          "t1=yt, u1=zu, v1=yzv turns the absorbed form into yz times the homogenized candidate",
          f"{_C}:birational_identity", fields="exact", expected="identity",
          inputs="candidate, absorbed form"),
    Claim("SL-S-CHART", "weighted model; singular along the quartic",
          "s lies in the radical of the Jacobian ideal in every weight-one chart and every bundle chart",
          f"{_C}:s_chart_exclusion", fields="any", expected="s in radical",
          inputs="candidate; special fiber"),
    Claim("SL-SPECIAL-COMPONENTS", "singular locus of the special fiber: component list",
          "the singular locus is E_z + E_y + R_x + C_x in all nine bundle charts",
          f"{_C}:special_components", fields="any", expected="equal radicals",
          inputs="special fiber; E_z, E_y, R_x, C_x"),
    Claim("SL-SPECIAL-DIM", "singular locus of the special fiber is a curve",
          "the singular locus and each component have dimension 1 in every chart",
          f"{_C}:special_dimension", fields="any", expected="dim 1", inputs="special fiber"),
    Claim("SL-SPECIAL-CONNECTED", "singular locus of the special fiber is connected",
          "the incidence graph of E_z, E_y, R_x, C_x is connected",
          f"{_C}:special_connected", fields="any", expected="connected", inputs="E_z, E_y, R_x, C_x"),
    Claim("PTS-INCIDENCE", "intersection points q_x, q_y, q_z, r_+-, nodes n_z, n_y",
          "pairwise intersections and the nodes of E_z, E_y are exactly the listed points",
          f"{_C}:incidence_points", fields="i", expected="q_x, q_y, q_z, r_+, r_-, n_z, n_y; R_x misses E_z, E_y",
          inputs="component ideals, named points"),
    Claim("NF-QX", "analysis near q_x: completion of squares",
          "s1^2 + y*t1^2 + z*u1^2 + y*z = s1^2 + y1*z1 - t1^2*u1^2 with y1=y+u1^2, z1=z+t1^2",
          f"{_C}:qx_identity", fields="exact", expected="identity", inputs="chart x=1, v=1"),
    Claim("NF-NORMAL1", "main normal form a^2+b^2+c^2=p^2q^2",
          "singular exactly along {a=b=c=p=0} and {a=b=c=q=0}",
          f"{_C}:normal1_locus", fields="exact", expected="two lines", inputs="a^2+b^2+c^2-p^2*q^2"),
    Claim("NF-NORMAL1-RES", "main normal form: resolution in either order",
          "blowing up the two lines in either order gives smooth charts",
          f"{_C}:normal1_resolution", fields="exact", expected="smooth", inputs="a^2+b^2+c^2-p^2*q^2"),
    Claim("NF-NORMAL2-FACTOR", "normal form with branches of one curve",
          "(m-nw)(m+nw) = m^2-n^2-n^3 modulo w^2-n-1",
          f"{_C}:normal2_factor", fields="exact", expected="identity", inputs="Q[m,n,w]"),
]

_QB = [
    Claim("QB-MATRIX", "special fiber as a quadric bundle",
          "the symmetric matrix of the special fiber is diag(1) + [[xy,0,0],[0,xz,0],[0,0,yzQ]]",
          f"{_C}:qb_matrix", fields="exact", expected="c=1, F1=xy, F2=0, F3=xz, G=0, H=yzQ",
          inputs="special fiber"),
    Claim("QB-DET-FORM", "degeneracy divisor closed form",
          "det equals c((F1F3-F2^2)H - F3G1^2 + 2F2G1G2 - F1G2^2)",
          f"{_C}:qb_det_form", fields="exact", expected="identity", inputs="indeterminate entries; special fiber"),
    Claim("QB-DEGREE-8", "degeneracy divisor has degree 8",
          "D is homogeneous of degree 8; for the special fiber D = x^2 y^2 z^2 Q",
          f"{_C}:qb_degree", fields="exact", expected="8", inputs="special fiber; seeded form"),
    Claim("QB-TANGENCY-IDENT", "D tangent to the quartic C = F1F3 - F2^2",
          "D restricted to C is minus a square, up to F1 or F3",
          f"{_C}:qb_tangency_identity", fields="exact", expected="identity", inputs="indeterminate entries"),
    Claim("QB-TANGENCY-1632", "D meets C at 16 points",
          "for a seeded generic form, C and D meet with total length 32 in 16 distinct points",
          f"{_C}:qb_tangency_count", fields="prime", expected="(32, 16)", inputs="random_form(seed)"),
    Claim("PARAM-53", "dimension of the linear series",
          "C(8,4) - 5 - 12 = 53", f"{_C}:param_series", fields="exact", expected="53"),
    Claim("PARAM-34", "number of free parameters",
          "14 + 44 - 16 - 8 = 34", f"{_C}:param_moduli", fields="exact", expected="34"),
    Claim("RESOLUTION-PIPELINE", "summary of the resolution",
          "blowup order, symmetry, both normal-form orders, permuted final pair, nine nodes",
          f"{_C}:resolution_pipeline", fields="prime-i", expected="R_z, R_y, E_z, E_y, C_x, R_x; 9 nodes",
          inputs="special fiber; chart y=1, u=1; node blowups"),
]

# claim ids -> paper items they cover
COVERAGE = {
    "weighted hypersurface model": ("SL-S-CHART",),
    "candidate and absorbed form": ("ID-BIRATIONAL",),
    "parameter counts": ("PARAM-53", "PARAM-34"),
    "symmetric matrix extraction": ("QB-MATRIX",),
    "degeneracy divisor and tangency": ("QB-DET-FORM", "QB-DEGREE-8", "QB-TANGENCY-IDENT", "QB-TANGENCY-1632"),
    "singular locus and incidence points": (
        "SL-SPECIAL-COMPONENTS",
        "SL-SPECIAL-DIM",
        "SL-SPECIAL-CONNECTED",
        "PTS-INCIDENCE",
    ),
    "normal forms": ("NF-NORMAL1", "NF-NORMAL1-RES", "NF-NORMAL2-FACTOR"),
    "local chart computations": ("CHART-CX-UZ-1", "CHART-CX-UY-1", "CHART-NZ-1", "CHART-RZ-1", "NF-QX", "CHART-RX-DERIVED"),
    "resolution summary": ("RESOLUTION-PIPELINE",),
}


def _chart_claims():
    out = []
    for suite in suites():
        if suite.get("claim") == "CHART-RX-DERIVED":
            out.append(
                Claim("CHART-RX-DERIVED", suite["location"],
                      "charts of the R_x blowup generated from its center",
                      "qdfcheck.claims.charts:check_suite", (suite["name"],), "prime-i",
                      "; ".join(f"{e['id'].split('/')[-1]}: {e['expect']['verdict']}" for e in suite["charts"]),
                      "center " + ", ".join(suite["center"]))
            )
            continue
        if suite.get("claim"):
            continue
        for e in suite["charts"]:
            exp = e["expect"]
            expected = exp["verdict"]
            if expected == "odp":
                expected = f"odp: {exp['points']} points of rank {exp['rank']} on {exp['on']}"
            elif expected == "singular-curve":
                expected = f"singular along {', '.join(exp['locus'])}"
            out.append(
                Claim(e["id"], f"{suite['location']}, chart {e['index'] + 1}",
                      f"{suite['name']} chart {e['index'] + 1}", "qdfcheck.claims.charts:check_chart",
                      (e["id"],), "prime-i", expected, "center " + ", ".join(suite["center"]))
            )
    return out


def list_claims() -> list:
    claims = _STATIC + _chart_claims() + _QB
    return claims


def get_claim(claim_id: str) -> Claim:
    for c in list_claims():
        if c.id == claim_id:
            return c
    raise KeyError(claim_id)


def select(patterns) -> list:
    """Claims whose id matches any glob pattern (all claims when empty)."""
    claims = list_claims()
    if not patterns:
        return claims
    return [c for c in claims if any(fnmatch.fnmatchcase(c.id, p) for p in patterns)]
