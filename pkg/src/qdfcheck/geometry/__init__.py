"""Charts, singular loci, blowups and smoothness checks."""

from .blowup import ChartTransform, blowup_charts, presentation, strict_transform
from .charts import AmbientChart, affine_chart, bundle_atlas, bundle_chart, weighted_atlas, weighted_chart
from .resolve import ChartState, SequenceVerdict, blow_up_in_sequence, certify_sequence, fiber_quadric_rank
from .singular import (
    SubschemeClaim,
    jacobian_minors,
    singular_locus_ideal,
    verify_decomposition,
    verify_point_set,
)
from .smooth import (
    SmoothnessCertificate,
    hessian_rank_at_point,
    smoothness_certificate,
    verify_substitution_identity,
)

__all__ = [
    "AmbientChart",
    "ChartState",
    "ChartTransform",
    "SmoothnessCertificate",
    "SequenceVerdict",
    "SubschemeClaim",
    "affine_chart",
    "blowup_charts",
    "bundle_atlas",
    "blow_up_in_sequence",
    "bundle_chart",
    "certify_sequence",
    "fiber_quadric_rank",
    "hessian_rank_at_point",
    "jacobian_minors",
    "presentation",
    "singular_locus_ideal",
    "smoothness_certificate",
    "strict_transform",
    "verify_decomposition",
    "verify_point_set",
    "verify_substitution_identity",
    "weighted_atlas",
    "weighted_chart",
]
