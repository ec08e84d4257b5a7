"""Axially anisotropic relativistic Finsler norm and its tensor geometry.

The package evaluates a time-space signature norm F on tangent vectors,
built from a hyperbolic radial profile and an axially skewed angular
profile, together with its unit covector, angular metric, metric tensor
and determinant.  The unit surface of F has constant sectional curvature
-H^2 and the horizontal section of the ratio space constant Gaussian
curvature p^2; both facts are verifiable numerically via the
``indicatrix`` module and the command-line reports.
"""

from .errors import (
    EmptyDomain,
    FinsleroidError,
    NotFutureTimelike,
    OutsideAxialRegion,
    OutsideClosedFormDomain,
    OutsideEtaDomain,
    OutsideRadialDomain,
    PolarAxisSingular,
    StencilOutOfDomain,
    TetradDegenerate,
    ThetaPole,
)
from .frame import (
    FrameComponents,
    Parameters,
    Tetrad,
    TetradValidation,
    frame_components,
    load_configuration,
    projections,
    validate_tetrad,
)
from .kernel import (
    AngleCoords,
    AngularProfile,
    DomainInfo,
    EvalBundle,
    QuadratureDeltas,
    angles_from_vector,
    angular_profile,
    domain_info,
    eta_from_r,
    finsler_norm,
    oracle_quadrature,
    structural_profile,
    theta_from_f,
    theta_pole,
    vector_from_angles,
)
from .tensors import (
    AngleGradients,
    TensorBundle,
    angle_gradients,
    angular_metric,
    angular_metric_angle_form,
    covector_to_natural,
    finsleroid3_metric,
    metric_determinant_closed,
    metric_tensor,
    metric_tensor_numeric,
    tensor_to_natural,
    unit_covector,
)
from .indicatrix import (
    IndicatrixBundle,
    indicatrix_bundle,
    indicatrix_curvature,
    indicatrix_metric,
    section_curvature,
    unit_vector,
    unit_vector_angle_derivatives,
)
from .limits import (
    ClosedFormConstants,
    closed_form_constants,
    isotropic_v_squared,
    pipeline_v_squared,
    reduction_report,
)
from .sampling import sample_angles, sample_vectors

__version__ = "0.1.0"

__all__ = [
    "AngleCoords",
    "AngleGradients",
    "AngularProfile",
    "ClosedFormConstants",
    "DomainInfo",
    "EmptyDomain",
    "EvalBundle",
    "FinsleroidError",
    "FrameComponents",
    "IndicatrixBundle",
    "NotFutureTimelike",
    "OutsideAxialRegion",
    "OutsideClosedFormDomain",
    "OutsideEtaDomain",
    "OutsideRadialDomain",
    "Parameters",
    "PolarAxisSingular",
    "QuadratureDeltas",
    "StencilOutOfDomain",
    "TensorBundle",
    "Tetrad",
    "TetradDegenerate",
    "TetradValidation",
    "ThetaPole",
    "angle_gradients",
    "angles_from_vector",
    "angular_metric",
    "angular_metric_angle_form",
    "angular_profile",
    "closed_form_constants",
    "covector_to_natural",
    "domain_info",
    "eta_from_r",
    "finsler_norm",
    "finsleroid3_metric",
    "frame_components",
    "indicatrix_bundle",
    "indicatrix_curvature",
    "indicatrix_metric",
    "isotropic_v_squared",
    "load_configuration",
    "metric_determinant_closed",
    "metric_tensor",
    "metric_tensor_numeric",
    "oracle_quadrature",
    "pipeline_v_squared",
    "projections",
    "reduction_report",
    "sample_angles",
    "sample_vectors",
    "section_curvature",
    "structural_profile",
    "tensor_to_natural",
    "theta_from_f",
    "theta_pole",
    "unit_covector",
    "unit_vector",
    "unit_vector_angle_derivatives",
    "validate_tetrad",
    "vector_from_angles",
]
