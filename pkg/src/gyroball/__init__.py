"""Relativistic hyperbolic geometry on the s-ball.

Einstein addition, gyrobarycentric coordinates, circumgyrocircles and
their tangent/chord theorems, circumgyrocevians, and the Euclidean
large-s counterparts of each.
"""

from .barycentric import (
    GyroBaryRep,
    evaluate,
    evaluate_weights,
    gamma_between_reps,
    gamma_to_point,
    quad_k,
    rep_constant,
    rep_radicand,
    weights_from_point,
)
from .cevian import (
    CevianDistances,
    cevian_distances,
    cevian_foot,
    chord_power,
    circumcevian,
    circumcevian_length,
    foot_to_circumcevian_distance,
    foot_weights,
    relabel,
)
from .circle import (
    Classification,
    CircleParamPoint,
    circle_point,
    circum_param,
    classify,
    dist_to_circumcenter,
    gyropower,
    inscribed_angle_I,
    inscribed_angle_II,
    k_indicator,
    on_circle_points,
    second_intersection,
    t_indicator,
    tangency_constants,
    tangency_points,
    tangent_length,
    weights_on_circle,
)
from .einstein import (
    DEFAULT_PARAMS,
    ModelParams,
    active_backend,
    as_point,
    einstein_add,
    einstein_add_batch,
    gamma_factor,
    gamma_factor_batch,
    gyroangle,
    gyrodistance,
    gyromidpoint,
    scalar_mul,
)
from .errors import (
    AngleSumNotHyperbolic,
    BoundaryViolation,
    CoincidentPoints,
    CollinearPoints,
    DegenerateConfiguration,
    DegenerateRay,
    DegenerateTriangle,
    DimensionMismatch,
    FrameMismatch,
    GeometryError,
    InteriorPoint,
    NoCircumcircle,
    OutsideBall,
    ParamOutOfRange,
    RenderUnsupportedDimension,
    SceneValidationError,
    SideUndetermined,
    ZeroDenominator,
)
from .euclidean import (
    PowerResiduals,
    circum_param_euc,
    circumcenter_euc,
    circumcevian_euc,
    circumradius_euc,
    classify_euc,
    dist_to_circumcenter_euc,
    evaluate_euc,
    k_indicator_euc,
    limit_gap,
    power_theorems_euc,
    side_lengths,
    t_indicator_euc,
    tangency_points_euc,
    triangle_angles_euc,
    weights_from_point_euc,
)
from .triangle import (
    ExistenceDiagnostics,
    GyroCircle,
    GyroTriangle,
    SideData,
    aaa_to_sss,
    angles_and_defect,
    circum_exists,
    circum_margin,
    circumcenter,
    circumcenter_weights,
    circumcircle_of,
    circumradius,
    circumradius_from_angles,
    d3_h3,
    d3_h3_from_gammas,
    existence_diagnostics,
    extended_gyrosines,
    sides_from_angles_radius,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
