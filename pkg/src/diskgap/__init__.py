"""diskgap: scattering by two nearly touching disks in the quasi-static regime."""

from .asymptotics import (
    PowerLawFit,
    Prediction,
    fit_power_law,
    gap_profile_prediction,
    incident_gap_derivative,
    predicted_lambda_gap,
)
from .errors import (
    AccuracyError,
    AsymptoticRangeError,
    CapabilityError,
    ConfigError,
    ConvergenceError,
    DomainError,
    SingularityError,
)
from .geometry import (
    DiskPair,
    FixedPoints,
    RegimeReport,
    fixed_point_distances,
    fixed_points,
    gap_width,
    reflect,
    regime_classify,
)
from .incident import IncidentField
from .solver import (
    BoundaryModel,
    MultipoleSolution,
    SolverOptions,
    assemble_and_solve,
    boundary_flux,
    eval_gradient,
    eval_total_field,
    max_gap_gradient,
    reciprocity_defect,
)

__version__ = "0.1.0"

__all__ = [
    "AccuracyError", "AsymptoticRangeError", "BoundaryModel", "CapabilityError",
    "ConfigError", "ConvergenceError", "DiskPair", "DomainError", "FixedPoints",
    "IncidentField", "MultipoleSolution", "PowerLawFit", "Prediction",
    "RegimeReport", "SingularityError", "SolverOptions", "assemble_and_solve",
    "boundary_flux", "eval_gradient", "eval_total_field", "fit_power_law",
    "fixed_point_distances", "fixed_points", "gap_profile_prediction",
    "gap_width", "incident_gap_derivative", "max_gap_gradient",
    "predicted_lambda_gap", "reciprocity_defect", "reflect", "regime_classify",
    "__version__",
]
