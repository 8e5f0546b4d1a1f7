"""Toric domain spectra, growth certificates, mollification pipelines and
barcode-side entropy bookkeeping."""

from .barcode import (
    Bar,
    Barcode,
    EntropyEstimate,
    GrowthSamples,
    bottleneck_distance,
    count_long_bars,
    entropy_estimates,
    sup_dim_below,
    truncate,
)
from .bm_metric import (
    ApproximationLadder,
    LadderRung,
    beps_liminf,
    interleaving_bound,
    log_ratio_bound,
    stability_ineq_check,
)
from .delzant import (
    DelzantPolytope,
    Hamiltonian,
    PolynomialHamiltonian,
    PolytopeFace,
    QuadraticHamiltonian,
    ValidationReport,
    certify_k_bound,
    count_fixed_points,
    counts_to_csv,
    face_gradient,
    hamiltonian_from_json_dict,
    transform_quadratic,
    validate_delzant,
)
from .errors import (
    DegenerateClassWarning,
    DomainError,
    ExtensionUnavailableError,
    IncompleteEnumerationWarning,
    InconsistentSurfaceError,
    InsufficientDataError,
    InvalidComplexError,
    InvalidParameterError,
    MarginError,
    NoRegularPerturbationError,
    PreconditionError,
    SmoothingFailureError,
    SpectralValueError,
    ToricLabError,
    UnsupportedOperationError,
)
from .filtered_complex import (
    FilteredComplex,
    Generator,
    bars_vs_generators,
    rank_oracle,
    reduce_complex,
)
from .mollify import (
    HomogeneousField,
    MollifiedField,
    MollificationReport,
    build_field,
    extract_radial,
    mollification_ladder,
    mollify,
    radial_bound,
    uniform_m,
)
from .orbit_enum import (
    BoundCertificate,
    GeneratorCount,
    OrbitClass,
    RegularizationResult,
    RotatedProfile,
    SpectrumResult,
    certify_bound,
    enumerate_spectrum,
    generator_count,
    invert_gauss,
    regularize_analytic,
    spectrum_rows_from_csv,
    spectrum_to_csv,
    support_action,
)
from .toric_geometry import (
    Descriptor,
    Ellipsoid,
    Face,
    MBounds,
    PNormBody,
    QuarterBall,
    RadialGrid,
    RolledDisk,
    ToricDomain,
    TrigProfile,
    gauss_map,
    m_bounds,
    mesh_csv,
    period_coeff,
    simplex_sphere_mesh,
)

__version__ = "0.1.0"

__all__ = [
    "Bar", "Barcode", "EntropyEstimate", "GrowthSamples",
    "bottleneck_distance", "count_long_bars", "entropy_estimates",
    "sup_dim_below", "truncate",
    "ApproximationLadder", "LadderRung", "beps_liminf",
    "interleaving_bound", "log_ratio_bound", "stability_ineq_check",
    "DelzantPolytope", "Hamiltonian", "PolynomialHamiltonian",
    "PolytopeFace", "QuadraticHamiltonian", "ValidationReport",
    "certify_k_bound", "count_fixed_points", "counts_to_csv",
    "face_gradient", "hamiltonian_from_json_dict", "transform_quadratic",
    "validate_delzant",
    "DegenerateClassWarning", "DomainError", "ExtensionUnavailableError",
    "IncompleteEnumerationWarning", "InconsistentSurfaceError",
    "InsufficientDataError", "InvalidComplexError", "InvalidParameterError",
    "MarginError", "NoRegularPerturbationError", "PreconditionError",
    "SmoothingFailureError", "SpectralValueError", "ToricLabError",
    "UnsupportedOperationError",
    "FilteredComplex", "Generator", "bars_vs_generators", "rank_oracle",
    "reduce_complex",
    "HomogeneousField", "MollifiedField", "MollificationReport",
    "build_field", "extract_radial", "mollification_ladder", "mollify",
    "radial_bound", "uniform_m",
    "BoundCertificate", "GeneratorCount", "OrbitClass",
    "RegularizationResult", "RotatedProfile", "SpectrumResult",
    "certify_bound", "enumerate_spectrum", "generator_count",
    "invert_gauss", "regularize_analytic", "spectrum_rows_from_csv",
    "spectrum_to_csv", "support_action",
    "Descriptor", "Ellipsoid", "Face", "MBounds", "PNormBody",
    "QuarterBall", "RadialGrid", "RolledDisk", "ToricDomain", "TrigProfile",
    "gauss_map", "m_bounds", "mesh_csv", "period_coeff",
    "simplex_sphere_mesh",
    "__version__",
]
