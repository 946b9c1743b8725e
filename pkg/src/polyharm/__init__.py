"""Truncated coefficient-table representations of planar polyharmonic
mappings, with numeric verification of their geometric inequalities."""

from .core import (CoefficientTable, DilatationPair, PolyharmonicMap,
                   build_map, conjugate_map, dilatation, evaluate, jacobian,
                   polyharmonic_residual, quasiregularity_constant, scale_map,
                   wirtinger)
from .geometry import (RadiusProfile, area_growth_excess, area_profile,
                       area_quadrature, area_series, curve_length,
                       diameter_estimate, length_profile, phi_area,
                       phi_area_profile, sup_length)
from .certificates import (CheckReport, Margin, area_schwarz, arg_condition,
                           diameter_coefficient_bounds,
                           hadamard_three_circles, length_coefficient_bounds,
                           three_circles_area)
from .landau import (LandauResult, landau_from_diameter, landau_from_length,
                     landau_fourgon, least_positive_root)
from .metrics import (DiskDomain, LipschitzReport, PairSampler,
                      contraction_check, harmonic_lipschitz_check, j_metric,
                      mobius_j_distortion, psi_profile)
from .catalog import BUILTIN_NAMES, Form37Params, builtin, fourgon_coefficients
from .mapspec import MappingSpec, digest, from_map
from . import errors

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "errors",
    # core
    "CoefficientTable", "DilatationPair", "PolyharmonicMap", "build_map",
    "conjugate_map", "dilatation", "evaluate", "jacobian",
    "polyharmonic_residual", "quasiregularity_constant", "scale_map",
    "wirtinger",
    # geometry
    "RadiusProfile", "area_growth_excess", "area_profile", "area_quadrature",
    "area_series", "curve_length", "diameter_estimate", "length_profile",
    "phi_area", "phi_area_profile", "sup_length",
    # certificates
    "CheckReport", "Margin", "area_schwarz", "arg_condition",
    "diameter_coefficient_bounds", "hadamard_three_circles",
    "length_coefficient_bounds", "three_circles_area",
    # landau
    "LandauResult", "landau_from_diameter", "landau_from_length",
    "landau_fourgon", "least_positive_root",
    # metrics
    "DiskDomain", "LipschitzReport", "PairSampler", "contraction_check",
    "harmonic_lipschitz_check", "j_metric", "mobius_j_distortion",
    "psi_profile",
    # catalog / files
    "BUILTIN_NAMES", "Form37Params", "builtin", "fourgon_coefficients",
    "MappingSpec", "digest", "from_map",
]
