"""Exact eternal and m-eternal domination on digraphs and their orientations."""

from .errors import (
    CapabilityError,
    CertificateError,
    EternalDominationError,
    FormatError,
    IntegrityError,
    ParameterError,
    StructureError,
)
from .graphs import Digraph, Orientation, SimpleGraph, orient, product, symmetric, triangulation_gadget
from .families import generate_family
from .edgelist import parse_edgelist, read_edgelist, write_edgelist, format_edgelist
from .solver import (
    ConfigFamily,
    GameResult,
    extract_strategy,
    fixed_point,
    gamma_inf,
    gamma_inf_m,
    is_eds,
    is_meds,
    solve,
)
from .strategy import StrategyCertificate, verify_strategy
from .orientations import OrientedResult, oalpha, oedn, oednm, optimal_orientations, oscdd, search
from .necoloring import NEColoring, ne_build, ne_verify, orientation_from_ne, toroidal_padding_orientation
from .closed_forms import Prediction, grid_low, grid_up, oednm2_characterization, predict, reconcile
from .certificates import certify

__version__ = "0.1.0"

__all__ = [
    "CapabilityError",
    "CertificateError",
    "EternalDominationError",
    "FormatError",
    "IntegrityError",
    "ParameterError",
    "StructureError",
    "Digraph",
    "Orientation",
    "SimpleGraph",
    "orient",
    "product",
    "symmetric",
    "triangulation_gadget",
    "generate_family",
    "parse_edgelist",
    "read_edgelist",
    "write_edgelist",
    "format_edgelist",
    "ConfigFamily",
    "GameResult",
    "extract_strategy",
    "fixed_point",
    "gamma_inf",
    "gamma_inf_m",
    "is_eds",
    "is_meds",
    "solve",
    "StrategyCertificate",
    "verify_strategy",
    "OrientedResult",
    "oalpha",
    "oedn",
    "oednm",
    "optimal_orientations",
    "oscdd",
    "search",
    "NEColoring",
    "ne_build",
    "ne_verify",
    "orientation_from_ne",
    "toroidal_padding_orientation",
    "Prediction",
    "grid_low",
    "grid_up",
    "oednm2_characterization",
    "predict",
    "reconcile",
    "certify",
]
