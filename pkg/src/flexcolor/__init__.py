"""Flexible list colouring of {C4, C5}-free plane graphs: reducibility
certificates, a recursive flexible sampler, and an exact discharging audit."""

from ._kernels import USE_NUMBA
from .catalog import catalog_entries, get_entry
from .coloring import enumerate_colorings, is_colorable, validate_coloring
from .discharging import apply_rules, audit, classify
from .errors import HypothesisViolated, InputError, ParseError
from .graph import Graph
from .plane import PlaneGraph, plane_graph
from .reducibility import EmbeddedConfig, check_reducible
from .sampler import FlexParams, peel, sample_flexible, satisfy_weighted_request

__version__ = "0.1.0"

__all__ = [
    "USE_NUMBA",
    "EmbeddedConfig",
    "FlexParams",
    "Graph",
    "HypothesisViolated",
    "InputError",
    "ParseError",
    "PlaneGraph",
    "apply_rules",
    "audit",
    "catalog_entries",
    "check_reducible",
    "classify",
    "enumerate_colorings",
    "get_entry",
    "is_colorable",
    "peel",
    "plane_graph",
    "sample_flexible",
    "satisfy_weighted_request",
    "validate_coloring",
]
