"""Optimal irregular and total irregular weightings of powers of cycles C_n^k."""

from .core import (
    CirculantPowerGraph,
    ConstructionError,
    DomainError,
    EdgeWeighting,
    TotalWeighting,
    WeightedDegreeProfile,
    build_graph,
    is_s_exception,
    lower_bound_s_regular,
    lower_bound_s_regular_exact,
    lower_bound_tvs_regular,
    parity_certificate,
    parity_obstruction,
    s_formula,
    tvs_formula,
    weighted_degrees,
)
from .strength import certify_exception, construct_s
from .tvs import construct_tvs
from .verify import OracleBudget, StrengthReport, certify, exact_strength, verify

__version__ = "0.1.0"

__all__ = [
    "CirculantPowerGraph",
    "ConstructionError",
    "DomainError",
    "EdgeWeighting",
    "TotalWeighting",
    "WeightedDegreeProfile",
    "build_graph",
    "is_s_exception",
    "lower_bound_s_regular",
    "lower_bound_s_regular_exact",
    "lower_bound_tvs_regular",
    "parity_certificate",
    "parity_obstruction",
    "s_formula",
    "tvs_formula",
    "weighted_degrees",
    "certify_exception",
    "construct_s",
    "construct_tvs",
    "OracleBudget",
    "StrengthReport",
    "certify",
    "exact_strength",
    "verify",
]
