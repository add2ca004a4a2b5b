"""Anosov graphs: twin classes, weighted quotients, censuses and counting bounds."""

from .bounds import Interval, NuFormula, big_one_bounds, nu_lower_bound
from .canon import CanonicalCode, canonical_code
from .census import Method, compute_X, count_L, count_U, enumerate_anosov
from .equivalence import (
    ClassKind,
    EquivalenceDecomposition,
    anosov_violation,
    decompose,
    graph_type,
    is_anosov,
)
from .errors import AnosovError, CapabilityError, DomainError, InputError, ParseError
from .graph import SimpleGraph
from .injection import inject, verify_injection
from .lie import build_lie_algebra, verify_two_step
from .partitions import Partition
from .quotient import WeightedGraph, check_anosov_criteria, check_brick_conditions, deconstruct, quotient

__version__ = "0.1.0"

__all__ = [
    "AnosovError",
    "CanonicalCode",
    "CapabilityError",
    "ClassKind",
    "DomainError",
    "EquivalenceDecomposition",
    "InputError",
    "Interval",
    "Method",
    "NuFormula",
    "ParseError",
    "Partition",
    "SimpleGraph",
    "WeightedGraph",
    "anosov_violation",
    "big_one_bounds",
    "build_lie_algebra",
    "canonical_code",
    "check_anosov_criteria",
    "check_brick_conditions",
    "compute_X",
    "count_L",
    "count_U",
    "decompose",
    "deconstruct",
    "enumerate_anosov",
    "graph_type",
    "inject",
    "is_anosov",
    "nu_lower_bound",
    "quotient",
    "verify_injection",
    "verify_two_step",
]
