"""Exact star-product and Lax-integrability engine."""

from ._starlax import (
    ArgumentError,
    ConfigurationError,
    Observable,
    check_char_commute,
    check_rll,
    check_rtt,
    classical_checks,
    corrected_trace_poly,
    cybe_reports,
    n_transform,
    poisson,
    closed_form_correction,
    quantum_correction,
    qybe_reports,
    run_acceptance,
    star_commutator,
    star_standard,
    star_weyl,
    trace_poly,
    unitarity_reports,
)

__all__ = [
    "ArgumentError",
    "ConfigurationError",
    "Observable",
    "check_char_commute",
    "check_rll",
    "check_rtt",
    "classical_checks",
    "corrected_trace_poly",
    "cybe_reports",
    "n_transform",
    "poisson",
    "closed_form_correction",
    "quantum_correction",
    "qybe_reports",
    "run_acceptance",
    "star_commutator",
    "star_standard",
    "star_weyl",
    "trace_poly",
    "unitarity_reports",
]
