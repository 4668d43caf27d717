"""Ranking of trapezoidal intuitionistic fuzzy numbers by L_p distance.

Each number is summarised by a value index and an ambiguity index; the pair is
read as an interval and ranked by its signed L_p distance to the origin
``<(0, 0, 0, 0); 0, 1>``.
"""
from .core import (
    ORIGIN,
    CutInterval,
    Trifn,
    TrifnError,
    add,
    alpha_cut,
    beta_cut,
    indeterminacy_at,
    membership_at,
    mul,
    nonmembership_at,
    reciprocal,
    scale,
    sub,
    validate,
)
from .indices import VaComponents, VaIndex, components, va_index
from .metric import EndpointPair, interval_distance, lp_line_norm, trifn_distance
from .ranking import RankOutcome, delta, rank, rho

__version__ = "0.1.0"

__all__ = [
    "ORIGIN", "CutInterval", "Trifn", "TrifnError", "validate",
    "membership_at", "nonmembership_at", "indeterminacy_at", "alpha_cut", "beta_cut",
    "add", "sub", "mul", "scale", "reciprocal",
    "VaComponents", "VaIndex", "components", "va_index",
    "EndpointPair", "interval_distance", "lp_line_norm", "trifn_distance",
    "RankOutcome", "delta", "rho", "rank",
]
