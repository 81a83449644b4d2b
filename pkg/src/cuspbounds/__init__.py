"""Diagrammatic cusp-geometry bounds for hyperbolic knots.

From purely combinatorial input (PD codes, braid words, pretzel or surface
parameters) this package computes upper bounds on the meridian length, the
shortest lambda-curve length, and the cusp area of a hyperbolic knot, plus
Dehn-surgery exceptional-slope filters and filled-volume windows. Everything
threshold-like runs in exact rational arithmetic.
"""

from .bounds import (
    BoundCandidate,
    BoundsReport,
    BoundValue,
    BraidVerdict,
    PretzelParams,
    SurfacePairData,
    adequate_bounds,
    adequate_bounds_from_counts,
    best_bounds,
    braid_criterion,
    criterion_check,
    general_bounds,
    pretzel_bounds,
    twist_area_bound,
    twist_bound,
)
from .diagram import (
    BraidWord,
    Crossing,
    Face,
    PlanarDiagram,
    braid_closure,
    faces,
    mirror,
    parse_braid,
    parse_pd,
    serialize_pd,
)
from .pipeline import AnalysisRequest, run_analyze, run_batch, run_surgery
from .states import (
    DiagramInvariants,
    Smoothing,
    StateGraph,
    StateSummary,
    TwistSummary,
    adequacy,
    invariants,
    resolve,
    state_from_string,
    twist_analysis,
    uniform_state,
)
from .surgery import (
    CONSTANTS,
    Slope,
    SlopeVerdict,
    SurgeryConstants,
    exceptional_filter,
    montesinos_window,
    slope_length_lower,
    slope_product_floor,
    surgery_volume_window,
)

__all__ = [
    "AnalysisRequest",
    "BoundCandidate",
    "BoundValue",
    "BoundsReport",
    "BraidVerdict",
    "BraidWord",
    "CONSTANTS",
    "Crossing",
    "DiagramInvariants",
    "Face",
    "PlanarDiagram",
    "PretzelParams",
    "Slope",
    "SlopeVerdict",
    "Smoothing",
    "StateGraph",
    "StateSummary",
    "SurfacePairData",
    "SurgeryConstants",
    "TwistSummary",
    "adequacy",
    "adequate_bounds",
    "adequate_bounds_from_counts",
    "best_bounds",
    "braid_closure",
    "braid_criterion",
    "criterion_check",
    "exceptional_filter",
    "faces",
    "general_bounds",
    "invariants",
    "mirror",
    "montesinos_window",
    "parse_braid",
    "parse_pd",
    "pretzel_bounds",
    "resolve",
    "run_analyze",
    "run_batch",
    "run_surgery",
    "serialize_pd",
    "slope_length_lower",
    "slope_product_floor",
    "state_from_string",
    "surgery_volume_window",
    "twist_analysis",
    "twist_area_bound",
    "twist_bound",
    "uniform_state",
]
