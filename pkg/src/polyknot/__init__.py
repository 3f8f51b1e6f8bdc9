"""polyknot: polynomial knot construction, identification, and degree bounds.

A library and CLI for analyzing polynomial plane curves and space knots:
self-intersection detection via divided differences and resultants, height
lifts realizing prescribed over/under patterns, Kauffman bracket and Jones
polynomial computation with table identification, and degree-derived
crossing/bridge/superbridge bounds.
"""

from .polycore import (RealPoly, BiPoly, RootSet, divided_difference,
                       resultant_eliminate_s, sylvester_matrix, real_roots,
                       count_real_roots)
from .laurent import (LaurentInt, delta_power, mirror_variable,
                      substitute_quarter, parse_laurent)
from .projection import (PlaneCurve, DoublePoint, RegularityReport,
                         NonTransverseError, TriplePointError,
                         check_regularity, find_double_points,
                         max_crossing_bound, valid_degree_sequence,
                         plot_curve_svg)
from .lift import (UNDER, OVER, SignPattern, LiftSpec, LiftResult,
                   DegenerateSystemError, InternalConsistencyError,
                   build_sign_system, solve_lift, verify_pattern)
from .diagram import (SpaceKnot, Crossing, KnotDiagram, AmbiguousCrossingError,
                      crossing_sign, build_diagram, assemble_diagram, mirror,
                      diagram_from_pd, parse_pd_text, pd_text, gauss_code)
from .invariants import (BracketState, TableEntry, KnotTable, TableDataError,
                         MatchResult, bracket_states, kauffman_bracket,
                         normalized_f, jones, load_table, bundled_table,
                         identify)
from .bridges import (DegreeBounds, DirectionSweep, DegenerateDirectionError,
                      CLOSURE_CONVENTION, degree_bounds, torus_superbridge,
                      directional_maxima, sweep_directions, fibonacci_sphere)

__version__ = "0.1.0"

__all__ = [
    "RealPoly", "BiPoly", "RootSet", "divided_difference",
    "resultant_eliminate_s", "sylvester_matrix", "real_roots",
    "count_real_roots",
    "LaurentInt", "delta_power", "mirror_variable", "substitute_quarter",
    "parse_laurent",
    "PlaneCurve", "DoublePoint", "RegularityReport", "NonTransverseError",
    "TriplePointError", "check_regularity", "find_double_points",
    "max_crossing_bound", "valid_degree_sequence", "plot_curve_svg",
    "UNDER", "OVER", "SignPattern", "LiftSpec", "LiftResult",
    "DegenerateSystemError", "InternalConsistencyError", "build_sign_system",
    "solve_lift", "verify_pattern",
    "SpaceKnot", "Crossing", "KnotDiagram", "AmbiguousCrossingError",
    "crossing_sign", "build_diagram", "assemble_diagram", "mirror",
    "diagram_from_pd", "parse_pd_text", "pd_text", "gauss_code",
    "BracketState", "TableEntry", "KnotTable", "TableDataError", "MatchResult",
    "bracket_states", "kauffman_bracket", "normalized_f", "jones",
    "load_table", "bundled_table", "identify",
    "DegreeBounds", "DirectionSweep", "DegenerateDirectionError",
    "CLOSURE_CONVENTION", "degree_bounds", "torus_superbridge",
    "directional_maxima", "sweep_directions", "fibonacci_sphere",
]
