"""Exact cooperative-game solution concepts through argumentation semantics.

All rationals cross the boundary as "p/q" strings; wrap them in
fractions.Fraction if you want Python arithmetic on them.
"""

import json as _json

from ._coopgame import (
    CoopgameError,
    Framework,
    Game,
    GridAF,
    __version__,
    build_grid_af,
    canonical_is_convex,
    canonical_parameters,
    check_convexity_not_well_founded,
    core_nonempty,
    core_vertices,
    counterexample_point,
    dominates,
    dominates_via,
    enumerate_grid,
    in_core,
    is_balanced,
    is_dominated_exact,
    is_feasible,
    is_imputation,
    normalize,
    strategically_equivalent,
    supercore_nonempty,
    verify_descending_chain,
)


def grid_report(grid_af, enum_cap=20):
    """The correspondence report of a GridAF as a dict."""
    return _json.loads(grid_af.report_json(enum_cap))


__all__ = [
    "CoopgameError",
    "Framework",
    "Game",
    "GridAF",
    "__version__",
    "build_grid_af",
    "canonical_is_convex",
    "canonical_parameters",
    "check_convexity_not_well_founded",
    "core_nonempty",
    "core_vertices",
    "counterexample_point",
    "dominates",
    "dominates_via",
    "enumerate_grid",
    "grid_report",
    "in_core",
    "is_balanced",
    "is_dominated_exact",
    "is_feasible",
    "is_imputation",
    "normalize",
    "strategically_equivalent",
    "supercore_nonempty",
    "verify_descending_chain",
]
