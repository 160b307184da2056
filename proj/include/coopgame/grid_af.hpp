#ifndef COOPGAME_GRID_AF_HPP
#define COOPGAME_GRID_AF_HPP

#include <optional>
#include <string>
#include <vector>

#include "coopgame/af.hpp"
#include "coopgame/core.hpp"
#include "coopgame/game.hpp"
#include "coopgame/imputation.hpp"

namespace coopgame {

inline constexpr int kDefaultNodeCap = 5000;

// The finite sample of the abstract game <IMP, dominates>: one argument per
// grid imputation, an attack (i, j) iff points[i] dominates points[j].
// Grid results approximate the continuum; only containments that survive
// sub-sampling are ever asserted downstream.
struct GridAF {
    Game game; // (0,1)-normalised
    GridSpec spec;
    std::vector<Imputation> points; // enumerate_grid order
    Framework framework;
};

// Requires g (0,1)-normalised, non-negative and super-additive (normalised
// games are always essential). Edge construction is exact and is a pure
// function of (game, d). Throws NotNormalizedError, PreconditionError,
// GridTooLargeError.
GridAF build_grid_af(const Game& g, const GridSpec& spec, int node_cap = kDefaultNodeCap);

// Core-vs-unattacked fragment of a report. The exact side uses in_core and
// is_dominated_exact; the framework side reads the attack graph.
struct CoreCorrespondence {
    std::vector<int> core_grid_points;       // indices with in_core true
    std::vector<int> unattacked_grid_points; // indices unattacked in the grid AF
    std::vector<int> spurious_unattacked;    // unattacked but not in the core
    bool core_subset_of_unattacked = false;
    bool noncore_points_have_verified_dominator = false;

    bool ok() const {
        return core_subset_of_unattacked && noncore_points_have_verified_dominator;
    }
};

CoreCorrespondence check_core_vs_unattacked(const GridAF& gaf);

struct CorrespondenceReport {
    int denominator = 1;
    int n_points = 0;
    CoreCorrespondence core;
    std::vector<int> grounded_set;
    int complete_extension_count = 0;
    int preferred_extension_count = 0;
    int stable_extension_count = 0;
    bool is_acyclic = false;
    bool game_is_convex = false;

    // Framework-side verdicts.
    bool grounded_superset_of_unattacked = false;
    bool grounded_is_intersection_of_complete = false;
    bool families_nested = false; // stable within preferred within complete
    bool preferred_nonempty = false;
    // Each stable extension re-checked directly against the domination
    // definitions on the grid point set.
    bool stable_internally_stable = false;
    bool stable_externally_stable = false;
    // Every stable extension contains all grid core points.
    bool stable_contain_core_points = false;

    bool ok() const;
};

// Full grid-level report: semantics families, their containments, and the
// core fragment. Throws TooLargeError when the framework exceeds enum_cap.
CorrespondenceReport check_semantics_vs_solutions(const GridAF& gaf,
                                                  int enum_cap = kDefaultEnumCap);

// The headline counter-example packaged as one check: the canonical
// a=b=c=1/2 game is convex, every chain point is a valid imputation, and
// the length-n descending domination chain verifies.
bool check_convexity_not_well_founded(long long chain_length = 10000);

// Machine- and human-readable report renderings. Grid point indices are
// 1-based to match the framework file format; rationals stay "p/q" strings.
std::string report_to_json(const GridAF& gaf, const CorrespondenceReport& r);
std::string report_to_text(const GridAF& gaf, const CorrespondenceReport& r);

// Whether the finite sample happens to be acyclic. Reported, never asserted.
bool grid_acyclicity(const GridAF& gaf);

} // namespace coopgame

#endif
