#ifndef COOPGAME_LP_HPP
#define COOPGAME_LP_HPP

#include <optional>
#include <vector>

#include "coopgame/rational.hpp"

namespace coopgame {

enum class Sense { minimize, maximize };
enum class Relation { less_equal, equal, greater_equal };

struct LPConstraint {
    std::vector<Rational> coeffs;
    Relation relation = Relation::less_equal;
    Rational rhs;
};

// min/max c.x subject to the listed constraints and per-variable lower
// bounds (nullopt means unbounded below). No implicit nonnegativity.
struct LPProblem {
    Sense sense = Sense::minimize;
    std::vector<Rational> objective;
    std::vector<LPConstraint> constraints;
    std::vector<std::optional<Rational>> lower_bounds;

    std::size_t variable_count() const { return objective.size(); }
};

enum class LPStatus { optimal, infeasible, unbounded };

struct LPResult {
    LPStatus status = LPStatus::infeasible;
    Rational objective_value;       // meaningful when optimal
    std::vector<Rational> solution; // primal witness when optimal
};

// Exact-rational two-phase simplex with Bland's rule. No tolerances, no
// rounding; the returned witness satisfies every constraint exactly.
// Throws MalformedProblemError on inconsistent dimensions.
LPResult solve_lp(const LPProblem& p);

} // namespace coopgame

#endif
