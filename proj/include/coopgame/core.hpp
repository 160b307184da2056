#ifndef COOPGAME_CORE_HPP
#define COOPGAME_CORE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "coopgame/game.hpp"
#include "coopgame/imputation.hpp"
#include "coopgame/lp.hpp"

namespace coopgame {

// Vertex enumeration scans C(2^m - 2, m - 1) candidate tight sets, so keep
// the default player cap small.
inline constexpr int kDefaultVertexCap = 6;

// All 2^m coalition inequalities sum_{k in C} x_k >= v(C).
bool in_core(const Imputation& x, const Game& g);

// Exact undominatedness over the full continuum of imputations, for
// (0,1)-normalised games. When some proper nonempty C has
// sum_{k in C} x_k < v(C), builds an explicit dominating imputation y
// (members of C get x_k + eps with eps = gap/(|C|+1), the remainder is
// spread evenly over N-C), re-verifies it via dominates_via and returns
// (C, y). Returns nullopt iff x is undominated.
// Throws NotNormalizedError on unnormalised input and
// ConstructionFailedError if the built dominator fails re-verification.
std::optional<std::pair<Coalition, Imputation>> is_dominated_exact(const Imputation& x,
                                                                   const Game& g);

struct CoreResult {
    bool nonempty = false;
    std::optional<Imputation> witness; // a core imputation when nonempty
};

// Decides core non-emptiness by exact LP: minimize sum x_k subject to
// sum_{k in C} x_k >= v(C) for all proper nonempty C; the core is nonempty
// iff the optimum is <= v(N). Any optimum slack is added to player 1's
// payoff to make the witness efficient.
CoreResult core_nonempty(const Game& g);

struct BalancednessResult {
    bool balanced = false;
    Rational optimum;                 // max over balanced f of sum f(S) v(S)
    std::vector<Rational> weights;    // maximising f, indexed by coalition bits
                                      // (entry 0, the empty coalition, is 0)
};

// Bondareva-Shapley LP: variables f(S) >= 0 over nonempty S, one equality
// sum_{S owns k} f(S) = 1 per player, objective max sum f(S) v(S).
// The game is balanced iff the optimum is <= v(N).
BalancednessResult is_balanced_lp(const Game& g);

bool is_balanced(const Game& g);

// Exact vertex set of {x : sum x = v(N), sum_{k in C} x_k >= v(C) for all
// proper nonempty C}, deduplicated and lexicographically sorted; empty iff
// the core is empty. Throws TooLargeError when m exceeds the cap.
std::vector<Imputation> core_vertices(const Game& g, int player_cap = kDefaultVertexCap);

// Nonempty iff the game is balanced (equivalently, iff the core is nonempty).
bool supercore_nonempty(const Game& g);

} // namespace coopgame

#endif
