#ifndef COOPGAME_IMPUTATION_HPP
#define COOPGAME_IMPUTATION_HPP

#include <optional>
#include <vector>

#include "coopgame/game.hpp"
#include "coopgame/rational.hpp"

namespace coopgame {

// A payoff vector; whether it is an imputation is always relative to a game,
// so validity is checked by is_imputation rather than carried by the type.
using Imputation = std::vector<Rational>;

// Uniform discretisation of the payoff simplex: components range over
// {0, 1/d, ..., d/d}.
struct GridSpec {
    int denominator = 1;

    explicit GridSpec(int d);
};

Rational coalition_payoff(const Imputation& x, Coalition c);

// sum x_k <= v(N)
bool is_feasible(const Imputation& x, const Game& g);

// Efficient (sum x_k = v(N)) and individually rational (x_k >= v({k})).
bool is_imputation(const Imputation& x, const Game& g);

// x dominates y via C: every member of C gets strictly more under x, and C
// can afford x from its own value. The empty coalition satisfies both
// conditions vacuously, so dominates_via(x, y, {}, g) is true for every pair.
bool dominates_via(const Imputation& x, const Imputation& y, Coalition c, const Game& g);

// Existential domination: some nonempty C with dominates_via. Returns the
// witness with the smallest bitmask so results are reproducible.
std::optional<Coalition> dominates(const Imputation& x, const Imputation& y, const Game& g);

// All grid points of the imputation simplex of a (0,1)-normalised game, in
// ascending lexicographic order; count is C(d+m-1, m-1).
// Throws NotNormalizedError when g is not (0,1)-normalised.
std::vector<Imputation> enumerate_grid(const Game& g, const GridSpec& spec);

// The i-th point of the infinite descending chain in the canonical
// a=b=c=1/2 game:
//   x^i = (1/4 - 1/(2(i+2)), 1/4 - 1/(2(i+2)), 1/2 + 1/(i+2)).
Imputation counterexample_point(long long i);

// Checks x^{i+1} dominates x^i via {1,2} for every i < n.
bool verify_descending_chain(long long n);

// The game the chain lives in.
Game counterexample_game();

} // namespace coopgame

#endif
