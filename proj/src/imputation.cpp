#include "coopgame/imputation.hpp"

#include <string>

#include "coopgame/errors.hpp"

namespace coopgame {

GridSpec::GridSpec(int d) : denominator(d) {
    if (d < 1) throw PreconditionError("grid denominator must be >= 1");
}

Rational coalition_payoff(const Imputation& x, Coalition c) {
    Rational sum = 0;
    for (std::size_t k = 0; k < x.size(); ++k)
        if (c.contains(static_cast<int>(k) + 1)) sum += x[k];
    return sum;
}

namespace {

void require_length(const Imputation& x, const Game& g) {
    if (x.size() != static_cast<std::size_t>(g.player_count()))
        throw PreconditionError("payoff vector length does not match player count");
}

} // namespace

bool is_feasible(const Imputation& x, const Game& g) {
    require_length(x, g);
    return coalition_payoff(x, g.grand_coalition()) <= g.value(g.grand_coalition());
}

bool is_imputation(const Imputation& x, const Game& g) {
    require_length(x, g);
    if (coalition_payoff(x, g.grand_coalition()) != g.value(g.grand_coalition())) return false;
    for (int k = 1; k <= g.player_count(); ++k)
        if (x[k - 1] < g.value(Coalition::singleton(k))) return false;
    return true;
}

bool dominates_via(const Imputation& x, const Imputation& y, Coalition c, const Game& g) {
    require_length(x, g);
    require_length(y, g);
    for (int k = 1; k <= g.player_count(); ++k)
        if (c.contains(k) && !(x[k - 1] > y[k - 1])) return false;
    return coalition_payoff(x, c) <= g.value(c);
}

std::optional<Coalition> dominates(const Imputation& x, const Imputation& y, const Game& g) {
    for (std::uint32_t c = 1; c < g.coalition_count(); ++c)
        if (dominates_via(x, y, Coalition(c), g)) return Coalition(c);
    return std::nullopt;
}

namespace {

void grid_rec(int m, int position, int remaining, const Rational& denom,
              Imputation& current, std::vector<Imputation>& out) {
    if (position == m - 1) {
        current[position] = Rational(remaining) / denom;
        out.push_back(current);
        return;
    }
    for (int used = 0; used <= remaining; ++used) {
        current[position] = Rational(used) / denom;
        grid_rec(m, position + 1, remaining - used, denom, current, out);
    }
}

} // namespace

std::vector<Imputation> enumerate_grid(const Game& g, const GridSpec& spec) {
    if (!is_normalized_01(g))
        throw NotNormalizedError("grid enumeration requires a (0,1)-normalised game");
    std::vector<Imputation> out;
    Imputation current(g.player_count());
    grid_rec(g.player_count(), 0, spec.denominator, Rational(spec.denominator), current, out);
    return out;
}

Imputation counterexample_point(long long i) {
    Rational step(1, 2 * (i + 2));
    Rational quarter(1, 4);
    Rational half(1, 2);
    return {quarter - step, quarter - step, half + 2 * step};
}

Game counterexample_game() {
    Rational half(1, 2);
    return CanonicalThreePlayer(half, half, half).to_game();
}

bool verify_descending_chain(long long n) {
    const Game g = counterexample_game();
    const Coalition pair12 = Coalition::from_members({1, 2});
    Imputation current = counterexample_point(0);
    for (long long i = 0; i < n; ++i) {
        Imputation next = counterexample_point(i + 1);
        if (!dominates_via(next, current, pair12, g)) return false;
        current = std::move(next);
    }
    return true;
}

} // namespace coopgame
