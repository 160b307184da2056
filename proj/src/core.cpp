#include "coopgame/core.hpp"

#include <algorithm>
#include <string>

#include "coopgame/errors.hpp"

namespace coopgame {

namespace {

void require_length(const Imputation& x, const Game& g) {
    if (x.size() != static_cast<std::size_t>(g.player_count()))
        throw PreconditionError("payoff vector length does not match player count");
}

} // namespace

bool in_core(const Imputation& x, const Game& g) {
    require_length(x, g);
    for (std::uint32_t c = 0; c < g.coalition_count(); ++c)
        if (coalition_payoff(x, Coalition(c)) < g.value(Coalition(c))) return false;
    return true;
}

std::optional<std::pair<Coalition, Imputation>> is_dominated_exact(const Imputation& x,
                                                                   const Game& g) {
    if (!is_normalized_01(g))
        throw NotNormalizedError("exact domination check requires a (0,1)-normalised game");
    require_length(x, g);
    const int m = g.player_count();
    const std::uint32_t full = g.coalition_count() - 1;

    for (std::uint32_t bits = 1; bits < full; ++bits) {
        const Coalition c(bits);
        const Rational inside = coalition_payoff(x, c);
        if (inside >= g.value(c)) continue;

        // Members of C split most of the surplus; what the construction
        // leaves on the table goes evenly to everyone else.
        const Rational eps = (g.value(c) - inside) / (c.size() + 1);
        Imputation y(m);
        Rational spent = 0;
        for (int k = 1; k <= m; ++k) {
            if (c.contains(k)) {
                y[k - 1] = x[k - 1] + eps;
                spent += y[k - 1];
            }
        }
        const Rational remainder = g.value(g.grand_coalition()) - spent;
        const Rational share = remainder / (m - c.size());
        for (int k = 1; k <= m; ++k)
            if (!c.contains(k)) y[k - 1] = share;

        if (!is_imputation(y, g) || !dominates_via(y, x, c, g))
            throw ConstructionFailedError("constructed dominator failed re-verification");
        return std::make_pair(c, std::move(y));
    }
    return std::nullopt;
}

CoreResult core_nonempty(const Game& g) {
    const int m = g.player_count();
    const std::uint32_t full = g.coalition_count() - 1;

    LPProblem lp;
    lp.sense = Sense::minimize;
    lp.objective.assign(m, Rational(1));
    lp.lower_bounds.resize(m);
    for (int k = 1; k <= m; ++k)
        lp.lower_bounds[k - 1] = g.value(Coalition::singleton(k));
    for (std::uint32_t bits = 1; bits < full; ++bits) {
        const Coalition c(bits);
        if (c.size() < 2) continue; // singletons live in the bounds
        LPConstraint con;
        con.coeffs.assign(m, Rational(0));
        for (int k = 1; k <= m; ++k)
            if (c.contains(k)) con.coeffs[k - 1] = 1;
        con.relation = Relation::greater_equal;
        con.rhs = g.value(c);
        lp.constraints.push_back(std::move(con));
    }

    LPResult r = solve_lp(lp);
    if (r.status != LPStatus::optimal || r.objective_value > g.value(g.grand_coalition()))
        return CoreResult{false, std::nullopt};

    // The cheapest lower-bounded point may waste some of v(N); handing the
    // slack to player 1 keeps every >= inequality satisfied.
    Imputation witness = std::move(r.solution);
    witness[0] += g.value(g.grand_coalition()) - r.objective_value;
    if (!in_core(witness, g) || !is_imputation(witness, g))
        throw ConstructionFailedError("core witness failed re-verification");
    return CoreResult{true, std::move(witness)};
}

BalancednessResult is_balanced_lp(const Game& g) {
    const int m = g.player_count();
    const std::uint32_t total = g.coalition_count();

    // One variable per nonempty coalition; f(S) >= 0 with the per-player
    // time-allocation equalities. f(S) <= 1 is implied by them.
    LPProblem lp;
    lp.sense = Sense::maximize;
    lp.objective.resize(total - 1);
    lp.lower_bounds.assign(total - 1, Rational(0));
    for (std::uint32_t bits = 1; bits < total; ++bits)
        lp.objective[bits - 1] = g.value(Coalition(bits));
    for (int k = 1; k <= m; ++k) {
        LPConstraint con;
        con.coeffs.assign(total - 1, Rational(0));
        for (std::uint32_t bits = 1; bits < total; ++bits)
            if (Coalition(bits).contains(k)) con.coeffs[bits - 1] = 1;
        con.relation = Relation::equal;
        con.rhs = 1;
        lp.constraints.push_back(std::move(con));
    }

    LPResult r = solve_lp(lp);
    if (r.status != LPStatus::optimal)
        throw ConstructionFailedError("balancedness LP must have an optimum");

    BalancednessResult result;
    result.optimum = r.objective_value;
    result.balanced = r.objective_value <= g.value(g.grand_coalition());
    result.weights.assign(total, Rational(0));
    for (std::uint32_t bits = 1; bits < total; ++bits)
        result.weights[bits] = r.solution[bits - 1];
    return result;
}

bool is_balanced(const Game& g) { return is_balanced_lp(g).balanced; }

namespace {

// Exact Gaussian elimination; returns the unique solution or nullopt when
// the system is singular or inconsistent.
std::optional<std::vector<Rational>> solve_square_system(
    std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) return std::nullopt;
        std::swap(a[pivot], a[col]);
        std::swap(b[pivot], b[col]);
        const Rational inv = Rational(1) / a[col][col];
        for (std::size_t j = col; j < n; ++j) a[col][j] *= inv;
        b[col] *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col] == 0) continue;
            const Rational factor = a[i][col];
            for (std::size_t j = col; j < n; ++j) a[i][j] -= factor * a[col][j];
            b[i] -= factor * b[col];
        }
    }
    return b;
}

} // namespace

std::vector<Imputation> core_vertices(const Game& g, int player_cap) {
    const int m = g.player_count();
    if (m > player_cap)
        throw TooLargeError("vertex enumeration capped at " + std::to_string(player_cap) +
                            " players");

    const std::uint32_t full = g.coalition_count() - 1;
    std::vector<Coalition> proper;
    for (std::uint32_t bits = 1; bits < full; ++bits) proper.push_back(Coalition(bits));

    std::vector<Imputation> vertices;
    // Every vertex is the unique solution of the efficiency equality plus
    // m-1 tight coalition inequalities, so scanning all (m-1)-subsets of the
    // proper coalitions finds each vertex at least once.
    std::vector<std::size_t> pick(std::max(0, m - 1));
    auto emit_candidate = [&]() {
        std::vector<std::vector<Rational>> rows;
        std::vector<Rational> rhs;
        rows.emplace_back(m, Rational(1));
        rhs.push_back(g.value(g.grand_coalition()));
        for (std::size_t idx : pick) {
            std::vector<Rational> row(m, Rational(0));
            for (int k = 1; k <= m; ++k)
                if (proper[idx].contains(k)) row[k - 1] = 1;
            rows.push_back(std::move(row));
            rhs.push_back(g.value(proper[idx]));
        }
        auto solution = solve_square_system(std::move(rows), std::move(rhs));
        if (solution && in_core(*solution, g)) vertices.push_back(std::move(*solution));
    };

    if (m == 1) {
        emit_candidate();
    } else {
        // Lexicographic combinations of size m-1 out of the proper coalitions.
        const std::size_t k = static_cast<std::size_t>(m - 1);
        if (proper.size() >= k) {
            for (std::size_t i = 0; i < k; ++i) pick[i] = i;
            for (;;) {
                emit_candidate();
                std::size_t i = k;
                while (i > 0 && pick[i - 1] == proper.size() - k + (i - 1)) --i;
                if (i == 0) break;
                ++pick[i - 1];
                for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
            }
        }
    }

    std::sort(vertices.begin(), vertices.end(), lex_less);
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    return vertices;
}

bool supercore_nonempty(const Game& g) { return is_balanced(g); }

} // namespace coopgame
