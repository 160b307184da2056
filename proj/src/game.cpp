#include "coopgame/game.hpp"

#include <bit>
#include <string>

#include "coopgame/errors.hpp"

namespace coopgame {

Coalition Coalition::from_members(const std::vector<int>& players) {
    std::uint32_t bits = 0;
    for (int p : players) {
        if (p < 1 || p > kMaxPlayers)
            throw PreconditionError("player index " + std::to_string(p) + " out of range");
        bits |= std::uint32_t{1} << (p - 1);
    }
    return Coalition(bits);
}

int Coalition::size() const { return std::popcount(bits); }

std::vector<int> Coalition::members() const {
    std::vector<int> out;
    for (int k = 1; k <= kMaxPlayers; ++k)
        if (contains(k)) out.push_back(k);
    return out;
}

Game::Game(int player_count, std::vector<Rational> values)
    : m_(player_count), values_(std::move(values)) {
    if (m_ < 1 || m_ > kMaxPlayers)
        throw PreconditionError("player count must be in 1.." + std::to_string(kMaxPlayers));
    if (values_.size() != (std::size_t{1} << m_))
        throw PreconditionError("valuation table must have exactly 2^m entries");
    if (values_[0] != 0)
        throw PreconditionError("v(empty coalition) must be 0");
}

CanonicalThreePlayer::CanonicalThreePlayer(Rational a_, Rational b_, Rational c_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
    for (const Rational* r : {&a, &b, &c})
        if (*r < 0 || *r > 1)
            throw PreconditionError("canonical parameters must lie in [0,1]");
}

Game CanonicalThreePlayer::to_game() const {
    std::vector<Rational> v(8, Rational(0));
    v[0b011] = a; // {1,2}
    v[0b110] = b; // {2,3}
    v[0b101] = c; // {3,1}
    v[0b111] = 1;
    return Game(3, std::move(v));
}

bool check_nonnegative(const Game& g) {
    for (const Rational& v : g.values())
        if (v < 0) return false;
    return true;
}

bool check_monotonic(const Game& g) {
    // Checking C' minus one member against C' covers every nested pair by
    // chaining.
    const std::uint32_t total = g.coalition_count();
    for (std::uint32_t c = 1; c < total; ++c) {
        for (int k = 1; k <= g.player_count(); ++k) {
            Coalition big(c);
            if (!big.contains(k)) continue;
            Coalition small = big.minus(Coalition::singleton(k));
            if (g.value(big) < g.value(small)) return false;
        }
    }
    return true;
}

bool check_superadditive(const Game& g) {
    const std::uint32_t total = g.coalition_count();
    for (std::uint32_t c = 1; c < total; ++c) {
        std::uint32_t rest = (total - 1) & ~c;
        // Enumerate nonempty subsets of the complement; c < c2 visits each
        // unordered pair once.
        for (std::uint32_t c2 = rest; c2 != 0; c2 = (c2 - 1) & rest) {
            if (c2 < c) break;
            if (g.value(Coalition(c | c2)) < g.value(Coalition(c)) + g.value(Coalition(c2)))
                return false;
        }
    }
    return true;
}

bool check_constant_sum(const Game& g) {
    const std::uint32_t full = g.coalition_count() - 1;
    for (std::uint32_t c = 0; c <= full; ++c)
        if (g.value(Coalition(c)) + g.value(Coalition(full & ~c)) != g.value(Coalition(full)))
            return false;
    return true;
}

namespace {

Rational singleton_sum(const Game& g) {
    Rational sum = 0;
    for (int k = 1; k <= g.player_count(); ++k)
        sum += g.value(Coalition::singleton(k));
    return sum;
}

} // namespace

bool check_essential(const Game& g) {
    return singleton_sum(g) != g.value(g.grand_coalition());
}

bool check_convex(const Game& g) {
    const std::uint32_t total = g.coalition_count();
    for (std::uint32_t c = 0; c < total; ++c) {
        for (std::uint32_t c2 = c; c2 < total; ++c2) {
            if (g.value(Coalition(c | c2)) + g.value(Coalition(c & c2)) <
                g.value(Coalition(c)) + g.value(Coalition(c2)))
                return false;
        }
    }
    return true;
}

bool is_normalized_01(const Game& g) {
    for (int k = 1; k <= g.player_count(); ++k)
        if (g.value(Coalition::singleton(k)) != 0) return false;
    return g.value(g.grand_coalition()) == 1;
}

Game apply_equivalence(const Game& g, const Rational& scale,
                       const std::vector<Rational>& shift) {
    if (scale <= 0) throw PreconditionError("equivalence scale must be positive");
    if (shift.size() != static_cast<std::size_t>(g.player_count()))
        throw PreconditionError("shift vector must have one entry per player");
    std::vector<Rational> values(g.coalition_count());
    for (std::uint32_t c = 0; c < g.coalition_count(); ++c) {
        Rational v = scale * g.value(Coalition(c));
        for (int k = 1; k <= g.player_count(); ++k)
            if (Coalition(c).contains(k)) v += shift[k - 1];
        values[c] = std::move(v);
    }
    return Game(g.player_count(), std::move(values));
}

NormalizationResult normalize_01(const Game& g) {
    Rational gap = g.value(g.grand_coalition()) - singleton_sum(g);
    if (gap == 0)
        throw InessentialGameError("game is inessential: singleton values sum to v(N)");
    if (gap < 0)
        throw NotNormalizableError(
            "v(N) is below the singleton sum; the normalisation scale would be negative");
    Rational scale = Rational(1) / gap;
    std::vector<Rational> shift(g.player_count());
    for (int k = 1; k <= g.player_count(); ++k)
        shift[k - 1] = -scale * g.value(Coalition::singleton(k));
    Game normalized = apply_equivalence(g, scale, shift);
    return NormalizationResult{std::move(normalized), std::move(scale), std::move(shift)};
}

namespace {

// Solve v2(C) = K v(C) + sum_{k in C} c_k directly. Eliminating the shifts
// via the singleton rows leaves B(C) = K * A(C) with
// A(C) = v(C) - sum_{k in C} v({k}) and likewise for B.
std::optional<EquivalenceWitness> equivalent_by_linear_solve(const Game& g, const Game& g2) {
    const int m = g.player_count();
    const std::uint32_t total = g.coalition_count();

    Rational k_value = 0;
    bool k_fixed = false;
    std::vector<Rational> a(total), b(total);
    for (std::uint32_t c = 0; c < total; ++c) {
        a[c] = g.value(Coalition(c));
        b[c] = g2.value(Coalition(c));
        for (int k = 1; k <= m; ++k) {
            if (!Coalition(c).contains(k)) continue;
            a[c] -= g.value(Coalition::singleton(k));
            b[c] -= g2.value(Coalition::singleton(k));
        }
        if (!k_fixed && a[c] != 0) {
            k_value = b[c] / a[c];
            k_fixed = true;
        }
    }
    if (!k_fixed) k_value = 1; // both reduced tables are all-zero
    if (k_value <= 0) return std::nullopt;
    for (std::uint32_t c = 0; c < total; ++c)
        if (b[c] != k_value * a[c]) return std::nullopt;

    std::vector<Rational> shift(m);
    for (int k = 1; k <= m; ++k)
        shift[k - 1] =
            g2.value(Coalition::singleton(k)) - k_value * g.value(Coalition::singleton(k));
    return EquivalenceWitness{std::move(k_value), std::move(shift)};
}

bool positively_normalizable(const Game& g) {
    Rational sum = 0;
    for (int k = 1; k <= g.player_count(); ++k)
        sum += g.value(Coalition::singleton(k));
    return g.value(g.grand_coalition()) > sum;
}

} // namespace

std::optional<EquivalenceWitness> strategically_equivalent(const Game& g, const Game& g2) {
    if (g.player_count() != g2.player_count()) return std::nullopt;

    if (positively_normalizable(g) && positively_normalizable(g2)) {
        NormalizationResult n1 = normalize_01(g);
        NormalizationResult n2 = normalize_01(g2);
        if (!(n1.game == n2.game)) return std::nullopt;
        // g2 = inverse(K2, c2) applied after (K1, c1).
        Rational k = n1.scale / n2.scale;
        std::vector<Rational> shift(g.player_count());
        for (int i = 0; i < g.player_count(); ++i)
            shift[i] = (n1.shift[i] - n2.shift[i]) / n2.scale;
        return EquivalenceWitness{std::move(k), std::move(shift)};
    }
    return equivalent_by_linear_solve(g, g2);
}

CanonicalThreePlayer to_canonical_three_player(const Game& g) {
    if (g.player_count() != 3)
        throw WrongPlayerCountError("canonical form requires a 3-player game");
    NormalizationResult n = normalize_01(g);
    return CanonicalThreePlayer(n.game.value(Coalition::from_members({1, 2})),
                                n.game.value(Coalition::from_members({2, 3})),
                                n.game.value(Coalition::from_members({3, 1})));
}

bool canonical_is_convex(const CanonicalThreePlayer& p) {
    return p.a + p.b <= 1 && p.b + p.c <= 1 && p.c + p.a <= 1;
}

} // namespace coopgame
