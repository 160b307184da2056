#ifndef COOPGAME_TESTS_HELPERS_HPP
#define COOPGAME_TESTS_HELPERS_HPP

#include <algorithm>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "coopgame/af.hpp"
#include "coopgame/game.hpp"
#include "coopgame/imputation.hpp"

namespace testutil {

using coopgame::Coalition;
using coopgame::Game;
using coopgame::Imputation;
using coopgame::Rational;

inline Game make_game(int m,
                      const std::vector<std::pair<std::vector<int>, Rational>>& entries) {
    std::vector<Rational> values(std::size_t{1} << m, Rational(0));
    for (const auto& [members, value] : entries)
        values[Coalition::from_members(members).bits] = value;
    return Game(m, std::move(values));
}

// Singletons 0, pairs 10, grand coalition 20.
inline Game running_game() {
    return make_game(3, {{{1, 2}, 10},
                         {{1, 3}, 10},
                         {{2, 3}, 10},
                         {{1, 2, 3}, 20}});
}

inline Game zero_game(int m) {
    return Game(m, std::vector<Rational>(std::size_t{1} << m, Rational(0)));
}

// v(C) = |C|.
inline Game additive_game(int m) {
    std::vector<Rational> values(std::size_t{1} << m);
    for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << m); ++bits)
        values[bits] = Coalition(bits).size();
    return Game(m, std::move(values));
}

inline Game canonical(const char* a, const char* b, const char* c) {
    return coopgame::CanonicalThreePlayer(coopgame::parse_rational(a),
                                          coopgame::parse_rational(b),
                                          coopgame::parse_rational(c))
        .to_game();
}

inline Rational random_nonneg_rational(std::mt19937_64& rng, int max_num = 8,
                                       int max_den = 6) {
    std::uniform_int_distribution<int> num(0, max_num);
    std::uniform_int_distribution<int> den(1, max_den);
    return Rational(num(rng), den(rng));
}

// Largest total value over partitions of each coalition; the cheapest way to
// make an arbitrary non-negative table super-additive.
inline Game superadditive_cover(const Game& g) {
    const std::uint32_t total = g.coalition_count();
    std::vector<Rational> cover(total, Rational(0));
    for (std::uint32_t mask = 1; mask < total; ++mask) {
        Rational best = g.value(Coalition(mask));
        const std::uint32_t low = mask & (~mask + 1);
        for (std::uint32_t sub = (mask - 1) & mask; sub; sub = (sub - 1) & mask) {
            if (!(sub & low)) continue;
            const Rational split = cover[sub] + cover[mask ^ sub];
            if (split > best) best = split;
        }
        cover[mask] = best;
    }
    return Game(g.player_count(), std::move(cover));
}

inline Game random_superadditive_game(std::mt19937_64& rng, int m) {
    std::vector<Rational> values(std::size_t{1} << m, Rational(0));
    for (std::uint32_t bits = 1; bits < (std::uint32_t{1} << m); ++bits)
        values[bits] = random_nonneg_rational(rng);
    return superadditive_cover(Game(m, std::move(values)));
}

// Non-negative, super-additive, singleton values 0, v(N) = 1.
inline Game random_normalized_game(std::mt19937_64& rng, int m) {
    std::vector<Rational> values(std::size_t{1} << m, Rational(0));
    for (std::uint32_t bits = 1; bits < (std::uint32_t{1} << m); ++bits)
        if (Coalition(bits).size() >= 2) values[bits] = random_nonneg_rational(rng, 4, 5);
    Game cover = superadditive_cover(Game(m, std::move(values)));
    if (cover.value(cover.grand_coalition()) == 0) {
        std::vector<Rational> bumped = cover.values();
        bumped.back() = 1;
        return Game(m, std::move(bumped));
    }
    return coopgame::normalize_01(cover).game;
}

// Edge probability is percent / 100; self-attacks allowed when requested.
inline coopgame::Framework random_framework(std::mt19937_64& rng, int n_args, int percent,
                                            bool allow_self_attacks = true) {
    std::vector<std::pair<int, int>> attacks;
    for (int from = 0; from < n_args; ++from)
        for (int to = 0; to < n_args; ++to) {
            if (from == to && !allow_self_attacks) continue;
            if (static_cast<int>(rng() % 100) < percent) attacks.emplace_back(from, to);
        }
    return coopgame::Framework(n_args, std::move(attacks));
}

// Attacks only run forward along a random permutation, so no cycles.
inline coopgame::Framework random_acyclic_framework(std::mt19937_64& rng, int n_args,
                                                    int percent) {
    std::vector<int> order(n_args);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<std::pair<int, int>> attacks;
    for (int i = 0; i < n_args; ++i)
        for (int j = i + 1; j < n_args; ++j)
            if (static_cast<int>(rng() % 100) < percent)
                attacks.emplace_back(order[i], order[j]);
    return coopgame::Framework(n_args, std::move(attacks));
}

// Non-negative rationals summing to 1; an imputation of any normalized game.
inline Imputation random_normalized_imputation(std::mt19937_64& rng, int m) {
    std::uniform_int_distribution<int> num(0, 10);
    std::vector<Rational> raw(m);
    Rational sum = 0;
    for (int k = 0; k < m; ++k) {
        raw[k] = num(rng);
        sum += raw[k];
    }
    if (sum == 0) {
        raw[rng() % m] = 1;
        sum = 1;
    }
    for (Rational& r : raw) r /= sum;
    return raw;
}

} // namespace testutil

#endif
