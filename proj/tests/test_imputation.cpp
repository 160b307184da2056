#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "coopgame/imputation.hpp"
#include "helpers.hpp"

using namespace coopgame;
using namespace testutil;

namespace {

Imputation imp(const char* text) { return parse_rational_vector(text, -1); }

long long binomial(int n, int k) {
    long long result = 1;
    for (int i = 1; i <= k; ++i) result = result * (n - k + i) / i;
    return result;
}

} // namespace

TEST_CASE("feasibility") {
    Game g = running_game();
    CHECK(is_feasible(imp("5,5,5"), g));
    CHECK(is_feasible(imp("20,0,0"), g));
    CHECK(!is_feasible(imp("20,1,0"), g));
    CHECK_THROWS_AS(is_feasible(imp("1,2"), g), PreconditionError);
}

TEST_CASE("imputation validity") {
    Game g = running_game();
    CHECK(is_imputation(imp("10,5,5"), g));
    CHECK(!is_imputation(imp("5,5,5"), g)); // feasible but not efficient
    CHECK(!is_imputation(imp("21,0,-1"), g));
    CHECK(is_imputation(imp("1,0,0"), canonical("1/2", "1/2", "1/2")));
}

TEST_CASE("domination via a fixed coalition") {
    Game g = running_game();
    Imputation x = imp("12,4,4"), y = imp("20,0,0");
    CHECK(dominates_via(x, y, Coalition::from_members({2, 3}), g));
    CHECK(!dominates_via(y, x, Coalition::from_members({2, 3}), g));
    // The grand coalition can never afford strict improvement for everyone.
    CHECK(!dominates_via(x, y, Coalition::grand(3), g));
    // Singletons are blocked by individual rationality.
    for (int k = 1; k <= 3; ++k)
        CHECK(!dominates_via(x, y, Coalition::singleton(k), g));
    // The empty coalition satisfies both conditions vacuously.
    CHECK(dominates_via(x, y, Coalition(0), g));
    CHECK(dominates_via(y, x, Coalition(0), g));
}

TEST_CASE("existential domination and its witness") {
    Game g = running_game();
    auto witness = dominates(imp("12,4,4"), imp("20,0,0"), g);
    REQUIRE(witness.has_value());
    CHECK(witness->members() == std::vector<int>{2, 3});

    CHECK(!dominates(imp("10,5,5"), imp("10,5,5"), g).has_value());

    Game c = canonical("1/2", "1/2", "1/2");
    CHECK(!dominates(imp("1/3,1/3,1/3"), imp("1/2,1/2,0"), c).has_value());
}

TEST_CASE("dominates is irreflexive and never returns the empty coalition") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const int m = 2 + static_cast<int>(rng() % 3);
        Game g = random_normalized_game(rng, m);
        Imputation x = random_normalized_imputation(rng, m);
        Imputation y = random_normalized_imputation(rng, m);
        CHECK(!dominates(x, x, g).has_value());
        if (auto w = dominates(x, y, g)) CHECK(!w->empty());
        CHECK(dominates_via(x, y, Coalition(0), g));
    }
}

TEST_CASE("fixed-coalition domination is asymmetric and transitive on grid samples") {
    Game g = canonical("1/2", "1/2", "1/2");
    const auto points = enumerate_grid(g, GridSpec(3));
    for (std::uint32_t bits = 1; bits < 8; ++bits) {
        const Coalition c(bits);
        for (const auto& x : points) {
            for (const auto& y : points) {
                if (x == y) continue;
                if (dominates_via(x, y, c, g)) CHECK(!dominates_via(y, x, c, g));
                for (const auto& z : points)
                    if (dominates_via(x, y, c, g) && dominates_via(y, z, c, g))
                        CHECK(dominates_via(x, z, c, g));
            }
        }
    }
}

TEST_CASE("grid enumeration counts, order and validity") {
    Game g = canonical("1/2", "1/2", "1/2");

    auto d1 = enumerate_grid(g, GridSpec(1));
    REQUIRE(d1.size() == 3);
    CHECK(d1[0] == imp("0,0,1"));
    CHECK(d1[1] == imp("0,1,0"));
    CHECK(d1[2] == imp("1,0,0"));

    CHECK(enumerate_grid(g, GridSpec(2)).size() == 6);
    CHECK(enumerate_grid(g, GridSpec(4)).size() == 15);

    for (int d = 1; d <= 5; ++d) {
        auto points = enumerate_grid(g, GridSpec(d));
        CHECK(points.size() == static_cast<std::size_t>(binomial(d + 2, 2)));
        CHECK(std::is_sorted(points.begin(), points.end(), lex_less));
        for (const auto& p : points) CHECK(is_imputation(p, g));
    }

    Game m4 = make_game(4, {{{1, 2, 3, 4}, 1}});
    CHECK(enumerate_grid(m4, GridSpec(3)).size() ==
          static_cast<std::size_t>(binomial(3 + 3, 3)));

    CHECK_THROWS_AS(enumerate_grid(running_game(), GridSpec(2)), NotNormalizedError);
    CHECK_THROWS_AS(GridSpec(0), PreconditionError);
}

TEST_CASE("counterexample chain points") {
    CHECK(counterexample_point(0) == imp("0,0,1"));
    CHECK(counterexample_point(1) == imp("1/12,1/12,5/6"));
    CHECK(counterexample_point(2) == imp("1/8,1/8,3/4"));

    Game g = counterexample_game();
    CHECK(g == canonical("1/2", "1/2", "1/2"));
    for (long long i : {0, 1, 2, 5, 100, 10000})
        CHECK(is_imputation(counterexample_point(i), g));
}

TEST_CASE("descending chain verification") {
    CHECK(verify_descending_chain(0));
    CHECK(verify_descending_chain(1));
    CHECK(verify_descending_chain(500));

    // The single chain step checked by hand: x^1 vs x^0 via {1,2}.
    Game g = counterexample_game();
    CHECK(dominates_via(counterexample_point(1), counterexample_point(0),
                        Coalition::from_members({1, 2}), g));
}

TEST_CASE("dominates returns the smallest-bitmask witness") {
    std::mt19937_64 rng(71);
    int witnessed = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const int m = 3 + static_cast<int>(rng() % 2);
        Game g = random_normalized_game(rng, m);
        Imputation x = random_normalized_imputation(rng, m);
        Imputation y = random_normalized_imputation(rng, m);
        auto witness = dominates(x, y, g);
        if (!witness) continue;
        ++witnessed;
        for (std::uint32_t bits = 1; bits < witness->bits; ++bits)
            CHECK(!dominates_via(x, y, Coalition(bits), g));
        CHECK(dominates_via(x, y, *witness, g));
    }
    CHECK(witnessed > 20);
}

TEST_CASE("strategic equivalence maps preserve domination witnesses") {
    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 60; ++trial) {
        const int m = 2 + static_cast<int>(rng() % 3);
        Game g = random_normalized_game(rng, m);
        Rational scale(1 + static_cast<int>(rng() % 4), 1 + static_cast<int>(rng() % 3));
        std::vector<Rational> shift(m);
        for (Rational& s : shift)
            s = Rational(static_cast<int>(rng() % 9) - 4, 1 + static_cast<int>(rng() % 3));
        Game g2 = apply_equivalence(g, scale, shift);

        Imputation x = random_normalized_imputation(rng, m);
        Imputation y = random_normalized_imputation(rng, m);
        Imputation fx(m), fy(m);
        for (int k = 0; k < m; ++k) {
            fx[k] = scale * x[k] + shift[k];
            fy[k] = scale * y[k] + shift[k];
        }
        REQUIRE(is_imputation(fx, g2) == is_imputation(x, g));

        auto before = dominates(x, y, g);
        auto after = dominates(fx, fy, g2);
        CHECK(before.has_value() == after.has_value());
        if (before && after) CHECK(before->bits == after->bits);
    }
}
