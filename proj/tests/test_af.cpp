#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "coopgame/af.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace coopgame;
using testutil::random_acyclic_framework;
using testutil::random_framework;

namespace {

ArgSet set_of(const Framework& f, std::initializer_list<int> members) {
    ArgSet s(f.n_args());
    for (int a : members) s.insert(a);
    return s;
}

Framework chain3() { return Framework(3, {{0, 1}, {1, 2}}); }
Framework cycle3() { return Framework(3, {{0, 1}, {1, 2}, {2, 0}}); }
Framework mutual2() { return Framework(2, {{0, 1}, {1, 0}}); }

std::vector<std::uint32_t> masks_of(const std::vector<ArgSet>& family) {
    return oracle::to_masks(family);
}

} // namespace

TEST_CASE("argset basics") {
    ArgSet s(130);
    s.insert(0);
    s.insert(64);
    s.insert(129);
    CHECK(s.count() == 3);
    CHECK(s.contains(64));
    CHECK(!s.contains(63));
    CHECK(s.members() == std::vector<int>{0, 64, 129});
    s.erase(64);
    CHECK(s.count() == 2);
    CHECK(s.is_subset_of(ArgSet::full(130)));
    CHECK(ArgSet(130).is_subset_of(s));
    CHECK(s.complement().count() == 128);

    ArgSet a(3), b(3);
    a.insert(0);
    b.insert(1);
    CHECK(a.bitmask_less(b));
    CHECK(ArgSet::canonical_less(a, b));
    ArgSet ab = a.union_with(b);
    CHECK(ArgSet::canonical_less(b, ab));
}

TEST_CASE("framework validates and deduplicates attacks") {
    CHECK_THROWS_AS(Framework(2, {{0, 2}}), PreconditionError);
    CHECK_THROWS_AS(Framework(2, {{-1, 0}}), PreconditionError);
    Framework f(2, {{0, 1}, {0, 1}, {1, 0}});
    CHECK(f.attacks().size() == 2);
    CHECK(f.has_attack(0, 1));
    CHECK(!f.has_attack(1, 1));
}

TEST_CASE("attacked_by, neutrality, defence on the chain") {
    Framework f = chain3();
    CHECK(attacked_by(set_of(f, {0}), f) == set_of(f, {1}));
    CHECK(attacked_by(ArgSet(3), f) == ArgSet(3));
    CHECK(neutrality(set_of(f, {0}), f) == set_of(f, {0, 2}));
    CHECK(neutrality(ArgSet(3), f) == ArgSet::full(3));
    CHECK(defence(set_of(f, {0}), f) == set_of(f, {0, 2}));
    CHECK(defence(ArgSet(3), f) == set_of(f, {0}));
    CHECK(unattacked(f) == set_of(f, {0}));
}

TEST_CASE("attacked_by, neutrality, defence on the 3-cycle") {
    Framework f = cycle3();
    CHECK(attacked_by(set_of(f, {0, 1}), f) == set_of(f, {1, 2}));
    CHECK(neutrality(set_of(f, {0}), f) == set_of(f, {0, 2}));
    CHECK(defence(ArgSet(3), f) == ArgSet(3));
    CHECK(unattacked(f).empty());
}

TEST_CASE("conflict-free, self-defending, admissible") {
    Framework f = chain3();
    ArgSet good = set_of(f, {0, 2});
    CHECK(is_conflict_free(good, f));
    CHECK(is_self_defending(good, f));
    CHECK(is_admissible(good, f));

    ArgSet empty(3);
    CHECK(is_conflict_free(empty, f));
    CHECK(is_self_defending(empty, f));
    CHECK(is_admissible(empty, f));

    CHECK(!is_conflict_free(set_of(f, {0, 1}), f));
    // c is attacked by b and undefended by {c} alone.
    CHECK(!is_self_defending(set_of(f, {2}), f));
}

TEST_CASE("defence is neutrality squared") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 150; ++trial) {
        Framework f = random_framework(rng, 1 + static_cast<int>(rng() % 9),
                                       5 + static_cast<int>(rng() % 40));
        ArgSet s(f.n_args());
        for (int a = 0; a < f.n_args(); ++a)
            if (rng() % 2) s.insert(a);
        CHECK(defence(s, f) == neutrality(neutrality(s, f), f));
    }
}

TEST_CASE("grounded extension golden cases") {
    CHECK(grounded(chain3()) == set_of(chain3(), {0, 2}));
    Framework loose(3, {});
    CHECK(grounded(loose) == ArgSet::full(3));
    CHECK(grounded(cycle3()).empty());
}

TEST_CASE("complete extensions golden cases") {
    auto chain = complete_extensions(chain3());
    REQUIRE(chain.size() == 1);
    CHECK(chain[0] == set_of(chain3(), {0, 2}));

    auto mutual = complete_extensions(mutual2());
    REQUIRE(mutual.size() == 3);
    CHECK(mutual[0] == ArgSet(2));              // empty first by cardinality
    CHECK(mutual[1] == set_of(mutual2(), {0})); // then bitmask order
    CHECK(mutual[2] == set_of(mutual2(), {1}));

    Framework loose(2, {});
    auto all = complete_extensions(loose);
    REQUIRE(all.size() == 1);
    CHECK(all[0] == ArgSet::full(2));
}

TEST_CASE("preferred extensions golden cases") {
    auto mutual = preferred_extensions(mutual2());
    REQUIRE(mutual.size() == 2);
    CHECK(mutual[0] == set_of(mutual2(), {0}));
    CHECK(mutual[1] == set_of(mutual2(), {1}));

    auto cyc = preferred_extensions(cycle3());
    REQUIRE(cyc.size() == 1);
    CHECK(cyc[0].empty());

    Framework loose(3, {});
    auto all = preferred_extensions(loose);
    REQUIRE(all.size() == 1);
    CHECK(all[0] == ArgSet::full(3));
}

TEST_CASE("stable extensions golden cases") {
    auto mutual = stable_extensions(mutual2());
    REQUIRE(mutual.size() == 2);
    CHECK(mutual[0] == set_of(mutual2(), {0}));
    CHECK(mutual[1] == set_of(mutual2(), {1}));

    CHECK(stable_extensions(cycle3()).empty());

    Framework self_attack(1, {{0, 0}});
    CHECK(stable_extensions(self_attack).empty());
    CHECK(complete_extensions(self_attack).size() == 1); // just the empty set
}

TEST_CASE("enumeration cap") {
    Framework big(25, {});
    CHECK_THROWS_AS(complete_extensions(big), TooLargeError);
    CHECK_NOTHROW(complete_extensions(big, 30));
}

TEST_CASE("well-foundedness is acyclicity") {
    CHECK(is_well_founded(chain3()));
    CHECK(!is_well_founded(cycle3()));
    CHECK(!is_well_founded(Framework(1, {{0, 0}})));
    CHECK(is_well_founded(Framework(0, {})));
    CHECK(is_well_founded(Framework(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}})));
}

TEST_CASE("labelling enumeration matches the exhaustive oracle") {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 250; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 12);
        Framework f = random_framework(rng, n, 5 + static_cast<int>(rng() % 45));
        oracle::MaskAF af = oracle::from_framework(f);

        CHECK(masks_of(complete_extensions(f)) == oracle::complete_extensions(af));
        CHECK(masks_of(preferred_extensions(f)) == oracle::preferred_extensions(af));
        CHECK(masks_of(stable_extensions(f)) == oracle::stable_extensions(af));
        CHECK(masks_of({grounded(f)})[0] == oracle::grounded_extension(af));
        CHECK(is_well_founded(f) == oracle::well_founded(af));
    }
}

TEST_CASE("family containments, grounded as intersection, semilattice") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 120; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 10);
        Framework f = random_framework(rng, n, 5 + static_cast<int>(rng() % 45));

        const auto complete = complete_extensions(f);
        const auto preferred = preferred_extensions(f);
        const auto stable = stable_extensions(f);
        REQUIRE(!complete.empty());
        CHECK(!preferred.empty());

        auto contains = [](const std::vector<ArgSet>& family, const ArgSet& s) {
            for (const ArgSet& t : family)
                if (t == s) return true;
            return false;
        };
        for (const ArgSet& s : stable) CHECK(contains(preferred, s));
        for (const ArgSet& s : preferred) CHECK(contains(complete, s));

        const ArgSet g = grounded(f);
        CHECK(contains(complete, g));
        ArgSet meet = ArgSet::full(f.n_args());
        for (const ArgSet& s : complete) meet = meet.intersect_with(s);
        CHECK(meet == g);
        CHECK(unattacked(f).is_subset_of(g));

        CHECK(oracle::complete_semilattice_check(masks_of(complete)));
    }
}

TEST_CASE("well-founded frameworks have one extension under every semantics") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 12);
        Framework f = random_acyclic_framework(rng, n, 10 + static_cast<int>(rng() % 50));
        REQUIRE(is_well_founded(f));

        const ArgSet g = grounded(f);
        for (const auto& family :
             {complete_extensions(f), preferred_extensions(f), stable_extensions(f)}) {
            REQUIRE(family.size() == 1);
            CHECK(family[0] == g);
        }
    }
}
