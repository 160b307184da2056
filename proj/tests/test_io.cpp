#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "coopgame/io.hpp"
#include "helpers.hpp"

using namespace coopgame;
using namespace testutil;

TEST_CASE("game json parsing") {
    const std::string text = R"({
      "players": 3,
      "values": {
        "1": "0", "2": "0", "3": "0",
        "1,2": "10", "1,3": "10", "2,3": "10",
        "1,2,3": "20"
      }
    })";
    Game g = parse_game_json(text);
    CHECK(g == running_game());
}

TEST_CASE("game json accepts plain integers and omitted empty coalition") {
    const std::string text = R"({
      "players": 2,
      "values": {"1": 1, "2": "1/2", "1,2": 4}
    })";
    Game g = parse_game_json(text);
    CHECK(g.value(Coalition::singleton(2)) == Rational(1, 2));
    CHECK(g.value(Coalition::grand(2)) == 4);

    const std::string with_empty = R"({
      "players": 1,
      "values": {"": 0, "1": "3"}
    })";
    CHECK(parse_game_json(with_empty).value(Coalition::singleton(1)) == 3);
}

TEST_CASE("game json rejections") {
    CHECK_THROWS_AS(parse_game_json("not json"), ParseError);
    CHECK_THROWS_AS(parse_game_json(R"({"players": 2})"), ParseError);
    // Missing coalition entries are an error, never an implicit zero.
    CHECK_THROWS_AS(parse_game_json(R"({"players": 2, "values": {"1": 1, "2": 1}})"),
                    ParseError);
    // Floating-point literals are rejected outright.
    CHECK_THROWS_AS(
        parse_game_json(R"({"players": 1, "values": {"1": 0.5}})"), ParseError);
    CHECK_THROWS_AS(
        parse_game_json(R"({"players": 1, "values": {"1": "0.5"}})"), ParseError);
    // Bad keys: unsorted, duplicate player, out of range.
    CHECK_THROWS_AS(
        parse_game_json(R"({"players": 2, "values": {"2,1": 1, "1": 0, "2": 0}})"),
        ParseError);
    CHECK_THROWS_AS(
        parse_game_json(R"({"players": 2, "values": {"1,1": 1, "1": 0, "2": 0}})"),
        ParseError);
    CHECK_THROWS_AS(
        parse_game_json(R"({"players": 2, "values": {"3": 1, "1": 0, "2": 0, "1,2": 1}})"),
        ParseError);
    // Nonzero empty coalition.
    CHECK_THROWS_AS(
        parse_game_json(R"({"players": 1, "values": {"": 1, "1": 0}})"), ParseError);
}

TEST_CASE("game json round trip is exact") {
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 40; ++trial) {
        Game g = random_superadditive_game(rng, 1 + static_cast<int>(rng() % 4));
        CHECK(parse_game_json(write_game_json(g)) == g);
    }
    Game awkward = make_game(2, {{{1}, Rational(-7, 3)},
                                 {{2}, Rational(22, 7)},
                                 {{1, 2}, Rational(355, 113)}});
    CHECK(parse_game_json(write_game_json(awkward)) == awkward);
}

TEST_CASE("framework text parsing and writing") {
    const std::string text = "p af 3\natt 1 2\natt 2 3\n";
    Framework f = parse_framework_text(text);
    CHECK(f.n_args() == 3);
    CHECK(f.attacks() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
    CHECK(write_framework_text(f) == text);

    Framework parsed = parse_framework_text("# comment\n\np af 2\natt 1 1\n");
    CHECK(parsed.n_args() == 2);
    CHECK(parsed.has_attack(0, 0));

    CHECK_THROWS_AS(parse_framework_text("att 1 2\np af 3"), ParseError);
    CHECK_THROWS_AS(parse_framework_text("p af 2\natt 1 3\n"), ParseError);
    CHECK_THROWS_AS(parse_framework_text("p af 2\natt 0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_framework_text("p cnf 2\n"), ParseError);
    CHECK_THROWS_AS(parse_framework_text(""), ParseError);
    CHECK_THROWS_AS(parse_framework_text("p af 2\nfoo 1 2\n"), ParseError);
}

TEST_CASE("framework text round trip") {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 30; ++trial) {
        Framework f = random_framework(rng, 1 + static_cast<int>(rng() % 10),
                                       static_cast<int>(rng() % 50));
        Framework back = parse_framework_text(write_framework_text(f));
        CHECK(back.n_args() == f.n_args());
        CHECK(back.attacks() == f.attacks());
    }
}

TEST_CASE("dot export") {
    Framework f(2, {{0, 1}});
    const std::string plain = write_framework_dot(f);
    CHECK(plain.find("digraph af {") != std::string::npos);
    CHECK(plain.find("a1 -> a2;") != std::string::npos);

    const std::string labelled = write_framework_dot(f, {"0,1", "1,0"});
    CHECK(labelled.find("label=\"0,1\"") != std::string::npos);
    CHECK_THROWS_AS(write_framework_dot(f, {"only-one"}), PreconditionError);
}

TEST_CASE("content digest is stable and content-sensitive") {
    CHECK(content_digest("") == "fnv1a64:cbf29ce484222325");
    CHECK(content_digest("abc") == content_digest("abc"));
    CHECK(content_digest("abc") != content_digest("abd"));
    CHECK(content_digest("abc").rfind("fnv1a64:", 0) == 0);
}
