#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coopgame/af.hpp"
#include "coopgame/core.hpp"
#include "coopgame/errors.hpp"
#include "coopgame/game.hpp"
#include "coopgame/grid_af.hpp"
#include "coopgame/imputation.hpp"
#include "coopgame/io.hpp"
#include "coopgame/version.hpp"

namespace py = pybind11;

namespace {

// Rationals cross the boundary as "p/q" strings so nothing is ever rounded.
coopgame::Imputation parse_payoffs(const std::vector<std::string>& payoffs) {
    coopgame::Imputation x;
    x.reserve(payoffs.size());
    for (const std::string& s : payoffs) x.push_back(coopgame::parse_rational(s));
    return x;
}

std::vector<std::string> format_payoffs(const coopgame::Imputation& x) {
    std::vector<std::string> out;
    out.reserve(x.size());
    for (const coopgame::Rational& r : x) out.push_back(coopgame::to_string(r));
    return out;
}

std::vector<std::vector<std::string>> format_payoff_list(
    const std::vector<coopgame::Imputation>& points) {
    std::vector<std::vector<std::string>> out;
    out.reserve(points.size());
    for (const auto& p : points) out.push_back(format_payoffs(p));
    return out;
}

coopgame::Coalition coalition_from_list(const std::vector<int>& members) {
    return coopgame::Coalition::from_members(members);
}

} // namespace

PYBIND11_MODULE(_coopgame, m) {
    m.doc() = "exact cooperative-game solution concepts through argumentation semantics";
    m.attr("__version__") = COOPGAME_VERSION;

    py::register_exception<coopgame::Error>(m, "CoopgameError");

    py::class_<coopgame::Game>(m, "Game")
        .def_static("from_json", &coopgame::parse_game_json, py::arg("text"))
        .def_static(
            "canonical",
            [](const std::string& a, const std::string& b, const std::string& c) {
                return coopgame::CanonicalThreePlayer(coopgame::parse_rational(a),
                                                      coopgame::parse_rational(b),
                                                      coopgame::parse_rational(c))
                    .to_game();
            },
            py::arg("a"), py::arg("b"), py::arg("c"),
            "The (0,1)-normalised 3-player game with pair values a, b, c.")
        .def_property_readonly("players", &coopgame::Game::player_count)
        .def("value",
             [](const coopgame::Game& g, const std::vector<int>& coalition) {
                 return coopgame::to_string(g.value(coalition_from_list(coalition)));
             },
             py::arg("coalition"))
        .def("to_json", &coopgame::write_game_json)
        .def("is_nonnegative", &coopgame::check_nonnegative)
        .def("is_monotonic", &coopgame::check_monotonic)
        .def("is_superadditive", &coopgame::check_superadditive)
        .def("is_constant_sum", &coopgame::check_constant_sum)
        .def("is_essential", &coopgame::check_essential)
        .def("is_convex", &coopgame::check_convex)
        .def("is_normalized", &coopgame::is_normalized_01)
        .def("__eq__",
             [](const coopgame::Game& a, const coopgame::Game& b) { return a == b; })
        .def("__repr__", [](const coopgame::Game& g) {
            return "<Game players=" + std::to_string(g.player_count()) + ">";
        });

    m.def(
        "normalize",
        [](const coopgame::Game& g) {
            coopgame::NormalizationResult n = coopgame::normalize_01(g);
            return py::make_tuple(n.game, coopgame::to_string(n.scale),
                                  format_payoffs(n.shift));
        },
        py::arg("game"), "Returns (normalized_game, K, shift).");
    m.def(
        "strategically_equivalent",
        [](const coopgame::Game& g, const coopgame::Game& g2) -> py::object {
            auto witness = coopgame::strategically_equivalent(g, g2);
            if (!witness) return py::none();
            return py::make_tuple(coopgame::to_string(witness->scale),
                                  format_payoffs(witness->shift));
        },
        py::arg("game"), py::arg("other"), "Returns (K, shift) or None.");
    m.def(
        "canonical_parameters",
        [](const coopgame::Game& g) {
            coopgame::CanonicalThreePlayer p = coopgame::to_canonical_three_player(g);
            return py::make_tuple(coopgame::to_string(p.a), coopgame::to_string(p.b),
                                  coopgame::to_string(p.c));
        },
        py::arg("game"), "(a, b, c) of the canonical form of an essential 3-player game.");
    m.def(
        "canonical_is_convex",
        [](const std::string& a, const std::string& b, const std::string& c) {
            return coopgame::canonical_is_convex(
                coopgame::CanonicalThreePlayer(coopgame::parse_rational(a),
                                               coopgame::parse_rational(b),
                                               coopgame::parse_rational(c)));
        },
        py::arg("a"), py::arg("b"), py::arg("c"));

    m.def(
        "is_feasible",
        [](const coopgame::Game& g, const std::vector<std::string>& x) {
            return coopgame::is_feasible(parse_payoffs(x), g);
        },
        py::arg("game"), py::arg("payoffs"));
    m.def(
        "is_imputation",
        [](const coopgame::Game& g, const std::vector<std::string>& x) {
            return coopgame::is_imputation(parse_payoffs(x), g);
        },
        py::arg("game"), py::arg("payoffs"));
    m.def(
        "dominates_via",
        [](const coopgame::Game& g, const std::vector<std::string>& x,
           const std::vector<std::string>& y, const std::vector<int>& coalition) {
            return coopgame::dominates_via(parse_payoffs(x), parse_payoffs(y),
                                           coalition_from_list(coalition), g);
        },
        py::arg("game"), py::arg("x"), py::arg("y"), py::arg("coalition"));
    m.def(
        "dominates",
        [](const coopgame::Game& g, const std::vector<std::string>& x,
           const std::vector<std::string>& y) -> py::object {
            auto witness = coopgame::dominates(parse_payoffs(x), parse_payoffs(y), g);
            if (!witness) return py::none();
            return py::cast(witness->members());
        },
        py::arg("game"), py::arg("x"), py::arg("y"),
        "Smallest-bitmask witness coalition (1-indexed members) or None.");
    m.def(
        "enumerate_grid",
        [](const coopgame::Game& g, int denominator) {
            return format_payoff_list(coopgame::enumerate_grid(g, coopgame::GridSpec(denominator)));
        },
        py::arg("game"), py::arg("denominator"));
    m.def(
        "counterexample_point",
        [](long long i) { return format_payoffs(coopgame::counterexample_point(i)); },
        py::arg("i"));
    m.def("verify_descending_chain", &coopgame::verify_descending_chain, py::arg("n"));
    m.def("check_convexity_not_well_founded", &coopgame::check_convexity_not_well_founded,
          py::arg("chain_length") = 10000);

    m.def(
        "in_core",
        [](const coopgame::Game& g, const std::vector<std::string>& x) {
            return coopgame::in_core(parse_payoffs(x), g);
        },
        py::arg("game"), py::arg("payoffs"));
    m.def(
        "is_dominated_exact",
        [](const coopgame::Game& g, const std::vector<std::string>& x) -> py::object {
            auto result = coopgame::is_dominated_exact(parse_payoffs(x), g);
            if (!result) return py::none();
            return py::make_tuple(result->first.members(), format_payoffs(result->second));
        },
        py::arg("game"), py::arg("payoffs"),
        "Returns (coalition_members, dominating_imputation) or None.");
    m.def(
        "core_nonempty",
        [](const coopgame::Game& g) {
            coopgame::CoreResult r = coopgame::core_nonempty(g);
            return py::make_tuple(r.nonempty,
                                  r.witness ? py::cast(format_payoffs(*r.witness))
                                            : py::object(py::none()));
        },
        py::arg("game"), "Returns (nonempty, witness_or_None).");
    m.def("is_balanced", &coopgame::is_balanced, py::arg("game"));
    m.def("supercore_nonempty", &coopgame::supercore_nonempty, py::arg("game"));
    m.def(
        "core_vertices",
        [](const coopgame::Game& g, int player_cap) {
            return format_payoff_list(coopgame::core_vertices(g, player_cap));
        },
        py::arg("game"), py::arg("player_cap") = coopgame::kDefaultVertexCap);

    py::class_<coopgame::Framework>(m, "Framework")
        .def(py::init<int, std::vector<std::pair<int, int>>>(), py::arg("n_args"),
             py::arg("attacks"), "Attacks are (attacker, attacked) pairs, 0-indexed.")
        .def_static("from_text", &coopgame::parse_framework_text, py::arg("text"))
        .def_property_readonly("n_args", &coopgame::Framework::n_args)
        .def_property_readonly("attacks",
                               [](const coopgame::Framework& f) { return f.attacks(); })
        .def("to_text", &coopgame::write_framework_text)
        .def("to_dot",
             [](const coopgame::Framework& f, const std::vector<std::string>& labels) {
                 return coopgame::write_framework_dot(f, labels);
             },
             py::arg("labels") = std::vector<std::string>{})
        .def("unattacked",
             [](const coopgame::Framework& f) { return coopgame::unattacked(f).members(); })
        .def("grounded",
             [](const coopgame::Framework& f) { return coopgame::grounded(f).members(); })
        .def(
            "complete_extensions",
            [](const coopgame::Framework& f, int cap) {
                std::vector<std::vector<int>> out;
                for (const coopgame::ArgSet& s : coopgame::complete_extensions(f, cap))
                    out.push_back(s.members());
                return out;
            },
            py::arg("enum_cap") = coopgame::kDefaultEnumCap)
        .def(
            "preferred_extensions",
            [](const coopgame::Framework& f, int cap) {
                std::vector<std::vector<int>> out;
                for (const coopgame::ArgSet& s : coopgame::preferred_extensions(f, cap))
                    out.push_back(s.members());
                return out;
            },
            py::arg("enum_cap") = coopgame::kDefaultEnumCap)
        .def(
            "stable_extensions",
            [](const coopgame::Framework& f, int cap) {
                std::vector<std::vector<int>> out;
                for (const coopgame::ArgSet& s : coopgame::stable_extensions(f, cap))
                    out.push_back(s.members());
                return out;
            },
            py::arg("enum_cap") = coopgame::kDefaultEnumCap)
        .def("is_well_founded",
             [](const coopgame::Framework& f) { return coopgame::is_well_founded(f); })
        .def("__repr__", [](const coopgame::Framework& f) {
            return "<Framework n_args=" + std::to_string(f.n_args()) + " attacks=" +
                   std::to_string(f.attacks().size()) + ">";
        });

    py::class_<coopgame::GridAF>(m, "GridAF")
        .def_property_readonly("game", [](const coopgame::GridAF& g) { return g.game; })
        .def_property_readonly("denominator",
                               [](const coopgame::GridAF& g) { return g.spec.denominator; })
        .def_property_readonly("points",
                               [](const coopgame::GridAF& g) { return format_payoff_list(g.points); })
        .def_property_readonly("framework",
                               [](const coopgame::GridAF& g) { return g.framework; })
        .def(
            "report_json",
            [](const coopgame::GridAF& g, int enum_cap) {
                return coopgame::report_to_json(g, coopgame::check_semantics_vs_solutions(g, enum_cap));
            },
            py::arg("enum_cap") = coopgame::kDefaultEnumCap)
        .def(
            "report_text",
            [](const coopgame::GridAF& g, int enum_cap) {
                return coopgame::report_to_text(g, coopgame::check_semantics_vs_solutions(g, enum_cap));
            },
            py::arg("enum_cap") = coopgame::kDefaultEnumCap);

    m.def(
        "build_grid_af",
        [](const coopgame::Game& g, int denominator, int node_cap) {
            return coopgame::build_grid_af(g, coopgame::GridSpec(denominator), node_cap);
        },
        py::arg("game"), py::arg("denominator"), py::arg("node_cap") = coopgame::kDefaultNodeCap);
}
