#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "coopgame/af.hpp"
#include "coopgame/core.hpp"
#include "coopgame/errors.hpp"
#include "coopgame/game.hpp"
#include "coopgame/grid_af.hpp"
#include "coopgame/imputation.hpp"
#include "coopgame/io.hpp"
#include "coopgame/version.hpp"

namespace {

using coopgame::Rational;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInvariantViolation = 1;
constexpr int kExitInputError = 2;

json report_envelope(const std::string& command, const std::string& input_bytes) {
    json doc;
    doc["tool"] = "coopgame";
    doc["version"] = COOPGAME_VERSION;
    doc["command"] = command;
    doc["input_digest"] = coopgame::content_digest(input_bytes);
    return doc;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty())
        std::cout << text;
    else
        coopgame::write_file(out_path, text);
}

std::vector<std::string> payoff_strings(const std::vector<coopgame::Imputation>& points) {
    std::vector<std::string> out;
    out.reserve(points.size());
    for (const auto& p : points) out.push_back(coopgame::format_rational_vector(p));
    return out;
}

json one_based(const std::vector<int>& indices) {
    json arr = json::array();
    for (int i : indices) arr.push_back(i + 1);
    return arr;
}

// ---------------------------------------------------------------- analyze

int run_analyze(const std::string& path, const std::string& format,
                const std::string& out_path) {
    const std::string bytes = coopgame::read_file(path);
    const coopgame::Game game = coopgame::parse_game_json(bytes);

    const bool essential = coopgame::check_essential(game);
    json doc = report_envelope("analyze", bytes);
    doc["players"] = game.player_count();
    doc["properties"] = {
        {"nonnegative", coopgame::check_nonnegative(game)},
        {"monotonic", coopgame::check_monotonic(game)},
        {"superadditive", coopgame::check_superadditive(game)},
        {"constant_sum", coopgame::check_constant_sum(game)},
        {"essential", essential},
        {"convex", coopgame::check_convex(game)},
        {"normalized_01", coopgame::is_normalized_01(game)},
    };

    std::optional<coopgame::NormalizationResult> normalization;
    std::string refusal;
    try {
        normalization = coopgame::normalize_01(game);
    } catch (const coopgame::InessentialGameError& e) {
        refusal = e.what();
    } catch (const coopgame::NotNormalizableError& e) {
        refusal = e.what();
    }

    if (normalization) {
        json n;
        n["scale"] = coopgame::to_string(normalization->scale);
        json shift = json::array();
        for (const Rational& s : normalization->shift) shift.push_back(coopgame::to_string(s));
        n["shift"] = std::move(shift);
        n["game"] = json::parse(coopgame::write_game_json(normalization->game));
        doc["normalization"] = std::move(n);
    } else {
        doc["normalization"] = nullptr;
        doc["normalization_refused"] = refusal;
    }

    if (game.player_count() == 3 && normalization) {
        const coopgame::CanonicalThreePlayer canonical =
            coopgame::to_canonical_three_player(game);
        doc["canonical"] = {
            {"a", coopgame::to_string(canonical.a)},
            {"b", coopgame::to_string(canonical.b)},
            {"c", coopgame::to_string(canonical.c)},
            {"convex", coopgame::canonical_is_convex(canonical)},
        };
    } else {
        doc["canonical"] = nullptr;
    }
    doc["game"] = json::parse(coopgame::write_game_json(game));

    if (format == "json") {
        emit(doc.dump(2) + "\n", out_path);
        return kExitOk;
    }
    std::string text;
    text += "game: " + path + " (" + std::to_string(game.player_count()) + " players)\n";
    for (const auto& [key, value] : doc["properties"].items())
        text += "  " + key + ": " + (value.get<bool>() ? "yes" : "no") + "\n";
    if (normalization) {
        text += "normalization: K = " + coopgame::to_string(normalization->scale) +
                ", shift = (" + coopgame::format_rational_vector(normalization->shift) + ")\n";
        if (!doc["canonical"].is_null())
            text += "canonical (a,b,c) = (" + doc["canonical"]["a"].get<std::string>() + "," +
                    doc["canonical"]["b"].get<std::string>() + "," +
                    doc["canonical"]["c"].get<std::string>() + "), convex: " +
                    (doc["canonical"]["convex"].get<bool>() ? "yes" : "no") + "\n";
    } else {
        text += "normalization refused: " + refusal + "\n";
    }
    emit(text, out_path);
    return kExitOk;
}

// ------------------------------------------------------------------- core

int run_core(const std::string& path, const std::string& format, const std::string& out_path,
             int vertex_cap) {
    const std::string bytes = coopgame::read_file(path);
    const coopgame::Game game = coopgame::parse_game_json(bytes);

    const coopgame::CoreResult core = coopgame::core_nonempty(game);
    const coopgame::BalancednessResult balance = coopgame::is_balanced_lp(game);
    const bool supercore = coopgame::supercore_nonempty(game);
    const bool agreement = core.nonempty == balance.balanced && supercore == balance.balanced;

    json doc = report_envelope("core", bytes);
    doc["core_nonempty"] = core.nonempty;
    doc["witness"] =
        core.witness ? json(coopgame::format_rational_vector(*core.witness)) : json(nullptr);
    doc["balanced"] = balance.balanced;
    doc["balancedness_optimum"] = coopgame::to_string(balance.optimum);
    doc["supercore_nonempty"] = supercore;
    doc["agreement"] = agreement;

    std::vector<coopgame::Imputation> vertices;
    if (game.player_count() <= vertex_cap) {
        vertices = coopgame::core_vertices(game, vertex_cap);
        json arr = json::array();
        for (const std::string& s : payoff_strings(vertices)) arr.push_back(s);
        doc["vertices"] = std::move(arr);
    } else {
        doc["vertices"] = nullptr;
        doc["vertices_skipped"] = "player count above the vertex enumeration cap";
    }

    if (format == "json") {
        emit(doc.dump(2) + "\n", out_path);
    } else {
        std::string text;
        text += std::string("core: ") + (core.nonempty ? "nonempty" : "empty") + "\n";
        if (core.witness)
            text += "  witness: (" + coopgame::format_rational_vector(*core.witness) + ")\n";
        text += std::string("balanced: ") + (balance.balanced ? "yes" : "no") +
                " (optimum " + coopgame::to_string(balance.optimum) + ")\n";
        text += std::string("supercore: ") + (supercore ? "nonempty" : "empty") + "\n";
        text += std::string("agreement: ") + (agreement ? "yes" : "NO") + "\n";
        if (doc["vertices"].is_array()) {
            text += "core vertices (" + std::to_string(vertices.size()) + "):\n";
            for (const auto& v : doc["vertices"]) text += "  (" + v.get<std::string>() + ")\n";
        }
        emit(text, out_path);
    }
    return agreement ? kExitOk : kExitInvariantViolation;
}

// ---------------------------------------------------------------- grid-af

int run_grid_af(const std::string& path, int denominator, bool normalize_first, int node_cap,
                int enum_cap, std::string out_prefix, const std::string& format) {
    const std::string bytes = coopgame::read_file(path);
    coopgame::Game game = coopgame::parse_game_json(bytes);
    if (normalize_first && !coopgame::is_normalized_01(game))
        game = coopgame::normalize_01(game).game;

    const coopgame::GridAF gaf =
        coopgame::build_grid_af(game, coopgame::GridSpec(denominator), node_cap);

    if (out_prefix.empty()) {
        out_prefix = path;
        if (auto dot = out_prefix.rfind('.'); dot != std::string::npos &&
                                              out_prefix.find('/', dot) == std::string::npos)
            out_prefix.resize(dot);
        out_prefix += "-d" + std::to_string(denominator);
    }
    // The framework and DOT files only need the attack graph; write them
    // first so they survive an enumeration-cap failure below.
    coopgame::write_file(out_prefix + ".af", coopgame::write_framework_text(gaf.framework));
    coopgame::write_file(out_prefix + ".dot",
                         coopgame::write_framework_dot(gaf.framework, payoff_strings(gaf.points)));

    const coopgame::CorrespondenceReport report =
        coopgame::check_semantics_vs_solutions(gaf, enum_cap);

    json doc = report_envelope("grid-af", bytes);
    doc.update(json::parse(coopgame::report_to_json(gaf, report)));
    coopgame::write_file(out_prefix + ".json", doc.dump(2) + "\n");

    if (format == "json") {
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << coopgame::report_to_text(gaf, report)
                  << "wrote " << out_prefix << ".af, .dot, .json\n";
    }
    return report.ok() ? kExitOk : kExitInvariantViolation;
}

// -------------------------------------------------------------- semantics

int run_semantics(const std::string& path, int enum_cap, const std::string& format,
                  const std::string& out_path) {
    const std::string bytes = coopgame::read_file(path);
    const coopgame::Framework framework = coopgame::parse_framework_text(bytes);

    if (format == "dot") {
        emit(coopgame::write_framework_dot(framework), out_path);
        return kExitOk;
    }

    const coopgame::ArgSet u = coopgame::unattacked(framework);
    const coopgame::ArgSet g = coopgame::grounded(framework);
    const auto complete = coopgame::complete_extensions(framework, enum_cap);
    const auto preferred = coopgame::preferred_extensions(framework, enum_cap);
    const auto stable = coopgame::stable_extensions(framework, enum_cap);

    auto family_json = [](const std::vector<coopgame::ArgSet>& family) {
        json arr = json::array();
        for (const coopgame::ArgSet& s : family) arr.push_back(one_based(s.members()));
        return arr;
    };

    json doc = report_envelope("semantics", bytes);
    doc["n_args"] = framework.n_args();
    doc["n_attacks"] = static_cast<int>(framework.attacks().size());
    doc["well_founded"] = coopgame::is_well_founded(framework);
    doc["unattacked"] = one_based(u.members());
    doc["grounded"] = one_based(g.members());
    doc["complete"] = family_json(complete);
    doc["preferred"] = family_json(preferred);
    doc["stable"] = family_json(stable);

    if (format == "json") {
        emit(doc.dump(2) + "\n", out_path);
        return kExitOk;
    }
    auto family_text = [](const json& family) {
        std::string text;
        for (const auto& ext : family) {
            text += "  {";
            for (std::size_t i = 0; i < ext.size(); ++i)
                text += (i ? "," : "") + std::to_string(ext[i].get<int>());
            text += "}\n";
        }
        return text.empty() ? std::string("  (none)\n") : text;
    };
    std::string text;
    text += "framework: " + std::to_string(framework.n_args()) + " arguments, " +
            std::to_string(framework.attacks().size()) + " attacks\n";
    text += std::string("well-founded: ") + (doc["well_founded"].get<bool>() ? "yes" : "no") +
            "\n";
    text += "grounded:\n" + family_text(json::array({doc["grounded"]}));
    text += "complete (" + std::to_string(complete.size()) + "):\n" +
            family_text(doc["complete"]);
    text += "preferred (" + std::to_string(preferred.size()) + "):\n" +
            family_text(doc["preferred"]);
    text += "stable (" + std::to_string(stable.size()) + "):\n" + family_text(doc["stable"]);
    emit(text, out_path);
    return kExitOk;
}

// --------------------------------------------------------- counterexample

int run_counterexample(long long chain_length, const std::string& format,
                       const std::string& out_path) {
    const bool convex = coopgame::canonical_is_convex(
        coopgame::CanonicalThreePlayer(Rational(1, 2), Rational(1, 2), Rational(1, 2)));
    const bool verified = coopgame::check_convexity_not_well_founded(chain_length);

    const long long shown = std::min<long long>(chain_length, 20);
    std::vector<std::string> points;
    for (long long i = 0; i <= shown; ++i)
        points.push_back(coopgame::format_rational_vector(coopgame::counterexample_point(i)));

    json doc = report_envelope("counterexample", "canonical a=b=c=1/2");
    doc["chain_length"] = chain_length;
    doc["game_convex"] = convex;
    doc["chain_verified"] = verified;
    doc["points_shown"] = points;
    doc["pass"] = convex && verified;

    if (format == "json") {
        emit(doc.dump(2) + "\n", out_path);
    } else {
        std::string text;
        text += "game: canonical a=b=c=1/2, convex: " + std::string(convex ? "yes" : "no") +
                "\n";
        text += "descending domination chain, first " + std::to_string(points.size()) +
                " points:\n";
        for (std::size_t i = 0; i < points.size(); ++i)
            text += "  x^" + std::to_string(i) + " = (" + points[i] + ")\n";
        text += "chain of length " + std::to_string(chain_length) + " verified: " +
                (verified ? "PASS" : "FAIL") + "\n";
        emit(text, out_path);
    }
    return (convex && verified) ? kExitOk : kExitInvariantViolation;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact analysis of transferable-utility cooperative games via "
                 "argumentation semantics"};
    app.set_version_flag("--version", COOPGAME_VERSION);
    app.require_subcommand(1);

    std::string input_path, out_path, format = "text";
    int denominator = 2;
    long long chain_length = 10000;
    int node_cap = coopgame::kDefaultNodeCap;
    int enum_cap = coopgame::kDefaultEnumCap;
    int vertex_cap = coopgame::kDefaultVertexCap;
    bool normalize_first = false;

    CLI::App* analyze = app.add_subcommand("analyze", "valuation properties, normalization "
                                                      "constants and canonical form");
    analyze->add_option("game", input_path, "game JSON file")->required();
    analyze->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));
    analyze->add_option("--out", out_path, "write the report here instead of stdout");

    CLI::App* core = app.add_subcommand("core", "core membership, balancedness and vertices");
    core->add_option("game", input_path, "game JSON file")->required();
    core->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));
    core->add_option("--out", out_path, "write the report here instead of stdout");
    core->add_option("--vertex-cap", vertex_cap, "player cap for vertex enumeration");

    CLI::App* grid = app.add_subcommand("grid-af", "discretize the imputation simplex into an "
                                                   "attack graph and check correspondences");
    grid->add_option("game", input_path, "game JSON file, (0,1)-normalised")->required();
    grid->add_option("--grid-denominator", denominator, "grid denominator d")
        ->check(CLI::PositiveNumber);
    grid->add_option("--node-cap", node_cap, "maximum grid framework size");
    grid->add_option("--enum-cap", enum_cap, "maximum size for extension enumeration");
    grid->add_option("--out", out_path, "output prefix for .af/.dot/.json files");
    grid->add_option("--format", format, "stdout summary format: text|json")
        ->check(CLI::IsMember({"text", "json"}));
    grid->add_flag("--normalize", normalize_first, "(0,1)-normalise the game first if needed");

    CLI::App* semantics = app.add_subcommand("semantics", "Dung semantics of a framework file");
    semantics->add_option("framework", input_path, "framework file (p af / att lines)")
        ->required();
    semantics->add_option("--enum-cap", enum_cap, "maximum size for extension enumeration");
    semantics->add_option("--format", format, "text|json|dot")
        ->check(CLI::IsMember({"text", "json", "dot"}));
    semantics->add_option("--out", out_path, "write the report here instead of stdout");

    CLI::App* counter = app.add_subcommand("counterexample",
                                           "reproduce the descending domination chain of the "
                                           "convex canonical a=b=c=1/2 game");
    counter->add_option("--chain-length", chain_length, "number of chain steps to verify")
        ->check(CLI::NonNegativeNumber);
    counter->add_option("--format", format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    counter->add_option("--out", out_path, "write the report here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (analyze->parsed()) return run_analyze(input_path, format, out_path);
        if (core->parsed()) return run_core(input_path, format, out_path, vertex_cap);
        if (grid->parsed())
            return run_grid_af(input_path, denominator, normalize_first, node_cap, enum_cap,
                               out_path, format);
        if (semantics->parsed()) return run_semantics(input_path, enum_cap, format, out_path);
        if (counter->parsed()) return run_counterexample(chain_length, format, out_path);
    } catch (const coopgame::ConstructionFailedError& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return kExitInvariantViolation;
    } catch (const coopgame::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitOk;
}
