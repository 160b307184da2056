#include "coopgame/grid_af.hpp"

#include <algorithm>
#include <sstream>
#include <string>

#include <json.hpp>

#include "coopgame/errors.hpp"

namespace coopgame {

GridAF build_grid_af(const Game& g, const GridSpec& spec, int node_cap) {
    if (!is_normalized_01(g))
        throw NotNormalizedError("grid framework requires a (0,1)-normalised game");
    if (!check_nonnegative(g))
        throw PreconditionError("grid framework requires a non-negative valuation");
    if (!check_superadditive(g))
        throw PreconditionError("grid framework requires a super-additive valuation");

    std::vector<Imputation> points = enumerate_grid(g, spec);
    if (points.size() > static_cast<std::size_t>(node_cap))
        throw GridTooLargeError("grid has " + std::to_string(points.size()) +
                                " points, above the node cap of " + std::to_string(node_cap));

    std::vector<std::pair<int, int>> attacks;
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (i == j) continue; // domination is irreflexive
            if (dominates(points[i], points[j], g))
                attacks.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    }
    Framework framework(static_cast<int>(points.size()), std::move(attacks));
    return GridAF{g, spec, std::move(points), std::move(framework)};
}

CoreCorrespondence check_core_vs_unattacked(const GridAF& gaf) {
    CoreCorrespondence out;
    const ArgSet u = unattacked(gaf.framework);
    out.unattacked_grid_points = u.members();

    out.noncore_points_have_verified_dominator = true;
    for (std::size_t i = 0; i < gaf.points.size(); ++i) {
        if (in_core(gaf.points[i], gaf.game)) {
            out.core_grid_points.push_back(static_cast<int>(i));
        } else {
            // A non-core grid point must have a continuum dominator even
            // when no grid point attacks it; is_dominated_exact re-verifies
            // the dominator it builds.
            auto dominated = is_dominated_exact(gaf.points[i], gaf.game);
            if (!dominated.has_value()) out.noncore_points_have_verified_dominator = false;
        }
    }

    out.core_subset_of_unattacked = true;
    for (int idx : out.core_grid_points)
        if (!u.contains(idx)) out.core_subset_of_unattacked = false;

    for (int idx : out.unattacked_grid_points)
        if (!std::binary_search(out.core_grid_points.begin(), out.core_grid_points.end(), idx))
            out.spurious_unattacked.push_back(idx);

    return out;
}

bool CorrespondenceReport::ok() const {
    return core.ok() && grounded_superset_of_unattacked &&
           grounded_is_intersection_of_complete && families_nested && preferred_nonempty &&
           stable_internally_stable && stable_externally_stable && stable_contain_core_points;
}

CorrespondenceReport check_semantics_vs_solutions(const GridAF& gaf, int enum_cap) {
    CorrespondenceReport r;
    r.denominator = gaf.spec.denominator;
    r.n_points = static_cast<int>(gaf.points.size());
    r.core = check_core_vs_unattacked(gaf);
    r.is_acyclic = is_well_founded(gaf.framework);
    r.game_is_convex = check_convex(gaf.game);

    const Framework& f = gaf.framework;
    const ArgSet u = unattacked(f);
    const ArgSet g = grounded(f);
    r.grounded_set = g.members();
    r.grounded_superset_of_unattacked = u.is_subset_of(g);

    const std::vector<ArgSet> complete = complete_extensions(f, enum_cap);
    const std::vector<ArgSet> preferred = preferred_extensions(f, enum_cap);
    const std::vector<ArgSet> stable = stable_extensions(f, enum_cap);
    r.complete_extension_count = static_cast<int>(complete.size());
    r.preferred_extension_count = static_cast<int>(preferred.size());
    r.stable_extension_count = static_cast<int>(stable.size());
    r.preferred_nonempty = !preferred.empty();

    ArgSet meet = ArgSet::full(f.n_args());
    for (const ArgSet& s : complete) meet = meet.intersect_with(s);
    r.grounded_is_intersection_of_complete = meet == g && !complete.empty();

    auto family_contains = [](const std::vector<ArgSet>& family, const ArgSet& s) {
        return std::any_of(family.begin(), family.end(),
                           [&](const ArgSet& t) { return t == s; });
    };
    r.families_nested = true;
    for (const ArgSet& s : stable)
        if (!family_contains(preferred, s)) r.families_nested = false;
    for (const ArgSet& s : preferred)
        if (!family_contains(complete, s)) r.families_nested = false;

    // Re-check each stable extension directly against the domination
    // definitions over the grid sample: internal stability (no member
    // dominates another) and external stability (every grid point outside
    // is dominated by a member).
    r.stable_internally_stable = true;
    r.stable_externally_stable = true;
    r.stable_contain_core_points = true;
    for (const ArgSet& s : stable) {
        const std::vector<int> inside = s.members();
        for (int i : inside)
            for (int j : inside)
                if (i != j && dominates(gaf.points[i], gaf.points[j], gaf.game))
                    r.stable_internally_stable = false;
        for (int j = 0; j < r.n_points; ++j) {
            if (s.contains(j)) continue;
            bool dominated = false;
            for (int i : inside) {
                if (dominates(gaf.points[i], gaf.points[j], gaf.game)) {
                    dominated = true;
                    break;
                }
            }
            if (!dominated) r.stable_externally_stable = false;
        }
        for (int idx : r.core.core_grid_points)
            if (!s.contains(idx)) r.stable_contain_core_points = false;
    }

    return r;
}

bool check_convexity_not_well_founded(long long chain_length) {
    const Rational half(1, 2);
    if (!canonical_is_convex(CanonicalThreePlayer(half, half, half))) return false;
    const Game g = counterexample_game();
    for (long long i = 0; i <= chain_length; ++i)
        if (!is_imputation(counterexample_point(i), g)) return false;
    return verify_descending_chain(chain_length);
}

bool grid_acyclicity(const GridAF& gaf) { return is_well_founded(gaf.framework); }

namespace {

nlohmann::ordered_json one_based(const std::vector<int>& indices) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (int i : indices) arr.push_back(i + 1);
    return arr;
}

} // namespace

std::string report_to_json(const GridAF& gaf, const CorrespondenceReport& r) {
    nlohmann::ordered_json doc;
    doc["approximation"] =
        "grid-level extension families approximate continuum solution concepts; only "
        "containments that are sound under sub-sampling are asserted";
    doc["denominator"] = r.denominator;
    doc["n_points"] = r.n_points;
    doc["n_attacks"] = static_cast<int>(gaf.framework.attacks().size());
    nlohmann::ordered_json points = nlohmann::ordered_json::array();
    for (const Imputation& p : gaf.points) points.push_back(format_rational_vector(p));
    doc["points"] = std::move(points);
    doc["core_grid_points"] = one_based(r.core.core_grid_points);
    doc["unattacked_grid_points"] = one_based(r.core.unattacked_grid_points);
    doc["spurious_unattacked"] = one_based(r.core.spurious_unattacked);
    doc["grounded_set"] = one_based(r.grounded_set);
    doc["complete_extension_count"] = r.complete_extension_count;
    doc["preferred_extension_count"] = r.preferred_extension_count;
    doc["stable_extension_count"] = r.stable_extension_count;
    doc["is_acyclic"] = r.is_acyclic;
    doc["game_is_convex"] = r.game_is_convex;
    doc["verdicts"] = {
        {"core_subset_of_unattacked", r.core.core_subset_of_unattacked},
        {"noncore_points_have_verified_dominator",
         r.core.noncore_points_have_verified_dominator},
        {"grounded_superset_of_unattacked", r.grounded_superset_of_unattacked},
        {"grounded_is_intersection_of_complete", r.grounded_is_intersection_of_complete},
        {"families_nested", r.families_nested},
        {"preferred_nonempty", r.preferred_nonempty},
        {"stable_internally_stable", r.stable_internally_stable},
        {"stable_externally_stable", r.stable_externally_stable},
        {"stable_contain_core_points", r.stable_contain_core_points},
    };
    doc["ok"] = r.ok();
    return doc.dump(2) + "\n";
}

std::string report_to_text(const GridAF& gaf, const CorrespondenceReport& r) {
    std::ostringstream out;
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    out << "grid framework (approximation of the continuum abstract game)\n";
    out << "  denominator        " << r.denominator << "\n";
    out << "  points             " << r.n_points << "\n";
    out << "  attacks            " << gaf.framework.attacks().size() << "\n";
    out << "  core grid points   " << r.core.core_grid_points.size() << "\n";
    out << "  unattacked         " << r.core.unattacked_grid_points.size() << "\n";
    out << "  spurious unattacked " << r.core.spurious_unattacked.size() << "\n";
    out << "  grounded size      " << r.grounded_set.size() << "\n";
    out << "  complete/preferred/stable  " << r.complete_extension_count << "/"
        << r.preferred_extension_count << "/" << r.stable_extension_count << "\n";
    out << "  acyclic            " << yn(r.is_acyclic) << "\n";
    out << "  game convex        " << yn(r.game_is_convex) << "\n";
    out << "verdicts\n";
    out << "  core within unattacked          " << yn(r.core.core_subset_of_unattacked) << "\n";
    out << "  non-core points have dominator  "
        << yn(r.core.noncore_points_have_verified_dominator) << "\n";
    out << "  grounded contains unattacked    " << yn(r.grounded_superset_of_unattacked) << "\n";
    out << "  grounded = meet of complete     " << yn(r.grounded_is_intersection_of_complete)
        << "\n";
    out << "  stable within preferred within complete  " << yn(r.families_nested) << "\n";
    out << "  preferred nonempty              " << yn(r.preferred_nonempty) << "\n";
    out << "  stable internally stable        " << yn(r.stable_internally_stable) << "\n";
    out << "  stable externally stable       " << yn(r.stable_externally_stable) << "\n";
    out << "  stable contain core points      " << yn(r.stable_contain_core_points) << "\n";
    out << "ok: " << yn(r.ok()) << "\n";
    return out.str();
}

} // namespace coopgame
