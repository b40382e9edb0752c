#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cutbound/bounds.hpp"
#include "cutbound/coloring.hpp"
#include "cutbound/generators.hpp"
#include "cutbound/oracle.hpp"
#include "cutbound/report.hpp"
#include "cutbound/subcubic.hpp"

namespace cutbound {

struct SuiteOptions {
    std::optional<VertexId> root;
    bool sweep_all_roots = false;
    int trials = default_trials;
    std::uint64_t seed = 0;
    bool monte_carlo = true;
};

/// One bound of the suite: either a report or the reason it does not apply.
struct SuiteEntry {
    std::string name;
    std::optional<BoundReport> report;
    std::string reason;
};

inline std::string inapplicable_reason(const Error& e)
{
    switch (e.code()) {
    case Errc::triangle_found:
        return "triangle found";
    case Errc::disconnected:
        return "disconnected";
    default:
        return e.what();
    }
}

/// Every bound of the library on G. Preconditions are checked by the bounds
/// themselves; precondition failures become inapplicable entries while
/// internal assertions propagate.
inline std::vector<SuiteEntry> run_bound_suite(const WeightedGraph& g, const SuiteOptions& options = {})
{
    require(!options.root || is_connected(g), Errc::invalid_parameter, "--root needs a connected graph");
    require(!options.root || (*options.root >= 0 && *options.root < g.vertex_count()), Errc::invalid_parameter, "root out of range");
    using Fn = std::function<BoundReport()>;
    std::vector<std::pair<std::string, Fn>> plan {
        { "poljak_turzik", [&] { return per_component(g, "poljak_turzik", [](const WeightedGraph& h) { return poljak_turzik(h); }); } },
        { "dfs",
            [&] {
                if (options.root)
                    return dfs_bound(g, options.root, options.sweep_all_roots);
                return per_component(g, "dfs", [&](const WeightedGraph& h) { return dfs_bound(h, std::nullopt, options.sweep_all_roots); });
            } },
        { "matching", [&] { return matching_bound(g); } },
        { "girth",
            [&] {
                if (has_triangle(g))
                    throw Error(Errc::triangle_found, "girth bound needs girth at least 4");
                if (options.root)
                    return girth_bound(g, std::nullopt, options.root, options.sweep_all_roots);
                return per_component(
                    g, "girth", [&](const WeightedGraph& h) { return girth_bound(h, std::nullopt, std::nullopt, options.sweep_all_roots); });
            } },
        { "tfree_spanning",
            [&] {
                require_triangle_free(g, "tfree_spanning_bound");
                return per_component(g, "tfree_spanning", [](const WeightedGraph& h) { return tfree_spanning_bound(h); });
            } },
        { "girth2", [&] { return per_component(g, "girth2", [](const WeightedGraph& h) { return girth2_bound(h); }); } },
        { "matching_vizing",
            [&] {
                require_triangle_free(g, "matching_vizing_bound");
                std::vector<EdgeId> m = choose_matching(g, MatchingStrategy::automatic);
                return matching_vizing_bound(g, m);
            } },
        { "ty", [&] { return ty_bound(g); } },
        { "mainprob", [&] { return mainprob_cut(g); } },
        { "two_thirds", [&] { return two_thirds_cut(g); } },
    };
    if (options.monte_carlo) {
        plan.emplace_back("shearer", [&] { return shearer_bound(g, options.trials, options.seed); });
        plan.emplace_back("lemma_prob", [&] {
            require_subcubic(g, "lemma_prob_bound");
            return per_component(g, "lemma_prob",
                [&](const WeightedGraph& h) { return lemma_prob_bound(h, max_spanning_tree(h), 0.85, options.trials, options.seed); });
        });
        plan.emplace_back("mainprobtree", [&] {
            require_triangle_free(g, "mainprobtree_bound");
            require_subcubic(g, "mainprobtree_bound");
            return per_component(
                g, "mainprobtree", [&](const WeightedGraph& h) { return mainprobtree_bound(h, std::nullopt, options.trials, options.seed); });
        });
    }

    std::vector<SuiteEntry> out;
    for (auto& [name, fn] : plan) {
        SuiteEntry entry;
        entry.name = name;
        try {
            entry.report = fn();
            entry.report->name = name;
        } catch (const Error& e) {
            if (e.code() == Errc::internal_assertion || e.code() == Errc::not_induced || e.code() == Errc::not_bipartite)
                throw;
            entry.reason = inapplicable_reason(e);
        }
        out.push_back(std::move(entry));
    }
    return out;
}

/// Outcome of checking one graph against the oracle.
struct VerifyOutcome {
    int checks = 0;
    std::vector<std::string> failures;
};

/// Every deterministic bound must lie at or below mac and its cut at or
/// above the bound; every cut (Monte Carlo included) must lie at or below
/// mac.
inline VerifyOutcome verify_graph(const WeightedGraph& g, const SuiteOptions& options = {}, VertexId max_n = max_cut_vertex_limit)
{
    VerifyOutcome v;
    const double mac = exact_max_cut(g, max_n).value;
    for (const SuiteEntry& e : run_bound_suite(g, options)) {
        if (!e.report)
            continue;
        const BoundReport& r = *e.report;
        ++v.checks;
        if (std::abs(cut_weight(g, r.cut.side) - r.cut.weight) > bound_tolerance(g))
            v.failures.push_back(e.name + ": cached cut weight is stale");
        if (!at_least(g, mac, r.cut.weight, exact_weight(g, r.cut.weight)))
            v.failures.push_back(e.name + ": cut weight " + std::to_string(r.cut.weight) + " exceeds mac " + std::to_string(mac));
        if (r.mode != Mode::deterministic)
            continue;
        if (!at_most(g, r.bound_value, r.exact_bound, mac))
            v.failures.push_back(e.name + ": bound " + std::to_string(r.bound_value) + " exceeds mac " + std::to_string(mac));
        if (!cut_meets_bound(g, r))
            v.failures.push_back(e.name + ": cut " + std::to_string(r.cut.weight) + " below bound " + std::to_string(r.bound_value));
    }
    return v;
}

/// The i-th instance of the verify corpus: generators are cycled through
/// in a fixed order and their parameters drawn from mt19937_64(seed + i).
inline std::pair<std::string, std::vector<std::string>> random_instance_spec(std::uint64_t seed, int index, int max_n)
{
    require(max_n >= 10, Errc::invalid_parameter, "the random corpus needs max n >= 10");
    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(index));
    auto uniform = [&](int lo, int hi) { return std::to_string(std::uniform_int_distribution<int>(lo, hi)(rng)); };
    auto draw_seed = [&] { return std::to_string(rng() % 1'000'000'007ULL); };
    switch (index % 9) {
    case 0:
        return { "random_triangle_free_subcubic", { uniform(2, max_n), draw_seed(), "int:0:10" } };
    case 1:
        return { "random_triangle_free_subcubic", { uniform(2, max_n), draw_seed(), "unit" } };
    case 2:
        return { "random_connected", { uniform(2, max_n), "0." + uniform(1, 6), draw_seed(), "int:0:10" } };
    case 3:
        return { "random_connected", { uniform(2, max_n), "0." + uniform(1, 6), draw_seed(), "real:0:5" } };
    case 4:
        return { "cycle", { uniform(3, max_n), uniform(1, 9) } };
    case 5:
        return { "complete", { uniform(2, std::min(max_n, 9)), uniform(1, 9) } };
    case 6:
        return { index % 2 == 0 ? "petersen" : "petersen_c3", index % 2 == 0 ? std::vector<std::string> { uniform(1, 9) }
                                                                             : std::vector<std::string> { uniform(0, 10), uniform(0, 10) } };
    case 7:
        return { "star_counterexample", { uniform(1, 5), uniform(2, std::min(max_n - 1, 8)) } };
    default:
        return { "gadget_k33_subdivided", {} };
    }
}

} // namespace cutbound
