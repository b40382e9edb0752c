#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/rational.hpp>
#include <json.hpp>

#include "cutbound/cut.hpp"
#include "cutbound/graph.hpp"

namespace cutbound {

using Rational = boost::rational<long long>;
using Details = nlohmann::ordered_json;

enum class Mode { deterministic, monte_carlo };

inline std::string_view mode_name(Mode m) { return m == Mode::deterministic ? "deterministic" : "monte_carlo"; }

/// A named lower bound on mac(G) together with a cut built to meet it.
///
/// Deterministic reports guarantee cut.weight >= bound_value. Monte Carlo
/// reports only guarantee the bound in expectation over their sampler.
/// On integer-weight graphs `exact_bound` carries the bound as a rational
/// so that comparisons need no tolerance.
struct BoundReport {
    std::string name;
    double bound_value = 0.0;
    std::optional<Rational> exact_bound;
    Cut cut;
    Mode mode = Mode::deterministic;
    Details details = Details::object();
};

/// Absolute slack for floating-point bound comparisons.
inline double bound_tolerance(const WeightedGraph& g) { return 1e-9 * std::max(1.0, g.total_weight()); }

inline long long exact_integer(double value) { return std::llround(value); }

/// w as a rational when the graph has integer weights.
inline std::optional<Rational> exact_weight(const WeightedGraph& g, double value)
{
    if (!g.integer_weights())
        return std::nullopt;
    return Rational(exact_integer(value));
}

/// value >= bound, exactly when both are known exactly, else with slack.
inline bool at_least(const WeightedGraph& g, double value, double bound, const std::optional<Rational>& exact_bound)
{
    if (g.integer_weights() && exact_bound)
        return Rational(exact_integer(value)) >= *exact_bound;
    return value >= bound - bound_tolerance(g);
}

inline bool at_most(const WeightedGraph& g, double bound, const std::optional<Rational>& exact_bound, double value)
{
    if (g.integer_weights() && exact_bound)
        return *exact_bound <= Rational(exact_integer(value));
    return bound <= value + bound_tolerance(g);
}

inline bool cut_meets_bound(const WeightedGraph& g, const BoundReport& r)
{
    return at_least(g, r.cut.weight, r.bound_value, r.exact_bound);
}

inline double rational_to_double(const Rational& q)
{
    return static_cast<double>(q.numerator()) / static_cast<double>(q.denominator());
}

/// Runs `bound` on every connected component with at least two vertices
/// and adds the results: max cut decomposes over components, so the summed
/// bound is still valid and the union of the component cuts meets it.
template <typename BoundFn>
BoundReport per_component(const WeightedGraph& g, std::string name, BoundFn&& bound)
{
    Components comps = connected_components(g);
    if (comps.count == 1 && g.vertex_count() > 1)
        return bound(g);

    BoundReport total;
    total.name = std::move(name);
    total.exact_bound = exact_weight(g, 0.0);
    std::vector<Side> side(static_cast<std::size_t>(g.vertex_count()), 0);
    Details parts = Details::array();
    for (const auto& members : comps.members()) {
        if (members.size() < 2)
            continue;
        InducedSubgraph sub = induced_subgraph(g, members);
        BoundReport local = bound(sub.graph);
        total.bound_value += local.bound_value;
        if (total.exact_bound && local.exact_bound)
            *total.exact_bound += *local.exact_bound;
        else
            total.exact_bound.reset();
        if (local.mode == Mode::monte_carlo)
            total.mode = Mode::monte_carlo;
        for (std::size_t i = 0; i < members.size(); ++i)
            side[members[i]] = local.cut.side[i];
        parts.push_back({ { "vertices", members.size() }, { "bound_value", local.bound_value }, { "details", local.details } });
    }
    total.cut = Cut::from_sides(g, std::move(side));
    total.details["components"] = std::move(parts);
    return total;
}

} // namespace cutbound
