#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cutbound/graph.hpp"
#include "cutbound/graph_io.hpp"

namespace cutbound {

/// How random generators draw edge weights: "unit", "int:<lo>:<hi>" or
/// "real:<lo>:<hi>".
struct WeightDistribution {
    enum class Kind { unit, integer, real };
    Kind kind = Kind::unit;
    double lo = 1.0;
    double hi = 1.0;

    static WeightDistribution unit() { return {}; }
    static WeightDistribution integer(long long lo, long long hi) { return { Kind::integer, double(lo), double(hi) }; }
    static WeightDistribution real(double lo, double hi) { return { Kind::real, lo, hi }; }

    static WeightDistribution parse(std::string_view text)
    {
        if (text == "unit")
            return unit();
        auto fields = std::vector<std::string_view>();
        std::size_t start = 0;
        while (true) {
            std::size_t colon = text.find(':', start);
            fields.push_back(text.substr(start, colon == std::string_view::npos ? std::string_view::npos : colon - start));
            if (colon == std::string_view::npos)
                break;
            start = colon + 1;
        }
        if (fields.size() == 3 && (fields[0] == "int" || fields[0] == "real")) {
            WeightDistribution d;
            d.kind = fields[0] == "int" ? Kind::integer : Kind::real;
            if (detail::parse_number(fields[1], d.lo) && detail::parse_number(fields[2], d.hi) && d.lo >= 0.0 && d.lo <= d.hi)
                return d;
        }
        throw Error(Errc::invalid_parameter, "weight distribution must be unit, int:<lo>:<hi> or real:<lo>:<hi> with 0 <= lo <= hi");
    }

    template <typename Rng>
    double draw(Rng& rng) const
    {
        switch (kind) {
        case Kind::unit:
            return 1.0;
        case Kind::integer:
            return static_cast<double>(std::uniform_int_distribution<long long>(static_cast<long long>(lo), static_cast<long long>(hi))(rng));
        case Kind::real:
            return std::uniform_real_distribution<double>(lo, hi)(rng);
        }
        return 1.0;
    }
};

inline WeightedGraph cycle_graph(int n, double weight = 1.0)
{
    require(n >= 3, Errc::invalid_parameter, "cycle needs n >= 3");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        edges.push_back({ i, (i + 1) % n, weight });
    return WeightedGraph(n, std::move(edges));
}

inline WeightedGraph complete_graph(int n, double weight = 1.0)
{
    require(n >= 1, Errc::invalid_parameter, "complete graph needs n >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            edges.push_back({ i, j, weight });
    return WeightedGraph(n, std::move(edges));
}

/// Vertex ids of the Petersen graph as drawn with an outer 5-cycle x1..x5
/// and an inner 5-cycle y1..y5 joined by the matching
/// x1y1, x2y4, x3y2, x4y5, x5y3.
namespace petersen_ids {
    constexpr VertexId x(int i) { return i - 1; }
    constexpr VertexId y(int i) { return 4 + i; }
}

/// Spoke edge ids of petersen_graph / petersen_c3 (edges 10..14).
inline std::vector<EdgeId> petersen_spokes() { return { 10, 11, 12, 13, 14 }; }

inline WeightedGraph petersen_c3(double spoke_weight, double cycle_weight)
{
    using petersen_ids::x;
    using petersen_ids::y;
    std::vector<Edge> edges;
    for (int i = 1; i <= 5; ++i)
        edges.push_back({ x(i), x(i % 5 + 1), cycle_weight });
    for (int i = 1; i <= 5; ++i)
        edges.push_back({ y(i), y(i % 5 + 1), cycle_weight });
    const int partner[] = { 1, 4, 2, 5, 3 };
    for (int i = 1; i <= 5; ++i)
        edges.push_back({ x(i), y(partner[i - 1]), spoke_weight });
    return WeightedGraph(10, std::move(edges));
}

inline WeightedGraph petersen_graph(double weight = 1.0) { return petersen_c3(weight, weight); }

/// K_{l+1} where the edges at vertex 0 weigh `heavy` and all others weigh 1.
inline WeightedGraph star_counterexample(double heavy, int l)
{
    require(l >= 1, Errc::invalid_parameter, "star counterexample needs l >= 1");
    require(heavy >= 0.0, Errc::invalid_parameter, "star counterexample needs W >= 0");
    std::vector<Edge> edges;
    for (int i = 0; i <= l; ++i)
        for (int j = i + 1; j <= l; ++j)
            edges.push_back({ i, j, i == 0 ? heavy : 1.0 });
    return WeightedGraph(l + 1, std::move(edges));
}

/// Parameters for which the weighted K_{l+1} has mac < w/2 + eps * w(star):
/// W > 1/(4 eps) and l > W^2 / (4 W eps - 1).
inline bool star_counterexample_params_valid(double heavy, int l, double eps)
{
    if (eps <= 0.0 || heavy <= 1.0 / (4.0 * eps))
        return false;
    return static_cast<double>(l) > heavy * heavy / (4.0 * heavy * eps - 1.0);
}

/// K_{3,3} with one edge a1b1 replaced by the path a1 w b1. Local ids:
/// a1..a3 = 0..2, b1..b3 = 3..5, w = 6.
inline constexpr VertexId gadget_vertex_count = 7;
inline constexpr VertexId gadget_attach_vertex = 6;

inline std::vector<Edge> gadget_edges(VertexId offset, double weight)
{
    std::vector<Edge> edges;
    for (VertexId a = 0; a < 3; ++a)
        for (VertexId b = 3; b < 6; ++b)
            if (!(a == 0 && b == 3))
                edges.push_back({ offset + a, offset + b, weight });
    edges.push_back({ offset + 0, offset + gadget_attach_vertex, weight });
    edges.push_back({ offset + gadget_attach_vertex, offset + 3, weight });
    return edges;
}

inline WeightedGraph gadget_k33_subdivided(double weight = 1.0)
{
    return WeightedGraph(gadget_vertex_count, gadget_edges(0, weight));
}

/// Grows a triangle-free graph of maximum degree 3 by adding uniformly
/// chosen admissible edges (both endpoints below degree 3, not adjacent, no
/// common neighbor) until none is left. The result may be disconnected.
inline WeightedGraph random_triangle_free_subcubic(int n, std::uint64_t seed, const WeightDistribution& weights = {})
{
    require(n >= 1, Errc::invalid_parameter, "random_triangle_free_subcubic needs n >= 1");
    std::mt19937_64 rng(seed);
    std::vector<std::vector<VertexId>> adj(static_cast<std::size_t>(n));
    std::vector<Edge> edges;
    auto adjacent = [&](VertexId a, VertexId b) { return std::find(adj[a].begin(), adj[a].end(), b) != adj[a].end(); };
    auto common_neighbor = [&](VertexId a, VertexId b) {
        for (VertexId c : adj[a])
            if (adjacent(c, b))
                return true;
        return false;
    };
    std::vector<std::pair<VertexId, VertexId>> candidates;
    while (true) {
        candidates.clear();
        for (VertexId a = 0; a < n; ++a) {
            if (adj[a].size() >= 3)
                continue;
            for (VertexId b = a + 1; b < n; ++b)
                if (adj[b].size() < 3 && !adjacent(a, b) && !common_neighbor(a, b))
                    candidates.emplace_back(a, b);
        }
        if (candidates.empty())
            break;
        auto [a, b] = candidates[std::uniform_int_distribution<std::size_t>(0, candidates.size() - 1)(rng)];
        adj[a].push_back(b);
        adj[b].push_back(a);
        edges.push_back({ a, b, weights.draw(rng) });
    }
    return WeightedGraph(n, std::move(edges));
}

/// Random spanning tree (each vertex attaches to an earlier one) plus every
/// remaining pair independently with probability `edge_probability`.
inline WeightedGraph random_connected(int n, double edge_probability, std::uint64_t seed, const WeightDistribution& weights = {})
{
    require(n >= 1, Errc::invalid_parameter, "random_connected needs n >= 1");
    require(edge_probability >= 0.0 && edge_probability <= 1.0, Errc::invalid_parameter, "edge probability outside [0, 1]");
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    std::vector<char> present(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    for (VertexId v = 1; v < n; ++v) {
        VertexId parent = std::uniform_int_distribution<VertexId>(0, v - 1)(rng);
        present[static_cast<std::size_t>(parent) * n + v] = 1;
        edges.push_back({ parent, v, weights.draw(rng) });
    }
    std::bernoulli_distribution coin(edge_probability);
    for (VertexId a = 0; a < n; ++a)
        for (VertexId b = a + 1; b < n; ++b)
            if (!present[static_cast<std::size_t>(a) * n + b] && coin(rng))
                edges.push_back({ a, b, weights.draw(rng) });
    return WeightedGraph(n, std::move(edges));
}

inline const std::vector<std::string_view>& generator_kinds()
{
    static const std::vector<std::string_view> kinds = { "cycle", "complete", "petersen", "petersen_c3", "star_counterexample",
        "gadget_k33_subdivided", "random_triangle_free_subcubic", "random_connected" };
    return kinds;
}

/// Generator dispatch by name with textual parameters, as used by the CLI.
///
///     cycle <n> [w]                      complete <n> [w]
///     petersen [w]                       petersen_c3 <spoke_w> <other_w>
///     star_counterexample <W> <l>        gadget_k33_subdivided
///     random_triangle_free_subcubic <n> <seed> [weights]
///     random_connected <n> <p> <seed> [weights]
inline WeightedGraph generate(std::string_view kind, std::span<const std::string> params)
{
    auto bad = [&](const std::string& why) { return Error(Errc::invalid_parameter, std::string(kind) + ": " + why); };
    auto count = [&](std::size_t lo, std::size_t hi) {
        if (params.size() < lo || params.size() > hi)
            throw bad("expected " + std::to_string(lo) + (lo == hi ? "" : ".." + std::to_string(hi)) + " parameters");
    };
    auto integer = [&](std::size_t i) {
        long long value = 0;
        if (!detail::parse_number(std::string_view(params[i]), value) || value < 0 || value > 1'000'000)
            throw bad("parameter '" + params[i] + "' is not a valid count");
        return static_cast<int>(value);
    };
    auto seed = [&](std::size_t i) {
        std::uint64_t value = 0;
        if (!detail::parse_number(std::string_view(params[i]), value))
            throw bad("parameter '" + params[i] + "' is not a valid seed");
        return value;
    };
    auto real = [&](std::size_t i) {
        double value = 0;
        if (!detail::parse_number(std::string_view(params[i]), value) || !std::isfinite(value) || value < 0.0)
            throw bad("parameter '" + params[i] + "' is not a nonnegative number");
        return value;
    };

    if (kind == "cycle") {
        count(1, 2);
        return cycle_graph(integer(0), params.size() > 1 ? real(1) : 1.0);
    }
    if (kind == "complete") {
        count(1, 2);
        return complete_graph(integer(0), params.size() > 1 ? real(1) : 1.0);
    }
    if (kind == "petersen") {
        count(0, 1);
        return petersen_graph(params.empty() ? 1.0 : real(0));
    }
    if (kind == "petersen_c3") {
        count(2, 2);
        return petersen_c3(real(0), real(1));
    }
    if (kind == "star_counterexample") {
        count(2, 2);
        return star_counterexample(real(0), integer(1));
    }
    if (kind == "gadget_k33_subdivided") {
        count(0, 0);
        return gadget_k33_subdivided();
    }
    if (kind == "random_triangle_free_subcubic") {
        count(2, 3);
        return random_triangle_free_subcubic(integer(0), seed(1), params.size() > 2 ? WeightDistribution::parse(params[2]) : WeightDistribution {});
    }
    if (kind == "random_connected") {
        count(3, 4);
        double p = 0;
        if (!detail::parse_number(std::string_view(params[1]), p) || p < 0.0 || p > 1.0)
            throw bad("edge probability must lie in [0, 1]");
        return random_connected(integer(0), p, seed(2), params.size() > 3 ? WeightDistribution::parse(params[3]) : WeightDistribution {});
    }
    throw Error(Errc::invalid_parameter, "unknown generator '" + std::string(kind) + "'");
}

} // namespace cutbound
