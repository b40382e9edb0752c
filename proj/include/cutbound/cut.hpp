#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "cutbound/graph.hpp"

namespace cutbound {

using Side = std::uint8_t;

inline double cut_weight(const WeightedGraph& g, std::span<const Side> side)
{
    double total = 0.0;
    for (const Edge& e : g.edges())
        if (side[e.u] != side[e.v])
            total += e.weight;
    return total;
}

/// A vertex bipartition together with its cached weight.
struct Cut {
    std::vector<Side> side;
    double weight = 0.0;

    static Cut from_sides(const WeightedGraph& g, std::vector<Side> side)
    {
        require(side.size() == static_cast<std::size_t>(g.vertex_count()), Errc::invalid_parameter, "cut size does not match graph");
        Cut c;
        c.side = std::move(side);
        c.weight = cut_weight(g, c.side);
        return c;
    }

    bool crosses(const WeightedGraph& g, EdgeId id) const
    {
        const Edge& e = g.edge(id);
        return side[e.u] != side[e.v];
    }

    std::string bitstring() const
    {
        std::string out;
        out.reserve(side.size());
        for (Side s : side)
            out.push_back(s ? '1' : '0');
        return out;
    }
};

/// One connected component of a B-subgraph with its fixed bipartition.
struct BComponent {
    std::vector<VertexId> vertices; // ascending
    std::vector<Side> part;         // aligned with vertices
    std::vector<EdgeId> edges;
};

/// A bipartite edge subset whose components are induced subgraphs of G.
/// Only components with at least one edge are listed.
struct BSubgraph {
    std::vector<EdgeId> edge_set; // ascending, no duplicates
    std::vector<BComponent> components;
    double weight = 0.0;
};

namespace detail {

inline std::vector<EdgeId> normalized_edge_set(const WeightedGraph& g, std::span<const EdgeId> edge_set)
{
    std::vector<EdgeId> edges(edge_set.begin(), edge_set.end());
    for (EdgeId id : edges)
        require(id >= 0 && id < g.edge_count(), Errc::invalid_parameter, "edge id " + std::to_string(id) + " not in graph");
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return edges;
}

/// Component label per vertex of the spanning subgraph (V, edges); -1 for
/// vertices without incident edges.
inline std::vector<int> edge_set_components(const WeightedGraph& g, std::span<const EdgeId> edges, int& count)
{
    const auto n = static_cast<std::size_t>(g.vertex_count());
    std::vector<VertexId> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](VertexId v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    };
    std::vector<char> touched(n, 0);
    for (EdgeId id : edges) {
        const Edge& e = g.edge(id);
        touched[e.u] = touched[e.v] = 1;
        VertexId a = find(e.u), b = find(e.v);
        if (a != b)
            parent[std::max(a, b)] = std::min(a, b);
    }
    std::vector<int> label(n, -1);
    std::vector<int> root_label(n, -1);
    count = 0;
    for (std::size_t v = 0; v < n; ++v) {
        if (!touched[v])
            continue;
        VertexId r = find(static_cast<VertexId>(v));
        if (root_label[r] < 0)
            root_label[r] = count++;
        label[v] = root_label[r];
    }
    return label;
}

} // namespace detail

/// Adds to `edge_set` every edge of G whose endpoints already lie in one
/// component of `edge_set`.
inline std::vector<EdgeId> induced_closure(const WeightedGraph& g, std::span<const EdgeId> edge_set)
{
    std::vector<EdgeId> edges = detail::normalized_edge_set(g, edge_set);
    int count = 0;
    auto label = detail::edge_set_components(g, edges, count);
    std::vector<EdgeId> out;
    for (EdgeId id = 0; id < g.edge_count(); ++id) {
        const Edge& e = g.edge(id);
        if (label[e.u] >= 0 && label[e.u] == label[e.v])
            out.push_back(id);
    }
    return out;
}

/// Checks that `edge_set` is a B-subgraph of G and records the bipartition
/// of every component. Throws not_bipartite or not_induced otherwise.
inline BSubgraph verify_b_subgraph(const WeightedGraph& g, std::span<const EdgeId> edge_set)
{
    BSubgraph r;
    r.edge_set = detail::normalized_edge_set(g, edge_set);
    int count = 0;
    auto label = detail::edge_set_components(g, r.edge_set, count);

    std::vector<std::vector<Incidence>> adj(static_cast<std::size_t>(g.vertex_count()));
    std::vector<char> in_set(static_cast<std::size_t>(g.edge_count()), 0);
    for (EdgeId id : r.edge_set) {
        const Edge& e = g.edge(id);
        adj[e.u].push_back({ e.v, id });
        adj[e.v].push_back({ e.u, id });
        in_set[id] = 1;
        r.weight += e.weight;
    }

    r.components.resize(static_cast<std::size_t>(count));
    std::vector<int> color(static_cast<std::size_t>(g.vertex_count()), -1);
    std::vector<VertexId> stack;
    for (VertexId s = 0; s < g.vertex_count(); ++s) {
        if (label[s] < 0 || color[s] >= 0)
            continue;
        color[s] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            VertexId u = stack.back();
            stack.pop_back();
            for (const Incidence& inc : adj[u]) {
                if (color[inc.neighbor] < 0) {
                    color[inc.neighbor] = 1 - color[u];
                    stack.push_back(inc.neighbor);
                } else if (color[inc.neighbor] == color[u]) {
                    throw Error(Errc::not_bipartite,
                        "odd cycle through edge " + std::to_string(u) + " " + std::to_string(inc.neighbor));
                }
            }
        }
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (label[v] < 0)
            continue;
        BComponent& c = r.components[static_cast<std::size_t>(label[v])];
        c.vertices.push_back(v);
        c.part.push_back(static_cast<Side>(color[v]));
        for (const Incidence& inc : g.neighbors(v)) {
            if (inc.neighbor < v || label[inc.neighbor] != label[v])
                continue;
            if (!in_set[inc.edge])
                throw Error(Errc::not_induced,
                    "edge " + std::to_string(v) + " " + std::to_string(inc.neighbor) + " joins a component but is not in the edge set");
        }
    }
    for (EdgeId id : r.edge_set)
        r.components[static_cast<std::size_t>(label[g.edge(id).u])].edges.push_back(id);
    return r;
}

/// A group of vertices with a fixed internal 2-coloring; only the group's
/// orientation is chosen during placement.
struct PlacementUnit {
    std::vector<VertexId> vertices;
    std::vector<Side> part;
};

/// Conditional-expectation placement of units.
///
/// Starting from independent uniform orientations, units are fixed one at a
/// time in descending order of the weight of edges leaving them (ties by
/// unit index), each taking the orientation that maximizes the cut weight to
/// already placed vertices (ties orientation 0). Edges to unplaced vertices
/// contribute half their weight regardless of the choice, so the final cut
/// weighs at least (weight cut inside units) + (weight between units) / 2.
/// Vertices that belong to no unit are appended as singleton units.
inline Cut place_units(const WeightedGraph& g, std::vector<PlacementUnit> units)
{
    const auto n = static_cast<std::size_t>(g.vertex_count());
    std::vector<int> unit_of(n, -1);
    for (std::size_t i = 0; i < units.size(); ++i) {
        require(units[i].vertices.size() == units[i].part.size(), Errc::internal_assertion, "placement unit misaligned");
        for (VertexId v : units[i].vertices) {
            require(unit_of[v] < 0, Errc::internal_assertion, "vertex " + std::to_string(v) + " in two placement units");
            unit_of[v] = static_cast<int>(i);
        }
    }
    for (std::size_t v = 0; v < n; ++v) {
        if (unit_of[v] < 0) {
            unit_of[v] = static_cast<int>(units.size());
            units.push_back({ { static_cast<VertexId>(v) }, { 0 } });
        }
    }

    std::vector<double> outside(units.size(), 0.0);
    for (const Edge& e : g.edges()) {
        if (unit_of[e.u] != unit_of[e.v]) {
            outside[static_cast<std::size_t>(unit_of[e.u])] += e.weight;
            outside[static_cast<std::size_t>(unit_of[e.v])] += e.weight;
        }
    }
    std::vector<std::size_t> order(units.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return outside[a] > outside[b]; });

    std::vector<Side> side(n, 0);
    std::vector<char> placed(n, 0);
    for (std::size_t index : order) {
        const PlacementUnit& unit = units[index];
        double keep = 0.0, flip = 0.0;
        for (std::size_t i = 0; i < unit.vertices.size(); ++i) {
            VertexId v = unit.vertices[i];
            for (const Incidence& inc : g.neighbors(v)) {
                if (!placed[inc.neighbor] || unit_of[inc.neighbor] == static_cast<int>(index))
                    continue;
                double w = g.weight(inc.edge);
                if (unit.part[i] != side[inc.neighbor])
                    keep += w;
                else
                    flip += w;
            }
        }
        const Side orientation = flip > keep ? 1 : 0;
        for (std::size_t i = 0; i < unit.vertices.size(); ++i) {
            side[unit.vertices[i]] = unit.part[i] ^ orientation;
            placed[unit.vertices[i]] = 1;
        }
    }
    return Cut::from_sides(g, std::move(side));
}

/// Cut of weight at least (w(G) + w(R)) / 2 that separates every edge of R.
inline Cut derandomized_cut(const WeightedGraph& g, const BSubgraph& r)
{
    std::vector<PlacementUnit> units;
    std::vector<int> first_vertex_unit(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < r.components.size(); ++i)
        first_vertex_unit[r.components[i].vertices.front()] = static_cast<int>(i);
    std::vector<char> covered(static_cast<std::size_t>(g.vertex_count()), 0);
    for (const BComponent& c : r.components)
        for (VertexId v : c.vertices)
            covered[v] = 1;
    // Units ordered by smallest vertex; uncovered vertices are singletons.
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (first_vertex_unit[v] >= 0) {
            const BComponent& c = r.components[static_cast<std::size_t>(first_vertex_unit[v])];
            units.push_back({ c.vertices, c.part });
        } else if (!covered[v]) {
            units.push_back({ { v }, { 0 } });
        }
    }
    return place_units(g, std::move(units));
}

/// First-improvement single-vertex flips in ascending vertex order until no
/// flip strictly increases the cut weight.
inline Cut local_search_improve(const WeightedGraph& g, Cut c)
{
    const double eps = g.integer_weights() ? 0.0 : 1e-12 * std::max(1.0, g.total_weight());
    bool improved = true;
    while (improved) {
        improved = false;
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            double gain = 0.0;
            for (const Incidence& inc : g.neighbors(v))
                gain += (c.side[inc.neighbor] == c.side[v] ? 1.0 : -1.0) * g.weight(inc.edge);
            if (gain > eps) {
                c.side[v] ^= 1;
                improved = true;
                break;
            }
        }
    }
    c.weight = cut_weight(g, c.side);
    return c;
}

} // namespace cutbound
