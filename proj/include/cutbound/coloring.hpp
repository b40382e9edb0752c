#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "cutbound/bounds.hpp"
#include "cutbound/cut.hpp"
#include "cutbound/graph.hpp"
#include "cutbound/report.hpp"

namespace cutbound {

/// Proper edge coloring with colors 1..color_count.
struct EdgeColoring {
    std::vector<int> color;
    int color_count = 0;

    std::vector<std::vector<EdgeId>> classes() const
    {
        std::vector<std::vector<EdgeId>> out(static_cast<std::size_t>(color_count));
        for (std::size_t id = 0; id < color.size(); ++id)
            out[static_cast<std::size_t>(color[id] - 1)].push_back(static_cast<EdgeId>(id));
        return out;
    }
};

inline bool is_proper_edge_coloring(const WeightedGraph& g, const EdgeColoring& c)
{
    if (c.color.size() != static_cast<std::size_t>(g.edge_count()))
        return false;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        std::vector<int> seen;
        for (const Incidence& inc : g.neighbors(v)) {
            int col = c.color[inc.edge];
            if (col < 1 || col > c.color_count || std::find(seen.begin(), seen.end(), col) != seen.end())
                return false;
            seen.push_back(col);
        }
    }
    return true;
}

/// Misra–Gries fan rotation and alternating path inversion, giving at most
/// Δ + 1 colors. Edges are colored in id order; free colors and fan vertices
/// are always chosen lowest first.
inline EdgeColoring vizing_coloring(const WeightedGraph& g)
{
    const int palette = g.max_degree() + 1;
    const auto n = static_cast<std::size_t>(g.vertex_count());
    std::vector<int> color(static_cast<std::size_t>(g.edge_count()), -1);
    std::vector<std::vector<EdgeId>> at(n, std::vector<EdgeId>(static_cast<std::size_t>(palette), no_edge));

    auto assign = [&](EdgeId id, int c) {
        color[id] = c;
        at[g.edge(id).u][c] = id;
        at[g.edge(id).v][c] = id;
    };
    auto clear = [&](EdgeId id) {
        int c = color[id];
        at[g.edge(id).u][c] = no_edge;
        at[g.edge(id).v][c] = no_edge;
        color[id] = -1;
    };
    auto is_free = [&](VertexId v, int c) { return at[v][c] == no_edge; };
    auto lowest_free = [&](VertexId v) {
        for (int c = 0; c < palette; ++c)
            if (is_free(v, c))
                return c;
        throw Error(Errc::internal_assertion, "no free color at vertex " + std::to_string(v));
    };

    for (EdgeId id = 0; id < g.edge_count(); ++id) {
        const VertexId u = g.edge(id).u;
        std::vector<VertexId> fan { g.edge(id).v };
        std::vector<EdgeId> fan_edge { id };
        std::vector<char> in_fan(n, 0);
        in_fan[fan[0]] = 1;
        for (bool grew = true; grew;) {
            grew = false;
            for (const Incidence& inc : g.neighbors(u)) {
                if (in_fan[inc.neighbor] || color[inc.edge] < 0 || !is_free(fan.back(), color[inc.edge]))
                    continue;
                fan.push_back(inc.neighbor);
                fan_edge.push_back(inc.edge);
                in_fan[inc.neighbor] = 1;
                grew = true;
                break;
            }
        }
        const int c = lowest_free(u);
        const int d = lowest_free(fan.back());

        // Invert the cd-path that starts at u.
        std::vector<EdgeId> path;
        for (VertexId x = u, want = d; at[x][want] != no_edge; want = want == d ? c : d) {
            EdgeId e = at[x][want];
            path.push_back(e);
            x = g.edge(e).other(x);
        }
        std::vector<int> old(path.size());
        for (std::size_t i = 0; i < path.size(); ++i) {
            old[i] = color[path[i]];
            clear(path[i]);
        }
        for (std::size_t i = 0; i < path.size(); ++i)
            assign(path[i], old[i] == c ? d : c);

        // First fan vertex w with d free whose fan prefix is still a fan.
        std::size_t w = fan.size();
        for (std::size_t i = 0; i < fan.size(); ++i) {
            if (i > 0 && (color[fan_edge[i]] < 0 || !is_free(fan[i - 1], color[fan_edge[i]])))
                break;
            if (is_free(fan[i], d)) {
                w = i;
                break;
            }
        }
        require(w < fan.size(), Errc::internal_assertion, "fan rotation found no vertex with the free color");
        std::vector<int> shifted(w);
        for (std::size_t i = 0; i < w; ++i)
            shifted[i] = color[fan_edge[i + 1]];
        for (std::size_t i = 1; i <= w; ++i)
            clear(fan_edge[i]);
        for (std::size_t i = 0; i < w; ++i)
            assign(fan_edge[i], shifted[i]);
        require(is_free(u, d) && is_free(fan[w], d), Errc::internal_assertion, "rotated fan leaves d in use");
        assign(fan_edge[w], d);
    }

    EdgeColoring out;
    std::vector<int> remap(static_cast<std::size_t>(palette), 0);
    for (int col : color)
        remap[col] = 1;
    for (int& r : remap)
        r = r ? ++out.color_count : 0;
    out.color.resize(color.size());
    for (std::size_t i = 0; i < color.size(); ++i)
        out.color[i] = remap[color[i]];
    require(is_proper_edge_coloring(g, out), Errc::internal_assertion, "edge coloring is not proper");
    return out;
}

/// G with every matching edge contracted and parallel edges merged.
struct ContractedGraph {
    WeightedGraph base;
    std::vector<std::vector<VertexId>> vertex_origin; // one or two original vertices
    std::vector<std::vector<EdgeId>> edge_origin;     // original edges merged into each base edge
    std::vector<VertexId> contracted_vertex;          // original vertex -> base vertex
};

inline ContractedGraph contract_matching(const WeightedGraph& g, std::span<const EdgeId> matching)
{
    require(is_matching(g, matching), Errc::not_a_matching, "edge set is not a matching");
    require_triangle_free(g, "contract_matching");
    const auto n = static_cast<std::size_t>(g.vertex_count());
    std::vector<VertexId> partner(n, no_vertex);
    std::vector<char> in_matching(static_cast<std::size_t>(g.edge_count()), 0);
    for (EdgeId id : matching) {
        partner[g.edge(id).u] = g.edge(id).v;
        partner[g.edge(id).v] = g.edge(id).u;
        in_matching[id] = 1;
    }
    ContractedGraph out;
    out.contracted_vertex.assign(n, no_vertex);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (out.contracted_vertex[v] != no_vertex)
            continue;
        const auto x = static_cast<VertexId>(out.vertex_origin.size());
        out.contracted_vertex[v] = x;
        out.vertex_origin.push_back({ v });
        if (partner[v] != no_vertex) {
            out.contracted_vertex[partner[v]] = x;
            out.vertex_origin.back().push_back(partner[v]);
        }
    }
    std::map<std::pair<VertexId, VertexId>, std::size_t> merged;
    std::vector<Edge> edges;
    for (EdgeId id = 0; id < g.edge_count(); ++id) {
        if (in_matching[id])
            continue;
        VertexId a = out.contracted_vertex[g.edge(id).u], b = out.contracted_vertex[g.edge(id).v];
        auto key = std::minmax(a, b);
        auto [it, inserted] = merged.emplace(key, edges.size());
        if (inserted) {
            edges.push_back({ key.first, key.second, 0.0 });
            out.edge_origin.emplace_back();
        }
        edges[it->second].weight += g.weight(id);
        out.edge_origin[it->second].push_back(id);
    }
    out.base = WeightedGraph(static_cast<VertexId>(out.vertex_origin.size()), std::move(edges));
    return out;
}

/// Bound from contracting M, edge-coloring the contraction with c colors and
/// lifting each color class M_i back to G: every G[M ∪ M_i] is a B-subgraph,
/// so mac(G) >= (w(G) + w(M)) / 2 + (w(G) - w(M)) / (2c).
inline BoundReport matching_vizing_bound(const WeightedGraph& g, std::span<const EdgeId> matching)
{
    ContractedGraph h = contract_matching(g, matching);
    EdgeColoring col = vizing_coloring(h.base);
    const double w = g.total_weight();
    const double wm = g.weight_of(matching);
    const int c = col.color_count;

    std::vector<BSubgraph> family;
    std::vector<double> class_weight;
    if (c == 0) {
        family.push_back(verify_b_subgraph(g, matching));
        class_weight.push_back(0.0);
    }
    for (const auto& cls : col.classes()) {
        std::vector<EdgeId> edges(matching.begin(), matching.end());
        double lifted = 0.0;
        for (EdgeId base_edge : cls) {
            for (EdgeId original : h.edge_origin[base_edge]) {
                edges.push_back(original);
                lifted += g.weight(original);
            }
        }
        family.push_back(verify_b_subgraph(g, edges));
        class_weight.push_back(lifted);
    }
    auto [cut, index] = best_derandomized_cut(g, family);

    BoundReport r;
    r.name = "matching_vizing";
    r.bound_value = (w + wm) / 2 + (c > 0 ? (w - wm) / (2.0 * c) : 0.0);
    if (g.integer_weights()) {
        const long long wi = exact_integer(w), mi = exact_integer(wm);
        r.exact_bound = c > 0 ? Rational(c * (wi + mi) + (wi - mi), 2LL * c) : Rational(wi + mi, 2);
    }
    r.cut = std::move(cut);
    const int delta = std::max(g.max_degree(), 1);
    r.details["matching_weight"] = wm;
    r.details["matching_size"] = matching.size();
    r.details["color_count"] = c;
    r.details["contracted_max_degree"] = h.base.max_degree();
    r.details["worst_case_bound"] = static_cast<double>(delta) / (2.0 * delta - 1) * (w - wm) + wm;
    r.details["best_class"] = index;
    r.details["class_weights"] = class_weight;
    return r;
}

/// Shearer's coefficient 1/2 + 1/(4 sqrt(2Δ)).
inline double s_delta(int delta)
{
    require(delta >= 1, Errc::invalid_parameter, "Δ must be at least 1");
    return 0.5 + 1.0 / (4.0 * std::sqrt(2.0 * delta));
}

/// 1/2 + (3Δ - 1) / (4Δ² + 2Δ - 2), as an exact fraction.
inline Rational t_delta_exact(int delta)
{
    require(delta >= 1, Errc::invalid_parameter, "Δ must be at least 1");
    const long long d = delta;
    return Rational(1, 2) + Rational(3 * d - 1, 4 * d * d + 2 * d - 2);
}

inline double t_delta(int delta) { return rational_to_double(t_delta_exact(delta)); }

/// t_Δ · w(G): Vizing-color G, run the matching contraction bound for every
/// color class as M, keep the best cut.
inline BoundReport ty_bound(const WeightedGraph& g)
{
    require_triangle_free(g, "ty_bound");
    BoundReport r;
    r.name = "ty";
    if (g.edge_count() == 0) {
        r.exact_bound = exact_weight(g, 0.0);
        r.cut = Cut::from_sides(g, std::vector<Side>(static_cast<std::size_t>(g.vertex_count()), 0));
        return r;
    }
    const int delta = g.max_degree();
    EdgeColoring col = vizing_coloring(g);
    std::optional<BoundReport> best;
    Details per_class = Details::array();
    for (const auto& cls : col.classes()) {
        BoundReport local = matching_vizing_bound(g, cls);
        per_class.push_back({ { "matching_weight", local.details["matching_weight"] }, { "bound_value", local.bound_value },
            { "cut_weight", local.cut.weight } });
        if (!best || local.cut.weight > best->cut.weight)
            best = std::move(local);
    }
    const Rational t = t_delta_exact(delta);
    r.bound_value = rational_to_double(t) * g.total_weight();
    if (g.integer_weights())
        r.exact_bound = t * Rational(exact_integer(g.total_weight()));
    r.cut = std::move(best->cut);
    r.details["delta"] = delta;
    r.details["t_delta"] = rational_to_double(t);
    r.details["color_count"] = col.color_count;
    r.details["classes"] = std::move(per_class);
    return r;
}

} // namespace cutbound
