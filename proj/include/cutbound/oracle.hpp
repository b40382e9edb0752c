#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "cutbound/bounds.hpp"
#include "cutbound/cut.hpp"
#include "cutbound/graph.hpp"
#include "cutbound/report.hpp"
#include "cutbound/spanning.hpp"

namespace cutbound {

/// An exactly computed quantity with the object that attains it.
struct OracleResult {
    std::string quantity;
    double value = 0.0;
    std::vector<Side> cut_witness;    // exact_max_cut
    std::vector<EdgeId> edge_witness; // r_max, DFS tree, five-cycle cover
    bool exact = true;
    bool found = true; // five_cycle_cover: false when no cover exists
};

inline constexpr VertexId max_cut_vertex_limit = 30;
inline constexpr VertexId b_subgraph_vertex_limit = 16;
inline constexpr VertexId dfs_oracle_vertex_limit = 12;
inline constexpr VertexId five_cycle_vertex_limit = 40;

namespace detail {

inline void guard(const WeightedGraph& g, VertexId limit, VertexId override_limit, const char* who)
{
    const VertexId cap = std::max(limit, override_limit);
    require(g.vertex_count() <= cap, Errc::size_guard_exceeded,
        std::string(who) + " is limited to " + std::to_string(cap) + " vertices, got " + std::to_string(g.vertex_count()));
}

} // namespace detail

/// mac(G) by Gray-code enumeration of the 2^(n-1) cuts with the last vertex
/// pinned to side 0; each step flips one vertex and updates the weight from
/// its incident edges.
inline OracleResult exact_max_cut(const WeightedGraph& g, VertexId max_n = max_cut_vertex_limit)
{
    detail::guard(g, max_cut_vertex_limit, max_n, "exact_max_cut");
    OracleResult r;
    r.quantity = "mac";
    const VertexId n = g.vertex_count();
    std::vector<Side> side(static_cast<std::size_t>(n), 0);
    r.cut_witness = side;
    if (n <= 1)
        return r;
    double current = 0.0, best = 0.0;
    std::uint64_t best_code = 0;
    const std::uint64_t steps = std::uint64_t { 1 } << (n - 1);
    for (std::uint64_t i = 1; i < steps; ++i) {
        const auto v = static_cast<VertexId>(std::countr_zero(i));
        double delta = 0.0;
        for (const Incidence& inc : g.neighbors(v))
            delta += side[inc.neighbor] == side[v] ? g.weight(inc.edge) : -g.weight(inc.edge);
        side[v] ^= 1;
        current += delta;
        if (current > best) {
            best = current;
            best_code = i ^ (i >> 1);
        }
    }
    for (VertexId v = 0; v + 1 < n; ++v)
        r.cut_witness[v] = static_cast<Side>((best_code >> v) & 1U);
    r.value = cut_weight(g, r.cut_witness);
    return r;
}

/// r_max: a B-subgraph is a family of disjoint vertex sets, each inducing a
/// connected bipartite subgraph, so r_max is a best partition of some subset
/// into such parts. Components may be joined by edges of G outside R, which
/// is why the induced bipartite components of a single G[S] are not enough.
inline OracleResult max_b_subgraph(const WeightedGraph& g, VertexId max_n = b_subgraph_vertex_limit)
{
    detail::guard(g, b_subgraph_vertex_limit, max_n, "max_b_subgraph");
    OracleResult r;
    r.quantity = "r_max";
    const VertexId n = g.vertex_count();
    const std::size_t full = std::size_t { 1 } << n;

    // part[S] = w(G[S]) when G[S] is connected and bipartite with |S| >= 2, else -1.
    std::vector<double> part(full, -1.0);
    std::vector<int> color(static_cast<std::size_t>(n));
    std::vector<VertexId> queue;
    for (std::size_t s = 1; s < full; ++s) {
        if (std::popcount(s) < 2)
            continue;
        auto in = [&](VertexId v) { return ((s >> v) & 1U) != 0; };
        std::fill(color.begin(), color.end(), -1);
        auto start = static_cast<VertexId>(std::countr_zero(s));
        color[start] = 0;
        queue.assign(1, start);
        bool bipartite = true;
        double weight = 0.0;
        for (std::size_t head = 0; head < queue.size() && bipartite; ++head) {
            VertexId u = queue[head];
            for (const Incidence& inc : g.neighbors(u)) {
                if (!in(inc.neighbor))
                    continue;
                if (inc.neighbor > u)
                    weight += g.weight(inc.edge);
                if (color[inc.neighbor] < 0) {
                    color[inc.neighbor] = 1 - color[u];
                    queue.push_back(inc.neighbor);
                } else if (color[inc.neighbor] == color[u]) {
                    bipartite = false;
                }
            }
        }
        if (bipartite && queue.size() == static_cast<std::size_t>(std::popcount(s)))
            part[s] = weight;
    }

    // best[U] over partitions of subsets of U; choice[U] is the part holding
    // the lowest vertex of U, or 0 when that vertex is left out.
    std::vector<double> best(full, 0.0);
    std::vector<std::size_t> choice(full, 0);
    for (std::size_t u = 1; u < full; ++u) {
        const std::size_t low = u & (~u + 1);
        const std::size_t rest = u ^ low;
        best[u] = best[rest];
        for (std::size_t sub = rest;; sub = (sub - 1) & rest) {
            const std::size_t s = sub | low;
            if (part[s] >= 0.0 && part[s] + best[u ^ s] > best[u]) {
                best[u] = part[s] + best[u ^ s];
                choice[u] = s;
            }
            if (sub == 0)
                break;
        }
    }
    for (std::size_t u = full - 1; u != 0;) {
        const std::size_t s = choice[u];
        if (s == 0) {
            u &= u - 1;
            continue;
        }
        for (EdgeId id = 0; id < g.edge_count(); ++id)
            if (((s >> g.edge(id).u) & 1U) && ((s >> g.edge(id).v) & 1U))
                r.edge_witness.push_back(id);
        u ^= s;
    }
    std::sort(r.edge_witness.begin(), r.edge_witness.end());
    r.value = g.weight_of(r.edge_witness);
    return r;
}

/// Maximum weight of a DFS tree over all roots and neighbor orders.
///
/// A DFS from r that may still visit S gives r one child per component C
/// of G[S] adjacent to r, entered at some v in C ∩ N(r); the subtree is a
/// DFS from v over C \ {v}. Memoized over (vertex, subset).
inline OracleResult max_dfs_tree_weight(const WeightedGraph& g, VertexId max_n = dfs_oracle_vertex_limit)
{
    detail::guard(g, dfs_oracle_vertex_limit, max_n, "max_dfs_tree_weight");
    require_connected(g, "max_dfs_tree_weight");
    OracleResult r;
    r.quantity = "max_dfs_weight";
    const VertexId n = g.vertex_count();
    if (n <= 1)
        return r;
    using Mask = std::uint32_t;
    std::vector<Mask> nbr_mask(static_cast<std::size_t>(n), 0);
    for (const Edge& e : g.edges()) {
        nbr_mask[e.u] |= Mask { 1 } << e.v;
        nbr_mask[e.v] |= Mask { 1 } << e.u;
    }
    auto components = [&](Mask s) {
        std::vector<Mask> out;
        while (s) {
            Mask comp = s & (~s + 1), frontier = comp;
            while (frontier) {
                VertexId v = std::countr_zero(frontier);
                frontier &= frontier - 1;
                Mask fresh = nbr_mask[v] & s & ~comp;
                comp |= fresh;
                frontier |= fresh;
            }
            out.push_back(comp);
            s &= ~comp;
        }
        return out;
    };
    std::unordered_map<std::uint64_t, double> memo;
    std::function<double(VertexId, Mask)> h = [&](VertexId root, Mask s) -> double {
        if (!(nbr_mask[root] & s))
            return 0.0;
        const std::uint64_t key = (static_cast<std::uint64_t>(s) << 5) | static_cast<std::uint64_t>(root);
        if (auto it = memo.find(key); it != memo.end())
            return it->second;
        double total = 0.0;
        for (Mask comp : components(s)) {
            Mask entries = comp & nbr_mask[root];
            double best = -1.0;
            while (entries) {
                VertexId v = std::countr_zero(entries);
                entries &= entries - 1;
                best = std::max(best, g.weight(*g.find_edge(root, v)) + h(v, comp & ~(Mask { 1 } << v)));
            }
            if (best >= 0.0)
                total += best;
        }
        memo.emplace(key, total);
        return total;
    };
    // Rebuild the optimal tree by re-walking the argmax choices.
    std::function<void(VertexId, Mask)> rebuild = [&](VertexId root, Mask s) {
        for (Mask comp : components(s)) {
            Mask entries = comp & nbr_mask[root];
            double best = -1.0;
            VertexId arg = no_vertex;
            while (entries) {
                VertexId v = std::countr_zero(entries);
                entries &= entries - 1;
                double value = g.weight(*g.find_edge(root, v)) + h(v, comp & ~(Mask { 1 } << v));
                if (value > best) {
                    best = value;
                    arg = v;
                }
            }
            if (arg == no_vertex)
                continue;
            r.edge_witness.push_back(*g.find_edge(root, arg));
            rebuild(arg, comp & ~(Mask { 1 } << arg));
        }
    };
    const Mask all = n == 32 ? ~Mask { 0 } : (Mask { 1 } << n) - 1;
    double best = -1.0;
    VertexId best_root = 0;
    for (VertexId root = 0; root < n; ++root) {
        double value = h(root, all & ~(Mask { 1 } << root));
        if (value > best) {
            best = value;
            best_root = root;
        }
    }
    rebuild(best_root, all & ~(Mask { 1 } << best_root));
    std::sort(r.edge_witness.begin(), r.edge_witness.end());
    r.value = g.weight_of(r.edge_witness);
    return r;
}

/// Every 5-cycle of G as a sorted list of edge ids.
inline std::vector<std::vector<EdgeId>> five_cycles(const WeightedGraph& g)
{
    std::vector<std::vector<EdgeId>> out;
    // Paths a-b-c-d-e-a with a the smallest vertex and b < e.
    for (VertexId a = 0; a < g.vertex_count(); ++a) {
        for (const Incidence& ab : g.neighbors(a)) {
            VertexId b = ab.neighbor;
            if (b < a)
                continue;
            for (const Incidence& bc : g.neighbors(b)) {
                VertexId c = bc.neighbor;
                if (c <= a || c == b)
                    continue;
                for (const Incidence& cd : g.neighbors(c)) {
                    VertexId d = cd.neighbor;
                    if (d <= a || d == b || d == c)
                        continue;
                    for (const Incidence& de : g.neighbors(d)) {
                        VertexId e = de.neighbor;
                        if (e <= b || e == c || e == d)
                            continue;
                        auto ea = g.find_edge(e, a);
                        if (!ea)
                            continue;
                        std::vector<EdgeId> cycle { ab.edge, bc.edge, cd.edge, de.edge, *ea };
                        std::sort(cycle.begin(), cycle.end());
                        out.push_back(std::move(cycle));
                    }
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// True when every 5-cycle of G contains exactly one edge of `edges`.
inline bool is_five_cycle_cover(const WeightedGraph& g, std::span<const EdgeId> edges)
{
    for (const auto& cycle : five_cycles(g)) {
        int hits = 0;
        for (EdgeId id : cycle)
            hits += std::find(edges.begin(), edges.end(), id) != edges.end();
        if (hits != 1)
            return false;
    }
    return true;
}

/// An edge set meeting every 5-cycle exactly once, by exact-cover
/// backtracking (most constrained cycle first, edges in id order).
inline OracleResult five_cycle_cover(const WeightedGraph& g, VertexId max_n = five_cycle_vertex_limit)
{
    detail::guard(g, five_cycle_vertex_limit, max_n, "five_cycle_cover");
    require_triangle_free(g, "five_cycle_cover");
    require_subcubic(g, "five_cycle_cover");
    OracleResult r;
    r.quantity = "five_cycle_cover";
    const auto cycles = five_cycles(g);
    std::vector<std::vector<std::size_t>> cycles_of(static_cast<std::size_t>(g.edge_count()));
    for (std::size_t i = 0; i < cycles.size(); ++i)
        for (EdgeId id : cycles[i])
            cycles_of[id].push_back(i);

    std::vector<int> covered(cycles.size(), 0);
    std::vector<int> banned(static_cast<std::size_t>(g.edge_count()), 0);
    std::vector<EdgeId> chosen;
    std::function<bool()> search = [&]() -> bool {
        std::size_t pick = cycles.size();
        int fewest = std::numeric_limits<int>::max();
        for (std::size_t i = 0; i < cycles.size(); ++i) {
            if (covered[i])
                continue;
            int options = 0;
            for (EdgeId id : cycles[i])
                options += banned[id] == 0;
            if (options < fewest) {
                fewest = options;
                pick = i;
            }
        }
        if (pick == cycles.size())
            return true;
        for (EdgeId id : cycles[pick]) {
            if (banned[id])
                continue;
            // Taking `id` covers its cycles and bans every other edge on them.
            for (std::size_t c : cycles_of[id]) {
                ++covered[c];
                for (EdgeId other : cycles[c])
                    ++banned[other];
            }
            chosen.push_back(id);
            if (search())
                return true;
            chosen.pop_back();
            for (std::size_t c : cycles_of[id]) {
                --covered[c];
                for (EdgeId other : cycles[c])
                    --banned[other];
            }
        }
        return false;
    };
    r.found = search();
    if (r.found) {
        r.edge_witness = chosen;
        std::sort(r.edge_witness.begin(), r.edge_witness.end());
    }
    r.value = static_cast<double>(r.edge_witness.size());
    return r;
}

/// Per-instance evidence about the conjectured constants. Ratios
/// only bound the class-wide constants from above.
struct ConjectureReport {
    double mac = 0.0;
    double total_weight = 0.0;
    double mac_ratio = 1.0;
    std::optional<double> theta_ratio; // min over sampled trees of (mac - w/2) / w(T)
    std::optional<double> c_ratio;     // min over sampled matchings of (mac - w(M)) / (w - w(M))
    bool triangle_free = false;
    bool subcubic = false;
    bool has_five_cycle_cover = true;
    std::vector<std::string> flags;
};

inline constexpr int conjecture_random_trees = 100;
inline constexpr int conjecture_random_matchings = 100;

namespace detail {

inline std::vector<EdgeId> random_maximal_matching(const WeightedGraph& g, std::mt19937_64& rng)
{
    std::vector<EdgeId> order(static_cast<std::size_t>(g.edge_count()));
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<char> used(static_cast<std::size_t>(g.vertex_count()), 0);
    std::vector<EdgeId> m;
    for (EdgeId id : order) {
        if (used[g.edge(id).u] || used[g.edge(id).v])
            continue;
        used[g.edge(id).u] = used[g.edge(id).v] = 1;
        m.push_back(id);
    }
    std::sort(m.begin(), m.end());
    return m;
}

/// Spanning tree minimizing randomly perturbed weights.
inline RootedSpanningTree random_spanning_tree(const WeightedGraph& g, std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> noise(0.0, 1.0);
    std::vector<Edge> edges = g.edges();
    for (Edge& e : edges)
        e.weight = noise(rng);
    WeightedGraph perturbed(g.vertex_count(), std::move(edges));
    RootedSpanningTree t = min_spanning_tree(perturbed);
    return tree_from_edges(g, t.tree_edges, 0);
}

} // namespace detail

inline ConjectureReport conjecture_report(const WeightedGraph& g, std::span<const EdgeId> provided_matching = {}, std::uint64_t seed = 0,
    VertexId max_n = max_cut_vertex_limit)
{
    ConjectureReport r;
    r.mac = exact_max_cut(g, max_n).value;
    r.total_weight = g.total_weight();
    r.mac_ratio = r.total_weight > 0 ? r.mac / r.total_weight : 1.0;
    r.triangle_free = !has_triangle(g);
    r.subcubic = g.max_degree() <= 3;
    const double tol = bound_tolerance(g);
    std::mt19937_64 rng(seed);

    if (is_connected(g) && g.vertex_count() > 1) {
        std::vector<RootedSpanningTree> trees { min_spanning_tree(g), max_spanning_tree(g) };
        for (int i = 0; i < conjecture_random_trees; ++i)
            trees.push_back(detail::random_spanning_tree(g, rng));
        for (const auto& t : trees) {
            double wt = t.weight(g);
            if (wt <= 0)
                continue;
            double ratio = (r.mac - r.total_weight / 2) / wt;
            if (!r.theta_ratio || ratio < *r.theta_ratio)
                r.theta_ratio = ratio;
        }
    }

    std::vector<std::vector<EdgeId>> matchings;
    if (!provided_matching.empty()) {
        require(is_matching(g, provided_matching), Errc::not_a_matching, "provided edge set is not a matching");
        matchings.emplace_back(provided_matching.begin(), provided_matching.end());
    }
    matchings.push_back(greedy_matching(g));
    for (int i = 0; i < conjecture_random_matchings; ++i)
        matchings.push_back(detail::random_maximal_matching(g, rng));
    for (const auto& m : matchings) {
        double wm = g.weight_of(m);
        if (r.total_weight - wm <= tol)
            continue;
        double ratio = (r.mac - wm) / (r.total_weight - wm);
        if (!r.c_ratio || ratio < *r.c_ratio)
            r.c_ratio = ratio;
    }

    if (r.triangle_free && r.subcubic) {
        if (r.mac < 0.8 * r.total_weight - tol)
            r.flags.push_back("mac below 4/5 w(G) on a triangle-free subcubic graph");
        if (g.vertex_count() <= five_cycle_vertex_limit) {
            r.has_five_cycle_cover = five_cycle_cover(g).found;
            if (!r.has_five_cycle_cover)
                r.flags.push_back("no edge set meets every 5-cycle exactly once");
        }
    }
    if (r.triangle_free && r.theta_ratio && *r.theta_ratio < 0.375 - tol)
        r.flags.push_back("a spanning tree with (mac - w/2) / w(T) below 3/8 on a triangle-free graph");
    return r;
}

} // namespace cutbound
