#pragma once

#include <random>
#include <vector>

#include "cutbound/cut.hpp"
#include "cutbound/generators.hpp"
#include "cutbound/graph.hpp"

namespace cutbound::test_support {

/// Random B-subgraph: grow disjoint parts from random seeds, keeping a
/// vertex only while its part still induces a bipartite graph. The parts may
/// be joined by edges of G, as the definition allows.
inline std::vector<EdgeId> random_b_subgraph_edges(const WeightedGraph& g, std::mt19937_64& rng)
{
    const auto n = static_cast<std::size_t>(g.vertex_count());
    std::vector<int> part(n, -1), color(n, -1);
    std::vector<VertexId> order(n);
    for (std::size_t i = 0; i < n; ++i)
        order[i] = static_cast<VertexId>(i);
    std::shuffle(order.begin(), order.end(), rng);
    int parts = 0;
    for (VertexId seed : order) {
        if (part[seed] >= 0 || std::bernoulli_distribution(0.3)(rng))
            continue;
        const int p = parts++;
        part[seed] = p;
        color[seed] = 0;
        std::vector<VertexId> frontier { seed };
        while (!frontier.empty()) {
            std::size_t pick = std::uniform_int_distribution<std::size_t>(0, frontier.size() - 1)(rng);
            VertexId u = frontier[pick];
            frontier.erase(frontier.begin() + static_cast<std::ptrdiff_t>(pick));
            for (const Incidence& inc : g.neighbors(u)) {
                VertexId v = inc.neighbor;
                if (part[v] >= 0 || std::bernoulli_distribution(0.35)(rng))
                    continue;
                // v joins with the color opposite to u if no conflict arises.
                int c = 1 - color[u];
                bool ok = true;
                for (const Incidence& back : g.neighbors(v))
                    if (part[back.neighbor] == p && color[back.neighbor] == c)
                        ok = false;
                if (!ok)
                    continue;
                part[v] = p;
                color[v] = c;
                frontier.push_back(v);
            }
        }
    }
    std::vector<EdgeId> edges;
    for (EdgeId id = 0; id < g.edge_count(); ++id)
        if (part[g.edge(id).u] >= 0 && part[g.edge(id).u] == part[g.edge(id).v])
            edges.push_back(id);
    return edges;
}

/// Small random graph drawn from a few families, integer weights 0..10.
inline WeightedGraph random_small_graph(std::mt19937_64& rng, int max_n)
{
    const int n = std::uniform_int_distribution<int>(2, max_n)(rng);
    const std::uint64_t seed = rng();
    switch (rng() % 3) {
    case 0:
        return random_triangle_free_subcubic(n, seed, WeightDistribution::integer(0, 10));
    case 1:
        return random_connected(n, 0.35, seed, WeightDistribution::integer(0, 10));
    default:
        return random_connected(n, 0.1, seed, WeightDistribution::integer(1, 10));
    }
}

} // namespace cutbound::test_support
