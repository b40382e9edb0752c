#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "cutbound/coloring.hpp"
#include "cutbound/generators.hpp"
#include "cutbound/oracle.hpp"
#include "support.hpp"

using namespace cutbound;

namespace {

// Backtracking search for a proper edge coloring with `colors` colors.
bool edge_colorable(const WeightedGraph& g, int colors)
{
    std::vector<int> color(static_cast<std::size_t>(g.edge_count()), -1);
    std::function<bool(EdgeId)> assign = [&](EdgeId id) {
        if (id == g.edge_count())
            return true;
        for (int c = 0; c < colors; ++c) {
            bool clash = false;
            for (VertexId end : { g.edge(id).u, g.edge(id).v })
                for (const Incidence& inc : g.neighbors(end))
                    clash = clash || (inc.edge < id && color[inc.edge] == c);
            if (clash)
                continue;
            color[id] = c;
            if (assign(id + 1))
                return true;
        }
        color[id] = -1;
        return false;
    };
    return assign(0);
}



} // namespace

TEST(Vizing, Cycles)
{
    EdgeColoring c5 = vizing_coloring(cycle_graph(5));
    EXPECT_EQ(c5.color_count, 3);
    EXPECT_TRUE(is_proper_edge_coloring(cycle_graph(5), c5));

    WeightedGraph c6 = cycle_graph(6);
    EdgeColoring col = vizing_coloring(c6);
    EXPECT_TRUE(is_proper_edge_coloring(c6, col));
    EXPECT_GE(col.color_count, 2);
    EXPECT_LE(col.color_count, 3);
}

TEST(Vizing, PetersenNeedsFour)
{
    WeightedGraph g = petersen_graph();
    EXPECT_FALSE(edge_colorable(g, 3));
    EdgeColoring col = vizing_coloring(g);
    EXPECT_TRUE(is_proper_edge_coloring(g, col));
    EXPECT_EQ(col.color_count, 4);
}

TEST(Vizing, RandomCorpusProperWithinDeltaPlusOne)
{
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 30);
        WeightedGraph g = trial % 2 == 0 ? random_connected(n, 0.05 + 0.5 * (rng() % 100) / 100.0, rng())
                                         : random_triangle_free_subcubic(n, rng());
        EdgeColoring col = vizing_coloring(g);
        ASSERT_TRUE(is_proper_edge_coloring(g, col));
        EXPECT_LE(col.color_count, g.max_degree() + 1);
    }
}

TEST(Contract, PetersenSpokesGiveK5)
{
    WeightedGraph g = petersen_c3(10, 1);
    ContractedGraph h = contract_matching(g, petersen_spokes());
    EXPECT_EQ(h.base.vertex_count(), 5);
    EXPECT_EQ(h.base.edge_count(), 10);
    for (EdgeId id = 0; id < h.base.edge_count(); ++id)
        EXPECT_DOUBLE_EQ(h.base.weight(id), 1.0);
}

TEST(Contract, SmallCases)
{
    WeightedGraph edge(2, { { 0, 1, 4 } });
    std::vector<EdgeId> m { 0 };
    ContractedGraph h = contract_matching(edge, m);
    EXPECT_EQ(h.base.vertex_count(), 1);
    EXPECT_DOUBLE_EQ(h.base.total_weight(), 0.0);

    WeightedGraph c6 = cycle_graph(6, 2);
    ContractedGraph p = contract_matching(c6, m);
    EXPECT_EQ(p.base.vertex_count(), 5);
    EXPECT_DOUBLE_EQ(p.base.total_weight(), 10.0);
}

TEST(Contract, InvariantsAndErrors)
{
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 200; ++trial) {
        WeightedGraph g = random_triangle_free_subcubic(3 + static_cast<int>(rng() % 20), rng(), WeightDistribution::integer(0, 9));
        auto m = choose_matching(g, MatchingStrategy::greedy);
        ContractedGraph h = contract_matching(g, m);
        EXPECT_DOUBLE_EQ(h.base.total_weight(), g.total_weight() - g.weight_of(m));
        EXPECT_LE(h.base.max_degree(), std::max(0, 2 * g.max_degree() - 2));
    }
    WeightedGraph c5 = cycle_graph(5);
    std::vector<EdgeId> not_matching { 0, 1 };
    EXPECT_THROW(contract_matching(c5, not_matching), Error);
    WeightedGraph k4 = complete_graph(4);
    std::vector<EdgeId> one { 0 };
    EXPECT_THROW(contract_matching(k4, one), Error);
}

TEST(MatchingVizing, WeightedPetersenIsTight)
{
    WeightedGraph g = petersen_c3(10, 1);
    BoundReport r = matching_vizing_bound(g, petersen_spokes());
    EXPECT_EQ(r.details["color_count"].get<int>(), 5);
    EXPECT_EQ(*r.exact_bound, Rational(56));
    EXPECT_EQ(r.cut.weight, 56.0);
    EXPECT_EQ(exact_max_cut(g).value, 56.0);
}

TEST(MatchingVizing, EmptyMatching)
{
    WeightedGraph g = cycle_graph(6, 3);
    BoundReport r = matching_vizing_bound(g, std::vector<EdgeId> {});
    const int c = r.details["color_count"].get<int>();
    EXPECT_DOUBLE_EQ(r.bound_value, 9.0 + 18.0 / (2 * c));
    EXPECT_TRUE(cut_meets_bound(g, r));
}

TEST(MatchingVizing, CycleWithTwoMatchingEdges)
{
    WeightedGraph g = cycle_graph(5);
    std::vector<EdgeId> m { *g.find_edge(0, 1), *g.find_edge(2, 3) };
    BoundReport r = matching_vizing_bound(g, m);
    EXPECT_GE(r.bound_value, 0.6 * 3 + 2);
    EXPECT_EQ(r.cut.weight, 4.0);
}

TEST(MatchingVizing, RandomSoundAndAboveWorstCase)
{
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 300; ++trial) {
        WeightedGraph g = random_triangle_free_subcubic(2 + static_cast<int>(rng() % 15), rng(), WeightDistribution::integer(0, 10));
        auto m = choose_matching(g, trial % 2 ? MatchingStrategy::greedy : MatchingStrategy::automatic);
        BoundReport r = matching_vizing_bound(g, m);
        EXPECT_TRUE(cut_meets_bound(g, r));
        const double mac = exact_max_cut(g).value;
        EXPECT_TRUE(at_most(g, r.bound_value, r.exact_bound, mac));
        EXPECT_GE(r.bound_value + 1e-9, r.details["worst_case_bound"].get<double>());
        auto weights = r.details["class_weights"].get<std::vector<double>>();
        EXPECT_FALSE(weights.empty());
    }
}

TEST(Constants, Table)
{
    const double s[] = { 0.6768, 0.6250, 0.6021 };
    const double t[] = { 1.0000, 0.7778, 0.7000 };
    for (int d = 1; d <= 3; ++d) {
        EXPECT_NEAR(s_delta(d), s[d - 1], 5e-5);
        EXPECT_NEAR(t_delta(d), t[d - 1], 5e-5);
    }
    EXPECT_EQ(t_delta_exact(3), Rational(7, 10));
    EXPECT_EQ(t_delta_exact(2), Rational(7, 9));
    EXPECT_EQ(t_delta_exact(1), Rational(1));
    EXPECT_NEAR(t_delta(16), 0.5446, 5e-5);
    EXPECT_NEAR(s_delta(16), 0.5442, 5e-5);
    EXPECT_LT(t_delta(17), s_delta(17));
    for (int d = 1; d <= 64; ++d)
        EXPECT_EQ(t_delta(d) > s_delta(d), d <= 16) << d;
}

TEST(TyBound, CoefficientAndSoundness)
{
    WeightedGraph p = petersen_graph();
    BoundReport r = ty_bound(p);
    EXPECT_EQ(*r.exact_bound, Rational(21, 2));
    EXPECT_TRUE(cut_meets_bound(p, r));

    BoundReport c5 = ty_bound(cycle_graph(5));
    EXPECT_EQ(*c5.exact_bound, Rational(35, 9));
    EXPECT_EQ(c5.cut.weight, 4.0);

    WeightedGraph edge(2, { { 0, 1, 3 } });
    EXPECT_EQ(*ty_bound(edge).exact_bound, Rational(3));

    EXPECT_THROW(ty_bound(complete_graph(4)), Error);

    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 200; ++trial) {
        WeightedGraph g = random_triangle_free_subcubic(2 + static_cast<int>(rng() % 15), rng(), WeightDistribution::integer(0, 10));
        BoundReport b = ty_bound(g);
        EXPECT_TRUE(cut_meets_bound(g, b));
        EXPECT_TRUE(at_most(g, b.bound_value, b.exact_bound, exact_max_cut(g).value));
    }
}
