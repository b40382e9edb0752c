#include <gtest/gtest.h>

#include <set>

#include "cutbound/generators.hpp"
#include "cutbound/graph.hpp"
#include "cutbound/graph_io.hpp"

using namespace cutbound;

namespace {

Errc load_error(std::string_view text)
{
    try {
        load_graph(text);
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error for: " << text;
    return Errc::internal_assertion;
}

bool has_triangle_by_triples(const WeightedGraph& g)
{
    for (VertexId a = 0; a < g.vertex_count(); ++a)
        for (VertexId b = a + 1; b < g.vertex_count(); ++b)
            for (VertexId c = b + 1; c < g.vertex_count(); ++c)
                if (g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(a, c))
                    return true;
    return false;
}

} // namespace

TEST(LoadGraph, SingleEdge)
{
    WeightedGraph g = load_graph("p 2 1\ne 0 1 3.5\n");
    EXPECT_EQ(g.vertex_count(), 2);
    ASSERT_EQ(g.edge_count(), 1);
    EXPECT_DOUBLE_EQ(g.weight(0), 3.5);
    EXPECT_FALSE(g.integer_weights());
}

TEST(LoadGraph, CycleFileHasGirthFive)
{
    WeightedGraph g = load_graph("c five cycle\np 5 5\ne 0 1 1\ne 1 2 1\ne 2 3 1\n\ne 3 4 1\ne 0 4 1\n");
    EXPECT_EQ(girth(g), 5);
    EXPECT_TRUE(g.integer_weights());
}

TEST(LoadGraph, DistinctErrors)
{
    EXPECT_EQ(load_error("p 2 1\ne 0 0 1\n"), Errc::self_loop);
    EXPECT_EQ(load_error("p 2 2\ne 0 1 1\ne 1 0 2\n"), Errc::duplicate_edge);
    EXPECT_EQ(load_error("p 2 1\ne 0 1 -1\n"), Errc::negative_weight);
    EXPECT_EQ(load_error("p 2 1\ne 0 x 1\n"), Errc::malformed_line);
    EXPECT_EQ(load_error("p 2 1\ne 0 5 1\n"), Errc::vertex_out_of_range);
    EXPECT_EQ(load_error("e 0 1 1\n"), Errc::malformed_line);
    EXPECT_EQ(load_error("p 3 2\ne 0 1 1\n"), Errc::malformed_line);
    EXPECT_EQ(load_error("q 1 2\n"), Errc::malformed_line);
}

TEST(SaveGraph, RoundTripsCanonicalForm)
{
    WeightedGraph g(4, { { 3, 1, 0.1 }, { 0, 2, 2.0 }, { 1, 0, 1e-7 }, { 2, 3, 12345.678 } });
    WeightedGraph back = load_graph(save_graph(g));
    EXPECT_EQ(save_graph(back), save_graph(g));
    WeightedGraph c = canonical(g);
    ASSERT_EQ(back.edge_count(), c.edge_count());
    for (EdgeId id = 0; id < c.edge_count(); ++id) {
        EXPECT_EQ(back.edge(id).u, c.edge(id).u);
        EXPECT_EQ(back.edge(id).v, c.edge(id).v);
        EXPECT_EQ(back.weight(id), c.weight(id));
    }
}

TEST(Stats, CycleAndComplete)
{
    GraphStats c5 = stats(cycle_graph(5));
    EXPECT_DOUBLE_EQ(c5.total_weight, 5.0);
    EXPECT_EQ(c5.girth, 5);
    EXPECT_TRUE(c5.triangle_free);

    GraphStats k4 = stats(complete_graph(4));
    EXPECT_EQ(k4.girth, 3);
    EXPECT_FALSE(k4.triangle_free);
}

TEST(Stats, Petersen)
{
    GraphStats s = stats(petersen_graph());
    EXPECT_EQ(s.girth, 5);
    EXPECT_EQ(s.max_degree, 3);
    EXPECT_TRUE(s.connected);
}

TEST(Stats, ForestHasUnboundedGirth)
{
    WeightedGraph g(5, { { 0, 1, 1 }, { 1, 2, 1 }, { 3, 4, 1 } });
    GraphStats s = stats(g);
    EXPECT_EQ(s.girth, unbounded_girth);
    EXPECT_TRUE(s.triangle_free);
    EXPECT_FALSE(s.connected);
}

TEST(Generate, StarCounterexample)
{
    WeightedGraph g = star_counterexample(1.0, 6);
    EXPECT_EQ(g.vertex_count(), 7);
    EXPECT_EQ(g.edge_count(), 21);
    EXPECT_DOUBLE_EQ(g.total_weight(), 21.0);
    EXPECT_TRUE(star_counterexample_params_valid(1.0, 6, 0.3));
    EXPECT_FALSE(star_counterexample_params_valid(1.0, 5, 0.3));
    EXPECT_FALSE(star_counterexample_params_valid(0.8, 100, 0.3));
}

TEST(Generate, PetersenC3)
{
    WeightedGraph g = petersen_c3(10, 1);
    EXPECT_DOUBLE_EQ(g.total_weight(), 60.0);
    EXPECT_DOUBLE_EQ(g.weight_of(petersen_spokes()), 50.0);
    EXPECT_EQ(stats(g).girth, 5);
}

TEST(Generate, Gadget)
{
    WeightedGraph g = gadget_k33_subdivided();
    EXPECT_EQ(g.vertex_count(), 7);
    EXPECT_EQ(g.edge_count(), 10);
    int degree_two = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) == 2) {
            ++degree_two;
            EXPECT_EQ(v, gadget_attach_vertex);
        } else {
            EXPECT_EQ(g.degree(v), 3);
        }
    }
    EXPECT_EQ(degree_two, 1);
    EXPECT_TRUE(stats(g).triangle_free);
}

TEST(Generate, RandomTriangleFreeSubcubic)
{
    for (int n : { 2, 5, 11, 20, 40 }) {
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            WeightedGraph g = random_triangle_free_subcubic(n, seed, WeightDistribution::integer(0, 10));
            EXPECT_LE(g.max_degree(), 3);
            EXPECT_FALSE(has_triangle_by_triples(g));
            WeightedGraph again = random_triangle_free_subcubic(n, seed, WeightDistribution::integer(0, 10));
            EXPECT_EQ(save_graph(g), save_graph(again));
        }
    }
}

TEST(Generate, DispatchAndErrors)
{
    std::vector<std::string> params { "4", "2" };
    EXPECT_DOUBLE_EQ(generate("cycle", params).total_weight(), 8.0);
    EXPECT_THROW(generate("cycle", std::vector<std::string> { "2" }), Error);
    EXPECT_THROW(generate("nope", std::vector<std::string> {}), Error);
    EXPECT_THROW(generate("random_triangle_free_subcubic", std::vector<std::string> { "5", "1", "int:3:1" }), Error);
    std::set<std::string_view> kinds(generator_kinds().begin(), generator_kinds().end());
    EXPECT_TRUE(kinds.count("random_triangle_free_subcubic"));
}

TEST(Generate, StatsInvariantsHold)
{
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        WeightedGraph g = random_connected(9, 0.4, seed, WeightDistribution::real(0, 3));
        GraphStats s = stats(g);
        EXPECT_TRUE(s.connected);
        EXPECT_EQ(s.triangle_free, s.girth >= 4);
        double sum = 0.0;
        for (const Edge& e : g.edges())
            sum += e.weight;
        EXPECT_NEAR(s.total_weight, sum, 1e-12);
    }
}
