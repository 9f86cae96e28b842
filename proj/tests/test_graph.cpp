#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "seidel/generators.hpp"
#include "seidel/graph.hpp"

using namespace seidel;

namespace {

// Symmetric, loop-free, nothing beyond the order.
void expect_valid(const Graph& g)
{
    EXPECT_NO_THROW(Graph::from_rows(g.order(), g.rows())) << to_graph6(g);
}

} // namespace

TEST(MakeGraph, Fig1EdgeList)
{
    const Graph g = make_graph(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
    expect_valid(g);
    EXPECT_EQ(g.edge_count(), 4);
    EXPECT_TRUE(g.adjacent(0, 1));
    EXPECT_TRUE(g.adjacent(3, 2));
    EXPECT_FALSE(g.adjacent(0, 3));
    EXPECT_EQ(g, fig1());
}

TEST(MakeGraph, SingleVertex)
{
    const Graph g = make_graph(1, {});
    EXPECT_EQ(g.order(), 1);
    EXPECT_EQ(g.edge_count(), 0);
}

TEST(MakeGraph, DuplicatePairsCoalesce)
{
    const Graph g = make_graph(3, {{0, 1}, {1, 0}});
    EXPECT_EQ(g.edge_count(), 1);
    EXPECT_EQ(g.edges(), (std::vector<std::pair<int, int>>{{0, 1}}));
}

TEST(MakeGraph, Errors)
{
    EXPECT_THROW(make_graph(0, {}), std::invalid_argument);
    EXPECT_THROW(make_graph(63, {}), std::invalid_argument);
    EXPECT_THROW(make_graph(3, {{1, 1}}), std::invalid_argument);
    EXPECT_THROW(make_graph(3, {{0, 3}}), std::out_of_range);
    EXPECT_THROW(make_graph(3, {{-1, 0}}), std::out_of_range);
    EXPECT_NO_THROW(make_graph(62, {{0, 61}}));
}

TEST(FromRows, RejectsBrokenInvariants)
{
    Graph::Rows rows{};
    rows[0] = bit(1);
    EXPECT_THROW(Graph::from_rows(2, rows), std::invalid_argument); // asymmetric
    rows[0] = bit(0);
    EXPECT_THROW(Graph::from_rows(2, rows), std::invalid_argument); // loop
    rows[0] = bit(2);
    rows[2] = bit(0);
    EXPECT_THROW(Graph::from_rows(2, rows), std::invalid_argument); // beyond order
}

TEST(Complement, K3IsEmpty)
{
    EXPECT_EQ(complement(complete_graph(3)), empty_graph(3));
}

TEST(Complement, C5IsSelfComplementary)
{
    const Graph c5 = cycle_graph(5);
    EXPECT_NE(complement(c5), c5);
    EXPECT_TRUE(oracle::isomorphic_brute(c5, complement(c5)));
}

TEST(Complement, InvolutionOnRandomGraphs)
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const Graph g = oracle::random_graph(1 + trial % 30, rng);
        const Graph c = complement(g);
        expect_valid(c);
        EXPECT_EQ(complement(c), g);
        EXPECT_EQ(g.edge_count() + c.edge_count(), g.order() * (g.order() - 1) / 2);
    }
}

TEST(InducedSubgraph, Examples)
{
    EXPECT_EQ(induced_subgraph(complete_graph(4), VertexSet(4, {0, 1, 2})).graph, complete_graph(3));

    // {x, y, z} of the first figure: the path x - y - z.
    const auto xyz = induced_subgraph(fig1(), VertexSet(4, {1, 2, 3}));
    EXPECT_EQ(xyz.graph, path_graph(2));
    EXPECT_EQ(xyz.old_to_new, (std::vector<int>{-1, 0, 1, 2}));
    EXPECT_EQ(xyz.new_to_old, (std::vector<int>{1, 2, 3}));

    EXPECT_EQ(induced_subgraph(prism_c3p2(), VertexSet(6, {3, 4, 5})).graph, complete_graph(3));
}

TEST(InducedSubgraph, Errors)
{
    EXPECT_THROW(induced_subgraph(complete_graph(3), VertexSet::empty(3)), std::invalid_argument);
    EXPECT_THROW(induced_subgraph(complete_graph(3), VertexSet::all(4)), std::invalid_argument);
}

TEST(Degree, Examples)
{
    const Graph k23 = complete_bipartite(2, 3);
    for (int v = 2; v < 5; ++v)
        EXPECT_EQ(degree(k23, v), 2);
    EXPECT_EQ(neighborhood(fig1(), 0), VertexSet(4, {1, 2}));
    const Graph q3 = cube_q3();
    for (int v = 0; v < 8; ++v)
        EXPECT_EQ(degree(q3, v), 3);
    EXPECT_THROW(degree(q3, 8), std::out_of_range);
    EXPECT_THROW(neighborhood(q3, -1), std::out_of_range);
}

TEST(Degree, HandshakeOnRandomGraphs)
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const Graph g = oracle::random_graph(1 + trial % 40, rng, 0.3);
        int sum = 0;
        for (int v = 0; v < g.order(); ++v) {
            EXPECT_FALSE(neighborhood(g, v).contains(v));
            sum += degree(g, v);
        }
        EXPECT_EQ(sum, 2 * g.edge_count());
    }
}

TEST(VertexSetTest, Algebra)
{
    const VertexSet s(5, {0, 2});
    EXPECT_EQ(s.complement(), VertexSet(5, {1, 3, 4}));
    EXPECT_EQ(s.symmetric_difference(VertexSet(5, {2, 3})), VertexSet(5, {0, 3}));
    EXPECT_EQ(s.to_string(), "0,2");
    EXPECT_EQ(s.to_binary(), "00101");
    EXPECT_THROW(VertexSet(3, Mask{8}), std::out_of_range);
    EXPECT_THROW(VertexSet(3, {3}), std::out_of_range);
    EXPECT_THROW(s.symmetric_difference(VertexSet(4, {0})), std::invalid_argument);
}

TEST(PermutationTest, Basics)
{
    const Permutation p({2, 0, 1});
    EXPECT_EQ(p.inverse().compose(p), Permutation::identity(3));
    EXPECT_EQ(p.apply(bit(0) | bit(1)), bit(2) | bit(0));
    EXPECT_THROW(Permutation({0, 0, 1}), std::invalid_argument);
    EXPECT_THROW(Permutation({0, 3, 1}), std::invalid_argument);
}

TEST(Graph6, SingleVertexIsAt)
{
    EXPECT_EQ(to_graph6(make_graph(1, {})), "@");
    EXPECT_EQ(from_graph6("@"), Graph(1));
}

TEST(Graph6, KnownEncodings)
{
    // Reference strings from an external encoder.
    EXPECT_EQ(to_graph6(complete_graph(2)), "A_");
    EXPECT_EQ(to_graph6(fig1()), "Cx");
    EXPECT_EQ(to_graph6(complete_bipartite(2, 3)), "D]o");
    EXPECT_EQ(to_graph6(cube_q3()), "Gr`HOk");
}

TEST(Graph6, Errors)
{
    EXPECT_THROW(from_graph6(""), std::invalid_argument);
    EXPECT_THROW(from_graph6("C"), std::invalid_argument);      // truncated
    EXPECT_THROW(from_graph6("Cxx"), std::invalid_argument);    // trailing garbage
    EXPECT_THROW(from_graph6("C\x01"), std::invalid_argument);  // non-printable
    EXPECT_THROW(from_graph6("?"), std::invalid_argument);      // order 0
    EXPECT_THROW(from_graph6("~"), std::invalid_argument);      // long size form
    EXPECT_THROW(from_graph6("A@"), std::invalid_argument);     // padding bit set
}

TEST(Graph6, RoundTripExhaustiveUpToOrder7)
{
    for (int n = 1; n <= 7; ++n)
        oracle::each_labeled_graph(n, [](const Graph& g) { ASSERT_EQ(from_graph6(to_graph6(g)), g); });
}

TEST(Graph6, RoundTripRandomUpToOrder30)
{
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> order(1, 30);
    for (int trial = 0; trial < 1000; ++trial) {
        const Graph g = oracle::random_graph(order(rng), rng);
        const std::string s = to_graph6(g);
        for (char c : s)
            ASSERT_TRUE(c >= 63 && c <= 126);
        ASSERT_EQ(from_graph6(s), g);
    }
}

TEST(Graph6, AllElevenOrderFourClassesRoundTrip)
{
    const std::vector<Graph> classes{
        empty_graph(4),
        make_graph(4, {{0, 1}}),
        make_graph(4, {{0, 1}, {2, 3}}),
        make_graph(4, {{0, 1}, {1, 2}}),
        star_graph(3),
        path_graph(3),
        make_graph(4, {{0, 1}, {1, 2}, {0, 2}}),
        cycle_graph(4),
        make_graph(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}}),
        complement(make_graph(4, {{0, 1}})),
        complete_graph(4)};
    for (std::size_t i = 0; i < classes.size(); ++i) {
        EXPECT_EQ(from_graph6(to_graph6(classes[i])), classes[i]);
        for (std::size_t j = 0; j < i; ++j)
            EXPECT_FALSE(oracle::isomorphic_brute(classes[i], classes[j])) << i << " " << j;
    }
}
