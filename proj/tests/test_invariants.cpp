#include <gtest/gtest.h>

#include <random>

#include <boost/multiprecision/cpp_int.hpp>

#include "oracles.hpp"
#include "seidel/generators.hpp"
#include "seidel/invariants.hpp"
#include "seidel/switching.hpp"

using namespace seidel;

namespace {

// The polynomial agrees with det(xI - S) at n + 1 integer points, which
// pins down a degree-n polynomial.
void expect_matches_determinant(const Graph& g)
{
    const auto p = seidel_char_poly(g);
    ASSERT_EQ(p.degree(), g.order());
    for (long long x = -3; x <= g.order() - 3; ++x) {
        __int128 v = 0;
        for (int k = p.degree(); k >= 0; --k)
            v = v * x + p[k];
        ASSERT_TRUE(v == oracle::seidel_char_value(g, x)) << to_graph6(g) << " at " << x;
    }
}

} // namespace

TEST(SeidelMatrix, Entries)
{
    const Graph g = fig1();
    const auto s = seidel_matrix(g);
    EXPECT_EQ(s[0][0], 0);
    EXPECT_EQ(s[0][1], -1);
    EXPECT_EQ(s[0][3], 1);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            EXPECT_EQ(s[i][j], s[j][i]);
}

TEST(SeidelCharPoly, SmallExamples)
{
    EXPECT_EQ(seidel_char_poly(Graph(1)).coefficients, (std::vector<std::int64_t>{0, 1}));
    EXPECT_EQ(seidel_char_poly(complete_graph(2)).coefficients, (std::vector<std::int64_t>{-1, 0, 1}));
    EXPECT_EQ(seidel_char_poly(empty_graph(2)).coefficients, (std::vector<std::int64_t>{-1, 0, 1}));
    // Eigenvalues -2, 1, 1 and 2, -1, -1.
    EXPECT_EQ(seidel_char_poly(complete_graph(3)).coefficients, (std::vector<std::int64_t>{2, -3, 0, 1}));
    EXPECT_EQ(seidel_char_poly(empty_graph(3)).coefficients, (std::vector<std::int64_t>{-2, -3, 0, 1}));
}

TEST(SeidelCharPoly, MatchesDeterminantExhaustively)
{
    for (int n = 1; n <= 5; ++n)
        oracle::each_labeled_graph(n, [](const Graph& g) { expect_matches_determinant(g); });
}

TEST(SeidelCharPoly, MatchesDeterminantOnRandomGraphs)
{
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 200; ++trial)
        expect_matches_determinant(oracle::random_graph(6 + trial % 11, rng));
}

TEST(SeidelCharPoly, TraceTermVanishes)
{
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 200; ++trial) {
        const Graph g = oracle::random_graph(1 + trial % 16, rng);
        const auto p = seidel_char_poly(g);
        ASSERT_EQ(p[p.degree()], 1);
        ASSERT_EQ(p[p.degree() - 1], 0);
    }
}

TEST(SeidelCharPoly, SwitchingAndRelabelingInvariance)
{
    std::mt19937_64 rng(10);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + trial % 16;
        const Graph g = oracle::random_graph(n, rng);
        const auto p = seidel_char_poly(g);
        ASSERT_EQ(seidel_char_poly(switch_set(g, VertexSet(n, rng() & full_mask(n)))), p);
        ASSERT_EQ(seidel_char_poly(relabel(g, oracle::random_permutation(n, rng))), p);
    }
}

TEST(SeidelCharPoly, ComplementNegatesSpectrum)
{
    // S(complement g) = -S(g), so p_c(x) = (-1)^n p(-x).
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + trial % 12;
        const Graph g = oracle::random_graph(n, rng);
        const auto p = seidel_char_poly(g);
        const auto q = seidel_char_poly(complement(g));
        for (int k = 0; k <= n; ++k)
            ASSERT_EQ(q[k], (n - k) % 2 ? -p[k] : p[k]);
    }
}

TEST(SeidelCharPoly, BigIntegerInstantiationAgrees)
{
    using boost::multiprecision::cpp_int;
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        const Graph g = oracle::random_graph(1 + trial % 16, rng);
        const auto small = seidel_char_poly(g);
        const auto big = seidel_char_poly<cpp_int>(g);
        ASSERT_EQ(big.coefficients.size(), small.coefficients.size());
        for (std::size_t k = 0; k < small.coefficients.size(); ++k)
            ASSERT_EQ(big.coefficients[k], cpp_int(small.coefficients[k]));
    }
}

TEST(SeidelCharPoly, OrderBound)
{
    EXPECT_THROW(seidel_char_poly(Graph(17)), OrderBoundError);
    EXPECT_NO_THROW(seidel_char_poly(complete_graph(16)));
    EXPECT_NO_THROW(seidel_char_poly<boost::multiprecision::cpp_int>(complete_graph(16)));
}

TEST(ClassSignature, SeparatesOrders)
{
    EXPECT_EQ(class_signature(complete_graph(2)), class_signature(empty_graph(2)));
    EXPECT_FALSE(class_signature(Graph(2)) == class_signature(Graph(3)));
}
