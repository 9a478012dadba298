#include <random>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "rootix/polynomial.hpp"
#include "rootix/selftest.hpp"

using namespace rootix;

namespace {

std::vector<std::int64_t> coeffs(const Polynomial& p) { return {p.coefficients().begin(), p.coefficients().end()}; }

Graph random_connected(std::mt19937_64& rng, int n)
{
    // Random spanning tree plus random chords.
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v)
        edges.emplace_back(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
    std::bernoulli_distribution chord(0.3);
    Graph g = Graph::from_edge_list(n, edges);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (!g.adjacent(a, b) && chord(rng))
                g = g.with_edge(a, b);
    return g;
}

} // namespace

TEST(Polynomial, NormalizesAndValidates)
{
    const Polynomial p({3, 0, 2, 0, 0});
    EXPECT_EQ(p.degree(), 3);
    EXPECT_EQ(p.coefficient(1), 3);
    EXPECT_EQ(p.coefficient(2), 0);
    EXPECT_EQ(p.coefficient(4), 0);
    EXPECT_EQ(p.sum(), 5);
    EXPECT_THROW(Polynomial({0, 0}), InputError);
    EXPECT_THROW(Polynomial({}), InputError);
    EXPECT_THROW(Polynomial({1, -1}), InputError);
}

TEST(Polynomial, Text)
{
    EXPECT_EQ(to_string(Polynomial({16, 22, 22, 16, 10, 4, 1})), "x^7 + 4x^6 + 10x^5 + 16x^4 + 22x^3 + 22x^2 + 16x");
    EXPECT_EQ(to_string(Polynomial({0, 1})), "x^2");
    EXPECT_EQ(to_string(Polynomial({1})), "x");
}

TEST(Polynomial, Phenanthrene)
{
    const Graph g = load_fixture("phenanthrene.txt");
    EXPECT_EQ(to_string(build(g, PolyKind::hosoya)), "x^7 + 4x^6 + 10x^5 + 16x^4 + 22x^3 + 22x^2 + 16x");
    EXPECT_EQ(to_string(build(g, PolyKind::edge_hosoya)), "4x^6 + 10x^5 + 20x^4 + 33x^3 + 31x^2 + 22x");
    EXPECT_EQ(to_string(build(g, PolyKind::schultz)), "4x^7 + 16x^6 + 42x^5 + 70x^4 + 102x^3 + 106x^2 + 76x");
    EXPECT_EQ(to_string(build(g, PolyKind::gutman)), "4x^7 + 16x^6 + 44x^5 + 76x^4 + 117x^3 + 126x^2 + 91x");
    EXPECT_EQ(max_coefficient(build(g, PolyKind::schultz)), 106);
}

TEST(Polynomial, ClassicIndexIsDerivativeAtOne)
{
    const Polynomial p({16, 22, 22, 16, 10, 4, 1});
    EXPECT_EQ(classic_index(p), 16 + 44 + 66 + 64 + 50 + 24 + 7);
}

TEST(Polynomial, MatchesPairwiseDefinitions)
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 2 + trial % 10;
        const Graph g = random_connected(rng, n);
        ASSERT_EQ(coeffs(build(g, PolyKind::hosoya)), oracle::hosoya(g));
        ASSERT_EQ(coeffs(build(g, PolyKind::schultz)), oracle::schultz(g));
        ASSERT_EQ(coeffs(build(g, PolyKind::gutman)), oracle::gutman(g));
        if (g.size() >= 2)
            ASSERT_EQ(coeffs(build(g, PolyKind::edge_hosoya)), oracle::edge_hosoya(g));
        ASSERT_EQ(classic_index(build(g, PolyKind::hosoya)), oracle::wiener(g));
    }
}

TEST(Polynomial, EdgeHosoyaIsHosoyaOfLineGraph)
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        const Graph g = random_connected(rng, 3 + trial % 8);
        EXPECT_EQ(build(g, PolyKind::edge_hosoya).coefficients().size(),
                  build(line_graph(g), PolyKind::hosoya).coefficients().size());
        EXPECT_EQ(coeffs(build(g, PolyKind::edge_hosoya)), coeffs(build(line_graph(g), PolyKind::hosoya)));
    }
}

TEST(Polynomial, RejectsUndefinedInput)
{
    EXPECT_THROW(build(Graph::from_edge_list(4, {{0, 1}, {2, 3}}), PolyKind::hosoya), InputError);
    EXPECT_THROW(build(families::path(2), PolyKind::edge_hosoya), InputError);
    EXPECT_THROW(build(Graph(1), PolyKind::hosoya), InputError);
}

TEST(ClosedForm, MatchesConstructedGraphs)
{
    const auto r = selftest::closed_forms();
    EXPECT_TRUE(r.passed()) << (r.failures.empty() ? "" : r.failures.front());
    EXPECT_GT(r.checks, 150U);
}

TEST(ClosedForm, SpotValues)
{
    // Star with four rays: its line graph is K_4.
    EXPECT_EQ(coeffs(closed_form({FamilyShape::star, 4}, PolyKind::edge_hosoya)), (std::vector<std::int64_t>{6}));
    EXPECT_EQ(coeffs(closed_form({FamilyShape::cycle, 6}, PolyKind::hosoya)), (std::vector<std::int64_t>{6, 6, 3}));
    EXPECT_EQ(coeffs(closed_form({FamilyShape::path, 4}, PolyKind::hosoya)), (std::vector<std::int64_t>{3, 2, 1}));
}

TEST(ClosedForm, RangeLimits)
{
    EXPECT_THROW(closed_form({FamilyShape::wheel, 4}, PolyKind::edge_hosoya), InputError);
    EXPECT_THROW(closed_form({FamilyShape::complete, 2}, PolyKind::edge_hosoya), InputError);
    EXPECT_THROW(closed_form({FamilyShape::star, 1}, PolyKind::edge_hosoya), InputError);
    EXPECT_NO_THROW(closed_form({FamilyShape::wheel, 5}, PolyKind::edge_hosoya));
    try {
        closed_form({FamilyShape::wheel, 3}, PolyKind::edge_hosoya);
    } catch (const InputError& e) {
        EXPECT_NE(std::string(e.what()).find("n >= 5"), std::string::npos);
    }
}

TEST(ClosedForm, WheelEdgeFormulaFailsBelowFive)
{
    // The literal formula disagrees with the constructed wheel at n = 3.
    const std::int64_t n = 3;
    const std::vector<std::int64_t> literal{n * (n + 5) / 2, n * (n - 1), n * (n - 5) / 2};
    EXPECT_NE(literal, coeffs(build(families::wheel(3), PolyKind::edge_hosoya)));
}
