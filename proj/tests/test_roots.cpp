#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "rootix/roots.hpp"

using namespace rootix;

namespace {

std::vector<std::int64_t> coeffs(const Polynomial& p) { return {p.coefficients().begin(), p.coefficients().end()}; }

} // namespace

TEST(Roots, Linear)
{
    const auto r = solve_unit_root(std::vector<std::int64_t>{6});
    EXPECT_NEAR(r.delta, 1.0 / 6.0, 1e-15);
    EXPECT_FALSE(r.is_exactly_one);
    EXPECT_LE(r.bracket_width, kRootBracketWidth);
}

TEST(Roots, ExactOne)
{
    const auto r = root_index(build(families::path(2), PolyKind::hosoya));
    EXPECT_TRUE(r.is_exactly_one);
    EXPECT_EQ(r.delta, 1.0);
    EXPECT_EQ(r.bracket_width, 0.0);
    EXPECT_TRUE(solve_unit_root(std::vector<std::int64_t>{0, 0, 1}).is_exactly_one);
}

TEST(Roots, Quadratics)
{
    // P_3: H = x^2 + 2x.
    EXPECT_NEAR(root_index(build(families::path(3), PolyKind::hosoya)).delta, std::sqrt(2.0) - 1.0, 1e-14);
    for (int a = 0; a <= 20; ++a)
        for (int b = 1; b <= 20; ++b)
            EXPECT_NEAR(solve_unit_root(std::vector<std::int64_t>{b, a}).delta, oracle::quadratic_root(a, b), 1e-13);
}

TEST(Roots, FloatingCoefficients)
{
    EXPECT_NEAR(solve_unit_root(std::vector<double>{0.5, 0.5}).delta, 1.0, 1e-12);
    EXPECT_TRUE(solve_unit_root(std::vector<double>{0.25, 0.75}).is_exactly_one);
    EXPECT_NEAR(solve_unit_root(std::vector<double>{4.0}).delta, 0.25, 1e-15);
}

TEST(Roots, Errors)
{
    EXPECT_THROW(solve_unit_root(std::vector<double>{0.2, 0.3}), InputError);
    EXPECT_THROW(solve_unit_root(std::vector<std::int64_t>{}), InputError);
    EXPECT_THROW(solve_unit_root(std::vector<std::int64_t>{2, -1}), InputError);
    EXPECT_THROW(complete_graph_root(PolyKind::edge_hosoya, 4), InputError);
    EXPECT_THROW(complete_graph_root(PolyKind::hosoya, 1), InputError);
}

TEST(Roots, CompleteGraphs)
{
    for (int n = 2; n <= 10; ++n) {
        const double m = n;
        EXPECT_NEAR(root_index(build(families::complete(n), PolyKind::hosoya)).delta, 2 / (m * (m - 1)), 1e-12);
        EXPECT_NEAR(root_index(build(families::complete(n), PolyKind::schultz)).delta,
                    1 / (m * (m - 1) * (m - 1)), 1e-12);
        EXPECT_NEAR(root_index(build(families::complete(n), PolyKind::gutman)).delta,
                    2 / (m * (m - 1) * (m - 1) * (m - 1)), 1e-12);
    }
}

TEST(Roots, StarEdgeHosoya)
{
    EXPECT_NEAR(root_index(build(families::star(4), PolyKind::edge_hosoya)).delta, 1.0 / 6.0, 1e-14);
}

TEST(Roots, Phenanthrene)
{
    const Graph g = load_fixture("phenanthrene.txt");
    // Printed to five places as 0.05765, 0.04276, 0.01292, 0.01082.
    const double printed[] = {0.05765, 0.04276, 0.01292, 0.01082};
    const std::int64_t bound[] = {23, 34, 107, 127};
    int i = 0;
    for (PolyKind k : kAllPolyKinds) {
        const Polynomial p = build(g, k);
        const RootResult r = root_index(p);
        EXPECT_NEAR(r.delta, static_cast<double>(oracle::unit_root(coeffs(p))), 1e-13) << to_string(k);
        EXPECT_NEAR(r.delta, printed[i], 1e-5) << to_string(k);
        EXPECT_EQ(max_coefficient(p) + 1, bound[i]);
        EXPECT_DOUBLE_EQ(r.lower_bound, 1.0 / static_cast<double>(bound[i]));
        EXPECT_GT(r.delta, r.lower_bound);
        ++i;
    }
}

TEST(Roots, RandomPolynomialsAgainstLongDouble)
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 2000; ++trial) {
        const int deg = std::uniform_int_distribution<int>(1, 12)(rng);
        std::vector<std::int64_t> c(deg);
        for (auto& x : c)
            x = std::uniform_int_distribution<std::int64_t>(0, 200)(rng);
        c.back() = std::max<std::int64_t>(c.back(), 1);
        if (std::accumulate(c.begin(), c.end(), std::int64_t{0}) < 2)
            c[0] += 2;
        const auto r = solve_unit_root(c);
        ASSERT_NEAR(r.delta, static_cast<double>(oracle::unit_root(c)), 1e-13) << "trial " << trial;
        ASSERT_LE(r.bracket_width, kRootBracketWidth);
        ASSERT_GT(r.delta, r.lower_bound);
    }
}

TEST(Roots, Deterministic)
{
    const std::vector<std::int64_t> c{76, 106, 102, 70, 42, 16, 4};
    const double a = solve_unit_root(c).delta, b = solve_unit_root(c).delta;
    EXPECT_EQ(a, b);
}
