#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rootix/enumerate.hpp"
#include "rootix/selftest.hpp"

using namespace rootix;

namespace {

std::set<std::string> brute_set(const std::vector<Graph>& graphs)
{
    std::set<std::string> out;
    for (const Graph& g : graphs)
        out.insert(oracle::brute_certificate(g));
    return out;
}

} // namespace

TEST(Trees, Counts)
{
    for (int n = 1; n <= 14; ++n)
        EXPECT_EQ(enumerate_all(trees(n)).size(), selftest::kTreeCounts[n - 1]) << n;
}

TEST(Trees, AreDistinctTrees)
{
    for (int n = 1; n <= 12; ++n) {
        std::set<CanonicalForm> seen;
        for_each_tree(n, [&](const Graph& g) {
            EXPECT_EQ(g.size(), n - 1);
            EXPECT_TRUE(is_connected(g));
            EXPECT_TRUE(seen.insert(canonical_form(g)).second);
        });
    }
}

TEST(Trees, MatchBruteForceClasses)
{
    for (int n = 1; n <= 6; ++n) {
        const auto want = oracle::connected_classes(n, true);
        const auto got = brute_set(enumerate_all(trees(n)));
        EXPECT_EQ(got, want) << n;
    }
}

TEST(Trees, LevelSequenceToGraph)
{
    const Graph g = TreeGenerator::to_graph({0, 1, 2, 1, 1});
    EXPECT_EQ(g.size(), 4);
    EXPECT_EQ(g.degree(0), 3);
    EXPECT_TRUE(g.adjacent(1, 2));
    EXPECT_THROW(TreeGenerator(kMaxTreeOrder + 1), InputError);
    EXPECT_THROW(TreeGenerator(0), InputError);
}

TEST(Connected, Counts)
{
    for (int n = 1; n <= 7; ++n)
        EXPECT_EQ(enumerate_all(connected_graphs(n)).size(), selftest::kConnectedCounts[n - 1]) << n;
}

TEST(Connected, AreDistinctAndConnected)
{
    for (int n = 1; n <= 7; ++n) {
        std::set<CanonicalForm> seen;
        for_each_connected_graph(n, [&](const Graph& g) {
            EXPECT_EQ(g.order(), n);
            EXPECT_TRUE(is_connected(g));
            EXPECT_TRUE(seen.insert(canonical_form(g)).second);
        });
    }
}

TEST(Connected, MatchBruteForceClasses)
{
    for (int n = 1; n <= 6; ++n)
        EXPECT_EQ(brute_set(enumerate_all(connected_graphs(n))), oracle::connected_classes(n, false)) << n;
}

TEST(Connected, OrderLimits)
{
    EXPECT_THROW(for_each_connected_graph(kMaxConnectedOrder + 1, [](const Graph&) {}), InputError);
    EXPECT_THROW(for_each_connected_graph(0, [](const Graph&) {}), InputError);
}

TEST(Connected, Deterministic)
{
    std::vector<std::string> a, b;
    for_each_connected_graph(6, [&](const Graph& g) { a.push_back(write_graph6(g)); });
    for_each_connected_graph(6, [&](const Graph& g) { b.push_back(write_graph6(g)); });
    EXPECT_EQ(a, b);
}

TEST(Graph6Stream, ReadsRecords)
{
    std::istringstream in("A_\n\nBw\r\nCF\n");
    std::vector<Graph> got;
    for_each_graph6(in, [&](const Graph& g) { got.push_back(g); });
    ASSERT_EQ(got.size(), 3U);
    EXPECT_EQ(got[1].size(), 3);
}

TEST(Graph6Stream, NamesBadRecord)
{
    std::istringstream bad("A_\nA\n");
    try {
        for_each_graph6(bad, [](const Graph&) {});
        FAIL();
    } catch (const InputError& e) {
        EXPECT_NE(std::string(e.what()).find("record 1"), std::string::npos);
    }
    std::istringstream disconnected("A?\n");
    EXPECT_THROW(for_each_graph6(disconnected, [](const Graph&) {}), InputError);
}

TEST(FamilySpec, Labels)
{
    EXPECT_EQ(trees(9).label(), "T9");
    EXPECT_EQ(connected_graphs(8).label(), "N8");
    FamilySpec f{FamilySpec::Kind::graph6_file, 0, "/tmp/x/sample.g6"};
    EXPECT_EQ(f.label(), "sample.g6");
    FamilySpec missing{FamilySpec::Kind::graph6_file, 0, "/nonexistent/file.g6"};
    EXPECT_THROW(enumerate_all(missing), InputError);
}
