#include <random>

#include <gtest/gtest.h>

#include "rootix/graph6.hpp"

using namespace rootix;

TEST(Graph6, KnownStrings)
{
    EXPECT_EQ(write_graph6(families::complete(2)), "A_");
    EXPECT_EQ(write_graph6(Graph(1)), "@");
    EXPECT_EQ(write_graph6(families::complete(4)), "C~");
    const Graph star = parse_graph6("D?{");
    EXPECT_EQ(star.order(), 5);
    EXPECT_EQ(star.size(), 4);
    EXPECT_EQ(star.degree(4), 4);
}

TEST(Graph6, RoundTripRandom)
{
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + trial % 70;
        std::bernoulli_distribution coin(0.3);
        std::vector<Edge> edges;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (coin(rng))
                    edges.emplace_back(a, b);
        const Graph g = Graph::from_edge_list(n, edges);
        const std::string s = write_graph6(g);
        ASSERT_EQ(parse_graph6(s), g) << s;
        if (n >= 63)
            EXPECT_EQ(s[0], '~');
    }
}

TEST(Graph6, ToleratesLineEndings)
{
    EXPECT_EQ(parse_graph6("A_\n"), families::complete(2));
    EXPECT_EQ(parse_graph6("A_\r\n"), families::complete(2));
}

TEST(Graph6, RejectsMalformed)
{
    EXPECT_THROW(parse_graph6(""), InputError);
    EXPECT_THROW(parse_graph6("?"), InputError);  // n = 0
    EXPECT_THROW(parse_graph6("A"), InputError);  // truncated bits
    EXPECT_THROW(parse_graph6("A__"), InputError); // trailing byte
    EXPECT_THROW(parse_graph6("A`"), InputError);  // nonzero padding
    EXPECT_THROW(parse_graph6("A "), InputError);  // byte below 63
    EXPECT_THROW(parse_graph6("~??"), InputError); // truncated long order
    EXPECT_THROW(parse_graph6("~??@"), InputError); // long form for n < 63
}
