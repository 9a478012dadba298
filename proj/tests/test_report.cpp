#include <sstream>

#include <gtest/gtest.h>

#include "rootix/report.hpp"

using namespace rootix;
using report::json;

TEST(Report, Fixed)
{
    EXPECT_EQ(report::fixed(0.96226, 4), "0.9623");
    EXPECT_EQ(report::fixed(-0.85984, 4), "-0.8598");
    EXPECT_EQ(report::fixed(std::nan(""), 4), "nan");
}

TEST(Report, PolynomialJson)
{
    const json j = report::to_json(Polynomial({2, 1}));
    EXPECT_EQ(j["coefficients"], json::array({2, 1}));
    EXPECT_EQ(j["text"], "x^2 + 2x");
}

TEST(Report, RootJson)
{
    const json j = report::to_json(root_index(Polynomial({1})));
    EXPECT_EQ(j["delta"], 1.0);
    EXPECT_EQ(j["exact"], true);
}

TEST(Report, GraphEntriesNoteUndefinedKinds)
{
    const auto entries = report::graph_entries(families::path(2));
    ASSERT_EQ(entries.size(), 4U);
    EXPECT_FALSE(entries[1].polynomial);
    EXPECT_FALSE(entries[1].note.empty());
    const json j = report::graph_json(families::path(2), entries);
    EXPECT_TRUE(j["polynomials"]["edge-hosoya"].contains("error"));
    EXPECT_EQ(j["polynomials"]["hosoya"]["root"]["exact"], true);
}

TEST(Report, DiscriminationCsvAndJsonAgree)
{
    std::vector<report::DiscriminationRow> rows{
        {"T10", IndexId::delta_h, {106, 4, 102.0 / 106.0}, {{1e-8, 4}, {1e-9, 4}, {1e-10, 4}}},
        {"T10", IndexId::wiener, {106, 87, 19.0 / 106.0}, {}}};
    std::ostringstream csv;
    report::discrimination_csv(csv, rows);
    EXPECT_EQ(csv.str(), "family,index,N,ND,Dis\nT10,delta-H,106,4,0.9623\nT10,W,106,87,0.1792\n");
    const json j = report::discrimination_json(rows, 0.0);
    EXPECT_EQ(j["rows"][0]["Dis"], 102.0 / 106.0);
    EXPECT_EQ(j["rows"][0]["stability"].size(), 3U);
    EXPECT_FALSE(j["rows"][1].contains("stability"));
}

TEST(Report, SensitivityNanIsNull)
{
    SensitivityRow r;
    r.sa1 = std::nan("");
    const json j = report::sensitivity_json({{"T9", IndexId::delta_h, 47, 0, r}});
    EXPECT_TRUE(j["rows"][0]["SA1"].is_null());
    std::ostringstream csv;
    report::sensitivity_csv(csv, {{"T9", IndexId::delta_h, 47, 0, r}});
    EXPECT_NE(csv.str().find(",nan,"), std::string::npos);
}

TEST(Report, CorrelationCsv)
{
    std::ostringstream csv;
    report::correlation_csv(csv, {{"N8", IndexId::wiener, IndexId::gutman, -0.85984}});
    EXPECT_EQ(csv.str(), "family,index_a,index_b,r\nN8,W,Gut,-0.8598\n");
}
