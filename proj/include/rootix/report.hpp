#pragma once

#include <cmath>
#include <cstdio>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "rootix/metrics.hpp"
#include "rootix/polynomial.hpp"
#include "rootix/roots.hpp"

namespace rootix::report {

using json = nlohmann::ordered_json;

/// Fixed-point text with `digits` decimals ("nan" for NaN).
inline std::string fixed(double x, int digits)
{
    if (std::isnan(x))
        return "nan";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, x);
    return buf;
}

/// NaN becomes null so the output stays valid JSON.
inline json number(double x) { return std::isnan(x) ? json(nullptr) : json(x); }

inline json to_json(const Polynomial& p)
{
    json coeffs = json::array();
    for (auto c : p.coefficients())
        coeffs.push_back(c);
    return {{"coefficients", coeffs}, {"text", to_string(p)}};
}

inline json to_json(const RootResult& r)
{
    return {{"delta", r.delta},
            {"lower_bound", r.lower_bound},
            {"bracket_width", r.bracket_width},
            {"exact", r.is_exactly_one}};
}

// ---------------------------------------------------------------------------
// Single graph.

/// Everything derived from one polynomial kind; empty optionals when the
/// kind is undefined for the graph.
struct PolynomialEntry {
    PolyKind kind;
    std::optional<Polynomial> polynomial;
    std::optional<RootResult> root;
    std::string note;
};

inline std::vector<PolynomialEntry> graph_entries(const Graph& g)
{
    std::vector<PolynomialEntry> out;
    for (PolyKind k : kAllPolyKinds) {
        PolynomialEntry e{k, std::nullopt, std::nullopt, {}};
        try {
            e.polynomial = build(g, k);
            e.root = root_index(*e.polynomial);
        } catch (const InputError& err) {
            e.note = err.what();
        }
        out.push_back(std::move(e));
    }
    return out;
}

inline json graph_json(const Graph& g, const std::vector<PolynomialEntry>& entries)
{
    json out = {{"n", g.order()}, {"m", g.size()}};
    json polys = json::object();
    for (const auto& e : entries) {
        json item;
        if (e.polynomial) {
            item["polynomial"] = to_json(*e.polynomial);
            item["classic_index"] = classic_index(*e.polynomial);
            item["max_coefficient"] = max_coefficient(*e.polynomial);
            item["root"] = to_json(*e.root);
        } else {
            item["error"] = e.note;
        }
        polys[std::string(to_string(e.kind))] = item;
    }
    out["polynomials"] = polys;
    return out;
}

inline void graph_csv(std::ostream& out, const std::vector<PolynomialEntry>& entries, bool header = true)
{
    if (header)
        out << "kind,polynomial,classic_index,max_coefficient,delta,lower_bound,bracket_width,exact\n";
    for (const auto& e : entries) {
        out << to_string(e.kind) << ',';
        if (!e.polynomial) {
            out << ",,,,,,\n";
            continue;
        }
        out << '"' << to_string(*e.polynomial) << "\"," << classic_index(*e.polynomial) << ','
            << max_coefficient(*e.polynomial) << ',' << fixed(e.root->delta, 5) << ','
            << fixed(e.root->lower_bound, 5) << ',' << e.root->bracket_width << ','
            << (e.root->is_exactly_one ? "true" : "false") << '\n';
    }
}

inline void graph_pretty(std::ostream& out, const Graph& g, const std::vector<PolynomialEntry>& entries)
{
    out << "graph: n = " << g.order() << ", m = " << g.size() << '\n';
    for (const auto& e : entries) {
        out << "  " << to_string(e.kind) << ":\n";
        if (!e.polynomial) {
            out << "    undefined (" << e.note << ")\n";
            continue;
        }
        const auto& r = *e.root;
        out << "    polynomial    " << to_string(*e.polynomial) << '\n'
            << "    classic index " << classic_index(*e.polynomial) << '\n'
            << "    root-index    " << fixed(r.delta, 5) << (r.is_exactly_one ? " (exact)" : "") << '\n'
            << "    lower bound   1/" << max_coefficient(*e.polynomial) + 1 << " = " << fixed(r.lower_bound, 5)
            << '\n'
            << "    bracket width " << r.bracket_width << '\n';
    }
}

// ---------------------------------------------------------------------------
// Discrimination.

struct DiscriminationRow {
    std::string family;
    IndexId index;
    Discrimination result;
    /// ND at each kStabilityEps tolerance; real-valued indices only.
    std::vector<std::pair<double, std::size_t>> stability;
};

inline void discrimination_csv(std::ostream& out, const std::vector<DiscriminationRow>& rows)
{
    out << "family,index,N,ND,Dis\n";
    for (const auto& r : rows)
        out << r.family << ',' << to_string(r.index) << ',' << r.result.size << ',' << r.result.nd << ','
            << fixed(r.result.dis, 4) << '\n';
}

inline json discrimination_json(const std::vector<DiscriminationRow>& rows, double eps)
{
    json arr = json::array();
    for (const auto& r : rows) {
        json item = {{"family", r.family},
                     {"index", std::string(to_string(r.index))},
                     {"N", r.result.size},
                     {"ND", r.result.nd},
                     {"Dis", r.result.dis}};
        if (!r.stability.empty()) {
            json st = json::array();
            for (auto [e, nd] : r.stability)
                st.push_back({{"eps_eq", e}, {"ND", nd}});
            item["stability"] = st;
        }
        arr.push_back(item);
    }
    return {{"eps_eq", eps}, {"rows", arr}};
}

inline void discrimination_pretty(std::ostream& out, const std::vector<DiscriminationRow>& rows)
{
    char line[160];
    std::snprintf(line, sizeof line, "%-8s %-10s %7s %7s %8s  %s\n", "family", "index", "N", "ND", "Dis",
                  "ND at eps 1e-8/1e-9/1e-10");
    out << line;
    for (const auto& r : rows) {
        std::string st;
        for (auto [e, nd] : r.stability)
            st += (st.empty() ? "" : "/") + std::to_string(nd);
        std::snprintf(line, sizeof line, "%-8s %-10s %7zu %7zu %8s  %s\n", r.family.c_str(),
                      std::string(to_string(r.index)).c_str(), r.result.size, r.result.nd,
                      fixed(r.result.dis, 4).c_str(), st.c_str());
        out << line;
    }
}

// ---------------------------------------------------------------------------
// Correlation.

struct CorrelationRow {
    std::string family;
    IndexId a, b;
    double r;
};

inline void correlation_csv(std::ostream& out, const std::vector<CorrelationRow>& rows)
{
    out << "family,index_a,index_b,r\n";
    for (const auto& c : rows)
        out << c.family << ',' << to_string(c.a) << ',' << to_string(c.b) << ',' << fixed(c.r, 4) << '\n';
}

inline json correlation_json(const std::vector<CorrelationRow>& rows)
{
    json arr = json::array();
    for (const auto& c : rows)
        arr.push_back({{"family", c.family},
                       {"index_a", std::string(to_string(c.a))},
                       {"index_b", std::string(to_string(c.b))},
                       {"r", c.r}});
    return {{"rows", arr}};
}

inline void correlation_pretty(std::ostream& out, const std::vector<CorrelationRow>& rows)
{
    char line[128];
    for (const auto& c : rows) {
        std::snprintf(line, sizeof line, "%-8s %-10s %-10s %8s\n", c.family.c_str(),
                      std::string(to_string(c.a)).c_str(), std::string(to_string(c.b)).c_str(),
                      fixed(c.r, 4).c_str());
        out << line;
    }
}

// ---------------------------------------------------------------------------
// Sensitivity.

struct SensitivityReportRow {
    std::string family;
    IndexId index;
    std::size_t evaluated;
    std::size_t skipped;
    SensitivityRow row;
};

inline void sensitivity_csv(std::ostream& out, const std::vector<SensitivityReportRow>& rows)
{
    out << "family,index,N,SS1,Abr1,SA1,SS2,Abr2,SA2\n";
    for (const auto& s : rows)
        out << s.family << ',' << to_string(s.index) << ',' << s.evaluated << ',' << fixed(s.row.ss1, 4) << ','
            << fixed(s.row.abr1, 4) << ',' << fixed(s.row.sa1, 4) << ',' << fixed(s.row.ss2, 4) << ','
            << fixed(s.row.abr2, 4) << ',' << fixed(s.row.sa2, 4) << '\n';
}

inline json sensitivity_json(const std::vector<SensitivityReportRow>& rows)
{
    json arr = json::array();
    for (const auto& s : rows)
        arr.push_back({{"family", s.family},
                       {"index", std::string(to_string(s.index))},
                       {"N", s.evaluated},
                       {"skipped", s.skipped},
                       {"SS1", number(s.row.ss1)},
                       {"Abr1", number(s.row.abr1)},
                       {"SA1", number(s.row.sa1)},
                       {"SS2", number(s.row.ss2)},
                       {"Abr2", number(s.row.abr2)},
                       {"SA2", number(s.row.sa2)}});
    return {{"rows", arr}};
}

inline void sensitivity_pretty(std::ostream& out, const std::vector<SensitivityReportRow>& rows)
{
    char line[160];
    std::snprintf(line, sizeof line, "%-10s %-8s %7s %7s %7s %7s %7s %7s\n", "index", "family", "SS1", "Abr1",
                  "SA1", "SS2", "Abr2", "SA2");
    out << line;
    for (const auto& s : rows) {
        std::snprintf(line, sizeof line, "%-10s %-8s %7s %7s %7s %7s %7s %7s\n",
                      std::string(to_string(s.index)).c_str(), s.family.c_str(), fixed(s.row.ss1, 4).c_str(),
                      fixed(s.row.abr1, 4).c_str(), fixed(s.row.sa1, 4).c_str(), fixed(s.row.ss2, 4).c_str(),
                      fixed(s.row.abr2, 4).c_str(), fixed(s.row.sa2, 4).c_str());
        out << line;
    }
}

} // namespace rootix::report
