#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <ostream>
#include <string>
#include <vector>

#include "rootix/canonical.hpp"
#include "rootix/enumerate.hpp"
#include "rootix/polynomial.hpp"
#include "rootix/roots.hpp"

namespace rootix::selftest {

struct Options {
    /// Seed for the randomized relabeling suite.
    std::uint64_t seed = 1;
    /// Adds 1 to the leading coefficient of every built polynomial in the
    /// closed-form suite, so a correct build must be reported as failing.
    bool inject_fault = false;
};

struct SuiteResult {
    std::string name;
    std::size_t checks = 0;
    std::vector<std::string> failures;

    bool passed() const noexcept { return failures.empty(); }

    void check(bool ok, const std::function<std::string()>& describe)
    {
        ++checks;
        if (!ok && failures.size() < 20)
            failures.push_back(describe());
        else if (!ok)
            failures.emplace_back();
    }
};

/// Inclusive n range tested for each family shape; edge-hosoya may start later.
struct ShapeRange {
    FamilyShape shape;
    int lo, hi;
};

inline constexpr ShapeRange kClosedFormRanges[] = {
    {FamilyShape::complete, 2, 8}, {FamilyShape::cycle, 3, 12}, {FamilyShape::star, 1, 10},
    {FamilyShape::path, 3, 12},    {FamilyShape::wheel, 3, 10},
};

inline SuiteResult closed_forms(const Options& opt = {})
{
    SuiteResult r{"closed-form polynomials", 0, {}};
    for (auto [shape, lo, hi] : kClosedFormRanges) {
        for (PolyKind kind : kAllPolyKinds) {
            for (int n = std::max(lo, closed_form_min_n(shape, kind)); n <= hi; ++n) {
                const GraphFamily f{shape, n};
                const Polynomial p = build(construct(f), kind);
                std::vector<std::int64_t> built(p.coefficients().begin(), p.coefficients().end());
                if (opt.inject_fault)
                    built.back() += 1;
                const Polynomial got(built), want = closed_form(f, kind);
                r.check(got == want, [&] {
                    return std::string(to_string(shape)) + " n=" + std::to_string(n) + " " +
                           std::string(to_string(kind)) + ": built " + to_string(got) + ", formula " +
                           to_string(want);
                });
            }
        }
    }
    return r;
}

inline SuiteResult complete_roots()
{
    SuiteResult r{"complete-graph roots", 0, {}};
    for (PolyKind kind : {PolyKind::hosoya, PolyKind::schultz, PolyKind::gutman}) {
        for (int n = 2; n <= 10; ++n) {
            const double got = root_index(build(families::complete(n), kind)).delta;
            const double want = complete_graph_root(kind, n);
            r.check(std::abs(got - want) <= 1e-12, [&] {
                return "K_" + std::to_string(n) + " " + std::string(to_string(kind)) + ": " +
                       std::to_string(got) + " vs " + std::to_string(want);
            });
        }
    }
    return r;
}

namespace detail {

inline void check_bound(SuiteResult& r, const Graph& g, const std::string& where)
{
    for (PolyKind kind : kAllPolyKinds) {
        if (kind == PolyKind::edge_hosoya && g.size() < 2)
            continue;
        const Polynomial p = build(g, kind);
        const double delta = root_index(p).delta;
        const double bound = lower_bound(p);
        r.check(delta > bound, [&] {
            return where + " " + std::string(to_string(kind)) + ": delta " + std::to_string(delta) +
                   " <= " + std::to_string(bound);
        });
    }
}

} // namespace detail

/// delta > 1/(M+1) over every tree with 4..max_tree vertices and every
/// connected graph with 3..max_connected vertices.
inline SuiteResult root_bound(int max_tree = 12, int max_connected = 7)
{
    SuiteResult r{"root lower bound", 0, {}};
    for (int n = 4; n <= max_tree; ++n) {
        std::size_t i = 0;
        for_each_tree(n, [&](const Graph& g) { detail::check_bound(r, g, "T" + std::to_string(n) + "#" + std::to_string(i++)); });
    }
    for (int n = 3; n <= max_connected; ++n) {
        std::size_t i = 0;
        for_each_connected_graph(
            n, [&](const Graph& g) { detail::check_bound(r, g, "N" + std::to_string(n) + "#" + std::to_string(i++)); });
    }
    return r;
}

inline constexpr std::size_t kTreeCounts[] = {1,   1,   1,    2,    3,    6,    11,   23,
                                              47,  106, 235,  551,  1301, 3159, 7741, 19320};
inline constexpr std::size_t kConnectedCounts[] = {1, 1, 2, 6, 21, 112, 853, 11117};

inline SuiteResult counts(int max_tree = 13, int max_connected = 7)
{
    SuiteResult r{"enumeration counts", 0, {}};
    for (int n = 1; n <= max_tree; ++n) {
        std::size_t c = 0;
        for_each_tree(n, [&](const Graph&) { ++c; });
        const std::size_t want = kTreeCounts[n - 1];
        r.check(c == want, [&] {
            return "trees n=" + std::to_string(n) + ": " + std::to_string(c) + " vs " + std::to_string(want);
        });
    }
    for (int n = 1; n <= max_connected; ++n) {
        std::size_t c = 0;
        for_each_connected_graph(n, [&](const Graph&) { ++c; });
        const std::size_t want = kConnectedCounts[n - 1];
        r.check(c == want, [&] {
            return "connected n=" + std::to_string(n) + ": " + std::to_string(c) + " vs " + std::to_string(want);
        });
    }
    return r;
}

/// Canonical forms must not change when a random graph is randomly relabeled.
inline SuiteResult label_invariance(std::uint64_t seed, int trials = 200)
{
    SuiteResult r{"canonical relabeling", 0, {}};
    std::mt19937_64 rng(seed);
    for (int t = 0; t < trials; ++t) {
        const int n = std::uniform_int_distribution<int>(1, 12)(rng);
        std::bernoulli_distribution coin(std::uniform_real_distribution<double>(0.1, 0.9)(rng));
        std::vector<Edge> edges;
        for (Vertex a = 0; a < n; ++a)
            for (Vertex b = a + 1; b < n; ++b)
                if (coin(rng))
                    edges.emplace_back(a, b);
        std::vector<Vertex> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<Edge> moved;
        for (auto [a, b] : edges)
            moved.emplace_back(perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(b)]);
        const Graph g = Graph::from_edge_list(n, edges), h = Graph::from_edge_list(n, moved);
        r.check(canonical_form(g) == canonical_form(h),
                [&] { return "trial " + std::to_string(t) + ": " + write_graph6(g) + " vs " + write_graph6(h); });
    }
    return r;
}

inline std::vector<SuiteResult> run_all(const Options& opt = {})
{
    return {closed_forms(opt), complete_roots(), root_bound(), counts(), label_invariance(opt.seed)};
}

inline bool print_summary(std::ostream& out, const std::vector<SuiteResult>& suites)
{
    bool ok = true;
    for (const auto& s : suites) {
        out << (s.passed() ? "[PASS] " : "[FAIL] ") << s.name << " (" << s.checks << " checks";
        if (!s.passed())
            out << ", " << s.failures.size() << " failed";
        out << ")\n";
        for (const auto& f : s.failures)
            if (!f.empty())
                out << "       " << f << '\n';
        ok = ok && s.passed();
    }
    return ok;
}

} // namespace rootix::selftest
