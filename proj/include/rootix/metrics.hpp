#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rootix/canonical.hpp"
#include "rootix/error.hpp"
#include "rootix/graph.hpp"
#include "rootix/parallel.hpp"
#include "rootix/polynomial.hpp"
#include "rootix/roots.hpp"
#include "rootix/spectrum.hpp"

namespace rootix {

enum class IndexId { delta_h, delta_he, delta_sc, delta_gut, wiener, edge_wiener, schultz, gutman };

enum class ValueKind { real, integer };

inline constexpr std::size_t kIndexCount = 8;

/// Root-indices followed by the classic indices, each group in H, Gut, Sc, He order.
inline constexpr IndexId kRootIndices[] = {IndexId::delta_h, IndexId::delta_gut, IndexId::delta_sc,
                                           IndexId::delta_he};
inline constexpr IndexId kClassicIndices[] = {IndexId::wiener, IndexId::gutman, IndexId::schultz,
                                              IndexId::edge_wiener};

inline std::string_view to_string(IndexId id)
{
    switch (id) {
    case IndexId::delta_h: return "delta-H";
    case IndexId::delta_he: return "delta-He";
    case IndexId::delta_sc: return "delta-Sc";
    case IndexId::delta_gut: return "delta-Gut";
    case IndexId::wiener: return "W";
    case IndexId::edge_wiener: return "We";
    case IndexId::schultz: return "Sc";
    case IndexId::gutman: return "Gut";
    }
    return "?";
}

inline std::optional<IndexId> parse_index(std::string_view name)
{
    for (std::size_t i = 0; i < kIndexCount; ++i) {
        auto id = static_cast<IndexId>(i);
        if (to_string(id) == name)
            return id;
    }
    return std::nullopt;
}

inline ValueKind value_kind(IndexId id)
{
    return static_cast<std::size_t>(id) < 4 ? ValueKind::real : ValueKind::integer;
}

/// The polynomial an index is derived from.
inline PolyKind source_kind(IndexId id)
{
    switch (id) {
    case IndexId::delta_h:
    case IndexId::wiener: return PolyKind::hosoya;
    case IndexId::delta_he:
    case IndexId::edge_wiener: return PolyKind::edge_hosoya;
    case IndexId::delta_sc:
    case IndexId::schultz: return PolyKind::schultz;
    case IndexId::delta_gut:
    case IndexId::gutman: return PolyKind::gutman;
    }
    return PolyKind::hosoya;
}

/// All eight index values of one graph. Entries that are undefined (the
/// edge kind on graphs with fewer than two edges) are NaN.
struct IndexValues {
    std::array<double, kIndexCount> v{};

    double operator[](IndexId id) const { return v[static_cast<std::size_t>(id)]; }
    double& operator[](IndexId id) { return v[static_cast<std::size_t>(id)]; }
};

inline IndexId root_index_of(PolyKind k)
{
    switch (k) {
    case PolyKind::hosoya: return IndexId::delta_h;
    case PolyKind::edge_hosoya: return IndexId::delta_he;
    case PolyKind::schultz: return IndexId::delta_sc;
    case PolyKind::gutman: return IndexId::delta_gut;
    }
    return IndexId::delta_h;
}

inline IndexId classic_index_of(PolyKind k)
{
    switch (k) {
    case PolyKind::hosoya: return IndexId::wiener;
    case PolyKind::edge_hosoya: return IndexId::edge_wiener;
    case PolyKind::schultz: return IndexId::schultz;
    case PolyKind::gutman: return IndexId::gutman;
    }
    return IndexId::wiener;
}

/// Builds each polynomial once and derives both of its indices.
inline IndexValues evaluate_indices(const Graph& g)
{
    if (g.order() < 2 || !is_connected(g))
        throw InputError("indices need a connected graph with at least two vertices");
    IndexValues out;
    const DistanceMatrix d = all_pairs_distances(g);
    for (PolyKind k : kAllPolyKinds) {
        if (k == PolyKind::edge_hosoya && g.size() < 2) {
            out[root_index_of(k)] = std::numeric_limits<double>::quiet_NaN();
            out[classic_index_of(k)] = std::numeric_limits<double>::quiet_NaN();
            continue;
        }
        const Polynomial p = k == PolyKind::edge_hosoya ? build(g, k) : build(spectrum(g, d, k));
        out[root_index_of(k)] = root_index(p).delta;
        out[classic_index_of(k)] = static_cast<double>(classic_index(p));
    }
    return out;
}

inline double index_value(const Graph& g, IndexId id)
{
    const Polynomial p = build(g, source_kind(id));
    return value_kind(id) == ValueKind::real ? root_index(p).delta : static_cast<double>(classic_index(p));
}

// ---------------------------------------------------------------------------
// Discrimination.

/// Default collision tolerance for real-valued indices: exact equality of the
/// computed roots. Identical polynomials always produce bit-identical roots,
/// while distinct roots in the enumerated tree families can lie closer than
/// 1e-10 apart.
inline constexpr double kDefaultEpsEq = 0.0;

/// Tolerances reported alongside ND to show how collision counts depend on them.
inline constexpr double kStabilityEps[] = {1e-8, 1e-9, 1e-10};

struct Discrimination {
    std::size_t size = 0; ///< |F|
    std::size_t nd = 0;   ///< graphs sharing their value with another graph
    double dis = 0.0;     ///< (|F| - ND) / |F|
};

/// Integer values collide on exact equality. Real values are sorted and
/// neighbors within `eps` (absolute) are chained into one cluster; every
/// member of a cluster of size >= 2 counts toward ND.
inline Discrimination discrimination(std::span<const double> values, ValueKind kind,
                                     double eps = kDefaultEpsEq)
{
    if (values.empty())
        throw InputError("discrimination needs at least one value");
    if (!(eps >= 0.0))
        throw InputError("collision tolerance must be nonnegative");
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    const double tol = kind == ValueKind::integer ? 0.0 : eps;

    Discrimination d;
    d.size = sorted.size();
    std::size_t start = 0;
    for (std::size_t i = 1; i <= sorted.size(); ++i) {
        if (i < sorted.size() && sorted[i] - sorted[i - 1] <= tol)
            continue;
        if (i - start >= 2)
            d.nd += i - start;
        start = i;
    }
    d.dis = static_cast<double>(d.size - d.nd) / static_cast<double>(d.size);
    return d;
}

// ---------------------------------------------------------------------------
// Correlation.

/// Sample Pearson correlation coefficient.
inline double pearson(std::span<const double> xs, std::span<const double> ys)
{
    if (xs.size() != ys.size())
        throw InputError("pearson: vectors differ in length");
    if (xs.size() < 2)
        throw InputError("pearson: need at least two samples");
    const auto n = static_cast<double>(xs.size());
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0, sxx = 0, syy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double dx = xs[i] - mx, dy = ys[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0)
        throw InputError("pearson: zero variance");
    return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

// ---------------------------------------------------------------------------
// Structure sensitivity and abruptness.

/// SS^1/Abr^1 use relative changes |I(G) - I(G')| / I(G); SS^2 is the RMS
/// and Abr^2 the maximum of absolute changes. SA^i = SS^i / Abr^i.
struct SensitivityRow {
    double ss1 = 0, abr1 = 0, sa1 = 0;
    double ss2 = 0, abr2 = 0, sa2 = 0;
};

namespace detail {

inline double quotient(double num, double den)
{
    return den > 0.0 ? num / den : std::numeric_limits<double>::quiet_NaN();
}

inline SensitivityRow sensitivity_from_values(double base, std::span<const double> neighbors)
{
    SensitivityRow r;
    double sum_rel = 0, sum_sq = 0;
    for (double x : neighbors) {
        const double diff = std::abs(base - x);
        const double rel = diff / std::abs(base);
        sum_rel += rel;
        sum_sq += diff * diff;
        r.abr1 = std::max(r.abr1, rel);
        r.abr2 = std::max(r.abr2, diff);
    }
    // A mean never exceeds the maximum; the min only absorbs rounding.
    const auto k = static_cast<double>(neighbors.size());
    r.ss1 = std::min(sum_rel / k, r.abr1);
    r.ss2 = std::min(std::sqrt(sum_sq / k), r.abr2);
    r.sa1 = quotient(r.ss1, r.abr1);
    r.sa2 = quotient(r.ss2, r.abr2);
    return r;
}

} // namespace detail

/// Per-graph rows for several indices, sharing one edge-addition
/// neighborhood. nullopt when the graph is complete (no neighborhood).
inline std::optional<std::vector<SensitivityRow>> graph_sensitivity(const Graph& g, std::span<const IndexId> ids)
{
    const std::vector<Graph> neighborhood = edge_addition_neighborhood(g);
    if (neighborhood.empty())
        return std::nullopt;
    const IndexValues base = evaluate_indices(g);
    std::vector<IndexValues> around;
    around.reserve(neighborhood.size());
    for (const auto& h : neighborhood)
        around.push_back(evaluate_indices(h));

    std::vector<SensitivityRow> rows;
    std::vector<double> values(around.size());
    for (IndexId id : ids) {
        for (std::size_t i = 0; i < around.size(); ++i)
            values[i] = around[i][id];
        rows.push_back(detail::sensitivity_from_values(base[id], values));
    }
    return rows;
}

inline std::optional<SensitivityRow> sensitivity(const Graph& g, IndexId id)
{
    const IndexId ids[] = {id};
    auto rows = graph_sensitivity(g, ids);
    if (!rows)
        return std::nullopt;
    return rows->front();
}

/// Averages SS^i and Abr^i over the family; SA^i is the quotient of the averages.
inline SensitivityRow family_sensitivity(std::span<const SensitivityRow> per_graph)
{
    if (per_graph.empty())
        throw InputError("sensitivity: every graph of the family was skipped");
    SensitivityRow avg;
    for (const auto& r : per_graph) {
        avg.ss1 += r.ss1;
        avg.abr1 += r.abr1;
        avg.ss2 += r.ss2;
        avg.abr2 += r.abr2;
    }
    const auto k = static_cast<double>(per_graph.size());
    avg.ss1 /= k;
    avg.abr1 /= k;
    avg.ss2 /= k;
    avg.abr2 /= k;
    avg.sa1 = detail::quotient(avg.ss1, avg.abr1);
    avg.sa2 = detail::quotient(avg.ss2, avg.abr2);
    return avg;
}

// ---------------------------------------------------------------------------
// Family-level evaluation.

struct FamilyResult {
    std::string label;
    /// One entry per graph, in enumeration order.
    std::vector<IndexValues> values;

    std::size_t size() const noexcept { return values.size(); }

    std::vector<double> column(IndexId id) const
    {
        std::vector<double> out;
        out.reserve(values.size());
        for (const auto& v : values)
            out.push_back(v[id]);
        return out;
    }

    /// Values of `id` on the graphs where it is defined.
    std::vector<double> defined_column(IndexId id) const
    {
        std::vector<double> out;
        for (const auto& v : values)
            if (!std::isnan(v[id]))
                out.push_back(v[id]);
        return out;
    }

    /// Paired values of `a` and `b` on the graphs where both are defined.
    std::pair<std::vector<double>, std::vector<double>> defined_pair(IndexId a, IndexId b) const
    {
        std::pair<std::vector<double>, std::vector<double>> out;
        for (const auto& v : values) {
            if (std::isnan(v[a]) || std::isnan(v[b]))
                continue;
            out.first.push_back(v[a]);
            out.second.push_back(v[b]);
        }
        return out;
    }
};

inline FamilyResult evaluate_family(std::string label, std::span<const Graph> graphs, unsigned workers = 1)
{
    return {std::move(label), parallel_map(graphs, workers, [](const Graph& g) { return evaluate_indices(g); })};
}

struct FamilySensitivity {
    std::vector<IndexId> ids;
    /// rows[j] is the family row for ids[j].
    std::vector<SensitivityRow> rows;
    std::size_t evaluated = 0;
    std::size_t skipped = 0;
};

/// Per-graph sensitivity over a family, then averaged per index. Complete
/// graphs are skipped and counted.
inline FamilySensitivity family_sensitivity(std::span<const Graph> graphs, std::span<const IndexId> ids,
                                            unsigned workers = 1)
{
    auto per_graph = parallel_map(graphs, workers, [&](const Graph& g) { return graph_sensitivity(g, ids); });
    FamilySensitivity out;
    out.ids.assign(ids.begin(), ids.end());
    std::vector<std::vector<SensitivityRow>> by_index(ids.size());
    for (const auto& rows : per_graph) {
        if (!rows) {
            ++out.skipped;
            continue;
        }
        ++out.evaluated;
        for (std::size_t j = 0; j < ids.size(); ++j)
            by_index[j].push_back((*rows)[j]);
    }
    for (const auto& col : by_index)
        out.rows.push_back(family_sensitivity(col));
    return out;
}

} // namespace rootix
