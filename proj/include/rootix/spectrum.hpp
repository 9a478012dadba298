#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "rootix/error.hpp"
#include "rootix/graph.hpp"

namespace rootix {

/// The four distance-based pair statistics and their generating polynomials.
enum class PolyKind {
    hosoya,      ///< pairs of vertices at distance k
    edge_hosoya, ///< pairs of edges at distance k (in the line graph)
    schultz,     ///< sum of deg(a) + deg(b) over vertex pairs at distance k
    gutman,      ///< sum of deg(a) * deg(b) over vertex pairs at distance k
};

inline constexpr PolyKind kAllPolyKinds[] = {PolyKind::hosoya, PolyKind::edge_hosoya,
                                             PolyKind::schultz, PolyKind::gutman};

inline std::string_view to_string(PolyKind k)
{
    switch (k) {
    case PolyKind::hosoya: return "hosoya";
    case PolyKind::edge_hosoya: return "edge-hosoya";
    case PolyKind::schultz: return "schultz";
    case PolyKind::gutman: return "gutman";
    }
    return "?";
}

/// weights[k - 1] is the statistic for distance k; no entry for k = 0.
struct DistanceSpectrum {
    PolyKind kind;
    std::vector<std::int64_t> weights;

    int diameter() const
    {
        int d = static_cast<int>(weights.size());
        while (d > 0 && weights[static_cast<std::size_t>(d - 1)] == 0)
            --d;
        return d;
    }

    std::int64_t total() const { return std::accumulate(weights.begin(), weights.end(), std::int64_t{0}); }

    bool operator==(const DistanceSpectrum&) const = default;
};

namespace detail {

inline DistanceSpectrum vertex_pair_spectrum(const Graph& g, const DistanceMatrix& d, PolyKind kind)
{
    DistanceSpectrum s{kind, std::vector<std::int64_t>(static_cast<std::size_t>(d.max_distance()), 0)};
    for (Vertex a = 0; a < g.order(); ++a) {
        for (Vertex b = a + 1; b < g.order(); ++b) {
            const int k = d(a, b);
            if (k == DistanceMatrix::kUnreachable)
                throw InputError("spectrum requires a connected graph");
            std::int64_t w = 1;
            if (kind == PolyKind::schultz)
                w = g.degree(a) + g.degree(b);
            else if (kind == PolyKind::gutman)
                w = std::int64_t{g.degree(a)} * g.degree(b);
            s.weights[static_cast<std::size_t>(k - 1)] += w;
        }
    }
    return s;
}

} // namespace detail

/// Spectrum from a precomputed distance matrix of `g`. Not valid for
/// edge_hosoya, whose distances live in the line graph.
inline DistanceSpectrum spectrum(const Graph& g, const DistanceMatrix& d, PolyKind kind)
{
    if (kind == PolyKind::edge_hosoya)
        throw InputError("edge-hosoya spectrum needs line-graph distances");
    return detail::vertex_pair_spectrum(g, d, kind);
}

/// d_k, d_k^e, s_k or g_k of a connected graph. Rejects disconnected input,
/// and graphs with fewer than two edges for the edge kind.
inline DistanceSpectrum spectrum(const Graph& g, PolyKind kind)
{
    if (!is_connected(g))
        throw InputError("spectrum requires a connected graph");
    if (kind == PolyKind::edge_hosoya) {
        if (g.size() < 2)
            throw InputError("edge-hosoya spectrum requires at least two edges");
        const Graph lg = line_graph(g);
        auto s = detail::vertex_pair_spectrum(lg, all_pairs_distances(lg), PolyKind::hosoya);
        s.kind = PolyKind::edge_hosoya;
        return s;
    }
    if (g.order() < 2)
        throw InputError("spectrum requires at least two vertices");
    return detail::vertex_pair_spectrum(g, all_pairs_distances(g), kind);
}

} // namespace rootix
