#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <climits>
#include <compare>
#include <cstdint>
#include <set>
#include <numeric>
#include <string>
#include <vector>

#include "rootix/error.hpp"
#include "rootix/graph.hpp"
#include "rootix/graph6.hpp"

namespace rootix {

/// Largest order accepted by the canonical labeler.
inline constexpr int kMaxCanonicalOrder = 20;

/// graph6 text of the canonically relabeled graph. Equal iff isomorphic.
struct CanonicalForm {
    std::string certificate;

    auto operator<=>(const CanonicalForm&) const = default;
};

struct CanonicalLabeling {
    CanonicalForm form;
    /// order[p] is the vertex placed at canonical position p.
    std::vector<Vertex> order;
    /// Smallest member of each vertex's automorphism orbit.
    std::vector<Vertex> orbit;
    /// Automorphisms discovered during the search (as vertex maps); they
    /// generate the full automorphism group.
    std::vector<std::vector<Vertex>> generators;
};

namespace detail {

class UnionFind {
public:
    explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n))
    {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int find(int x)
    {
        while (parent_[static_cast<std::size_t>(x)] != x) {
            auto& p = parent_[static_cast<std::size_t>(x)];
            p = parent_[static_cast<std::size_t>(p)];
            x = p;
        }
        return x;
    }

    void unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a != b)
            parent_[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }

private:
    std::vector<int> parent_;
};

// Individualization-refinement search for the lexicographically least
// certificate. Cells of the ordered partition are identified by their start
// position, so a coloring maps each vertex to the first position of its cell.
//
// Pruning: on the first path, children in the same orbit (under discovered
// automorphisms fixing the current prefix) as an already explored child are
// skipped; a leaf equivalent to the first leaf yields an automorphism and
// unwinds the search to the first-path node where the two paths diverge.
class CanonicalSearch {
public:
    explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()), mask_(static_cast<std::size_t>(n_), 0)
    {
        for (auto [a, b] : g.edges()) {
            mask_[static_cast<std::size_t>(a)] |= std::uint32_t{1} << b;
            mask_[static_cast<std::size_t>(b)] |= std::uint32_t{1} << a;
        }
    }

    CanonicalLabeling run()
    {
        descend(Coloring(static_cast<std::size_t>(n_), 0), 0, true);
        CanonicalLabeling out;
        out.form.certificate = best_cert_;
        out.order = best_order_;
        UnionFind uf(n_);
        for (const auto& gen : gens_)
            for (int v = 0; v < n_; ++v)
                uf.unite(v, gen[static_cast<std::size_t>(v)]);
        out.orbit.resize(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v)
            out.orbit[static_cast<std::size_t>(v)] = uf.find(v);
        out.generators = std::move(gens_);
        return out;
    }

private:
    using Coloring = std::vector<int>;
    static constexpr int kNoJump = INT_MAX;

    bool adjacent(Vertex a, Vertex b) const { return (mask_[static_cast<std::size_t>(a)] >> b) & 1U; }

    static int cell_count(const Coloring& c)
    {
        std::uint32_t starts = 0;
        for (int col : c)
            starts |= std::uint32_t{1} << col;
        return std::popcount(starts);
    }

    // Splits every cell by neighbor counts into each cell until stable.
    void refine(Coloring& c) const
    {
        const auto n = static_cast<std::size_t>(n_);
        std::vector<std::array<std::uint8_t, kMaxCanonicalOrder>> sig(n);
        std::vector<Vertex> byrank(n);
        int cells = cell_count(c);
        while (cells < n_) {
            for (std::size_t v = 0; v < n; ++v) {
                sig[v].fill(0);
                for (Vertex u : g_.neighbors(static_cast<Vertex>(v)))
                    ++sig[v][static_cast<std::size_t>(c[static_cast<std::size_t>(u)])];
            }
            std::iota(byrank.begin(), byrank.end(), 0);
            std::sort(byrank.begin(), byrank.end(), [&](Vertex a, Vertex b) {
                const auto ca = c[static_cast<std::size_t>(a)], cb = c[static_cast<std::size_t>(b)];
                if (ca != cb)
                    return ca < cb;
                return sig[static_cast<std::size_t>(a)] < sig[static_cast<std::size_t>(b)];
            });
            Coloring next(n);
            for (std::size_t p = 0; p < n; ++p) {
                const auto v = static_cast<std::size_t>(byrank[p]);
                if (p > 0) {
                    const auto u = static_cast<std::size_t>(byrank[p - 1]);
                    if (c[u] == c[v] && sig[u] == sig[v]) {
                        next[v] = next[u];
                        continue;
                    }
                }
                next[v] = static_cast<int>(p);
            }
            const int next_cells = cell_count(next);
            c = std::move(next);
            if (next_cells == cells)
                break;
            cells = next_cells;
        }
    }

    static Coloring individualize(Coloring c, Vertex v)
    {
        const int start = c[static_cast<std::size_t>(v)];
        for (std::size_t u = 0; u < c.size(); ++u)
            if (c[u] == start && static_cast<Vertex>(u) != v)
                c[u] = start + 1;
        return c;
    }

    std::string certificate(const std::vector<Vertex>& order) const
    {
        return detail::pack_graph6(n_, [&](int i, int j) {
            return adjacent(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]);
        });
    }

    std::vector<Vertex> mapping(const std::vector<Vertex>& from, const std::vector<Vertex>& to) const
    {
        std::vector<Vertex> gamma(static_cast<std::size_t>(n_));
        for (std::size_t p = 0; p < from.size(); ++p)
            gamma[static_cast<std::size_t>(from[p])] = to[p];
        return gamma;
    }

    // True if `v` shares an orbit with some vertex of `explored` under the
    // discovered automorphisms that fix the current path pointwise.
    bool pruned_by_orbit(Vertex v, const std::vector<Vertex>& explored) const
    {
        UnionFind uf(n_);
        for (const auto& gen : gens_) {
            bool fixes = std::all_of(path_.begin(), path_.end(),
                                     [&](Vertex p) { return gen[static_cast<std::size_t>(p)] == p; });
            if (!fixes)
                continue;
            for (int x = 0; x < n_; ++x)
                uf.unite(x, gen[static_cast<std::size_t>(x)]);
        }
        const int root = uf.find(v);
        return std::any_of(explored.begin(), explored.end(), [&](Vertex e) { return uf.find(e) == root; });
    }

    int leaf(const Coloring& c)
    {
        std::vector<Vertex> order(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v)
            order[static_cast<std::size_t>(c[static_cast<std::size_t>(v)])] = v;
        std::string cert = certificate(order);

        if (first_order_.empty()) {
            first_order_ = best_order_ = order;
            first_cert_ = best_cert_ = cert;
            first_path_ = path_;
            return kNoJump;
        }
        if (cert == first_cert_) {
            gens_.push_back(mapping(first_order_, order));
            std::size_t k = 0;
            while (k < path_.size() && k < first_path_.size() && path_[k] == first_path_[k])
                ++k;
            return static_cast<int>(k);
        }
        const int cmp = cert.compare(best_cert_);
        if (cmp < 0) {
            best_cert_ = std::move(cert);
            best_order_ = std::move(order);
        } else if (cmp == 0) {
            gens_.push_back(mapping(best_order_, order));
        }
        return kNoJump;
    }

    int descend(Coloring c, int depth, bool first_path)
    {
        refine(c);
        std::vector<int> cell_size(static_cast<std::size_t>(n_), 0);
        for (int col : c)
            ++cell_size[static_cast<std::size_t>(col)];
        int target = -1;
        for (int s = 0; s < n_; ++s) {
            if (cell_size[static_cast<std::size_t>(s)] > 1) {
                target = s;
                break;
            }
        }
        if (target < 0)
            return leaf(c);

        std::vector<Vertex> explored;
        for (Vertex v = 0; v < n_; ++v) {
            if (c[static_cast<std::size_t>(v)] != target)
                continue;
            if (first_path && !explored.empty() && pruned_by_orbit(v, explored))
                continue;
            path_.push_back(v);
            const int jump = descend(individualize(c, v), depth + 1, first_path && explored.empty());
            path_.pop_back();
            explored.push_back(v);
            if (jump < depth)
                return jump;
        }
        return kNoJump;
    }

    const Graph& g_;
    int n_;
    std::vector<std::uint32_t> mask_;
    std::vector<Vertex> path_, first_path_;
    std::vector<Vertex> first_order_, best_order_;
    std::string first_cert_, best_cert_;
    std::vector<std::vector<Vertex>> gens_;
};

} // namespace detail

inline CanonicalLabeling canonical_labeling(const Graph& g)
{
    if (g.order() > kMaxCanonicalOrder)
        throw InputError("canonical labeling supports at most " + std::to_string(kMaxCanonicalOrder) +
                         " vertices, got " + std::to_string(g.order()));
    return detail::CanonicalSearch(g).run();
}

inline CanonicalForm canonical_form(const Graph& g) { return canonical_labeling(g).form; }

inline bool is_isomorphic(const Graph& g, const Graph& h)
{
    if (g.order() != h.order() || g.size() != h.size())
        return false;
    return canonical_form(g) == canonical_form(h);
}

/// One canonical representative for every isomorphism class of g + e over
/// non-edges e, sorted by certificate. Empty for complete graphs.
inline std::vector<Graph> edge_addition_neighborhood(const Graph& g)
{
    std::set<std::string> classes;
    for (Vertex a = 0; a < g.order(); ++a)
        for (Vertex b = a + 1; b < g.order(); ++b)
            if (!g.adjacent(a, b))
                classes.insert(canonical_form(g.with_edge(a, b)).certificate);
    std::vector<Graph> out;
    out.reserve(classes.size());
    for (const auto& cert : classes)
        out.push_back(parse_graph6(cert));
    return out;
}

} // namespace rootix
