#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <istream>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "rootix/canonical.hpp"
#include "rootix/error.hpp"
#include "rootix/graph.hpp"
#include "rootix/graph6.hpp"

namespace rootix {

inline constexpr int kMaxTreeOrder = 16;
inline constexpr int kMaxConnectedOrder = 8;

struct FamilySpec {
    enum class Kind { trees, connected_graphs, graph6_file };

    Kind kind = Kind::trees;
    int n = 1;
    std::filesystem::path source; ///< graph6_file only

    /// "T9", "N8" or the file name.
    std::string label() const
    {
        switch (kind) {
        case Kind::trees: return "T" + std::to_string(n);
        case Kind::connected_graphs: return "N" + std::to_string(n);
        case Kind::graph6_file: return source.filename().string();
        }
        return "?";
    }
};

// ---------------------------------------------------------------------------
// Free trees.

/// Free trees on n vertices, one per isomorphism class.
///
/// Rooted trees are produced as canonical level sequences in reverse
/// lexicographic order by the successor rule
///     p = last index with level > 1,
///     q = last index before p with level[q] == level[p] - 1,
///     level[i] = level[i - (p - q)] for i >= p.
/// A rooted tree is kept only if its root is the center, or, for bicentral
/// trees, the root is the center whose half has the larger level sequence.
class TreeGenerator {
public:
    explicit TreeGenerator(int n) : n_(n)
    {
        if (n < 1 || n > kMaxTreeOrder)
            throw InputError("tree enumeration supports 1 <= n <= " + std::to_string(kMaxTreeOrder));
        level_.resize(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            level_[static_cast<std::size_t>(i)] = i;
    }

    std::optional<Graph> next()
    {
        while (!done_) {
            const bool keep = is_free_tree_representative();
            std::vector<int> current = level_;
            advance();
            if (keep)
                return to_graph(current);
        }
        return std::nullopt;
    }

    /// Level sequence (root at level 0) of the tree `next()` will consider next.
    const std::vector<int>& levels() const noexcept { return level_; }

    static Graph to_graph(const std::vector<int>& level)
    {
        std::vector<Edge> edges;
        std::vector<int> last_at_level(level.size(), 0);
        for (std::size_t i = 1; i < level.size(); ++i) {
            edges.emplace_back(last_at_level[static_cast<std::size_t>(level[i] - 1)], static_cast<int>(i));
            last_at_level[static_cast<std::size_t>(level[i])] = static_cast<int>(i);
        }
        return Graph::from_edge_list(static_cast<int>(level.size()), edges);
    }

private:
    void advance()
    {
        int p = n_ - 1;
        while (p > 0 && level_[static_cast<std::size_t>(p)] <= 1)
            --p;
        if (p == 0) {
            done_ = true;
            return;
        }
        int q = p - 1;
        while (level_[static_cast<std::size_t>(q)] != level_[static_cast<std::size_t>(p)] - 1)
            --q;
        const int shift = p - q;
        for (int i = p; i < n_; ++i)
            level_[static_cast<std::size_t>(i)] = level_[static_cast<std::size_t>(i - shift)];
    }

    bool is_free_tree_representative() const
    {
        if (n_ <= 2)
            return true;
        // Root children sit at level 1; subtree j spans [child_j, child_{j+1}).
        std::vector<std::size_t> children;
        for (std::size_t i = 1; i < level_.size(); ++i)
            if (level_[i] == 1)
                children.push_back(i);
        children.push_back(level_.size());

        auto subtree_height = [&](std::size_t j) {
            int h = 0;
            for (std::size_t i = children[j]; i < children[j + 1]; ++i)
                h = std::max(h, level_[i] - 1);
            return h;
        };
        const std::size_t subtrees = children.size() - 1;
        const int h1 = subtree_height(0);
        const int h2 = subtrees > 1 ? subtree_height(1) : -1;
        if (h1 == h2)
            return true;
        if (h1 != h2 + 1)
            return false;
        // Bicentral: the central edge joins the root and its first child.
        std::vector<int> first_half;
        for (std::size_t i = children[0]; i < children[1]; ++i)
            first_half.push_back(level_[i] - 1);
        std::vector<int> root_half{0};
        for (std::size_t i = children[1]; i < level_.size(); ++i)
            root_half.push_back(level_[i]);
        return !std::lexicographical_compare(root_half.begin(), root_half.end(), first_half.begin(),
                                             first_half.end());
    }

    int n_;
    std::vector<int> level_;
    bool done_ = false;
};

template <class Fn>
void for_each_tree(int n, Fn&& fn)
{
    TreeGenerator gen(n);
    while (auto t = gen.next())
        fn(*t);
}

// ---------------------------------------------------------------------------
// Connected graphs.

namespace detail {

inline bool is_cut_vertex(const Graph& g, Vertex cut)
{
    if (g.order() <= 2)
        return false;
    std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
    seen[static_cast<std::size_t>(cut)] = 1;
    const Vertex start = cut == 0 ? 1 : 0;
    std::vector<Vertex> stack{start};
    seen[static_cast<std::size_t>(start)] = 1;
    int reached = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex u : g.neighbors(v)) {
            if (!seen[static_cast<std::size_t>(u)]) {
                seen[static_cast<std::size_t>(u)] = 1;
                ++reached;
                stack.push_back(u);
            }
        }
    }
    return reached != g.order() - 1;
}

// Canonical augmentation by one vertex: a child is accepted only when the
// added vertex lies in the automorphism orbit of the child's canonical
// deletion vertex (the last non-cut vertex in canonical order). Siblings from
// one parent are additionally deduplicated by certificate.
inline void extend_connected(const Graph& parent, const std::function<void(const Graph&)>& fn)
{
    const int n = parent.order();
    const Vertex added = n;
    std::unordered_set<std::string> accepted;
    std::vector<Vertex> targets;
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
        targets.clear();
        for (Vertex v = 0; v < n; ++v)
            if ((mask >> v) & 1U)
                targets.push_back(v);
        Graph child = parent.with_vertex(targets);
        CanonicalLabeling lab = canonical_labeling(child);
        Vertex deletion = -1;
        for (auto it = lab.order.rbegin(); it != lab.order.rend(); ++it) {
            if (!is_cut_vertex(child, *it)) {
                deletion = *it;
                break;
            }
        }
        if (lab.orbit[static_cast<std::size_t>(deletion)] != lab.orbit[static_cast<std::size_t>(added)])
            continue;
        if (!accepted.insert(lab.form.certificate).second)
            continue;
        fn(child);
    }
}

inline void connected_graphs_rec(int n, const std::function<void(const Graph&)>& fn)
{
    if (n == 1) {
        fn(Graph(1));
        return;
    }
    connected_graphs_rec(n - 1, [&](const Graph& parent) { extend_connected(parent, fn); });
}

} // namespace detail

/// Connected graphs on n vertices, one per isomorphism class, in a fixed order.
template <class Fn>
void for_each_connected_graph(int n, Fn&& fn)
{
    if (n < 1 || n > kMaxConnectedOrder)
        throw InputError("connected-graph enumeration supports 1 <= n <= " +
                         std::to_string(kMaxConnectedOrder));
    detail::connected_graphs_rec(n, [&](const Graph& g) { fn(g); });
}

// ---------------------------------------------------------------------------
// graph6 files.

/// One graph per non-empty line; each must decode and be connected.
template <class Fn>
void for_each_graph6(std::istream& in, Fn&& fn)
{
    std::string line;
    std::size_t record = 0;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        Graph g(1);
        try {
            g = parse_graph6(line);
        } catch (const InputError& e) {
            throw InputError("graph6 record " + std::to_string(record) + ": " + e.what());
        }
        if (!is_connected(g))
            throw InputError("graph6 record " + std::to_string(record) + ": graph is disconnected");
        fn(g);
        ++record;
    }
}

/// Streams the family described by `spec` into `fn`.
template <class Fn>
void enumerate(const FamilySpec& spec, Fn&& fn)
{
    switch (spec.kind) {
    case FamilySpec::Kind::trees:
        for_each_tree(spec.n, fn);
        return;
    case FamilySpec::Kind::connected_graphs:
        for_each_connected_graph(spec.n, fn);
        return;
    case FamilySpec::Kind::graph6_file: {
        std::ifstream in(spec.source);
        if (!in)
            throw InputError("cannot open " + spec.source.string());
        for_each_graph6(in, fn);
        return;
    }
    }
}

inline std::vector<Graph> enumerate_all(const FamilySpec& spec)
{
    std::vector<Graph> out;
    enumerate(spec, [&](const Graph& g) { out.push_back(g); });
    return out;
}

inline FamilySpec trees(int n) { return {FamilySpec::Kind::trees, n, {}}; }
inline FamilySpec connected_graphs(int n) { return {FamilySpec::Kind::connected_graphs, n, {}}; }

} // namespace rootix
