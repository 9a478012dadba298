#pragma once

#include <algorithm>
#include <cstddef>
#include <istream>
#include <ostream>
#include <queue>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "rootix/error.hpp"

namespace rootix {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1.
///
/// Edges are kept normalized as (min, max) and sorted lexicographically;
/// neighbor lists are sorted ascending. Instances are immutable once built.
class Graph {
public:
    /// Edgeless graph on n vertices.
    explicit Graph(int n = 1) : n_(n), adj_(static_cast<std::size_t>(n))
    {
        if (n < 1)
            throw InputError("graph must have at least one vertex");
    }

    /// Validated construction. Rejects self-loops, repeated pairs (in either
    /// orientation) and out-of-range endpoints, naming the offending pair.
    static Graph from_edge_list(int n, std::span<const Edge> edges)
    {
        Graph g(n);
        g.edges_.reserve(edges.size());
        for (auto [a, b] : edges) {
            auto pair_text = [&] {
                return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
            };
            if (a < 0 || b < 0 || a >= n || b >= n)
                throw InputError("edge endpoint out of range: " + pair_text());
            if (a == b)
                throw InputError("self-loop: " + pair_text());
            g.edges_.emplace_back(std::min(a, b), std::max(a, b));
        }
        std::sort(g.edges_.begin(), g.edges_.end());
        auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
        if (dup != g.edges_.end())
            throw InputError("duplicate edge: (" + std::to_string(dup->first) + ", " +
                             std::to_string(dup->second) + ")");
        g.rebuild_adjacency();
        return g;
    }

    static Graph from_edge_list(int n, std::initializer_list<Edge> edges)
    {
        return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
    }

    int order() const noexcept { return n_; }
    int size() const noexcept { return static_cast<int>(edges_.size()); }

    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

    bool adjacent(Vertex a, Vertex b) const
    {
        const auto& nb = neighbors(a);
        return std::binary_search(nb.begin(), nb.end(), b);
    }

    /// Sorted, normalized edge list; position in this list is the edge's index.
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    bool is_complete() const noexcept
    {
        return static_cast<long long>(edges_.size()) ==
               static_cast<long long>(n_) * (n_ - 1) / 2;
    }

    /// Copy of this graph with one extra edge; the pair must be a non-edge.
    Graph with_edge(Vertex a, Vertex b) const
    {
        std::vector<Edge> e = edges_;
        e.emplace_back(a, b);
        return from_edge_list(n_, e);
    }

    /// Copy with one new vertex (index n) joined to each vertex in `targets`.
    Graph with_vertex(std::span<const Vertex> targets) const
    {
        std::vector<Edge> e = edges_;
        for (Vertex t : targets)
            e.emplace_back(t, n_);
        return from_edge_list(n_ + 1, e);
    }

    bool operator==(const Graph& other) const = default;

private:
    void rebuild_adjacency()
    {
        for (auto& nb : adj_)
            nb.clear();
        for (auto [a, b] : edges_) {
            adj_[static_cast<std::size_t>(a)].push_back(b);
            adj_[static_cast<std::size_t>(b)].push_back(a);
        }
        for (auto& nb : adj_)
            std::sort(nb.begin(), nb.end());
    }

    int n_;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<Edge> edges_;
};

/// Hop-count matrix. Unreachable pairs hold `kUnreachable`.
class DistanceMatrix {
public:
    static constexpr int kUnreachable = -1;

    explicit DistanceMatrix(int n)
        : n_(n), d_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), kUnreachable)
    {
    }

    int order() const noexcept { return n_; }

    int operator()(Vertex a, Vertex b) const { return d_[index(a, b)]; }
    int& operator()(Vertex a, Vertex b) { return d_[index(a, b)]; }

    /// Largest finite entry.
    int max_distance() const { return *std::max_element(d_.begin(), d_.end()); }

    bool operator==(const DistanceMatrix&) const = default;

private:
    std::size_t index(Vertex a, Vertex b) const
    {
        return static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(b);
    }

    int n_;
    std::vector<int> d_;
};

/// Hop counts from `source` to every vertex (kUnreachable where no path).
inline std::vector<int> bfs_distances(const Graph& g, Vertex source)
{
    std::vector<int> dist(static_cast<std::size_t>(g.order()), DistanceMatrix::kUnreachable);
    std::queue<Vertex> frontier;
    dist[static_cast<std::size_t>(source)] = 0;
    frontier.push(source);
    while (!frontier.empty()) {
        Vertex v = frontier.front();
        frontier.pop();
        for (Vertex u : g.neighbors(v)) {
            if (dist[static_cast<std::size_t>(u)] == DistanceMatrix::kUnreachable) {
                dist[static_cast<std::size_t>(u)] = dist[static_cast<std::size_t>(v)] + 1;
                frontier.push(u);
            }
        }
    }
    return dist;
}

/// One BFS per vertex.
inline DistanceMatrix all_pairs_distances(const Graph& g)
{
    DistanceMatrix d(g.order());
    for (Vertex s = 0; s < g.order(); ++s) {
        auto row = bfs_distances(g, s);
        for (Vertex t = 0; t < g.order(); ++t)
            d(s, t) = row[static_cast<std::size_t>(t)];
    }
    return d;
}

inline bool is_connected(const Graph& g)
{
    auto dist = bfs_distances(g, 0);
    return std::none_of(dist.begin(), dist.end(),
                        [](int x) { return x == DistanceMatrix::kUnreachable; });
}

/// Line graph. Vertex i of the result is edge i of `g.edges()`.
inline Graph line_graph(const Graph& g)
{
    if (g.size() == 0)
        throw InputError("line graph of an edgeless graph is empty");
    std::vector<std::vector<int>> incident(static_cast<std::size_t>(g.order()));
    const auto& e = g.edges();
    for (int i = 0; i < static_cast<int>(e.size()); ++i) {
        incident[static_cast<std::size_t>(e[static_cast<std::size_t>(i)].first)].push_back(i);
        incident[static_cast<std::size_t>(e[static_cast<std::size_t>(i)].second)].push_back(i);
    }
    // Two distinct edges of a simple graph share at most one endpoint, so no
    // pair is produced twice.
    std::vector<Edge> pairs;
    for (const auto& inc : incident)
        for (std::size_t x = 0; x < inc.size(); ++x)
            for (std::size_t y = x + 1; y < inc.size(); ++y)
                pairs.emplace_back(inc[x], inc[y]);
    return Graph::from_edge_list(g.size(), pairs);
}

// ---------------------------------------------------------------------------
// Edge-list text format: "n m" on the first line, then m lines "a b" (0-based).

inline Graph read_edge_list(std::istream& in)
{
    long long n = 0, m = 0;
    if (!(in >> n >> m))
        throw InputError("edge list: expected header \"n m\"");
    if (n < 1 || m < 0)
        throw InputError("edge list: invalid header values");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        int a = 0, b = 0;
        if (!(in >> a >> b))
            throw InputError("edge list: expected " + std::to_string(m) + " edges, got " +
                             std::to_string(i));
        edges.emplace_back(a, b);
    }
    return Graph::from_edge_list(static_cast<int>(n), edges);
}

inline Graph parse_edge_list(const std::string& text)
{
    std::istringstream in(text);
    return read_edge_list(in);
}

inline void write_edge_list(std::ostream& out, const Graph& g)
{
    out << g.order() << ' ' << g.size() << '\n';
    for (auto [a, b] : g.edges())
        out << a << ' ' << b << '\n';
}

// ---------------------------------------------------------------------------
// Standard families.

namespace families {

inline Graph complete(int n)
{
    std::vector<Edge> e;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            e.emplace_back(a, b);
    return Graph::from_edge_list(n, e);
}

inline Graph path(int n)
{
    std::vector<Edge> e;
    for (int a = 0; a + 1 < n; ++a)
        e.emplace_back(a, a + 1);
    return Graph::from_edge_list(n, e);
}

inline Graph cycle(int n)
{
    if (n < 3)
        throw InputError("cycle needs at least 3 vertices");
    std::vector<Edge> e;
    for (int a = 0; a < n; ++a)
        e.emplace_back(a, (a + 1) % n);
    return Graph::from_edge_list(n, e);
}

/// Star with `rays` leaves around hub 0 (rays + 1 vertices).
inline Graph star(int rays)
{
    std::vector<Edge> e;
    for (int a = 1; a <= rays; ++a)
        e.emplace_back(0, a);
    return Graph::from_edge_list(rays + 1, e);
}

/// Wheel: hub 0 joined to every vertex of the rim cycle 1..rim (rim + 1 vertices).
inline Graph wheel(int rim)
{
    if (rim < 3)
        throw InputError("wheel needs a rim of at least 3 vertices");
    std::vector<Edge> e;
    for (int a = 1; a <= rim; ++a) {
        e.emplace_back(0, a);
        e.emplace_back(a, a % rim + 1);
    }
    return Graph::from_edge_list(rim + 1, e);
}

} // namespace families

} // namespace rootix
