#pragma once

// Small simple undirected graphs on at most 64 vertices, with the vertex-set
// type and the structural queries (components, bridges, connectivity,
// antitriangles) everything else is built on. All searches here are exact;
// the 64-vertex cap keeps every set a single machine word.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kempe/errors.hpp"

namespace kempe {

inline constexpr int kMaxVertices = 64;

// Subset of {0,...,63} backed by one 64-bit word.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

    VertexSet(std::initializer_list<int> vs) {
        for (int v : vs) insert(v);
    }

    static constexpr VertexSet full(int n) {
        return VertexSet(n >= 64 ? ~0ull : ((1ull << n) - 1));
    }
    static constexpr VertexSet single(int v) { return VertexSet(1ull << v); }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool contains(int v) const { return (bits_ >> v) & 1u; }

    void insert(int v) { bits_ |= 1ull << v; }
    void erase(int v) { bits_ &= ~(1ull << v); }

    // Smallest member; -1 when empty.
    constexpr int front() const { return bits_ == 0 ? -1 : std::countr_zero(bits_); }

    constexpr bool is_subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }

    constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
    constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
    constexpr VertexSet minus(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
    VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
    VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }

    constexpr bool operator==(const VertexSet&) const = default;
    constexpr bool operator<(const VertexSet& o) const { return bits_ < o.bits_; }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b));
        return out;
    }

    // Iteration over members in increasing order.
    class iterator {
    public:
        explicit iterator(std::uint64_t b) : b_(b) {}
        int operator*() const { return std::countr_zero(b_); }
        iterator& operator++() { b_ &= b_ - 1; return *this; }
        bool operator!=(const iterator& o) const { return b_ != o.b_; }
    private:
        std::uint64_t b_;
    };
    iterator begin() const { return iterator(bits_); }
    iterator end() const { return iterator(0); }

private:
    std::uint64_t bits_ = 0;
};

// Transversals of a set family are plain vertex sets; what makes them a
// transversal (|T ∩ D| = 1 per member D) is checked where it matters.
using Transversal = VertexSet;

// Unordered pair of distinct vertices, stored with u < v.
struct Edge {
    int u = 0;
    int v = 0;

    Edge() = default;
    Edge(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {
        if (a == b) throw std::invalid_argument("Edge: endpoints must be distinct");
    }

    int other(int w) const { return w == u ? v : u; }
    VertexSet ends() const { return VertexSet{u, v}; }

    bool operator==(const Edge&) const = default;
    bool operator<(const Edge& o) const { return u != o.u ? u < o.u : v < o.v; }
};

// Simple undirected graph, vertices 0..n-1, adjacency as one bitmask row per
// vertex. Values are treated as immutable once built.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : n_(n) {
        if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
        if (n > kMaxVertices)
            throw std::invalid_argument("Graph: at most " + std::to_string(kMaxVertices) +
                                        " vertices supported, got " + std::to_string(n));
        adj_.assign(static_cast<std::size_t>(n), VertexSet{});
    }

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
        Graph g(n);
        for (auto [u, v] : edges) g.add_edge(u, v);
        return g;
    }

    int vertex_count() const { return n_; }
    VertexSet vertices() const { return VertexSet::full(n_); }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("Graph: self-loops not allowed");
        adj_[static_cast<std::size_t>(u)].insert(v);
        adj_[static_cast<std::size_t>(v)].insert(u);
    }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return u != v && adj_[static_cast<std::size_t>(u)].contains(v);
    }

    VertexSet neighbors(int v) const {
        check_vertex(v);
        return adj_[static_cast<std::size_t>(v)];
    }

    int degree(int v) const { return neighbors(v).size(); }

    int edge_count() const {
        int twice = 0;
        for (const auto& row : adj_) twice += row.size();
        return twice / 2;
    }

    // Edges in lexicographic order.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (int u = 0; u < n_; ++u)
            for (int v : adj_[static_cast<std::size_t>(u)].minus(VertexSet::full(u + 1)))
                out.emplace_back(u, v);
        return out;
    }

    // Union of neighborhoods over s.
    VertexSet neighborhood_of(VertexSet s) const {
        VertexSet out;
        for (int v : s) out |= adj_[static_cast<std::size_t>(v)];
        return out;
    }

    void check_vertex_set(VertexSet s) const {
        if (!s.is_subset_of(vertices()))
            throw std::invalid_argument("vertex set contains out-of-range vertices");
    }

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw std::invalid_argument("vertex " + std::to_string(v) + " out of range [0," +
                                        std::to_string(n_) + ")");
    }

    int n_ = 0;
    std::vector<VertexSet> adj_;
};

// ---------------------------------------------------------------------------
// Structural queries.

struct InducedSubgraph {
    Graph graph;                 // |s| vertices, relabeled 0..|s|-1
    std::vector<int> to_host;    // new index -> host vertex (increasing)
    std::vector<int> from_host;  // host vertex -> new index, -1 if absent

    int to_sub(int host_vertex) const { return from_host[static_cast<std::size_t>(host_vertex)]; }

    VertexSet lift(VertexSet sub_set) const {
        VertexSet out;
        for (int v : sub_set) out.insert(to_host[static_cast<std::size_t>(v)]);
        return out;
    }
};

inline InducedSubgraph induced_subgraph(const Graph& g, VertexSet s) {
    g.check_vertex_set(s);
    InducedSubgraph out;
    out.to_host = s.to_vector();
    out.from_host.assign(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < out.to_host.size(); ++i)
        out.from_host[static_cast<std::size_t>(out.to_host[i])] = static_cast<int>(i);
    out.graph = Graph(static_cast<int>(out.to_host.size()));
    for (std::size_t i = 0; i < out.to_host.size(); ++i) {
        VertexSet row = g.neighbors(out.to_host[i]) & s;
        for (int w : row) {
            int j = out.from_host[static_cast<std::size_t>(w)];
            if (static_cast<int>(i) < j) out.graph.add_edge(static_cast<int>(i), j);
        }
    }
    return out;
}

inline Graph complement(const Graph& g) {
    int n = g.vertex_count();
    Graph out(n);
    for (int u = 0; u < n; ++u) {
        VertexSet non = VertexSet::full(n).minus(g.neighbors(u));
        non.erase(u);
        for (int v : non)
            if (u < v) out.add_edge(u, v);
    }
    return out;
}

// Component of g[within] containing seed, grown by frontier expansion.
inline VertexSet component_of(const Graph& g, int seed, VertexSet within) {
    VertexSet comp = VertexSet::single(seed) & within;
    VertexSet frontier = comp;
    while (!frontier.empty()) {
        VertexSet next = (g.neighborhood_of(frontier) & within).minus(comp);
        comp |= next;
        frontier = next;
    }
    return comp;
}

// Connected components of g[within], ordered by smallest member.
inline std::vector<VertexSet> components_within(const Graph& g, VertexSet within) {
    std::vector<VertexSet> out;
    VertexSet left = within;
    while (!left.empty()) {
        VertexSet comp = component_of(g, left.front(), within);
        out.push_back(comp);
        left = left.minus(comp);
    }
    return out;
}

inline std::vector<VertexSet> components(const Graph& g) {
    return components_within(g, g.vertices());
}

inline bool is_connected_within(const Graph& g, VertexSet within) {
    if (within.empty()) return false;
    return component_of(g, within.front(), within) == within;
}

inline bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0) return false;
    return is_connected_within(g, g.vertices());
}

namespace detail {

struct BridgeDfs {
    const Graph& g;
    VertexSet within;
    std::vector<int> disc, low;
    std::vector<Edge> found;
    int timer = 0;

    explicit BridgeDfs(const Graph& g_, VertexSet within_)
        : g(g_), within(within_),
          disc(static_cast<std::size_t>(g_.vertex_count()), -1),
          low(static_cast<std::size_t>(g_.vertex_count()), -1) {}

    void run(int u, int parent) {
        disc[static_cast<std::size_t>(u)] = low[static_cast<std::size_t>(u)] = timer++;
        bool skipped_parent_edge = false;
        for (int w : g.neighbors(u) & within) {
            if (w == parent && !skipped_parent_edge) {
                // one parent edge is the tree edge; parallel edges cannot occur
                skipped_parent_edge = true;
                continue;
            }
            if (disc[static_cast<std::size_t>(w)] == -1) {
                run(w, u);
                low[static_cast<std::size_t>(u)] =
                    std::min(low[static_cast<std::size_t>(u)], low[static_cast<std::size_t>(w)]);
                if (low[static_cast<std::size_t>(w)] > disc[static_cast<std::size_t>(u)])
                    found.emplace_back(u, w);
            } else {
                low[static_cast<std::size_t>(u)] =
                    std::min(low[static_cast<std::size_t>(u)], disc[static_cast<std::size_t>(w)]);
            }
        }
    }
};

}  // namespace detail

// Bridges of g[within] in lexicographic order.
inline std::vector<Edge> bridges_within(const Graph& g, VertexSet within) {
    detail::BridgeDfs dfs(g, within);
    for (int v : within)
        if (dfs.disc[static_cast<std::size_t>(v)] == -1) dfs.run(v, -1);
    std::sort(dfs.found.begin(), dfs.found.end());
    return dfs.found;
}

inline std::vector<Edge> bridges(const Graph& g) { return bridges_within(g, g.vertices()); }

namespace detail {

// Max number of internally vertex-disjoint u,v-paths for nonadjacent u != v,
// via unit-capacity max-flow on the split digraph (in-node 2w, out-node 2w+1).
inline int disjoint_path_count(const Graph& g, int s, int t) {
    int n = g.vertex_count();
    int nodes = 2 * n;
    std::vector<std::vector<int>> cap(static_cast<std::size_t>(nodes),
                                      std::vector<int>(static_cast<std::size_t>(nodes), 0));
    auto in = [](int v) { return 2 * v; };
    auto out = [](int v) { return 2 * v + 1; };
    for (int v = 0; v < n; ++v) cap[static_cast<std::size_t>(in(v))][static_cast<std::size_t>(out(v))] = 1;
    cap[static_cast<std::size_t>(in(s))][static_cast<std::size_t>(out(s))] = n;
    cap[static_cast<std::size_t>(in(t))][static_cast<std::size_t>(out(t))] = n;
    for (int u = 0; u < n; ++u)
        for (int w : g.neighbors(u)) cap[static_cast<std::size_t>(out(u))][static_cast<std::size_t>(in(w))] = 1;

    int flow = 0;
    for (;;) {
        // BFS augmenting path from out(s) to in(t)
        std::vector<int> prev(static_cast<std::size_t>(nodes), -1);
        std::vector<int> queue{out(s)};
        prev[static_cast<std::size_t>(out(s))] = out(s);
        for (std::size_t qi = 0; qi < queue.size() && prev[static_cast<std::size_t>(in(t))] == -1; ++qi) {
            int a = queue[qi];
            for (int b = 0; b < nodes; ++b) {
                if (cap[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] > 0 &&
                    prev[static_cast<std::size_t>(b)] == -1) {
                    prev[static_cast<std::size_t>(b)] = a;
                    queue.push_back(b);
                }
            }
        }
        if (prev[static_cast<std::size_t>(in(t))] == -1) break;
        for (int b = in(t); b != out(s); ) {
            int a = prev[static_cast<std::size_t>(b)];
            cap[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] -= 1;
            cap[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] += 1;
            b = a;
        }
        ++flow;
    }
    return flow;
}

}  // namespace detail

// Minimum vertex cut size (Menger), with the conventions κ(K_n) = n-1,
// κ(K_1) = 0, κ(disconnected) = 0.
inline int vertex_connectivity(const Graph& g) {
    int n = g.vertex_count();
    if (n <= 1) return 0;
    int best = n - 1;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) best = std::min(best, detail::disjoint_path_count(g, u, v));
    return best;
}

// Three pairwise nonadjacent vertices, lexicographically smallest, if any.
inline std::optional<std::array<int, 3>> find_antitriangle(const Graph& g) {
    int n = g.vertex_count();
    VertexSet all = g.vertices();
    for (int u = 0; u < n; ++u) {
        VertexSet nu = all.minus(g.neighbors(u)).minus(VertexSet::full(u + 1));
        for (int v : nu) {
            VertexSet nw = nu.minus(g.neighbors(v)).minus(VertexSet::full(v + 1));
            if (!nw.empty()) return std::array<int, 3>{u, v, nw.front()};
        }
    }
    return std::nullopt;
}

inline bool is_clique(const Graph& g, VertexSet s) {
    g.check_vertex_set(s);
    for (int v : s)
        if (!s.minus(g.neighbors(v)).minus(VertexSet::single(v)).empty()) return false;
    return true;
}

inline bool is_anticlique(const Graph& g, VertexSet s) {
    g.check_vertex_set(s);
    for (int v : s)
        if ((g.neighbors(v) & s).size() > 0) return false;
    return true;
}

}  // namespace kempe
