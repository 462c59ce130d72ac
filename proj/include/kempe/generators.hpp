#pragma once

// Constructions used as examples, reductions, and test corpora: apex
// augmentation, the 3xk grid whose column classes form a minimal
// Kempe-coloring, circulant tournaments and their bipartite double covers,
// and a generator of graphs with a certified-unique perfect matching.

#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "kempe/coloring.hpp"
#include "kempe/graph.hpp"
#include "kempe/matching.hpp"

namespace kempe {

struct ColoredGraph {
    Graph graph;
    Coloring coloring;
};

struct MatchedGraph {
    Graph graph;
    Matching matching;
};

struct ApexAugmented {
    Graph graph;
    Coloring coloring;
    VertexSet apexes;  // the added universal vertices
};

// Add `count` universal vertices, each as its own singleton color class.
// A Kempe-coloring of size k becomes one of size k + count.
inline ApexAugmented apex_augment(const Graph& g, const Coloring& c, int count) {
    if (count < 0) throw std::invalid_argument("apex_augment: negative count");
    if (!is_coloring(g, c)) throw std::invalid_argument("apex_augment: not a coloring of g");
    int n = g.vertex_count();
    ApexAugmented out;
    out.graph = Graph(n + count);
    for (const Edge& e : g.edges()) out.graph.add_edge(e.u, e.v);
    std::vector<VertexSet> classes = c.classes;
    for (int a = n; a < n + count; ++a) {
        for (int v = 0; v < a; ++v) out.graph.add_edge(v, a);
        classes.push_back(VertexSet::single(a));
        out.apexes.insert(a);
    }
    out.coloring = Coloring(classes);
    if (is_kempe(g, c) && !is_kempe(out.graph, out.coloring))
        throw std::logic_error("apex_augment: augmentation lost the Kempe property");
    return out;
}

// Graph on {1,2,3} x {1..k} (vertex id 3(j-1)+(i-1)) where (i,j),(i',j') are
// adjacent iff i != i', j != j', and (i=2 or i'=2 or the higher row comes in
// the earlier column). The k column classes are a minimal Kempe-coloring,
// every class pair inducing a six-vertex path, while the rows witness chi=3.
inline ColoredGraph grid3k(int k) {
    if (k < 3) throw std::invalid_argument("grid3k: k must be >= 3");
    if (3 * k > kMaxVertices) throw std::invalid_argument("grid3k: k too large for 64 vertices");
    ColoredGraph out;
    out.graph = Graph(3 * k);
    auto id = [](int i, int j) { return 3 * (j - 1) + (i - 1); };
    for (int j = 1; j <= k; ++j)
        for (int i = 1; i <= 3; ++i)
            for (int jp = 1; jp <= k; ++jp)
                for (int ip = 1; ip <= 3; ++ip) {
                    if (id(i, j) >= id(ip, jp)) continue;
                    bool adj = i != ip && j != jp &&
                               (i == 2 || ip == 2 || (i > ip && j < jp) || (ip > i && jp < j));
                    if (adj) out.graph.add_edge(id(i, j), id(ip, jp));
                }
    std::vector<VertexSet> classes;
    for (int j = 1; j <= k; ++j)
        classes.push_back(VertexSet{id(1, j), id(2, j), id(3, j)});
    out.coloring = Coloring(classes);
    return out;
}

// Complete antisymmetric orientation of K_n.
struct Tournament {
    int n = 0;
    std::vector<VertexSet> out_arcs;

    Tournament() = default;
    explicit Tournament(int n_) : n(n_), out_arcs(static_cast<std::size_t>(n_)) {}

    bool has_arc(int u, int v) const { return out_arcs[static_cast<std::size_t>(u)].contains(v); }

    void add_arc(int u, int v) {
        if (u == v || has_arc(v, u)) throw std::invalid_argument("Tournament: bad arc");
        out_arcs[static_cast<std::size_t>(u)].insert(v);
    }

    int out_degree(int u) const { return out_arcs[static_cast<std::size_t>(u)].size(); }
};

inline bool is_tournament(const Tournament& t) {
    for (int u = 0; u < t.n; ++u)
        for (int v = 0; v < t.n; ++v) {
            if (u == v) {
                if (t.has_arc(u, v)) return false;
            } else if (t.has_arc(u, v) == t.has_arc(v, u)) {
                return false;
            }
        }
    return true;
}

namespace detail {

inline VertexSet reachable(const Tournament& t, int seed) {
    VertexSet seen = VertexSet::single(seed);
    VertexSet frontier = seen;
    while (!frontier.empty()) {
        VertexSet next;
        for (int v : frontier) next |= t.out_arcs[static_cast<std::size_t>(v)];
        next = next.minus(seen);
        seen |= next;
        frontier = next;
    }
    return seen;
}

// Max internally vertex-disjoint directed u,v-paths (no arc u->v required).
inline int directed_disjoint_paths(const Tournament& t, int s, int tgt) {
    int n = t.n;
    int nodes = 2 * n;
    std::vector<std::vector<int>> cap(static_cast<std::size_t>(nodes),
                                      std::vector<int>(static_cast<std::size_t>(nodes), 0));
    auto in = [](int v) { return 2 * v; };
    auto out = [](int v) { return 2 * v + 1; };
    for (int v = 0; v < n; ++v) cap[static_cast<std::size_t>(in(v))][static_cast<std::size_t>(out(v))] = 1;
    cap[static_cast<std::size_t>(in(s))][static_cast<std::size_t>(out(s))] = n;
    cap[static_cast<std::size_t>(in(tgt))][static_cast<std::size_t>(out(tgt))] = n;
    for (int u = 0; u < n; ++u)
        for (int w : t.out_arcs[static_cast<std::size_t>(u)])
            cap[static_cast<std::size_t>(out(u))][static_cast<std::size_t>(in(w))] = 1;
    int flow = 0;
    for (;;) {
        std::vector<int> prev(static_cast<std::size_t>(nodes), -1);
        std::vector<int> queue{out(s)};
        prev[static_cast<std::size_t>(out(s))] = out(s);
        for (std::size_t qi = 0; qi < queue.size() && prev[static_cast<std::size_t>(in(tgt))] == -1; ++qi) {
            int a = queue[qi];
            for (int b = 0; b < nodes; ++b)
                if (cap[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] > 0 &&
                    prev[static_cast<std::size_t>(b)] == -1) {
                    prev[static_cast<std::size_t>(b)] = a;
                    queue.push_back(b);
                }
        }
        if (prev[static_cast<std::size_t>(in(tgt))] == -1) break;
        for (int b = in(tgt); b != out(s); ) {
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

inline bool is_strongly_connected(const Tournament& t) {
    if (t.n == 0) return false;
    if (detail::reachable(t, 0) != VertexSet::full(t.n)) return false;
    Tournament rev(t.n);
    for (int u = 0; u < t.n; ++u)
        for (int v : t.out_arcs[static_cast<std::size_t>(u)]) rev.out_arcs[static_cast<std::size_t>(v)].insert(u);
    return detail::reachable(rev, 0) == VertexSet::full(t.n);
}

// Directed vertex connectivity: min over ordered non-arc pairs of the
// disjoint-path count (n-1 for a complete digraph).
inline int directed_vertex_connectivity(const Tournament& t) {
    int best = t.n - 1;
    for (int u = 0; u < t.n; ++u)
        for (int v = 0; v < t.n; ++v)
            if (u != v && !t.has_arc(u, v))
                best = std::min(best, detail::directed_disjoint_paths(t, u, v));
    return best;
}

// Circulant tournament on 2k+1 vertices: u -> v iff (v-u) mod (2k+1) is in
// {1..k}. Strong connectivity is asserted; k-connectivity is left to tests.
inline Tournament rotational_tournament(int k) {
    if (k < 1) throw std::invalid_argument("rotational_tournament: k must be >= 1");
    int n = 2 * k + 1;
    Tournament t(n);
    for (int u = 0; u < n; ++u)
        for (int d = 1; d <= k; ++d) t.add_arc(u, (u + d) % n);
    if (!is_tournament(t) || !is_strongly_connected(t))
        throw std::logic_error("rotational_tournament: construction invariant failed");
    return t;
}

// Bipartite double cover of a tournament: a pair x+ (2x), x- (2x+1) per
// vertex, with x+ adjacent to y- iff x == y or x -> y. The pair edges form a
// perfect matching in which any two edges are joined by exactly one edge.
inline MatchedGraph tournament_double_cover(const Tournament& t) {
    if (!is_tournament(t)) throw std::invalid_argument("tournament_double_cover: not a tournament");
    MatchedGraph out;
    out.graph = Graph(2 * t.n);
    std::vector<Edge> pairs;
    for (int x = 0; x < t.n; ++x) {
        out.graph.add_edge(2 * x, 2 * x + 1);
        pairs.emplace_back(2 * x, 2 * x + 1);
        for (int y : t.out_arcs[static_cast<std::size_t>(x)]) out.graph.add_edge(2 * x, 2 * y + 1);
    }
    out.matching = Matching(pairs);
    // postconditions: bipartite with sides {x+} / {x-}, one edge per pair of
    // matching edges
    for (int x = 0; x < t.n; ++x)
        for (int y = 0; y < t.n; ++y) {
            if (out.graph.has_edge(2 * x, 2 * y) || (x != y && out.graph.has_edge(2 * x + 1, 2 * y + 1)))
                throw std::logic_error("tournament_double_cover: not bipartite");
            if (x < y) {
                int joining = (out.graph.has_edge(2 * x, 2 * y + 1) ? 1 : 0) +
                              (out.graph.has_edge(2 * y, 2 * x + 1) ? 1 : 0);
                if (joining != 1)
                    throw std::logic_error("tournament_double_cover: pair edges not joined exactly once");
            }
        }
    return out;
}

// Random graph with a certified-unique perfect matching: pairs (2i, 2i+1)
// are attached one at a time, 2i entering with the single edge to 2i+1 and
// 2i+1 picking earlier neighbors with probability `density`. Peeling the
// last pair first forces the matching, and the certificate is checked.
inline MatchedGraph unique_pm_graph(int n, double density, std::uint64_t seed) {
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("unique_pm_graph: n must be even and >= 2");
    if (n > kMaxVertices) throw std::invalid_argument("unique_pm_graph: n too large");
    if (density < 0.0 || density > 1.0) throw std::invalid_argument("unique_pm_graph: density in [0,1]");
    std::mt19937_64 rng(seed);
    // threshold on raw 64-bit draws keeps the stream portable
    const auto cut = static_cast<std::uint64_t>(
        density * static_cast<double>(std::numeric_limits<std::uint64_t>::max()));
    MatchedGraph out;
    out.graph = Graph(n);
    std::vector<Edge> pairs;
    for (int i = 0; 2 * i < n; ++i) {
        int a = 2 * i, b = 2 * i + 1;
        out.graph.add_edge(a, b);
        pairs.emplace_back(a, b);
        for (int w = 0; w < a; ++w)
            if (rng() <= cut && density > 0.0) out.graph.add_edge(w, b);
    }
    out.matching = Matching(pairs);
    if (second_perfect_matching(out.graph, out.matching))
        throw std::logic_error("unique_pm_graph: matching certificate failed");
    return out;
}

}  // namespace kempe
