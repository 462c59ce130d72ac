#pragma once

// Independent brute-force oracles. These deliberately use different
// algorithms than the library (subset scans and leaf filters instead of
// pruned searches) so that agreement is meaningful.

#include <algorithm>
#include <optional>
#include <vector>

#include "kempe/coloring.hpp"
#include "kempe/graph.hpp"
#include "kempe/matching.hpp"

namespace kempe::testing {

// Minimum separator by scanning all vertex subsets in increasing size.
inline int brute_vertex_connectivity(const Graph& g) {
    int n = g.vertex_count();
    if (n <= 1) return 0;
    for (int size = 0; size <= n - 2; ++size) {
        bool found = false;
        std::uint64_t full = (n >= 64) ? ~0ull : (1ull << n) - 1;
        for (std::uint64_t bits = 0; bits <= full && !found; ++bits) {
            VertexSet s(bits);
            if (s.size() != size) continue;
            if (components_within(g, g.vertices().minus(s)).size() >= 2) found = true;
        }
        if (found) return size;
    }
    return n - 1;
}

// Bridge = removing it increases the component count.
inline std::vector<Edge> brute_bridges(const Graph& g) {
    std::vector<Edge> out;
    std::size_t before = components(g).size();
    for (const Edge& e : g.edges()) {
        Graph h(g.vertex_count());
        for (const Edge& f : g.edges())
            if (!(f == e)) h.add_edge(f.u, f.v);
        if (components(h).size() > before) out.push_back(e);
    }
    return out;
}

// Proper-coloring existence via a plain k-ary assignment counter.
inline bool brute_colorable(const Graph& g, int k) {
    int n = g.vertex_count();
    if (n == 0) return true;
    if (k <= 0) return false;
    std::vector<int> color(static_cast<std::size_t>(n), 0);
    for (;;) {
        bool proper = true;
        for (const Edge& e : g.edges())
            if (color[static_cast<std::size_t>(e.u)] == color[static_cast<std::size_t>(e.v)]) {
                proper = false;
                break;
            }
        if (proper) return true;
        int pos = 0;
        while (pos < n && color[static_cast<std::size_t>(pos)] == k - 1) {
            color[static_cast<std::size_t>(pos)] = 0;
            ++pos;
        }
        if (pos == n) return false;
        ++color[static_cast<std::size_t>(pos)];
    }
}

inline int brute_chromatic_number(const Graph& g) {
    for (int k = 0;; ++k)
        if (brute_colorable(g, k)) return k;
}

// All partitions into exactly k anticliques, counted by enumerating every
// set partition and filtering at the leaf.
inline int brute_count_colorings(const Graph& g, int k) {
    int n = g.vertex_count();
    int count = 0;
    std::vector<VertexSet> blocks;
    auto rec = [&](auto&& self, int v) -> void {
        if (v == n) {
            if (static_cast<int>(blocks.size()) != k) return;
            for (const auto& b : blocks)
                if (!is_anticlique(g, b)) return;
            ++count;
            return;
        }
        std::size_t existing = blocks.size();  // recursion grows the vector
        for (std::size_t i = 0; i < existing; ++i) {
            blocks[i].insert(v);
            self(self, v + 1);
            blocks[i].erase(v);
        }
        blocks.push_back(VertexSet::single(v));
        self(self, v + 1);
        blocks.pop_back();
    };
    rec(rec, 0);
    return count;
}

// All perfect matchings by scanning subsets of the edge list.
inline std::vector<Matching> brute_perfect_matchings(const Graph& g) {
    std::vector<Matching> out;
    int n = g.vertex_count();
    if (n % 2 != 0) return out;
    auto edges = g.edges();
    int want = n / 2;
    std::vector<int> pick;
    auto rec = [&](auto&& self, std::size_t from, VertexSet covered) -> void {
        if (static_cast<int>(pick.size()) == want) {
            std::vector<Edge> es;
            for (int i : pick) es.push_back(edges[static_cast<std::size_t>(i)]);
            out.push_back(Matching(es));
            return;
        }
        for (std::size_t i = from; i < edges.size(); ++i) {
            if (edges[i].ends().intersects(covered)) continue;
            pick.push_back(static_cast<int>(i));
            self(self, i + 1, covered | edges[i].ends());
            pick.pop_back();
        }
    };
    rec(rec, 0, VertexSet{});
    return out;
}

// Largest family of disjoint pairwise adjacent units (vertices and edges),
// by direct recursion over the unit list.
inline int brute_shallow_number(const Graph& g) {
    std::vector<VertexSet> units;
    for (int v = 0; v < g.vertex_count(); ++v) units.push_back(VertexSet::single(v));
    for (const Edge& e : g.edges()) units.push_back(e.ends());
    int best = 0;
    std::vector<VertexSet> chosen;
    auto rec = [&](auto&& self, std::size_t from) -> void {
        best = std::max(best, static_cast<int>(chosen.size()));
        for (std::size_t i = from; i < units.size(); ++i) {
            bool ok = true;
            for (const auto& c : chosen)
                if (units[i].intersects(c) || !(g.neighborhood_of(units[i]) & c).size()) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            chosen.push_back(units[i]);
            self(self, i + 1);
            chosen.pop_back();
        }
    };
    rec(rec, 0);
    return best;
}

// Rooted K4 minor existence by assigning every non-root vertex to one of the
// four root blocks or to none, then checking blocks directly.
inline bool brute_rooted_k4(const Graph& g, const std::array<int, 4>& roots) {
    int n = g.vertex_count();
    std::vector<int> free_vertices;
    VertexSet rootset;
    for (int r : roots) rootset.insert(r);
    for (int v = 0; v < n; ++v)
        if (!rootset.contains(v)) free_vertices.push_back(v);
    long combos = 1;
    for (std::size_t i = 0; i < free_vertices.size(); ++i) combos *= 5;
    for (long code = 0; code < combos; ++code) {
        std::array<VertexSet, 4> blocks{};
        for (int i = 0; i < 4; ++i)
            blocks[static_cast<std::size_t>(i)] = VertexSet::single(roots[static_cast<std::size_t>(i)]);
        long c = code;
        for (int v : free_vertices) {
            int label = static_cast<int>(c % 5);
            c /= 5;
            if (label > 0) blocks[static_cast<std::size_t>(label - 1)].insert(v);
        }
        bool ok = true;
        for (int i = 0; i < 4 && ok; ++i)
            if (!is_connected_within(g, blocks[static_cast<std::size_t>(i)])) ok = false;
        for (int i = 0; i < 4 && ok; ++i)
            for (int j = i + 1; j < 4 && ok; ++j)
                if (!(g.neighborhood_of(blocks[static_cast<std::size_t>(i)]) &
                      blocks[static_cast<std::size_t>(j)])
                         .size())
                    ok = false;
        if (ok) return true;
    }
    return false;
}

// Independence number >= 3 by direct triple scan.
inline bool brute_has_antitriangle(const Graph& g) {
    int n = g.vertex_count();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                if (!g.has_edge(a, b) && !g.has_edge(a, c) && !g.has_edge(b, c)) return true;
    return false;
}

}  // namespace kempe::testing
