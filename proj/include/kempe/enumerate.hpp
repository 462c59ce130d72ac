#pragma once

// Exhaustive small-graph enumeration: labeled graphs streamed in bitmask
// order, optional dedup up to isomorphism via a branch-and-bound canonical
// form, and the predicate filters the search campaigns are built from.

#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "kempe/coloring.hpp"
#include "kempe/graph.hpp"
#include "kempe/matching.hpp"

namespace kempe {

inline constexpr int kEnumMaxN = 10;        // labeled streaming
inline constexpr int kCanonicalMaxN = 8;    // isomorphism dedup

// Labeled edge-bit codec, bit order (0,1),(0,2),...,(0,n-1),(1,2),...
inline int labeled_edge_bit(int n, int u, int v) {
    return u * n - u * (u + 1) / 2 + (v - u - 1);
}

inline std::uint64_t labeled_mask(const Graph& g) {
    std::uint64_t mask = 0;
    for (const Edge& e : g.edges()) mask |= 1ull << labeled_edge_bit(g.vertex_count(), e.u, e.v);
    return mask;
}

inline Graph graph_from_labeled_mask(int n, std::uint64_t mask) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if ((mask >> labeled_edge_bit(n, u, v)) & 1u) g.add_edge(u, v);
    return g;
}

// Pair codec used by the canonical form: pairs in colex order
// (0,1),(0,2),(1,2),(0,3),... are stored from the top bit down, so placing
// vertices one position at a time pins a numeric prefix of the mask and
// branch-and-bound pruning against the best-so-far mask is sound.
inline int canon_edge_bit(int n, int u, int v) {
    return n * (n - 1) / 2 - 1 - (v * (v - 1) / 2 + u);
}

inline std::uint64_t canon_mask(const Graph& g) {
    std::uint64_t mask = 0;
    for (const Edge& e : g.edges()) mask |= 1ull << canon_edge_bit(g.vertex_count(), e.u, e.v);
    return mask;
}

inline Graph graph_from_canon_mask(int n, std::uint64_t mask) {
    Graph g(n);
    for (int v = 0; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if ((mask >> canon_edge_bit(n, u, v)) & 1u) g.add_edge(u, v);
    return g;
}

namespace detail {

struct CanonicalSearch {
    const Graph& g;
    int n;
    int total_bits;
    std::vector<int> perm;
    VertexSet used;
    std::uint64_t best;

    explicit CanonicalSearch(const Graph& g_)
        : g(g_), n(g_.vertex_count()), total_bits(n * (n - 1) / 2), best(canon_mask(g_)) {
        perm.reserve(static_cast<std::size_t>(n));
    }

    void run(int p, std::uint64_t prefix) {
        if (p == n) {
            if (prefix < best) best = prefix;
            return;
        }
        // after placing position p, the top C(p+1,2) bits are determined
        int undecided = total_bits - (p + 1) * p / 2;
        std::uint64_t det = undecided >= 64 ? 0 : ~((1ull << undecided) - 1);
        for (int cand = 0; cand < n; ++cand) {
            if (used.contains(cand)) continue;
            std::uint64_t np = prefix;
            for (int i = 0; i < p; ++i)
                if (g.has_edge(perm[static_cast<std::size_t>(i)], cand))
                    np |= 1ull << (total_bits - 1 - (p * (p - 1) / 2 + i));
            if ((np & det) > (best & det)) continue;
            used.insert(cand);
            perm.push_back(cand);
            run(p + 1, np);
            perm.pop_back();
            used.erase(cand);
        }
    }
};

}  // namespace detail

// Smallest colex adjacency bitmask over all vertex orderings; equal masks
// mean isomorphic graphs.
inline std::uint64_t canonical_key(const Graph& g) {
    if (g.vertex_count() > 11)
        throw std::invalid_argument("canonical_key: too many vertices for a 64-bit key");
    detail::CanonicalSearch s(g);
    s.run(0, 0);
    return s.best;
}

// All graphs on n vertices up to isomorphism, as canonical representatives
// sorted by key; built by extending the (n-1)-vertex list with every
// neighborhood of a new vertex. Memoized across calls.
inline const std::vector<Graph>& canonical_graphs(int n) {
    if (n < 0 || n > kCanonicalMaxN)
        throw std::invalid_argument("canonical_graphs: n must be in [0," +
                                    std::to_string(kCanonicalMaxN) + "]");
    static std::map<int, std::vector<Graph>> memo;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    if (memo.empty()) memo[0] = {Graph(0)};
    for (int m = static_cast<int>(memo.size()); m <= n; ++m) {
        std::unordered_set<std::uint64_t> keys;
        std::vector<std::uint64_t> ordered;
        for (const Graph& h : memo[m - 1]) {
            for (std::uint64_t nb = 0; nb < (1ull << (m - 1)); ++nb) {
                Graph ext(m);
                for (const Edge& e : h.edges()) ext.add_edge(e.u, e.v);
                for (int v = 0; v < m - 1; ++v)
                    if ((nb >> v) & 1u) ext.add_edge(v, m - 1);
                std::uint64_t key = canonical_key(ext);
                if (keys.insert(key).second) ordered.push_back(key);
            }
        }
        std::sort(ordered.begin(), ordered.end());
        std::vector<Graph> level;
        level.reserve(ordered.size());
        for (std::uint64_t key : ordered) level.push_back(graph_from_canon_mask(m, key));
        memo[m] = std::move(level);
    }
    return memo[n];
}

// Predicate flags for enumeration campaigns.
struct EnumSpec {
    int n = 0;
    bool connected = false;
    bool antitriangle_free = false;
    bool unique_chromatic_coloring = false;
    std::optional<int> kempe_size;      // some Kempe-coloring of exactly this size
    bool unique_pm_complement = false;  // complement has a unique perfect matching
    bool canonical = false;             // one graph per isomorphism class
};

inline bool has_unique_chromatic_coloring(const Graph& g) {
    if (g.vertex_count() == 0) return true;
    return colorings_of_size(g, chromatic_number(g).k, 2).size() == 1;
}

inline bool has_kempe_coloring_of_size(const Graph& g, int k) {
    if (k < 1 || k > g.vertex_count()) return false;
    for (const Coloring& c : colorings_of_size(g, k, 0))
        if (is_kempe(g, c)) return true;
    return false;
}

inline bool has_unique_pm_complement(const Graph& g) {
    Graph co = complement(g);
    auto m = find_perfect_matching(co);
    return m && !second_perfect_matching(co, *m);
}

inline bool passes_filters(const Graph& g, const EnumSpec& spec) {
    if (spec.connected && !is_connected(g)) return false;
    if (spec.antitriangle_free && find_antitriangle(g)) return false;
    if (spec.unique_pm_complement && !has_unique_pm_complement(g)) return false;
    if (spec.unique_chromatic_coloring && !has_unique_chromatic_coloring(g)) return false;
    if (spec.kempe_size && !has_kempe_coloring_of_size(g, *spec.kempe_size)) return false;
    return true;
}

// Streams graphs passing the filters; `emit` returns false to stop early.
// Labeled graphs come in lexicographic bitmask order, canonical ones sorted
// by canonical key.
inline void enumerate_graphs(const EnumSpec& spec,
                             const std::function<bool(const Graph&)>& emit) {
    if (spec.n < 0 || spec.n > kEnumMaxN)
        throw std::invalid_argument("enumerate_graphs: n must be in [0," +
                                    std::to_string(kEnumMaxN) + "]");
    if (spec.canonical) {
        if (spec.n > kCanonicalMaxN)
            throw std::invalid_argument("enumerate_graphs: canonical dedup only up to n = " +
                                        std::to_string(kCanonicalMaxN));
        for (const Graph& g : canonical_graphs(spec.n)) {
            if (passes_filters(g, spec) && !emit(g)) return;
        }
        return;
    }
    int bits = spec.n * (spec.n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (1ull << bits); ++mask) {
        Graph g = graph_from_labeled_mask(spec.n, mask);
        if (passes_filters(g, spec) && !emit(g)) return;
        if (mask == ~0ull) break;
    }
}

// All Kempe-colorings of g with size between chi(g) and max_k, in
// deterministic enumeration order; per-size count capped when limit > 0.
inline std::vector<Coloring> kempe_colorings_up_to(const Graph& g, int max_k,
                                                   int limit_per_size = 0) {
    std::vector<Coloring> out;
    if (g.vertex_count() == 0) return out;
    int chi = chromatic_number(g).k;
    for (int k = chi; k <= std::min(max_k, g.vertex_count()); ++k) {
        int found = 0;
        for (const Coloring& c : colorings_of_size(g, k, 0)) {
            if (is_kempe(g, c)) {
                out.push_back(c);
                if (limit_per_size > 0 && ++found >= limit_per_size) break;
            }
        }
    }
    return out;
}

}  // namespace kempe
