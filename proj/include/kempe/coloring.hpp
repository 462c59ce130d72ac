#pragma once

// Colorings as partitions into anticliques: exact chromatic number,
// partition enumeration (for uniqueness testing), Kempe-coloring checks,
// Kempe-chain color exchange, and the separator property of Kempe-colorings.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "kempe/deadline.hpp"
#include "kempe/errors.hpp"
#include "kempe/graph.hpp"

namespace kempe {

// Partition of the vertex set into anticliques. Class order is canonical:
// sorted by smallest member, so two equal partitions compare equal.
struct Coloring {
    std::vector<VertexSet> classes;

    Coloring() = default;
    Coloring(std::initializer_list<VertexSet> cs) : classes(cs) { canonicalize(); }
    explicit Coloring(std::vector<VertexSet> cs) : classes(std::move(cs)) { canonicalize(); }

    int size() const { return static_cast<int>(classes.size()); }

    VertexSet support() const {
        VertexSet u;
        for (const auto& c : classes) u |= c;
        return u;
    }

    // Class index containing v, -1 if none.
    int class_of(int v) const {
        for (std::size_t i = 0; i < classes.size(); ++i)
            if (classes[i].contains(v)) return static_cast<int>(i);
        return -1;
    }

    void canonicalize() {
        std::sort(classes.begin(), classes.end(),
                  [](VertexSet a, VertexSet b) { return a.front() < b.front(); });
    }

    bool operator==(const Coloring&) const = default;
};

inline bool is_coloring(const Graph& g, const Coloring& c) {
    VertexSet seen;
    for (const auto& cls : c.classes) {
        if (cls.empty()) return false;
        if (!cls.is_subset_of(g.vertices())) return false;
        if (cls.intersects(seen)) return false;
        if (!is_anticlique(g, cls)) return false;
        seen |= cls;
    }
    return seen == g.vertices();
}

inline bool is_transversal(VertexSet t, const std::vector<VertexSet>& family) {
    for (const auto& d : family)
        if ((t & d).size() != 1) return false;
    return true;
}

inline bool is_transversal(VertexSet t, const Coloring& c) { return is_transversal(t, c.classes); }

inline long long transversal_count(const Coloring& c) {
    long long total = 1;
    for (const auto& cls : c.classes) total *= cls.size();
    return total;
}

// Transversals indexed in mixed-radix order over the classes in canonical
// order, class 0 being the least significant digit.
inline VertexSet transversal_by_index(const Coloring& c, long long idx) {
    if (idx < 0 || idx >= transversal_count(c))
        throw std::invalid_argument("transversal_by_index: index out of range");
    VertexSet t;
    for (const auto& cls : c.classes) {
        auto members = cls.to_vector();
        t.insert(members[static_cast<std::size_t>(idx % static_cast<long long>(members.size()))]);
        idx /= static_cast<long long>(members.size());
    }
    return t;
}

namespace detail {

inline int edge_count_within(const Graph& g, VertexSet s) {
    int twice = 0;
    for (int v : s) twice += (g.neighbors(v) & s).size();
    return twice / 2;
}

// Backtracking over vertices in the given order; class j may be used only
// after classes 0..j-1 (restricted growth), so each unordered partition is
// produced exactly once, with classes already ordered by smallest member.
struct PartitionEnum {
    const Graph& g;
    int k;
    int limit;
    Deadline deadline;
    std::vector<VertexSet> classes;
    std::vector<Coloring> out;
    long probes = 0;

    PartitionEnum(const Graph& g_, int k_, int limit_, Deadline dl)
        : g(g_), k(k_), limit(limit_), deadline(dl) {}

    bool done() const { return limit > 0 && static_cast<int>(out.size()) >= limit; }

    void run(int v) {
        if (done()) return;
        if ((++probes & 0x3ff) == 0) deadline.check("colorings_of_size");
        int n = g.vertex_count();
        if (v == n) {
            if (static_cast<int>(classes.size()) == k) out.push_back(Coloring(classes));
            return;
        }
        // not enough vertices left to open the classes still missing
        int missing = k - static_cast<int>(classes.size());
        if (missing > n - v) return;
        for (std::size_t i = 0; i < classes.size(); ++i) {
            if (!g.neighbors(v).intersects(classes[i])) {
                classes[i].insert(v);
                run(v + 1);
                classes[i].erase(v);
                if (done()) return;
            }
        }
        if (static_cast<int>(classes.size()) < k) {
            classes.push_back(VertexSet::single(v));
            run(v + 1);
            classes.pop_back();
        }
    }
};

}  // namespace detail

// All colorings of size exactly k as unordered partitions, in a fixed
// deterministic order, stopping once `limit` have been found (limit <= 0
// enumerates everything). limit=2 is the uniqueness test.
inline std::vector<Coloring> colorings_of_size(const Graph& g, int k, int limit,
                                               Deadline deadline = Deadline::never()) {
    if (k < 1) throw std::invalid_argument("colorings_of_size: k must be >= 1");
    if (k > g.vertex_count()) return {};
    detail::PartitionEnum e(g, k, limit, deadline);
    e.run(0);
    return e.out;
}

namespace detail {

struct ChromaticSearch {
    const Graph& g;
    std::vector<int> order;  // vertices, largest degree first
    int k;
    std::vector<VertexSet> classes;

    ChromaticSearch(const Graph& g_, int k_) : g(g_), k(k_) {
        int n = g.vertex_count();
        order.resize(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return g.degree(a) > g.degree(b); });
    }

    bool run(std::size_t idx) {
        if (idx == order.size()) return true;
        int v = order[idx];
        for (std::size_t i = 0; i < classes.size(); ++i) {
            if (!g.neighbors(v).intersects(classes[i])) {
                classes[i].insert(v);
                if (run(idx + 1)) return true;
                classes[i].erase(v);
            }
        }
        if (static_cast<int>(classes.size()) < k) {
            classes.push_back(VertexSet::single(v));
            if (run(idx + 1)) return true;
            classes.pop_back();
        }
        return false;
    }
};

// Greedy clique from each seed vertex; a cheap lower bound for χ.
inline int clique_lower_bound(const Graph& g) {
    int best = g.vertex_count() > 0 ? 1 : 0;
    for (int seed = 0; seed < g.vertex_count(); ++seed) {
        VertexSet clique = VertexSet::single(seed);
        VertexSet cands = g.neighbors(seed);
        while (!cands.empty()) {
            int pick = -1, pick_deg = -1;
            for (int v : cands) {
                int d = (g.neighbors(v) & cands).size();
                if (d > pick_deg) { pick = v; pick_deg = d; }
            }
            clique.insert(pick);
            cands &= g.neighbors(pick);
        }
        best = std::max(best, clique.size());
    }
    return best;
}

}  // namespace detail

struct ChromaticResult {
    int k = 0;
    Coloring witness;
};

// Exact chromatic number by branch and bound: vertices tried in descending
// degree order, k grown upward from a greedy clique bound.
inline ChromaticResult chromatic_number(const Graph& g) {
    if (g.vertex_count() == 0) return {0, Coloring{}};
    for (int k = detail::clique_lower_bound(g); ; ++k) {
        detail::ChromaticSearch search(g, k);
        if (search.run(0)) return {k, Coloring(search.classes)};
    }
}

// True iff every two distinct classes induce a connected subgraph.
inline bool is_kempe(const Graph& g, const Coloring& c) {
    if (!is_coloring(g, c)) throw std::invalid_argument("is_kempe: not a coloring of g");
    for (std::size_t i = 0; i < c.classes.size(); ++i)
        for (std::size_t j = i + 1; j < c.classes.size(); ++j)
            if (!is_connected_within(g, c.classes[i] | c.classes[j])) return false;
    return true;
}

// Exchange the two colors along one Kempe chain: comp must be a connected
// component of the subgraph induced by classes a_idx and b_idx.
inline Coloring kempe_exchange(const Graph& g, const Coloring& c, int a_idx, int b_idx,
                               VertexSet comp) {
    if (!is_coloring(g, c)) throw std::invalid_argument("kempe_exchange: not a coloring of g");
    int k = c.size();
    if (a_idx < 0 || b_idx < 0 || a_idx >= k || b_idx >= k || a_idx == b_idx)
        throw std::invalid_argument("kempe_exchange: bad class indices");
    VertexSet a = c.classes[static_cast<std::size_t>(a_idx)];
    VertexSet b = c.classes[static_cast<std::size_t>(b_idx)];
    VertexSet ab = a | b;
    bool is_component = !comp.empty() && comp.is_subset_of(ab) &&
                        is_connected_within(g, comp) &&
                        (g.neighborhood_of(comp) & ab.minus(comp)).empty();
    if (!is_component)
        throw std::invalid_argument("kempe_exchange: comp is not a component of the class pair");

    std::vector<VertexSet> classes;
    for (int i = 0; i < k; ++i)
        if (i != a_idx && i != b_idx) classes.push_back(c.classes[static_cast<std::size_t>(i)]);
    VertexSet na = a.minus(comp) | (b & comp);
    VertexSet nb = b.minus(comp) | (a & comp);
    if (!na.empty()) classes.push_back(na);
    if (!nb.empty()) classes.push_back(nb);
    Coloring out(classes);
    if (!is_coloring(g, out)) throw theorem_violation("kempe_exchange produced a non-coloring");
    return out;
}

// True iff every two distinct classes induce a tree. For a coloring of size
// k on n vertices this forces |E| = (k-1)n - k(k-1)/2, which is asserted.
inline bool is_minimal_kempe(const Graph& g, const Coloring& c) {
    if (!is_kempe(g, c)) throw std::invalid_argument("is_minimal_kempe: not a Kempe-coloring");
    for (std::size_t i = 0; i < c.classes.size(); ++i)
        for (std::size_t j = i + 1; j < c.classes.size(); ++j) {
            VertexSet pair = c.classes[i] | c.classes[j];
            if (detail::edge_count_within(g, pair) != pair.size() - 1) return false;
        }
    long k = c.size(), n = g.vertex_count();
    if (g.edge_count() != (k - 1) * n - k * (k - 1) / 2)
        throw theorem_violation("is_minimal_kempe: edge-count identity failed");
    return true;
}

// A separator of a Kempe-colored graph meets all but at most one class.
// Returns that statement's truth value for the given separator.
inline bool separator_color_check(const Graph& g, const Coloring& c, VertexSet sep) {
    if (!is_coloring(g, c)) throw std::invalid_argument("separator_color_check: not a coloring");
    g.check_vertex_set(sep);
    if (components_within(g, g.vertices().minus(sep)).size() < 2)
        throw std::invalid_argument("separator_color_check: sep is not a separator");
    int missed = 0;
    for (const auto& cls : c.classes)
        if (!cls.intersects(sep)) ++missed;
    return missed <= 1;
}

}  // namespace kempe
