#pragma once

// Perfect matchings in general graphs at desk scale: backtracking search,
// uniqueness certification via a second matching, the bridge guaranteed
// inside a unique perfect matching, and the descending decomposition of a
// graph with a unique perfect matching driven by that bridge.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "kempe/errors.hpp"
#include "kempe/graph.hpp"

namespace kempe {

// Set of pairwise disjoint edges, kept sorted lexicographically.
struct Matching {
    std::vector<Edge> edges;

    Matching() = default;
    Matching(std::initializer_list<Edge> es) : edges(es) { normalize(); }
    explicit Matching(std::vector<Edge> es) : edges(std::move(es)) { normalize(); }

    void normalize() { std::sort(edges.begin(), edges.end()); }

    int size() const { return static_cast<int>(edges.size()); }

    VertexSet support() const {
        VertexSet s;
        for (const Edge& e : edges) s |= e.ends();
        return s;
    }

    // Matched partner of v, -1 if uncovered.
    int mate(int v) const {
        for (const Edge& e : edges)
            if (e.u == v || e.v == v) return e.other(v);
        return -1;
    }

    bool contains(Edge e) const {
        return std::binary_search(edges.begin(), edges.end(), e);
    }

    bool operator==(const Matching&) const = default;
};

inline bool is_matching(const Graph& g, const Matching& m) {
    VertexSet seen;
    for (const Edge& e : m.edges) {
        if (!g.has_edge(e.u, e.v)) return false;
        if (e.ends().intersects(seen)) return false;
        seen |= e.ends();
    }
    return true;
}

inline bool is_perfect_matching(const Graph& g, const Matching& m) {
    return is_matching(g, m) && m.support() == g.vertices();
}

namespace detail {

// Perfect matching of g[within] avoiding `banned`, by backtracking on the
// lowest-indexed uncovered vertex with neighbors tried in ascending order.
// Deterministic; returns the lexicographically first matching found.
inline bool pm_masked(const Graph& g, VertexSet within, std::optional<Edge> banned,
                      std::vector<Edge>& acc) {
    if (within.empty()) return true;
    int v = within.front();
    for (int w : g.neighbors(v) & within) {
        Edge e(v, w);
        if (banned && e == *banned) continue;
        acc.push_back(e);
        if (pm_masked(g, within.minus(e.ends()), banned, acc)) return true;
        acc.pop_back();
    }
    return false;
}

inline std::optional<Matching> find_pm_masked(const Graph& g, VertexSet within,
                                              std::optional<Edge> banned = std::nullopt) {
    std::vector<Edge> acc;
    if (!pm_masked(g, within, banned, acc)) return std::nullopt;
    return Matching(acc);
}

// Any perfect matching of g[within] other than m, or nothing if m is unique.
inline std::optional<Matching> second_pm_masked(const Graph& g, VertexSet within,
                                                const Matching& m) {
    for (const Edge& e : m.edges)
        if (auto other = find_pm_masked(g, within, e)) return other;
    return std::nullopt;
}

}  // namespace detail

inline std::optional<Matching> find_perfect_matching(const Graph& g) {
    return detail::find_pm_masked(g, g.vertices());
}

// A perfect matching distinct from m if one exists (equivalently, an
// m-alternating cycle exists); any second matching omits some edge of m,
// so one search per excluded edge is exhaustive.
inline std::optional<Matching> second_perfect_matching(const Graph& g, const Matching& m) {
    if (!is_perfect_matching(g, m))
        throw std::invalid_argument("second_perfect_matching: m is not a perfect matching of g");
    return detail::second_pm_masked(g, g.vertices(), m);
}

// The lexicographically smallest edge that lies in m and is a bridge of g.
// The caller certifies that m is the unique perfect matching of g; such an
// edge then always exists, and failure to find one is a theorem violation.
inline Edge kotzig_bridge(const Graph& g, const Matching& m) {
    if (g.vertex_count() == 0) throw std::invalid_argument("kotzig_bridge: empty graph");
    if (!is_perfect_matching(g, m))
        throw std::invalid_argument("kotzig_bridge: m is not a perfect matching of g");
    for (const Edge& b : bridges(g))
        if (m.contains(b)) return b;
    throw theorem_violation("kotzig_bridge: unique perfect matching contains no bridge");
}

// One level of the descending decomposition: the graph H, its matching
// bridge e = xy, the small side Q of H - e (x inside), the matching R inside
// Q, the equal-size matching S picked outside, and T = V(S) + y.
struct DecompStep {
    int level = 0;
    VertexSet h;
    Edge bridge{0, 1};
    int x = 0;
    int y = 0;
    VertexSet q;
    Matching r;
    Matching s;
    VertexSet t;
};

namespace detail {

// Component of g[within] containing seed when the single edge e is ignored.
inline VertexSet component_avoiding_edge(const Graph& g, int seed, VertexSet within, Edge e) {
    VertexSet comp = VertexSet::single(seed);
    VertexSet frontier = comp;
    while (!frontier.empty()) {
        VertexSet next;
        for (int v : frontier) {
            VertexSet nb = g.neighbors(v) & within;
            if (v == e.u) nb.erase(e.v);
            if (v == e.v) nb.erase(e.u);
            next |= nb;
        }
        next = next.minus(comp);
        comp |= next;
        frontier = next;
    }
    return comp;
}

}  // namespace detail

// Decomposition of a graph with unique perfect matching m into levels
// H_0 ⊃ H_1 ⊃ ... : at each level take the smallest matching bridge, split
// off the small side Q plus a matching-balanced set T, and recurse on the
// rest, re-certifying matching uniqueness at every level.
inline std::vector<DecompStep> kotzig_decompose(const Graph& g, const Matching& m) {
    if (!is_perfect_matching(g, m))
        throw std::invalid_argument("kotzig_decompose: m is not a perfect matching of g");
    if (detail::second_pm_masked(g, g.vertices(), m))
        throw std::invalid_argument("kotzig_decompose: m is not the unique perfect matching");

    std::vector<DecompStep> steps;
    VertexSet h = g.vertices();
    std::vector<Edge> current(m.edges);
    int level = 0;
    while (!h.empty()) {
        std::vector<Edge> level_bridges = bridges_within(g, h);
        const Edge* e = nullptr;
        for (const Edge& b : level_bridges) {
            if (std::binary_search(current.begin(), current.end(), b)) { e = &b; break; }
        }
        if (!e) throw theorem_violation("kotzig_decompose: no matching bridge at level " +
                                        std::to_string(level));

        VertexSet comp_u = detail::component_avoiding_edge(g, e->u, h, *e);
        VertexSet comp_v = detail::component_avoiding_edge(g, e->v, h, *e);
        if (comp_u.contains(e->v))
            throw theorem_violation("kotzig_decompose: chosen edge is not a bridge");
        // smaller side becomes Q; ties go to the smaller-indexed endpoint (u)
        VertexSet q = comp_u.size() <= comp_v.size() ? comp_u : comp_v;
        int x = q.contains(e->u) ? e->u : e->v;
        int y = e->other(x);
        if (2 * q.size() > h.size())
            throw theorem_violation("kotzig_decompose: no small side at a bridge");

        DecompStep step;
        step.level = level;
        step.h = h;
        step.bridge = *e;
        step.x = x;
        step.y = y;
        step.q = q;

        std::vector<Edge> rest;
        for (const Edge& me : current) {
            if (me == *e) continue;
            if (me.ends().is_subset_of(q)) step.r.edges.push_back(me);
            else if (!me.ends().intersects(q | VertexSet::single(y))) rest.push_back(me);
            else throw theorem_violation("kotzig_decompose: matching edge crosses the bridge cut");
        }
        if (static_cast<int>(rest.size()) < step.r.size())
            throw theorem_violation("kotzig_decompose: not enough matching edges outside Q");
        step.s.edges.assign(rest.begin(), rest.begin() + step.r.size());
        step.t = step.s.support() | VertexSet::single(y);
        steps.push_back(step);

        h = h.minus(step.q | step.t);
        current.assign(rest.begin() + step.r.size(), rest.end());
        ++level;

        if (!h.empty()) {
            Matching next(current);
            if (next.support() != h)
                throw theorem_violation("kotzig_decompose: residual matching is not perfect");
            if (detail::second_pm_masked(g, h, next))
                throw theorem_violation(
                    "kotzig_decompose: residual matching lost uniqueness at level " +
                    std::to_string(level));
            current = next.edges;
        }
    }
    return steps;
}

}  // namespace kempe
