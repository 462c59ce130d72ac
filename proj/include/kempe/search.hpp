#pragma once

// Conjecture-testing searches: the balanced 4-cycle-splitting set for
// triangle-free graphs with a sparse perfect matching, and the exhaustive
// hunt for a clique minor traversed by a prescribed transversal.

#include <array>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "kempe/coloring.hpp"
#include "kempe/deadline.hpp"
#include "kempe/graph.hpp"
#include "kempe/matching.hpp"
#include "kempe/minors.hpp"

namespace kempe {

inline bool is_triangle_free(const Graph& g) {
    for (const Edge& e : g.edges())
        if ((g.neighbors(e.u) & g.neighbors(e.v)).size()) return false;
    return true;
}

namespace detail {

struct FourCycle {
    Edge diag_a;  // one nonadjacent diagonal pair
    Edge diag_b;  // the other
    bool operator<(const FourCycle& o) const {
        return diag_a != o.diag_a ? diag_a < o.diag_a : diag_b < o.diag_b;
    }
};

// Every 4-cycle of a triangle-free graph is induced, so it is determined by
// its two diagonals; normalize with diag_a < diag_b to dedup.
inline std::vector<FourCycle> four_cycles(const Graph& g) {
    std::set<FourCycle> cycles;
    int n = g.vertex_count();
    for (int a = 0; a < n; ++a)
        for (int c = a + 1; c < n; ++c) {
            if (g.has_edge(a, c)) continue;
            VertexSet common = g.neighbors(a) & g.neighbors(c);
            for (int b : common)
                for (int d : common.minus(VertexSet::full(b + 1))) {
                    FourCycle fc{Edge(a, c), Edge(b, d)};
                    if (fc.diag_b < fc.diag_a) std::swap(fc.diag_a, fc.diag_b);
                    cycles.insert(fc);
                }
        }
    return {cycles.begin(), cycles.end()};
}

struct P1Search {
    const Graph& g;
    std::vector<FourCycle> cycles;
    std::vector<std::vector<int>> cycles_of;  // per vertex
    std::vector<int> side;                    // -1 unassigned, 1 in A, 0 out
    int half;
    int count_in = 0, count_out = 0;
    std::optional<VertexSet> result;

    explicit P1Search(const Graph& g_) : g(g_), cycles(four_cycles(g_)) {
        int n = g.vertex_count();
        half = n / 2;
        side.assign(static_cast<std::size_t>(n), -1);
        cycles_of.resize(static_cast<std::size_t>(n));
        for (std::size_t i = 0; i < cycles.size(); ++i) {
            const FourCycle& fc = cycles[i];
            for (int v : {fc.diag_a.u, fc.diag_a.v, fc.diag_b.u, fc.diag_b.v})
                cycles_of[static_cast<std::size_t>(v)].push_back(static_cast<int>(i));
        }
    }

    bool assigned(int v) const { return side[static_cast<std::size_t>(v)] != -1; }

    bool split(const Edge& e) const {
        return side[static_cast<std::size_t>(e.u)] != side[static_cast<std::size_t>(e.v)];
    }

    // violated iff both diagonals are split; checkable once all four are set
    bool consistent_after(int v) const {
        for (int ci : cycles_of[static_cast<std::size_t>(v)]) {
            const FourCycle& fc = cycles[static_cast<std::size_t>(ci)];
            if (assigned(fc.diag_a.u) && assigned(fc.diag_a.v) && assigned(fc.diag_b.u) &&
                assigned(fc.diag_b.v) && split(fc.diag_a) && split(fc.diag_b))
                return false;
        }
        return true;
    }

    bool run(int v) {
        int n = g.vertex_count();
        if (v == n) {
            VertexSet a;
            for (int u = 0; u < n; ++u)
                if (side[static_cast<std::size_t>(u)] == 1) a.insert(u);
            result = a;
            return true;
        }
        for (int s : {1, 0}) {
            if (s == 1 && count_in == half) continue;
            if (s == 0 && count_out == half) continue;
            side[static_cast<std::size_t>(v)] = s;
            (s == 1 ? count_in : count_out)++;
            if (consistent_after(v) && run(v + 1)) return true;
            (s == 1 ? count_in : count_out)--;
            side[static_cast<std::size_t>(v)] = -1;
        }
        return false;
    }
};

}  // namespace detail

// Balanced set A such that no 4-cycle has both diagonals split by A, for a
// triangle-free graph whose perfect matching has any two edges joined by at
// most one edge. Exhaustive: returns the first solution in assignment order
// or nothing at all.
inline std::optional<VertexSet> p1_search(const Graph& g, const Matching& m) {
    if (!is_triangle_free(g)) throw std::invalid_argument("p1_search: graph has a triangle");
    if (!is_perfect_matching(g, m))
        throw std::invalid_argument("p1_search: m is not a perfect matching of g");
    for (std::size_t i = 0; i < m.edges.size(); ++i)
        for (std::size_t j = i + 1; j < m.edges.size(); ++j) {
            const Edge &e = m.edges[i], &f = m.edges[j];
            int joining = (g.has_edge(e.u, f.u) ? 1 : 0) + (g.has_edge(e.u, f.v) ? 1 : 0) +
                          (g.has_edge(e.v, f.u) ? 1 : 0) + (g.has_edge(e.v, f.v) ? 1 : 0);
            if (joining > 1)
                throw std::invalid_argument(
                    "p1_search: two matching edges are joined by more than one edge");
        }
    detail::P1Search search(g);
    search.run(0);
    return search.result;
}

enum class SearchVerdict { found, none, inconclusive };

inline const char* to_string(SearchVerdict v) {
    switch (v) {
        case SearchVerdict::found: return "found";
        case SearchVerdict::none: return "none";
        default: return "inconclusive";
    }
}

struct C1Result {
    SearchVerdict verdict = SearchVerdict::inconclusive;
    std::optional<CliqueMinor> minor;
};

// Exhaustive search for a clique minor of size |c| traversed by t, given a
// Kempe-coloring c. "none" is a definite exhaustion (a counterexample
// candidate at size >= 5); blown deadlines and oversized inputs come back
// "inconclusive" so that search bounds never masquerade as counterexamples.
inline C1Result c1_check(const Graph& g, const Coloring& c, VertexSet t,
                         Deadline deadline = Deadline::never(), int size_cap = 20) {
    if (!is_kempe(g, c)) throw std::invalid_argument("c1_check: not a Kempe-coloring");
    if (!is_transversal(t, c)) throw std::invalid_argument("c1_check: t is not a transversal");
    if (g.vertex_count() > size_cap) return {SearchVerdict::inconclusive, std::nullopt};
    try {
        detail::RootedMinorSearch search(g, t.to_vector(), deadline);
        if (!search.run(0)) return {SearchVerdict::none, std::nullopt};
        CliqueMinor minor(search.chosen);
        auto val = validate_clique_minor(g, minor, false, t);
        if (!val) throw theorem_violation("c1_check: search returned an invalid minor: " + val.reason);
        return {SearchVerdict::found, minor};
    } catch (const deadline_exceeded&) {
        return {SearchVerdict::inconclusive, std::nullopt};
    }
}

}  // namespace kempe
