#pragma once

// Clique minors: validation, brute-force maxima (largest minor / largest
// shallow minor), the rooted-K4 linkage condition and its constructive
// counterpart, the clique-minor construction from a Kempe-coloring of size
// at most six, the rooted shallow-minor construction for antitriangle-free
// uniquely colorable graphs, and the connectivity-or-shallow-minor
// dichotomy.

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "kempe/coloring.hpp"
#include "kempe/deadline.hpp"
#include "kempe/errors.hpp"
#include "kempe/generators.hpp"
#include "kempe/graph.hpp"
#include "kempe/matching.hpp"

namespace kempe {

// Family of pairwise disjoint, connected, pairwise adjacent branch sets.
struct CliqueMinor {
    std::vector<VertexSet> branch_sets;

    CliqueMinor() = default;
    CliqueMinor(std::initializer_list<VertexSet> sets) : branch_sets(sets) {}
    explicit CliqueMinor(std::vector<VertexSet> sets) : branch_sets(std::move(sets)) {}

    int size() const { return static_cast<int>(branch_sets.size()); }

    VertexSet support() const {
        VertexSet s;
        for (const auto& a : branch_sets) s |= a;
        return s;
    }
};

struct MinorValidation {
    bool ok = true;
    std::string reason;
    explicit operator bool() const { return ok; }

    static MinorValidation fail(std::string why) { return {false, std::move(why)}; }
};

inline MinorValidation validate_clique_minor(const Graph& g, const CliqueMinor& k,
                                             bool shallow_required,
                                             std::optional<VertexSet> t = std::nullopt) {
    const auto& sets = k.branch_sets;
    VertexSet seen;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        std::string tag = "branch set " + std::to_string(i);
        if (sets[i].empty()) return MinorValidation::fail(tag + " is empty");
        if (!sets[i].is_subset_of(g.vertices())) return MinorValidation::fail(tag + " out of range");
        if (sets[i].intersects(seen)) return MinorValidation::fail(tag + " overlaps an earlier set");
        if (!is_connected_within(g, sets[i])) return MinorValidation::fail(tag + " is not connected");
        if (shallow_required && sets[i].size() > 2)
            return MinorValidation::fail(tag + " has size > 2");
        if (t && (*t & sets[i]).size() != 1)
            return MinorValidation::fail(tag + " does not meet the transversal exactly once");
        seen |= sets[i];
    }
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = i + 1; j < sets.size(); ++j)
            if (!(g.neighborhood_of(sets[i]) & sets[j]).size())
                return MinorValidation::fail("branch sets " + std::to_string(i) + " and " +
                                             std::to_string(j) + " are not adjacent");
    return {};
}

// ---------------------------------------------------------------------------
// Brute-force oracles.

namespace detail {

// Max clique over <= 32 items given adjacency masks; used on quotients.
inline void mask_max_clique(const std::vector<std::uint32_t>& adj, std::uint32_t cands, int cur,
                            int& best) {
    if (cur + std::popcount(cands) <= best) return;
    if (!cands) {
        best = std::max(best, cur);
        return;
    }
    int v = std::countr_zero(cands);
    mask_max_clique(adj, cands & adj[static_cast<std::size_t>(v)], cur + 1, best);
    mask_max_clique(adj, cands & ~(1u << v), cur, best);
}

struct HadwigerEnum {
    const Graph& g;
    Deadline deadline;
    std::vector<VertexSet> blocks;
    int best = 0;
    long leaves = 0;

    HadwigerEnum(const Graph& g_, Deadline dl) : g(g_), deadline(dl) {}

    void leaf() {
        if ((++leaves & 0x3ff) == 0) deadline.check("hadwiger_number");
        for (const auto& b : blocks)
            if (!is_connected_within(g, b)) return;
        std::vector<std::uint32_t> adj(blocks.size(), 0);
        for (std::size_t i = 0; i < blocks.size(); ++i)
            for (std::size_t j = i + 1; j < blocks.size(); ++j)
                if ((g.neighborhood_of(blocks[i]) & blocks[j]).size()) {
                    adj[i] |= 1u << j;
                    adj[j] |= 1u << i;
                }
        int clique = 0;
        mask_max_clique(adj, (1u << blocks.size()) - 1, 0, clique);
        best = std::max(best, clique);
    }

    void run(int v) {
        if (v == g.vertex_count()) {
            leaf();
            return;
        }
        std::size_t existing = blocks.size();  // recursion grows the vector
        for (std::size_t i = 0; i < existing; ++i) {
            blocks[i].insert(v);
            run(v + 1);
            blocks[i].erase(v);
        }
        blocks.push_back(VertexSet::single(v));
        run(v + 1);
        blocks.pop_back();
    }
};

}  // namespace detail

// Largest clique-minor size, by exhaustive enumeration of all partitions of
// V into connected blocks and taking the best clique in the quotient. Every
// minor extends to such a partition, so the maximum is exact.
inline int hadwiger_number(const Graph& g, int bound = 10, Deadline deadline = Deadline::never()) {
    if (g.vertex_count() > bound)
        throw std::invalid_argument("hadwiger_number: graph exceeds oracle bound " +
                                    std::to_string(bound));
    if (g.vertex_count() == 0) return 0;
    detail::HadwigerEnum e(g, deadline);
    e.run(0);
    return e.best;
}

namespace detail {

// 96-bit set for the unit-compatibility clique search (n=12 gives 78 units).
struct UnitSet {
    std::uint64_t lo = 0, hi = 0;

    bool any() const { return lo | hi; }
    int count() const { return std::popcount(lo) + std::popcount(hi); }
    bool test(int i) const { return i < 64 ? (lo >> i) & 1u : (hi >> (i - 64)) & 1u; }
    void set(int i) { (i < 64 ? lo : hi) |= 1ull << (i < 64 ? i : i - 64); }
    int first() const { return lo ? std::countr_zero(lo) : 64 + std::countr_zero(hi); }
    UnitSet without(int i) const {
        UnitSet o = *this;
        (i < 64 ? o.lo : o.hi) &= ~(1ull << (i < 64 ? i : i - 64));
        return o;
    }
    UnitSet operator&(const UnitSet& o) const { return {lo & o.lo, hi & o.hi}; }
};

inline void unit_max_clique(const std::vector<UnitSet>& adj, UnitSet cands, int cur, int& best,
                            long& probes, Deadline deadline) {
    if (cur + cands.count() <= best) return;
    if (!cands.any()) {
        best = std::max(best, cur);
        return;
    }
    if ((++probes & 0xfff) == 0) deadline.check("shallow_number");
    int v = cands.first();
    unit_max_clique(adj, cands & adj[static_cast<std::size_t>(v)], cur + 1, best, probes, deadline);
    unit_max_clique(adj, cands.without(v), cur, best, probes, deadline);
}

}  // namespace detail

// Largest shallow clique-minor size: maximum family of pairwise disjoint,
// pairwise adjacent units (a unit is a vertex or an edge), found as a max
// clique in the unit-compatibility graph.
inline int shallow_number(const Graph& g, int bound = 12, Deadline deadline = Deadline::never()) {
    if (g.vertex_count() > bound)
        throw std::invalid_argument("shallow_number: graph exceeds oracle bound " +
                                    std::to_string(bound));
    std::vector<VertexSet> units;
    for (int v = 0; v < g.vertex_count(); ++v) units.push_back(VertexSet::single(v));
    for (const Edge& e : g.edges()) units.push_back(e.ends());
    std::vector<detail::UnitSet> compat(units.size());
    for (std::size_t i = 0; i < units.size(); ++i)
        for (std::size_t j = i + 1; j < units.size(); ++j)
            if (!units[i].intersects(units[j]) && (g.neighborhood_of(units[i]) & units[j]).size()) {
                compat[i].set(static_cast<int>(j));
                compat[j].set(static_cast<int>(i));
            }
    detail::UnitSet all;
    for (std::size_t i = 0; i < units.size(); ++i) all.set(static_cast<int>(i));
    int best = 0;
    long probes = 0;
    detail::unit_max_clique(compat, all, 0, best, probes, deadline);
    return best;
}

// ---------------------------------------------------------------------------
// Rooted K4 minors.

struct RootedK4Instance {
    Graph host;
    std::array<int, 4> roots;
};

namespace detail {

inline void check_roots(const Graph& g, const std::array<int, 4>& roots) {
    for (int r : roots)
        if (r < 0 || r >= g.vertex_count())
            throw std::invalid_argument("rooted K4: root out of range");
    for (std::size_t i = 0; i < roots.size(); ++i)
        for (std::size_t j = i + 1; j < roots.size(); ++j)
            if (roots[i] == roots[j]) throw std::invalid_argument("rooted K4: roots not distinct");
}

// Enumerates induced a,b-paths avoiding `keep` and reports whether some path
// leaves both kept vertices in one component of the rest.
struct LinkagePathSearch {
    const Graph& g;
    int b, c, d;
    bool found = false;

    LinkagePathSearch(const Graph& g_, int b_, int c_, int d_) : g(g_), b(b_), c(c_), d(d_) {}

    void complete(VertexSet pathset) {
        VertexSet rest = g.vertices().minus(pathset);
        if (component_of(g, c, rest).contains(d)) found = true;
    }

    // u: current end; pathset includes u; blocked: vertices that would break
    // inducedness (neighbors of non-end path vertices), plus the path and
    // the two kept roots.
    void dfs(int u, VertexSet pathset, VertexSet blocked) {
        if (found) return;
        VertexSet cands = g.neighbors(u).minus(blocked);
        if (cands.contains(b)) {
            complete(pathset | VertexSet::single(b));
            if (found) return;
        }
        cands.erase(b);
        for (int w : cands) {
            dfs(w, pathset | VertexSet::single(w), blocked | g.neighbors(u) | VertexSet::single(w));
            if (found) return;
        }
    }
};

}  // namespace detail

// Linkage condition: for every two distinct roots a, b there is an a,b-path
// whose removal leaves the other two roots in one component. Induced paths
// suffice (shrinking a witness path inside its own vertex set keeps the
// other roots connected).
//
// The condition is necessary for a rooted K4 minor. It is NOT sufficient in
// general: K2,3 with one hub and the three degree-2 vertices as roots
// satisfies every pairwise path requirement, yet the single spare hub cannot
// realize three pairwise adjacencies. rooted_k4_minor is the ground truth;
// the exhaustive comparison lives in the test suites.
inline bool rooted_k4_condition(const Graph& g, const std::array<int, 4>& roots) {
    detail::check_roots(g, roots);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) {
            int a = roots[i], b = roots[j];
            std::array<int, 2> rest{};
            int w = 0;
            for (int r : roots)
                if (r != a && r != b) rest[static_cast<std::size_t>(w++)] = r;
            detail::LinkagePathSearch search(g, b, rest[0], rest[1]);
            VertexSet keep{rest[0], rest[1]};
            search.dfs(a, VertexSet::single(a), keep | VertexSet::single(a));
            if (!search.found) return false;
        }
    return true;
}

inline bool rooted_k4_condition(const RootedK4Instance& inst) {
    return rooted_k4_condition(inst.host, inst.roots);
}

namespace detail {

// All nonempty connected subsets of g[within], sorted by size then by mask,
// so nested searches try small branch sets first.
inline std::vector<VertexSet> connected_subsets_within(const Graph& g, VertexSet within) {
    std::vector<VertexSet> out;
    std::uint64_t full = within.bits();
    std::uint64_t sub = full;
    for (;;) {
        if (sub && is_connected_within(g, VertexSet(sub))) out.emplace_back(sub);
        if (sub == 0) break;
        sub = (sub - 1) & full;
    }
    std::sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) {
        return a.size() != b.size() ? a.size() < b.size() : a.bits() < b.bits();
    });
    return out;
}

// Exhaustive search for pairwise adjacent disjoint connected sets, one per
// root, where set i contains root i and no other root.
struct RootedMinorSearch {
    const Graph& g;
    std::vector<int> roots;
    Deadline deadline;
    std::vector<std::vector<VertexSet>> cands;
    std::vector<std::vector<VertexSet>> cand_nbr;
    std::vector<VertexSet> chosen;
    VertexSet used;
    long probes = 0;

    RootedMinorSearch(const Graph& g_, std::vector<int> roots_, Deadline dl)
        : g(g_), roots(std::move(roots_)), deadline(dl) {
        VertexSet rootset;
        for (int r : roots) rootset.insert(r);
        auto all = connected_subsets_within(g, g.vertices());
        cands.resize(roots.size());
        cand_nbr.resize(roots.size());
        for (std::size_t i = 0; i < roots.size(); ++i) {
            VertexSet others = rootset.minus(VertexSet::single(roots[i]));
            for (const VertexSet& s : all)
                if (s.contains(roots[i]) && !s.intersects(others)) {
                    cands[i].push_back(s);
                    cand_nbr[i].push_back(g.neighborhood_of(s));
                }
        }
    }

    bool run(std::size_t i) {
        deadline.check("rooted minor search");
        if (i == roots.size()) return true;
        for (std::size_t idx = 0; idx < cands[i].size(); ++idx) {
            if ((++probes & 0xff) == 0) deadline.check("rooted minor search");
            const VertexSet& s = cands[i][idx];
            if (s.intersects(used)) continue;
            bool adjacent_to_all = true;
            for (const VertexSet& prior : chosen)
                if (!(cand_nbr[i][idx] & prior).size()) {
                    adjacent_to_all = false;
                    break;
                }
            if (!adjacent_to_all) continue;
            chosen.push_back(s);
            used |= s;
            if (run(i + 1)) return true;
            used = used.minus(s);
            chosen.pop_back();
        }
        return false;
    }
};

}  // namespace detail

// Constructive counterpart of the linkage condition: an exhaustive search
// over connected branch sets for a size-4 minor with root i in set i. Kept
// independent of rooted_k4_condition so the two can cross-validate.
inline std::optional<CliqueMinor> rooted_k4_minor(const Graph& g, const std::array<int, 4>& roots,
                                                  int bound = 16,
                                                  Deadline deadline = Deadline::never()) {
    detail::check_roots(g, roots);
    if (g.vertex_count() > bound)
        throw std::invalid_argument("rooted_k4_minor: graph exceeds search bound " +
                                    std::to_string(bound));
    detail::RootedMinorSearch search(g, {roots[0], roots[1], roots[2], roots[3]}, deadline);
    if (!search.run(0)) return std::nullopt;
    return CliqueMinor(search.chosen);
}

inline std::optional<CliqueMinor> rooted_k4_minor(const RootedK4Instance& inst, int bound = 16,
                                                  Deadline deadline = Deadline::never()) {
    return rooted_k4_minor(inst.host, inst.roots, bound, deadline);
}

// ---------------------------------------------------------------------------
// Clique minors from Kempe-colorings of size at most six.

namespace detail {

// Highest-indexed degree-1 vertex of the lexicographic DFS spanning tree of
// g[a]; removing it keeps the rest of a connected.
inline int spanning_tree_leaf(const Graph& g, VertexSet a) {
    std::vector<int> tree_deg(static_cast<std::size_t>(g.vertex_count()), 0);
    VertexSet visited;
    auto dfs = [&](auto&& self, int u) -> void {
        visited.insert(u);
        for (int w : g.neighbors(u) & a)
            if (!visited.contains(w)) {
                tree_deg[static_cast<std::size_t>(u)]++;
                tree_deg[static_cast<std::size_t>(w)]++;
                self(self, w);
            }
    };
    dfs(dfs, a.front());
    if (visited != a) throw theorem_violation("spanning_tree_leaf: class pair not connected");
    int leaf = -1;
    for (int v : a)
        if (tree_deg[static_cast<std::size_t>(v)] == 1) leaf = v;
    if (leaf < 0) throw theorem_violation("spanning_tree_leaf: no leaf found");
    return leaf;
}

}  // namespace detail

// Clique minor of size >= k from a Kempe-coloring of size k <= 6. For k = 6
// the last two classes are merged, a removable vertex x of the merged class
// becomes its own branch set, and a rooted K4 minor is grown in the first
// four classes from x's neighbors there. Smaller k is lifted to six with
// universal apex vertices that are stripped from the result.
inline CliqueMinor kempe_clique_minor_k6(const Graph& g, const Coloring& c, int k4_bound = 16) {
    if (!is_kempe(g, c)) throw std::invalid_argument("kempe_clique_minor_k6: not a Kempe-coloring");
    int k = c.size();
    if (k > 6) throw std::invalid_argument("kempe_clique_minor_k6: coloring size must be <= 6");
    if (k == 0) return {};

    if (k < 6) {
        ApexAugmented aug = apex_augment(g, c, 6 - k);
        CliqueMinor full = kempe_clique_minor_k6(aug.graph, aug.coloring, k4_bound);
        CliqueMinor out;
        for (const auto& a : full.branch_sets)
            if (!a.intersects(aug.apexes)) out.branch_sets.push_back(a);
        auto val = validate_clique_minor(g, out, false);
        if (out.size() < k || !val)
            throw theorem_violation("kempe_clique_minor_k6: stripped minor invalid: " + val.reason);
        return out;
    }

    VertexSet d5 = c.classes[4];
    VertexSet d6 = c.classes[5];
    VertexSet merged = d5 | d6;
    int x = detail::spanning_tree_leaf(g, merged);
    if (d6.contains(x)) std::swap(d5, d6);

    VertexSet a5 = VertexSet::single(x);
    VertexSet a6 = merged.minus(a5);
    std::array<int, 4> b{};
    for (int i = 0; i < 4; ++i) {
        VertexSet nb = g.neighbors(x) & c.classes[static_cast<std::size_t>(i)];
        if (nb.empty())
            throw theorem_violation("kempe_clique_minor_k6: x has no neighbor in a low class");
        b[static_cast<std::size_t>(i)] = nb.front();
    }
    VertexSet low = c.classes[0] | c.classes[1] | c.classes[2] | c.classes[3];
    InducedSubgraph sub = induced_subgraph(g, low);
    std::array<int, 4> roots{sub.to_sub(b[0]), sub.to_sub(b[1]), sub.to_sub(b[2]), sub.to_sub(b[3])};
    auto k4 = rooted_k4_minor(sub.graph, roots, k4_bound);
    if (!k4)
        throw theorem_violation("kempe_clique_minor_k6: rooted K4 search failed in the low classes");

    CliqueMinor out;
    for (const auto& s : k4->branch_sets) out.branch_sets.push_back(sub.lift(s));
    out.branch_sets.push_back(a5);
    out.branch_sets.push_back(a6);
    auto val = validate_clique_minor(g, out, false);
    if (out.size() != 6 || !val)
        throw theorem_violation("kempe_clique_minor_k6: assembled minor invalid: " + val.reason);
    return out;
}

// ---------------------------------------------------------------------------
// Rooted shallow minors for antitriangle-free uniquely colorable graphs.

namespace detail {

struct LevelCliques {
    std::vector<VertexSet> sets;
    bool special = false;
};

// The per-level shallow cliques: pairs crossing between Q and T, arranged by
// which side of each matching edge carries the transversal vertex.
inline LevelCliques level_cliques(const DecompStep& st, VertexSet t) {
    LevelCliques out;
    int z = st.r.size();
    if (z == 0) {
        if (t.contains(st.x)) out.sets.push_back(VertexSet::single(st.x));
        else out.special = true;
        return out;
    }
    auto split = [&](const Matching& m) {
        std::vector<std::pair<int, int>> sides;  // (in T, out of T)
        for (const Edge& e : m.edges) {
            bool ut = t.contains(e.u), vt = t.contains(e.v);
            if (ut == vt) throw std::logic_error("level_cliques: matching edge not traversed once");
            sides.emplace_back(ut ? e.u : e.v, ut ? e.v : e.u);
        }
        return sides;
    };
    auto qr = split(st.r);  // (q_j, r_j)
    auto ts = split(st.s);  // (t_j, s_j)
    if (t.contains(st.x)) {
        out.sets.push_back(VertexSet{st.x, ts[0].second});            // {x, s1}
        out.sets.push_back(VertexSet{st.y, qr[0].first});             // {y, q1}
        out.sets.push_back(VertexSet{qr[0].second, ts[0].first});     // {r1, t1}
    } else {
        out.sets.push_back(VertexSet{st.x, ts[0].first});             // {x, t1}
        out.sets.push_back(VertexSet{st.y, qr[0].second});            // {y, r1}
        out.sets.push_back(VertexSet{qr[0].first, ts[0].second});     // {q1, s1}
    }
    for (int j = 1; j < z; ++j) {
        out.sets.push_back(VertexSet{qr[static_cast<std::size_t>(j)].first,
                                     ts[static_cast<std::size_t>(j)].second});  // {q_j, s_j}
        out.sets.push_back(VertexSet{qr[static_cast<std::size_t>(j)].second,
                                     ts[static_cast<std::size_t>(j)].first});   // {r_j, t_j}
    }
    return out;
}

inline std::vector<VertexSet> shallow_rooted_rec(const Graph& g,
                                                 const std::vector<VertexSet>& classes,
                                                 VertexSet t) {
    int n = g.vertex_count();
    if (n == 0) return {};

    auto recurse_on = [&](VertexSet w) {
        InducedSubgraph sub = induced_subgraph(g, w);
        std::vector<VertexSet> sub_classes;
        for (const auto& cls : classes) {
            if (cls.is_subset_of(w)) {
                VertexSet mapped;
                for (int v : cls) mapped.insert(sub.to_sub(v));
                sub_classes.push_back(mapped);
            } else if (cls.intersects(w)) {
                throw std::logic_error("shallow_minor_rooted: a color class straddles a level cut");
            }
        }
        VertexSet sub_t;
        for (int v : t & w) sub_t.insert(sub.to_sub(v));
        std::vector<VertexSet> rec = shallow_rooted_rec(sub.graph, sub_classes, sub_t);
        std::vector<VertexSet> lifted;
        lifted.reserve(rec.size());
        for (const auto& s : rec) lifted.push_back(sub.lift(s));
        return lifted;
    };

    // A singleton class forces its vertex to be universal; peel it off.
    for (const auto& cls : classes) {
        if (cls.size() == 1) {
            int x = cls.front();
            if (g.degree(x) != n - 1)
                throw std::invalid_argument(
                    "shallow_minor_rooted: singleton-class vertex is not universal, so the "
                    "coloring cannot be the unique one");
            auto out = recurse_on(g.vertices().minus(cls));
            out.push_back(cls);
            return out;
        }
    }

    // All classes have size 2: they are a perfect matching of the complement.
    Graph co = complement(g);
    std::vector<Edge> medges;
    medges.reserve(classes.size());
    for (const auto& cls : classes) {
        int u = cls.front();
        medges.emplace_back(u, cls.minus(VertexSet::single(u)).front());
    }
    Matching m0(medges);
    std::vector<DecompStep> steps;
    try {
        steps = kotzig_decompose(co, m0);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument(
            "shallow_minor_rooted: complement has a second perfect matching, so the coloring "
            "is not unique");
    }

    std::vector<LevelCliques> ks;
    ks.reserve(steps.size());
    for (const DecompStep& st : steps) ks.push_back(level_cliques(st, t));

    VertexSet h1 = steps[0].h.minus(steps[0].q | steps[0].t);

    if (!ks[0].special) {
        auto out = ks[0].sets;
        auto rest = recurse_on(h1);
        out.insert(out.end(), rest.begin(), rest.end());
        return out;
    }

    // Index 0 is special: x0 is outside the transversal, y0 inside.
    int y0 = steps[0].y;
    std::vector<int> ucands;
    for (int u : t)
        if (u != y0 && !g.has_edge(y0, u)) ucands.push_back(u);

    if (ucands.empty()) {
        // y0 is adjacent to every transversal vertex, hence to every set of
        // the recursive minor.
        auto out = recurse_on(h1);
        out.push_back(VertexSet::single(y0));
        return out;
    }

    auto level_of = [&](int v) {
        for (std::size_t i = 0; i < steps.size(); ++i)
            if ((steps[i].q | steps[i].t).contains(v)) return static_cast<int>(i);
        return -1;
    };
    auto partner = [&](int u) {
        for (const auto& cls : classes)
            if (cls.contains(u)) return cls.minus(VertexSet::single(u)).front();
        return -1;
    };

    int best_i = -1, best_v = -1;
    for (int u : ucands) {
        int v = partner(u);
        int i = level_of(v);
        if (i > best_i) {
            best_i = i;
            best_v = v;
        }
    }
    int i = best_i;
    int v = best_v;
    if (i < 1) throw std::logic_error("shallow_minor_rooted: partner vertex at level 0");
    const DecompStep& sti = steps[static_cast<std::size_t>(i)];

    int w = -1;
    if (sti.r.size() == 0) {
        if (v != sti.x && v != sti.y)
            throw std::logic_error("shallow_minor_rooted: v outside its level's bridge");
        w = sti.bridge.other(v);
    } else {
        for (const auto& s : ks[static_cast<std::size_t>(i)].sets)
            if (s.contains(v)) {
                w = s.minus(VertexSet::single(v)).front();
                break;
            }
        if (w < 0) throw std::logic_error("shallow_minor_rooted: v not covered at its level");
    }
    if (!t.contains(w)) throw std::logic_error("shallow_minor_rooted: w escaped the transversal");

    auto out = recurse_on(sti.h.minus(sti.q | sti.t));
    for (int j = 0; j < i; ++j)
        for (const auto& s : ks[static_cast<std::size_t>(j)].sets) out.push_back(s);
    for (const auto& s : ks[static_cast<std::size_t>(i)].sets)
        if (!s.contains(w)) out.push_back(s);

    std::vector<int> specials;
    for (int j = 0; j < i; ++j)
        if (ks[static_cast<std::size_t>(j)].special) specials.push_back(j);
    int d = static_cast<int>(specials.size()) - 1;
    for (int j = 0; j < d; ++j)
        out.push_back(VertexSet{steps[static_cast<std::size_t>(specials[static_cast<std::size_t>(j + 1)])].y,
                                steps[static_cast<std::size_t>(specials[static_cast<std::size_t>(j)])].x});
    out.push_back(VertexSet{w, steps[static_cast<std::size_t>(specials[static_cast<std::size_t>(d)])].x});
    out.push_back(VertexSet{y0, v});
    return out;
}

}  // namespace detail

// Shallow clique minor of size |c| traversed by t, for an antitriangle-free
// graph whose unique minimum coloring is c (the caller certifies uniqueness;
// the construction re-verifies what it can and throws invalid_argument on
// evidence to the contrary). The output is fully validated.
inline CliqueMinor shallow_minor_rooted(const Graph& g, const Coloring& c, VertexSet t) {
    if (!is_coloring(g, c)) throw std::invalid_argument("shallow_minor_rooted: not a coloring");
    if (find_antitriangle(g))
        throw std::invalid_argument("shallow_minor_rooted: graph has an antitriangle");
    if (!is_transversal(t, c))
        throw std::invalid_argument("shallow_minor_rooted: t is not a transversal of c");
    CliqueMinor out(detail::shallow_rooted_rec(g, c.classes, t));
    auto val = validate_clique_minor(g, out, true, t);
    if (out.size() != c.size() || !val)
        throw theorem_violation("shallow_minor_rooted: assembled family invalid: " + val.reason);
    return out;
}

// ---------------------------------------------------------------------------
// Connectivity-or-shallow-minor dichotomy.

struct Lemma2Result {
    bool connected = false;         // certified kappa(g) >= k
    int connectivity = 0;           // the Menger value
    std::optional<CliqueMinor> minor;
};

namespace detail {

// First combination wins ties: subsets of {0..n-1} of size m in
// lexicographic order.
template <typename Fn>
inline void for_each_subset(int n, int m, Fn&& fn) {
    std::vector<int> idx(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) idx[static_cast<std::size_t>(i)] = i;
    if (m > n) return;
    for (;;) {
        VertexSet s;
        for (int i : idx) s.insert(i);
        if (!fn(s)) return;
        int pos = m - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - m + pos) --pos;
        if (pos < 0) return;
        ++idx[static_cast<std::size_t>(pos)];
        for (int i = pos + 1; i < m; ++i)
            idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
    }
}

// Kuhn augmenting-path matching saturating `lefts` into right_allowed.
inline std::optional<std::vector<Edge>> saturating_matching(const Graph& g,
                                                            const std::vector<int>& lefts,
                                                            VertexSet right_allowed) {
    std::vector<int> match_of(static_cast<std::size_t>(g.vertex_count()), -1);
    auto augment = [&](auto&& self, int u, VertexSet& visited) -> bool {
        for (int w : g.neighbors(u) & right_allowed) {
            if (visited.contains(w)) continue;
            visited.insert(w);
            if (match_of[static_cast<std::size_t>(w)] == -1 ||
                self(self, match_of[static_cast<std::size_t>(w)], visited)) {
                match_of[static_cast<std::size_t>(w)] = u;
                return true;
            }
        }
        return false;
    };
    for (int u : lefts) {
        VertexSet visited;
        if (!augment(augment, u, visited)) return std::nullopt;
    }
    std::vector<Edge> out;
    for (int w = 0; w < g.vertex_count(); ++w)
        if (match_of[static_cast<std::size_t>(w)] != -1)
            out.emplace_back(match_of[static_cast<std::size_t>(w)], w);
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<VertexSet> lemma2_minor_rec(const Graph& g,
                                               const std::vector<VertexSet>& classes) {
    int n = g.vertex_count();
    if (n == 0) return {};

    for (const auto& cls : classes) {
        if (cls.size() == 1) {
            int x = cls.front();
            if (g.degree(x) != n - 1)
                throw std::logic_error("lemma2: singleton-class vertex not universal");
            InducedSubgraph sub = induced_subgraph(g, g.vertices().minus(cls));
            std::vector<VertexSet> sub_classes;
            for (const auto& other : classes) {
                if (other == cls) continue;
                VertexSet mapped;
                for (int v : other) mapped.insert(sub.to_sub(v));
                sub_classes.push_back(mapped);
            }
            auto rec = lemma2_minor_rec(sub.graph, sub_classes);
            std::vector<VertexSet> out;
            for (const auto& s : rec) out.push_back(sub.lift(s));
            out.push_back(cls);
            return out;
        }
    }

    int k = static_cast<int>(classes.size());
    // Find the separator of size k-1 whose smallest component is globally
    // minimal; first in lexicographic order wins ties.
    VertexSet best_t, best_c;
    int best_size = n + 1;
    for_each_subset(n, k - 1, [&](VertexSet sep) {
        auto comps = components_within(g, g.vertices().minus(sep));
        if (comps.size() < 2) return true;
        for (const auto& comp : comps)
            if (comp.size() < best_size) {
                best_size = comp.size();
                best_t = sep;
                best_c = comp;
            }
        return true;
    });
    if (best_size > n) throw theorem_violation("lemma2: no separator of size k-1 found");

    VertexSet sep = best_t;
    VertexSet c_small = best_c;
    auto comps = components_within(g, g.vertices().minus(sep));
    if (comps.size() != 2)
        throw theorem_violation("lemma2: separator leaves more than two components");
    VertexSet c_other = comps[0] == c_small ? comps[1] : comps[0];
    if (!is_clique(g, c_small) || !is_clique(g, c_other))
        throw theorem_violation("lemma2: a separator component is not a clique");

    const VertexSet* missing = nullptr;
    for (const auto& cls : classes)
        if (!cls.intersects(sep)) {
            if (missing) throw theorem_violation("lemma2: two classes miss the separator");
            missing = &cls;
        }
    if (!missing) throw theorem_violation("lemma2: no class misses the separator");
    VertexSet dcls = *missing;
    if ((dcls & c_small).size() != 1 || (dcls & c_other).size() != 1)
        throw theorem_violation("lemma2: the free class does not split across the cut");
    int d = (dcls & c_small).front();

    std::vector<int> left_small, left_other;
    VertexSet p_small;
    for (const auto& cls : classes) {
        if (cls == dcls) continue;
        if ((cls & sep).size() != 1)
            throw theorem_violation("lemma2: class does not meet the separator exactly once");
        int tv = (cls & sep).front();
        if (cls.intersects(c_small)) {
            left_small.push_back(tv);
            p_small |= cls;
        } else if (cls.intersects(c_other)) {
            left_other.push_back(tv);
        } else {
            throw theorem_violation("lemma2: class avoids both sides of the cut");
        }
    }
    std::sort(left_small.begin(), left_small.end());
    std::sort(left_other.begin(), left_other.end());

    auto m_small = saturating_matching(g, left_small, p_small & c_small);
    if (!m_small) throw theorem_violation("lemma2: Hall condition failed on the minimal side");
    auto m_other = saturating_matching(g, left_other, c_other);
    if (!m_other) throw theorem_violation("lemma2: Hall condition failed on the far side");

    std::vector<VertexSet> out;
    for (const Edge& e : *m_small) out.push_back(e.ends());
    for (const Edge& e : *m_other) out.push_back(e.ends());
    out.push_back(VertexSet::single(d));
    return out;
}

}  // namespace detail

// Either a Menger certificate that g is k-connected, or a validated shallow
// clique minor of size k, for an antitriangle-free graph with a
// Kempe-coloring c of size k.
inline Lemma2Result lemma2_or(const Graph& g, const Coloring& c) {
    if (find_antitriangle(g)) throw std::invalid_argument("lemma2_or: graph has an antitriangle");
    if (!is_kempe(g, c)) throw std::invalid_argument("lemma2_or: not a Kempe-coloring");
    int k = c.size();
    int kappa = vertex_connectivity(g);
    if (kappa >= k) return {true, kappa, std::nullopt};
    CliqueMinor minor(detail::lemma2_minor_rec(g, c.classes));
    auto val = validate_clique_minor(g, minor, true);
    if (minor.size() != k || !val)
        throw theorem_violation("lemma2_or: constructed minor invalid: " + val.reason);
    return {false, kappa, minor};
}

}  // namespace kempe
