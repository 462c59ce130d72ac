#include <catch2/catch_amalgamated.hpp>

#include "kempe/enumerate.hpp"
#include "kempe/generators.hpp"
#include "kempe/matching.hpp"

#include "helpers.hpp"
#include "oracles.hpp"

using namespace kempe;
using namespace kempe::testing;

TEST_CASE("find_perfect_matching picks the lexicographically first matching") {
    auto c4 = find_perfect_matching(cycle_graph(4));
    REQUIRE(c4.has_value());
    CHECK(c4->edges == std::vector<Edge>{Edge(0, 1), Edge(2, 3)});

    CHECK_FALSE(find_perfect_matching(cycle_graph(5)).has_value());

    auto p4 = find_perfect_matching(path_graph(4));
    REQUIRE(p4.has_value());
    CHECK(p4->edges == std::vector<Edge>{Edge(0, 1), Edge(2, 3)});

    CHECK_FALSE(find_perfect_matching(star_graph(3)).has_value());
}

TEST_CASE("second_perfect_matching") {
    Matching m{Edge(0, 1), Edge(2, 3)};
    auto other = second_perfect_matching(cycle_graph(4), m);
    REQUIRE(other.has_value());
    CHECK(other->edges == std::vector<Edge>{Edge(0, 3), Edge(1, 2)});

    CHECK_FALSE(second_perfect_matching(path_graph(4), m).has_value());

    auto c6first = find_perfect_matching(cycle_graph(6));
    REQUIRE(c6first.has_value());
    auto c6other = second_perfect_matching(cycle_graph(6), *c6first);
    REQUIRE(c6other.has_value());
    CHECK(is_perfect_matching(cycle_graph(6), *c6other));
    CHECK(!(*c6other == *c6first));

    CHECK_THROWS_AS(second_perfect_matching(cycle_graph(4), Matching{Edge(0, 1)}),
                    std::invalid_argument);
}

TEST_CASE("uniqueness agrees with full matching enumeration, n <= 6") {
    for (int n = 2; n <= 6; n += 2)
        for (const Graph& g : canonical_graphs(n)) {
            auto pms = brute_perfect_matchings(g);
            auto found = find_perfect_matching(g);
            CHECK(found.has_value() == !pms.empty());
            if (found) {
                bool unique = !second_perfect_matching(g, *found);
                CHECK(unique == (pms.size() == 1));
            }
        }
}

TEST_CASE("kotzig_bridge on named graphs") {
    Graph k2 = complete_graph(2);
    CHECK(kotzig_bridge(k2, Matching{Edge(0, 1)}) == Edge(0, 1));

    CHECK(kotzig_bridge(path_graph(4), Matching{Edge(0, 1), Edge(2, 3)}) == Edge(0, 1));
    CHECK(kotzig_bridge(path_graph(6), Matching{Edge(0, 1), Edge(2, 3), Edge(4, 5)}) ==
          Edge(0, 1));

    CHECK_THROWS_AS(kotzig_bridge(cycle_graph(4), Matching{Edge(0, 1)}), std::invalid_argument);
    CHECK_THROWS_AS(kotzig_bridge(Graph(0), Matching{}), std::invalid_argument);
}

TEST_CASE("a bridge always exists in a unique perfect matching, n <= 6") {
    for (int n = 2; n <= 6; n += 2)
        for (const Graph& g : canonical_graphs(n)) {
            auto pms = brute_perfect_matchings(g);
            if (pms.size() != 1) continue;
            Edge b = kotzig_bridge(g, pms[0]);
            CHECK(pms[0].contains(b));
            auto bs = bridges(g);
            CHECK(std::find(bs.begin(), bs.end(), b) != bs.end());
        }
}

TEST_CASE("kotzig_decompose hand-run on P4") {
    Graph p4 = path_graph(4);
    auto steps = kotzig_decompose(p4, Matching{Edge(0, 1), Edge(2, 3)});
    REQUIRE(steps.size() == 2);

    CHECK(steps[0].level == 0);
    CHECK(steps[0].h == VertexSet{0, 1, 2, 3});
    CHECK(steps[0].bridge == Edge(0, 1));
    CHECK(steps[0].x == 0);
    CHECK(steps[0].y == 1);
    CHECK(steps[0].q == VertexSet{0});
    CHECK(steps[0].r.size() == 0);
    CHECK(steps[0].s.size() == 0);
    CHECK(steps[0].t == VertexSet{1});

    CHECK(steps[1].h == VertexSet{2, 3});
    CHECK(steps[1].bridge == Edge(2, 3));
    CHECK(steps[1].x == 2);
    CHECK(steps[1].y == 3);
    CHECK(steps[1].q == VertexSet{2});
    CHECK(steps[1].t == VertexSet{3});
}

TEST_CASE("kotzig_decompose on K2 and P6") {
    auto single = kotzig_decompose(complete_graph(2), Matching{Edge(0, 1)});
    REQUIRE(single.size() == 1);
    CHECK(single[0].q == VertexSet{0});
    CHECK(single[0].t == VertexSet{1});

    auto p6 = kotzig_decompose(path_graph(6), Matching{Edge(0, 1), Edge(2, 3), Edge(4, 5)});
    REQUIRE(p6.size() == 3);
    CHECK(p6[0].bridge == Edge(0, 1));
    CHECK(p6[0].q == VertexSet{0});
    CHECK(p6[0].t == VertexSet{1});
    CHECK(p6[1].h == VertexSet{2, 3, 4, 5});
    CHECK(p6[1].bridge == Edge(2, 3));
    CHECK(p6[2].h == VertexSet{4, 5});
}

TEST_CASE("kotzig_decompose rejects a non-unique matching") {
    CHECK_THROWS_AS(kotzig_decompose(cycle_graph(4), Matching{Edge(0, 1), Edge(2, 3)}),
                    std::invalid_argument);
}

TEST_CASE("decomposition postconditions on generated instances") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        int n = 4 + 2 * static_cast<int>(seed % 6);
        auto [g, m] = unique_pm_graph(n, 0.05 * static_cast<double>(seed % 11), seed);
        auto steps = kotzig_decompose(g, m);

        // q and t over all levels partition the vertex set
        VertexSet seen;
        for (const auto& st : steps) {
            CHECK(!st.q.intersects(st.t));
            CHECK(!(st.q | st.t).intersects(seen));
            seen |= st.q | st.t;
            CHECK(st.q.size() == st.t.size());
            CHECK(2 * st.q.size() <= st.h.size());
            CHECK(st.q.contains(st.x));
            CHECK(st.t.contains(st.y));
            CHECK(st.r.size() == st.s.size());
            for (const Edge& e : st.r.edges) CHECK(e.ends().is_subset_of(st.q));
            for (const Edge& e : st.s.edges) CHECK(e.ends().is_subset_of(st.t));
        }
        CHECK(seen == g.vertices());

        // every matching edge lands in exactly one R, S, or bridge slot
        std::vector<Edge> covered;
        for (const auto& st : steps) {
            covered.push_back(st.bridge);
            for (const Edge& e : st.r.edges) covered.push_back(e);
            for (const Edge& e : st.s.edges) covered.push_back(e);
        }
        std::sort(covered.begin(), covered.end());
        CHECK(covered == m.edges);

        // successive levels are nested
        for (std::size_t i = 1; i < steps.size(); ++i) {
            CHECK(steps[i].h ==
                  steps[i - 1].h.minus(steps[i - 1].q | steps[i - 1].t));
        }
    }
}
