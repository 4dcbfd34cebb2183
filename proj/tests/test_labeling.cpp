#include <doctest.h>

#include <random>

#include "starprism/errors.hpp"
#include "starprism/labeling.hpp"
#include "helpers.hpp"

using namespace starprism;

TEST_CASE("required gap") {
    CHECK(required_gap(3, 1) == 3);
    CHECK(required_gap(3, 3) == 1);
    CHECK(required_gap(4, 4) == 1);  // m = 9: diam (m-1)/2, gap (m+1)/2 - d
    CHECK_THROWS_AS(required_gap(3, 0), InvalidParameterError);
    CHECK_THROWS_AS(required_gap(3, 4), InvalidParameterError);
}

TEST_CASE("span") {
    RadioLabeling phi;
    phi.labels = {0};
    CHECK(span_of(phi) == 0);
    phi.labels = {0, 2, 4, 6};
    CHECK(span_of(phi) == 6);
    phi.labels = {5, 8};
    CHECK(span_of(phi) == 3);
    phi.labels = {};
    CHECK_THROWS_AS(span_of(phi), InvalidParameterError);
}

TEST_CASE("greedy completion on pinned orderings") {
    const DistanceMatrix k2 = all_pairs_distances(Graph::star(1));
    const int order_k2[] = {0, 1};
    const RadioLabeling phi_k2 = greedy_from_ordering(k2, order_k2);
    CHECK(phi_k2.labels == std::vector<int>{0, 1});
    CHECK(phi_k2.span == 1);

    // S_2 in order (leaf1, leaf2, center): 0, 1, then max(0+2, 1+2) = 3
    const DistanceMatrix s2 = all_pairs_distances(Graph::star(2));
    const int order_s2[] = {1, 2, 0};
    const RadioLabeling phi_s2 = greedy_from_ordering(s2, order_s2);
    CHECK(phi_s2.labels[1] == 0);
    CHECK(phi_s2.labels[2] == 1);
    CHECK(phi_s2.labels[0] == 3);
    CHECK(phi_s2.span == 3);

    // C_4 in order (0, 2, 1, 3): 0, 1, 3, 4
    const DistanceMatrix c4 = all_pairs_distances(Graph::cycle(4));
    const int order_c4[] = {0, 2, 1, 3};
    const RadioLabeling phi_c4 = greedy_from_ordering(c4, order_c4);
    CHECK(phi_c4.labels == std::vector<int>{0, 3, 1, 4});
    CHECK(phi_c4.span == 4);
}

TEST_CASE("greedy rejects non-permutations") {
    const DistanceMatrix dm = all_pairs_distances(Graph::cycle(4));
    const int repeated[] = {0, 1, 1, 3};
    CHECK_THROWS_AS(greedy_from_ordering(dm, repeated), InvalidParameterError);
    const int short_order[] = {0, 1};
    CHECK_THROWS_AS(greedy_from_ordering(dm, short_order), InvalidParameterError);
}

TEST_CASE("greedy output is always valid") {
    std::mt19937 rng(11);
    std::vector<Graph> family;
    for (int n = 1; n <= 6; ++n) family.push_back(Graph::star(n));
    for (int m = 3; m <= 10; ++m) family.push_back(Graph::cycle(m));
    family.push_back(Graph::star_cycle_product(2, 4));
    for (const Graph& g : family) {
        const DistanceMatrix dm = all_pairs_distances(g);
        for (int round = 0; round < 100; ++round) {
            const auto ordering = test_helpers::random_ordering(g.vertex_count(), rng);
            const RadioLabeling phi = greedy_from_ordering(dm, ordering);
            REQUIRE(verify(dm, phi).empty());
            // labels strictly increase along the ordering
            for (size_t i = 1; i < ordering.size(); ++i) {
                REQUIRE(phi.labels[(size_t)ordering[i]] > phi.labels[(size_t)ordering[i - 1]]);
            }
        }
    }
}

TEST_CASE("greedy labels are tight: any decrement breaks validity") {
    std::mt19937 rng(23);
    const Graph g = Graph::star_cycle_product(2, 4);
    const DistanceMatrix dm = all_pairs_distances(g);
    for (int round = 0; round < 10; ++round) {
        const auto ordering = test_helpers::random_ordering(g.vertex_count(), rng);
        const RadioLabeling phi = greedy_from_ordering(dm, ordering);
        for (size_t i = 1; i < ordering.size(); ++i) {
            RadioLabeling bumped = phi;
            bumped.labels[(size_t)ordering[i]] -= 1;
            CHECK_FALSE(verify(dm, bumped).empty());
        }
    }
}

TEST_CASE("verify matches an independent double-loop check") {
    std::mt19937 rng(42);
    for (int round = 0; round < 200; ++round) {
        const int vertices = 2 + static_cast<int>(rng() % 11);
        const Graph g = test_helpers::random_connected_graph(vertices, rng);
        const DistanceMatrix dm = all_pairs_distances(g);
        RadioLabeling phi;
        phi.labels.resize(static_cast<size_t>(vertices));
        std::uniform_int_distribution<int> label(0, 3 * vertices);
        for (int v = 0; v < vertices; ++v) phi.labels[(size_t)v] = label(rng);
        phi.span = span_of(phi);

        const std::vector<Violation> found = verify(dm, phi);
        const auto expected = test_helpers::naive_violating_pairs(dm, phi.labels);
        REQUIRE(found.size() == expected.size());
        for (size_t i = 0; i < found.size(); ++i) {
            CHECK(found[i].u == expected[i].first);
            CHECK(found[i].v == expected[i].second);
            CHECK(found[i].distance == dm.at(found[i].u, found[i].v));
            CHECK(found[i].required_gap == dm.diameter() + 1 - found[i].distance);
            CHECK(found[i].actual_gap < found[i].required_gap);
        }
        CHECK(found.empty() == test_helpers::naive_is_valid(dm, phi.labels));
        if (found.empty() && vertices >= 2) {
            // a valid labeling on a connected graph has pairwise distinct labels
            std::vector<int> sorted = phi.labels;
            std::sort(sorted.begin(), sorted.end());
            CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
        }
    }
}

TEST_CASE("verify is translation invariant") {
    std::mt19937 rng(5);
    const Graph g = Graph::star_cycle_product(2, 5);
    const DistanceMatrix dm = all_pairs_distances(g);
    RadioLabeling phi;
    phi.labels.resize(static_cast<size_t>(g.vertex_count()));
    std::uniform_int_distribution<int> label(0, 20);
    for (auto& l : phi.labels) l = label(rng);

    RadioLabeling shifted = phi;
    for (auto& l : shifted.labels) l += 17;
    CHECK(verify(dm, phi) == verify(dm, shifted));
}

TEST_CASE("perturbing one label reports exactly the new violating pairs") {
    const Graph g = Graph::star_cycle_product(2, 4);
    const DistanceMatrix dm = all_pairs_distances(g);
    std::vector<int> ordering(static_cast<size_t>(g.vertex_count()));
    std::iota(ordering.begin(), ordering.end(), 0);
    const RadioLabeling phi = greedy_from_ordering(dm, ordering);

    const int victim = 7;
    int slack = 1 << 30;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (v == victim) continue;
        const int need = dm.diameter() + 1 - dm.at(victim, v);
        slack = std::min(slack, std::abs(phi.labels[victim] - phi.labels[(size_t)v]) - need);
    }
    RadioLabeling bumped = phi;
    bumped.labels[victim] -= slack + 1;

    const std::vector<Violation> found = verify(dm, bumped);
    const auto expected = test_helpers::naive_violating_pairs(dm, bumped.labels);
    REQUIRE_FALSE(found.empty());
    REQUIRE(found.size() == expected.size());
    for (size_t i = 0; i < found.size(); ++i) {
        CHECK(found[i].u == expected[i].first);
        CHECK(found[i].v == expected[i].second);
        CHECK((found[i].u == victim || found[i].v == victim));
    }
}

TEST_CASE("verify rejects malformed labelings") {
    const DistanceMatrix dm = all_pairs_distances(Graph::cycle(4));
    RadioLabeling phi;
    phi.labels = {0, 1, 2};  // one vertex missing
    CHECK_THROWS_AS(verify(dm, phi), MalformedLabelingError);
    phi.labels = {0, 1, -2, 3};
    CHECK_THROWS_AS(verify(dm, phi), MalformedLabelingError);
}

TEST_CASE("odd-cycle constraint taxonomy covers every pair exactly once") {
    for (int m : {5, 7, 9, 11}) {
        for (int n : {2, 3}) {
            const Graph g = Graph::star_cycle_product(n, m);
            const DistanceMatrix dm = all_pairs_distances(g);
            REQUIRE(dm.diameter() == (m - 1) / 2);
            int counts[4] = {0, 0, 0, 0};
            for (int u = 0; u < g.vertex_count(); ++u) {
                for (int v = u + 1; v < g.vertex_count(); ++v) {
                    const int d = dm.at(u, v);
                    const Table1Row row = table1_row(m, d);
                    ++counts[static_cast<int>(row)];
                    CHECK(required_gap(dm.diameter(), d) == (m + 1) / 2 - d);
                    switch (row) {
                        case Table1Row::c1: CHECK(d == (m - 1) / 2); break;
                        case Table1Row::c2: CHECK(d == (m - 3) / 2); break;
                        case Table1Row::c3:
                            CHECK(d > 1);
                            CHECK(d < (m - 3) / 2);
                            break;
                        case Table1Row::c4: CHECK(d == 1); break;
                    }
                }
            }
            CHECK(counts[0] > 0);  // c1
            CHECK(counts[3] > 0);  // c4 (adjacent pairs)
            if (m >= 9) CHECK(counts[2] > 0);
        }
    }
    CHECK_THROWS_AS(table1_row(6, 1), InvalidParameterError);
    CHECK_THROWS_AS(table1_row(7, 0), InvalidParameterError);
}
