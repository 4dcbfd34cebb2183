#ifndef STARPRISM_TESTS_HELPERS_HPP
#define STARPRISM_TESTS_HELPERS_HPP

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "starprism/distance.hpp"
#include "starprism/graph.hpp"
#include "starprism/labeling.hpp"

namespace test_helpers {

// Independent radio-condition check: plain double loop straight off the
// definition, kept free of the library's verify() internals.
inline bool naive_is_valid(const starprism::DistanceMatrix& dm, const std::vector<int>& labels) {
    const int diam = dm.diameter();
    for (int u = 0; u < dm.size(); ++u) {
        for (int v = u + 1; v < dm.size(); ++v) {
            if (std::abs(labels[(size_t)u] - labels[(size_t)v]) < diam + 1 - dm.at(u, v)) {
                return false;
            }
        }
    }
    return true;
}

inline std::vector<std::pair<int, int>> naive_violating_pairs(
    const starprism::DistanceMatrix& dm, const std::vector<int>& labels) {
    const int diam = dm.diameter();
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < dm.size(); ++u) {
        for (int v = u + 1; v < dm.size(); ++v) {
            if (std::abs(labels[(size_t)u] - labels[(size_t)v]) < diam + 1 - dm.at(u, v)) {
                pairs.emplace_back(u, v);
            }
        }
    }
    return pairs;
}

// Random connected graph: spanning tree plus extra edges.
inline starprism::Graph random_connected_graph(int vertices, std::mt19937& rng) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < vertices; ++v) {
        edges.emplace_back(static_cast<int>(rng() % static_cast<unsigned>(v)), v);
    }
    std::uniform_int_distribution<int> pick(0, vertices - 1);
    const int extra = vertices > 2 ? static_cast<int>(rng() % static_cast<unsigned>(vertices)) : 0;
    for (int e = 0; e < extra; ++e) {
        int a = pick(rng);
        int b = pick(rng);
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        if (std::find(edges.begin(), edges.end(), std::make_pair(a, b)) == edges.end()) {
            edges.emplace_back(a, b);
        }
    }
    return starprism::Graph::from_edges(vertices, std::move(edges));
}

inline std::vector<int> random_ordering(int vertices, std::mt19937& rng) {
    std::vector<int> ordering(static_cast<size_t>(vertices));
    std::iota(ordering.begin(), ordering.end(), 0);
    std::shuffle(ordering.begin(), ordering.end(), rng);
    return ordering;
}

// Star distance by structure: 0 same vertex, 1 through the center, else 2.
inline int star_distance(int a, int b) {
    if (a == b) return 0;
    if (a == 0 || b == 0) return 1;
    return 2;
}

inline int cycle_distance(int a, int b, int m) {
    const int d = std::abs(a - b);
    return std::min(d, m - d);
}

} // namespace test_helpers

#endif // STARPRISM_TESTS_HELPERS_HPP
