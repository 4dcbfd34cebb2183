#ifndef STARPRISM_LABELING_HPP
#define STARPRISM_LABELING_HPP

#include <span>
#include <string_view>
#include <vector>

#include "starprism/distance.hpp"

namespace starprism {

enum class LabelMethod { paper_literal, ordering_greedy, exact, external };

std::string_view to_string(LabelMethod method);
LabelMethod label_method_from_string(std::string_view s);

// Channel assignment: labels[v] is the non-negative channel of vertex v.
// A labeling is *valid* when |labels[u] - labels[v]| >= diam + 1 - d(u, v)
// for every pair; verify() reports the pairs where that fails.
struct RadioLabeling {
    std::vector<int> labels;
    int span = 0;
    bool normalized = false;
    LabelMethod method = LabelMethod::external;
};

// One failing pair. required_gap = diam + 1 - distance, actual_gap < required_gap.
struct Violation {
    int u;
    int v;
    int distance;
    int required_gap;
    int actual_gap;
    bool operator==(const Violation&) const = default;
};

// diam + 1 - distance; distance must lie in [1, diam].
int required_gap(int diameter, int distance);

// Every violating unordered pair, sorted by (u, v). Empty result <=> valid.
std::vector<Violation> verify(const DistanceMatrix& dm, const RadioLabeling& phi);

// max label - min label; rejects an empty labeling.
int span_of(const RadioLabeling& phi);

// Minimal-label completion along a fixed vertex order: first vertex gets 0,
// each later vertex the smallest label compatible with everything placed
// before it. Always produces a valid labeling.
RadioLabeling greedy_from_ordering(const DistanceMatrix& dm, std::span<const int> ordering);

// Constraint taxonomy for odd-cycle products: classifies a pair by its
// distance. Every distance in [1, (m-1)/2] lands in exactly one row;
// the required gap is (m+1)/2 - d in every row.
enum class Table1Row { c1, c2, c3, c4 };

Table1Row table1_row(int m, int distance);

} // namespace starprism

#endif // STARPRISM_LABELING_HPP
