#ifndef STARPRISM_SOLVER_HPP
#define STARPRISM_SOLVER_HPP

#include <chrono>
#include <string_view>

#include "starprism/construction.hpp"
#include "starprism/labeling.hpp"

namespace starprism {

enum class ExactStatus { proven, budget_exceeded_upper_bound };

std::string_view to_string(ExactStatus status);

struct ExactResult {
    int optimum;             // proven minimum span, or the best upper bound found
    RadioLabeling labeling;  // valid witness achieving `optimum`
    ExactStatus status;
    long long nodes_explored;
    std::chrono::milliseconds elapsed;
};

// Independent oracle: enumerates every vertex ordering (hard cap 10
// vertices) and greedily completes each one. Always proven.
ExactResult brute_force_rn(const DistanceMatrix& dm);

// Branch-and-bound over label-increasing vertex orderings. The initial
// incumbent comes from construct_best when the graph is a star-cycle
// product inside the formula range, else from the identity-ordering greedy
// completion; `seed` only feeds the incumbent heuristics. Expansion order
// is deterministic. Returns the proven optimum within the budget, else the
// best incumbent with budget-exceeded status.
ExactResult exact_rn(const Graph& g, std::chrono::milliseconds budget, unsigned seed);

} // namespace starprism

#endif // STARPRISM_SOLVER_HPP
