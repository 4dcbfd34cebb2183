#ifndef STARPRISM_CONSTRUCTION_HPP
#define STARPRISM_CONSTRUCTION_HPP

#include <span>
#include <string_view>
#include <vector>

#include "starprism/labeling.hpp"

namespace starprism {

enum class Parity { even, odd };

std::string_view to_string(Parity parity);

// True when (n, m) is inside the range the closed forms are stated for:
// n >= 2 and m >= 4 even, or m >= 5 odd.
bool in_theorem_range(int n, int m);

struct FormulaResult {
    int n;
    int m;
    Parity parity;
    long long value;
};

// Closed-form radio number of the star-cycle strong product:
//   even m:  (m^2 + m(m-1) + (n-1)(m-2)) / 2
//   odd m:   (m^2 + 4mn + 5m - 8n + 18) / 2
// Exact integer arithmetic; throws TheoremRangeError outside the range.
FormulaResult closed_form_rn(int n, int m);

// The label assignment exactly as the closed-form derivation states it:
//   even m:  center(j) = (j-1) m/2,      leaf(j,k) = center(j) + m/2 + (k-1)(m-2)/2
//   odd m:   center(j) = (j-1)(m-1)/2,   leaf(j,k) = center(j) + (m-1)/2 + (k-1)
// No repair is applied: the output can assign the same label to nearby
// vertices and is NOT guaranteed valid. Callers must run verify().
RadioLabeling paper_literal_labeling(int n, int m);

enum class OrderingVariant { antipodal, critical_path, identity };

std::string_view to_string(OrderingVariant variant);
OrderingVariant ordering_variant_from_string(std::string_view s);

// A permutation of the (n+1)*m product vertices, substar by substar with the
// center leading its leaves. antipodal alternates each substar with the one
// half a cycle away; critical-path (odd m only) starts with substars 1,
// (m+1)/2, m and then walks the remaining substars in far-apart pairs;
// identity is plain cycle-major order. Seed 0 keeps leaves in index order,
// other seeds permute leaf order inside each substar deterministically.
std::vector<int> heuristic_ordering(int n, int m, OrderingVariant variant, unsigned seed);

// Tie-break rank order for equal spans (lower wins).
enum class ConstructionMethod { exact, antipodal, critical_path, identity, paper_literal };

std::string_view to_string(ConstructionMethod method);

struct ConstructionReport {
    RadioLabeling labeling;        // always valid
    long long formula_value;
    int achieved_span;
    int paper_literal_violations;  // violation count of the literal assignment
    ConstructionMethod method_chosen;
    unsigned seed_chosen;
};

inline constexpr unsigned kDefaultSeeds[] = {0, 1, 2, 3};

// Tournament over greedy completions of every ordering variant x seed (the
// unperturbed identity ordering is always entered), plus the literal
// assignment when it verifies cleanly. Returns the minimum-span valid
// labeling under the documented tie-break.
ConstructionReport construct_best(int n, int m,
                                  std::span<const unsigned> seeds = kDefaultSeeds);

} // namespace starprism

#endif // STARPRISM_CONSTRUCTION_HPP
