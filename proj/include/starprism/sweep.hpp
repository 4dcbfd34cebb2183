#ifndef STARPRISM_SWEEP_HPP
#define STARPRISM_SWEEP_HPP

#include <chrono>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "starprism/construction.hpp"

namespace starprism {

// Inclusive integer interval (the CLI's "a..b").
struct IntRange {
    int lo;
    int hi;
};

struct SweepOptions {
    int jobs = 1;
    int exact_vertex_cap = 15;  // exact solve only when (n+1)*m fits
    std::chrono::milliseconds budget{60000};
    std::vector<unsigned> seeds{0, 1, 2, 3};
};

struct SweepRecord {
    int n;
    int m;
    Parity parity;
    long long formula_rn;
    int constructed_span;
    int paper_literal_violations;
    std::optional<int> exact_rn;  // empty when the instance was skipped
    std::string exact_status;     // proven | budget-exceeded-upper-bound | skipped
    long long elapsed_ms;         // wall time; serialized only on request
};

// One record per (n, m) in the grid that lies inside the formula range,
// in ascending (n, m) order regardless of the execution schedule. The same
// ranges and seeds always produce the same records.
std::vector<SweepRecord> run_sweep(IntRange n_range, IntRange m_range,
                                   const SweepOptions& options = {});

// CSV with the fixed header
//   n,m,parity,formula_rn,constructed_span,paper_literal_violations,exact_rn,exact_status,elapsed_ms
// exact_rn is empty for skipped rows. elapsed_ms is left empty unless
// include_timing is set, so default output is reproducible byte for byte.
std::string sweep_csv(std::span<const SweepRecord> records, bool include_timing = false);

// Parses CSV produced by sweep_csv (elapsed_ms may be empty).
std::vector<SweepRecord> parse_sweep_csv(const std::string& text);

} // namespace starprism

#endif // STARPRISM_SWEEP_HPP
