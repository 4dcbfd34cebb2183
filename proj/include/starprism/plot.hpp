#ifndef STARPRISM_PLOT_HPP
#define STARPRISM_PLOT_HPP

#include <span>
#include <string>

#include "starprism/sweep.hpp"

namespace starprism {

// Long-form "parity,m,n,formula_rn" rows of the plotted series, sorted by
// (parity, m, n) with even first.
std::string plot_tidy_csv(std::span<const SweepRecord> records);

// Self-contained SVG: one panel per parity, one polyline per fixed m, the
// formula value as a function of n.
std::string plot_svg(std::span<const SweepRecord> records);

} // namespace starprism

#endif // STARPRISM_PLOT_HPP
