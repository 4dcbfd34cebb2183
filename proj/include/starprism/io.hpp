#ifndef STARPRISM_IO_HPP
#define STARPRISM_IO_HPP

#include <span>
#include <string>

#include "starprism/construction.hpp"
#include "starprism/solver.hpp"

namespace starprism {

// Graphviz source; vertices in id order (cycle-major for products),
// edges sorted.
std::string to_dot(const Graph& g);

// {"kind": ..., "n": ..., "m": ..., "vertex_count": N, "edges": [[a,b], ...]}
// with edges sorted lexicographically; n/m present only when meaningful.
std::string graph_to_json(const Graph& g);
Graph graph_from_json(const std::string& text);

// {"n", "m", "diameter", "method", "span", "valid", "labels": [...]} with
// labels sorted by (cycle_index, star_index) and cycle indices 1-based.
// Labelings are shifted to minimum label 0 before writing. Graphs without
// product coordinates use {"vertex_count", ...} and integer vertex ids.
std::string labeling_to_json(const Graph& g, int diameter, const RadioLabeling& phi,
                             bool valid);

struct ParsedLabeling {
    int n;
    int m;
    RadioLabeling labeling;
};

// Reads the product-graph labeling schema; "span" and "valid" are outputs
// and are recomputed, everything structural is validated.
ParsedLabeling labeling_from_json(const std::string& text);

// Labeling JSON plus formula_value / paper_literal_violations /
// method_chosen / seed.
std::string report_to_json(const Graph& g, int diameter, const ConstructionReport& report);

std::string exact_to_json(const Graph& g, int diameter, const ExactResult& result);

// "u,v,distance,required_gap,actual_gap" rows with display vertex names.
std::string violations_csv(const Graph& g, std::span<const Violation> violations);

} // namespace starprism

#endif // STARPRISM_IO_HPP
