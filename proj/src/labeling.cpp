#include "starprism/labeling.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "starprism/errors.hpp"

namespace starprism {

std::string_view to_string(LabelMethod method) {
    switch (method) {
        case LabelMethod::paper_literal: return "paper-literal";
        case LabelMethod::ordering_greedy: return "ordering-greedy";
        case LabelMethod::exact: return "exact";
        case LabelMethod::external: return "external";
    }
    return "external";
}

LabelMethod label_method_from_string(std::string_view s) {
    if (s == "paper-literal") return LabelMethod::paper_literal;
    if (s == "ordering-greedy") return LabelMethod::ordering_greedy;
    if (s == "exact") return LabelMethod::exact;
    if (s == "external") return LabelMethod::external;
    throw InvalidParameterError("unknown labeling method '" + std::string(s) + "'");
}

int required_gap(int diameter, int distance) {
    if (distance < 1 || distance > diameter) {
        throw InvalidParameterError("distance " + std::to_string(distance) +
                                    " outside [1, " + std::to_string(diameter) + "]");
    }
    return diameter + 1 - distance;
}

std::vector<Violation> verify(const DistanceMatrix& dm, const RadioLabeling& phi) {
    const int n = dm.size();
    if (static_cast<int>(phi.labels.size()) != n) {
        throw MalformedLabelingError("labeling covers " + std::to_string(phi.labels.size()) +
                                     " vertices, graph has " + std::to_string(n));
    }
    for (int v = 0; v < n; ++v) {
        if (phi.labels[static_cast<size_t>(v)] < 0) {
            throw MalformedLabelingError("negative label on vertex " + std::to_string(v));
        }
    }

    const int diam = dm.diameter();
    std::vector<Violation> out;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            const int need = diam + 1 - dm.at(u, v);
            const int gap = std::abs(phi.labels[static_cast<size_t>(u)] -
                                     phi.labels[static_cast<size_t>(v)]);
            if (gap < need) {
                out.push_back(Violation{u, v, dm.at(u, v), need, gap});
            }
        }
    }
    return out;  // (u, v) loop order is already sorted
}

int span_of(const RadioLabeling& phi) {
    if (phi.labels.empty()) {
        throw InvalidParameterError("span of an empty labeling");
    }
    auto [lo, hi] = std::minmax_element(phi.labels.begin(), phi.labels.end());
    return *hi - *lo;
}

RadioLabeling greedy_from_ordering(const DistanceMatrix& dm, std::span<const int> ordering) {
    const int n = dm.size();
    if (static_cast<int>(ordering.size()) != n) {
        throw InvalidParameterError("ordering has " + std::to_string(ordering.size()) +
                                    " entries, graph has " + std::to_string(n) + " vertices");
    }
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (int v : ordering) {
        if (v < 0 || v >= n || seen[static_cast<size_t>(v)]) {
            throw InvalidParameterError("ordering is not a permutation of the vertices");
        }
        seen[static_cast<size_t>(v)] = 1;
    }

    const int diam = dm.diameter();
    RadioLabeling phi;
    phi.labels.assign(static_cast<size_t>(n), 0);
    phi.method = LabelMethod::ordering_greedy;
    for (size_t i = 1; i < ordering.size(); ++i) {
        const int v = ordering[i];
        int label = 0;
        for (size_t j = 0; j < i; ++j) {
            const int u = ordering[j];
            label = std::max(label, phi.labels[static_cast<size_t>(u)] + diam + 1 - dm.at(u, v));
        }
        phi.labels[static_cast<size_t>(v)] = label;
    }
    phi.span = span_of(phi);
    phi.normalized = true;
    return phi;
}

Table1Row table1_row(int m, int distance) {
    if (m < 5 || m % 2 == 0) {
        throw InvalidParameterError("taxonomy applies to odd m >= 5");
    }
    const int diam = (m - 1) / 2;
    if (distance < 1 || distance > diam) {
        throw InvalidParameterError("distance " + std::to_string(distance) +
                                    " outside [1, " + std::to_string(diam) + "]");
    }
    if (distance == diam) return Table1Row::c1;      // required gap 1
    if (distance == 1) return Table1Row::c4;         // adjacent, required gap (m-1)/2
    if (distance == diam - 1) return Table1Row::c2;  // required gap 2
    return Table1Row::c3;
}

} // namespace starprism
