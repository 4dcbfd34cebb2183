#include "starprism/construction.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <tuple>

#include "starprism/errors.hpp"

namespace starprism {

std::string_view to_string(Parity parity) {
    return parity == Parity::even ? "even" : "odd";
}

bool in_theorem_range(int n, int m) {
    if (n < 2) return false;
    return m % 2 == 0 ? m >= 4 : m >= 5;
}

namespace {

void require_theorem_range(int n, int m) {
    if (n < 2) {
        throw TheoremRangeError("n must be >= 2, got " + std::to_string(n));
    }
    if (m % 2 == 0 && m < 4) {
        throw TheoremRangeError("even m must be >= 4, got " + std::to_string(m));
    }
    if (m % 2 != 0 && m < 5) {
        throw TheoremRangeError("odd m must be >= 5, got " + std::to_string(m));
    }
}

int product_vertex_id(int n, int star_index, int cycle_index0) {
    return cycle_index0 * (n + 1) + star_index;
}

// Deterministic engine mixed from (seed, substar); keeps runs reproducible
// across platforms together with the hand-rolled shuffle below.
std::mt19937_64 leaf_rng(unsigned seed, int substar) {
    const unsigned long long mix =
        static_cast<unsigned long long>(seed) * 0x9E3779B97F4A7C15ull ^
        (static_cast<unsigned long long>(substar) + 1) * 0xBF58476D1CE4E5B9ull;
    return std::mt19937_64(mix);
}

void shuffle_in_place(std::vector<int>& v, std::mt19937_64& rng) {
    for (size_t i = v.size(); i > 1; --i) {
        std::swap(v[i - 1], v[rng() % i]);
    }
}

} // namespace

FormulaResult closed_form_rn(int n, int m) {
    require_theorem_range(n, m);
    const long long N = n;
    const long long M = m;
    FormulaResult result{n, m, m % 2 == 0 ? Parity::even : Parity::odd, 0};
    if (result.parity == Parity::even) {
        result.value = (M * M + M * (M - 1) + (N - 1) * (M - 2)) / 2;
    } else {
        result.value = (M * M + 4 * M * N + 5 * M - 8 * N + 18) / 2;
    }
    return result;
}

RadioLabeling paper_literal_labeling(int n, int m) {
    require_theorem_range(n, m);
    RadioLabeling phi;
    phi.labels.assign(static_cast<size_t>((n + 1) * m), 0);
    phi.method = LabelMethod::paper_literal;

    const bool even = m % 2 == 0;
    const int center_step = even ? m / 2 : (m - 1) / 2;
    const int leaf_offset = even ? m / 2 : (m - 1) / 2;
    const int leaf_step = even ? (m - 2) / 2 : 1;
    for (int j0 = 0; j0 < m; ++j0) {
        const int center = j0 * center_step;
        phi.labels[static_cast<size_t>(product_vertex_id(n, 0, j0))] = center;
        for (int k = 1; k <= n; ++k) {
            phi.labels[static_cast<size_t>(product_vertex_id(n, k, j0))] =
                center + leaf_offset + (k - 1) * leaf_step;
        }
    }
    phi.span = span_of(phi);
    phi.normalized = true;
    return phi;
}

std::string_view to_string(OrderingVariant variant) {
    switch (variant) {
        case OrderingVariant::antipodal: return "antipodal";
        case OrderingVariant::critical_path: return "critical-path";
        case OrderingVariant::identity: return "identity";
    }
    return "identity";
}

OrderingVariant ordering_variant_from_string(std::string_view s) {
    if (s == "antipodal") return OrderingVariant::antipodal;
    if (s == "critical-path") return OrderingVariant::critical_path;
    if (s == "identity") return OrderingVariant::identity;
    throw InvalidParameterError("unknown ordering variant '" + std::string(s) + "'");
}

std::vector<int> heuristic_ordering(int n, int m, OrderingVariant variant, unsigned seed) {
    if (n < 1) {
        throw InvalidParameterError("star order must be >= 1, got " + std::to_string(n));
    }
    if (m < 3) {
        throw InvalidParameterError("cycle length must be >= 3, got " + std::to_string(m));
    }
    if (variant == OrderingVariant::critical_path && m % 2 == 0) {
        throw InvalidParameterError("critical-path ordering requires an odd cycle, got m = " +
                                    std::to_string(m));
    }

    // Substar visit order, 0-based.
    std::vector<int> substars;
    substars.reserve(static_cast<size_t>(m));
    switch (variant) {
        case OrderingVariant::antipodal: {
            std::vector<char> used(static_cast<size_t>(m), 0);
            const int half = m / 2;
            for (int j = 0; j < m; ++j) {
                if (!used[static_cast<size_t>(j)]) {
                    used[static_cast<size_t>(j)] = 1;
                    substars.push_back(j);
                }
                const int k = (j + half) % m;
                if (!used[static_cast<size_t>(k)]) {
                    used[static_cast<size_t>(k)] = 1;
                    substars.push_back(k);
                }
            }
            break;
        }
        case OrderingVariant::critical_path: {
            // Endpoint substars of the critical paths first, then the
            // remaining substars paired with the one (m-1)/2 ahead.
            substars.push_back(0);
            substars.push_back((m + 1) / 2 - 1);
            substars.push_back(m - 1);
            for (int i0 = 1; i0 <= (m - 1) / 2 - 1; ++i0) {
                substars.push_back(i0);
                substars.push_back(i0 + (m - 1) / 2);
            }
            break;
        }
        case OrderingVariant::identity: {
            for (int j = 0; j < m; ++j) substars.push_back(j);
            break;
        }
    }

    const int middle = (m + 1) / 2 - 1;  // 0-based substar holding the raised priorities
    std::vector<int> ordering;
    ordering.reserve(static_cast<size_t>((n + 1) * m));
    for (int j0 : substars) {
        ordering.push_back(product_vertex_id(n, 0, j0));
        std::vector<int> leaves(static_cast<size_t>(n));
        for (int k = 1; k <= n; ++k) leaves[static_cast<size_t>(k - 1)] = k;
        if (seed != 0) {
            auto rng = leaf_rng(seed, j0);
            shuffle_in_place(leaves, rng);
        }
        if (variant == OrderingVariant::critical_path && j0 == middle) {
            // Path-priority tiers: leaves 2 and 3, then leaf 1, then the rest.
            auto tier = [](int k) { return k == 2 || k == 3 ? 0 : (k == 1 ? 1 : 2); };
            std::stable_sort(leaves.begin(), leaves.end(),
                             [&](int a, int b) { return tier(a) < tier(b); });
        }
        for (int k : leaves) {
            ordering.push_back(product_vertex_id(n, k, j0));
        }
    }
    return ordering;
}

std::string_view to_string(ConstructionMethod method) {
    switch (method) {
        case ConstructionMethod::exact: return "exact";
        case ConstructionMethod::antipodal: return "antipodal";
        case ConstructionMethod::critical_path: return "critical-path";
        case ConstructionMethod::identity: return "identity";
        case ConstructionMethod::paper_literal: return "paper-literal";
    }
    return "identity";
}

ConstructionReport construct_best(int n, int m, std::span<const unsigned> seeds) {
    const FormulaResult formula = closed_form_rn(n, m);
    const Graph g = Graph::star_cycle_product(n, m);
    const DistanceMatrix dm = all_pairs_distances(g);

    const RadioLabeling literal = paper_literal_labeling(n, m);
    const int literal_violations = static_cast<int>(verify(dm, literal).size());

    struct Candidate {
        ConstructionMethod method;
        unsigned seed;
        RadioLabeling labeling;
    };
    std::vector<Candidate> candidates;

    auto add_greedy = [&](OrderingVariant variant, ConstructionMethod method, unsigned seed) {
        const std::vector<int> ordering = heuristic_ordering(n, m, variant, seed);
        candidates.push_back(Candidate{method, seed, greedy_from_ordering(dm, ordering)});
    };

    add_greedy(OrderingVariant::identity, ConstructionMethod::identity, 0);
    for (unsigned seed : seeds) {
        add_greedy(OrderingVariant::antipodal, ConstructionMethod::antipodal, seed);
        if (m % 2 != 0) {
            add_greedy(OrderingVariant::critical_path, ConstructionMethod::critical_path, seed);
        }
        if (seed != 0) {
            add_greedy(OrderingVariant::identity, ConstructionMethod::identity, seed);
        }
    }
    if (literal_violations == 0) {
        candidates.push_back(Candidate{ConstructionMethod::paper_literal, 0, literal});
    }

    const Candidate* best = &candidates.front();
    auto key = [](const Candidate& c) {
        return std::make_tuple(c.labeling.span, static_cast<int>(c.method), c.seed);
    };
    for (const Candidate& c : candidates) {
        if (key(c) < key(*best)) best = &c;
    }

    return ConstructionReport{best->labeling, formula.value, best->labeling.span,
                              literal_violations, best->method, best->seed};
}

} // namespace starprism
