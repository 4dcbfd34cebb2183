#include "starprism/solver.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "starprism/errors.hpp"

namespace starprism {

std::string_view to_string(ExactStatus status) {
    return status == ExactStatus::proven ? "proven" : "budget-exceeded-upper-bound";
}

ExactResult brute_force_rn(const DistanceMatrix& dm) {
    const int n = dm.size();
    if (n > 10) {
        throw OracleSizeError("brute-force oracle is capped at 10 vertices, got " +
                              std::to_string(n));
    }
    const auto start = std::chrono::steady_clock::now();
    const int diam = dm.diameter();

    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> labels(static_cast<size_t>(n), 0);
    std::vector<int> best_perm = perm;
    int best = std::numeric_limits<int>::max();
    long long count = 0;
    do {
        ++count;
        labels[static_cast<size_t>(perm[0])] = 0;
        int span = 0;
        for (int i = 1; i < n; ++i) {
            const int v = perm[static_cast<size_t>(i)];
            int lab = 0;
            for (int j = 0; j < i; ++j) {
                const int u = perm[static_cast<size_t>(j)];
                lab = std::max(lab, labels[static_cast<size_t>(u)] + diam + 1 - dm.at(u, v));
            }
            labels[static_cast<size_t>(v)] = lab;
            span = lab;  // labels increase along the ordering
        }
        if (span < best) {
            best = span;
            best_perm = perm;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    RadioLabeling witness = greedy_from_ordering(dm, best_perm);
    witness.method = LabelMethod::exact;
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    return ExactResult{best, std::move(witness), ExactStatus::proven, count, elapsed};
}

namespace {

// Vertices with identical distance profiles are interchangeable for any
// labeling, so within such a class only the lowest unplaced id may enter
// the ordering next. Cuts the leaf symmetry of product graphs.
std::vector<std::vector<int>> twin_classes(const DistanceMatrix& dm, std::vector<int>& class_of) {
    const int n = dm.size();
    class_of.assign(static_cast<size_t>(n), -1);
    std::vector<std::vector<int>> classes;
    for (int v = 0; v < n; ++v) {
        if (class_of[static_cast<size_t>(v)] >= 0) continue;
        const int id = static_cast<int>(classes.size());
        classes.push_back({v});
        class_of[static_cast<size_t>(v)] = id;
        for (int w = v + 1; w < n; ++w) {
            if (class_of[static_cast<size_t>(w)] >= 0) continue;
            bool twin = true;
            for (int x = 0; x < n && twin; ++x) {
                if (x == v || x == w) continue;
                twin = dm.at(v, x) == dm.at(w, x);
            }
            if (twin) {
                class_of[static_cast<size_t>(w)] = id;
                classes[static_cast<size_t>(id)].push_back(w);
            }
        }
    }
    return classes;
}

struct Search {
    const DistanceMatrix& dm;
    int n;
    int diam;
    std::vector<int> class_of;
    std::vector<std::vector<int>> classes;
    std::vector<char> placed;
    std::vector<int> prefix;
    std::vector<int> labels;
    std::vector<int> best_labels;
    int best_span;
    long long nodes = 0;
    std::chrono::steady_clock::time_point deadline;
    bool out_of_time = false;

    Search(const DistanceMatrix& dm_, const RadioLabeling& incumbent,
           std::chrono::steady_clock::time_point deadline_)
        : dm(dm_),
          n(dm_.size()),
          diam(dm_.diameter()),
          placed(static_cast<size_t>(dm_.size()), 0),
          labels(static_cast<size_t>(dm_.size()), 0),
          best_labels(incumbent.labels),
          best_span(incumbent.span),
          deadline(deadline_) {
        classes = twin_classes(dm, class_of);
        prefix.reserve(static_cast<size_t>(n));
    }

    bool admissible(int v) const {
        for (int u : classes[static_cast<size_t>(class_of[static_cast<size_t>(v)])]) {
            if (u == v) return true;
            if (!placed[static_cast<size_t>(u)]) return false;
        }
        return true;
    }

    void expand() {
        if (out_of_time) return;
        const int count = static_cast<int>(prefix.size());
        const int remaining_after = n - count - 1;

        struct Child {
            int label;
            int v;
        };
        std::vector<Child> children;
        for (int v = 0; v < n; ++v) {
            if (placed[static_cast<size_t>(v)] || !admissible(v)) continue;
            int lab = 0;
            for (int u : prefix) {
                lab = std::max(lab, labels[static_cast<size_t>(u)] + diam + 1 - dm.at(u, v));
            }
            if (lab + remaining_after >= best_span) continue;
            children.push_back(Child{lab, v});
        }
        std::sort(children.begin(), children.end(),
                  [](const Child& a, const Child& b) {
                      return a.label != b.label ? a.label < b.label : a.v < b.v;
                  });

        for (const Child& c : children) {
            if (c.label + remaining_after >= best_span) continue;  // incumbent moved
            ++nodes;
            if ((nodes & 1023) == 0 && std::chrono::steady_clock::now() >= deadline) {
                out_of_time = true;
                return;
            }
            placed[static_cast<size_t>(c.v)] = 1;
            labels[static_cast<size_t>(c.v)] = c.label;
            prefix.push_back(c.v);
            if (count + 1 == n) {
                best_span = c.label;
                best_labels = labels;
            } else {
                expand();
            }
            prefix.pop_back();
            placed[static_cast<size_t>(c.v)] = 0;
            if (out_of_time) return;
        }
    }
};

RadioLabeling identity_greedy(const DistanceMatrix& dm) {
    std::vector<int> ordering(static_cast<size_t>(dm.size()));
    std::iota(ordering.begin(), ordering.end(), 0);
    return greedy_from_ordering(dm, ordering);
}

} // namespace

ExactResult exact_rn(const Graph& g, std::chrono::milliseconds budget, unsigned seed) {
    const auto start = std::chrono::steady_clock::now();
    const DistanceMatrix dm = all_pairs_distances(g);

    RadioLabeling incumbent;
    if (g.is_star_cycle_product() && in_theorem_range(g.star_order(), g.cycle_order())) {
        const unsigned seeds[] = {seed, seed + 1, seed + 2, seed + 3};
        incumbent = construct_best(g.star_order(), g.cycle_order(), seeds).labeling;
    } else {
        incumbent = identity_greedy(dm);
    }

    if (budget <= std::chrono::milliseconds::zero()) {
        incumbent.method = LabelMethod::exact;
        return ExactResult{incumbent.span, std::move(incumbent),
                           ExactStatus::budget_exceeded_upper_bound, 0,
                           std::chrono::milliseconds(0)};
    }

    Search search(dm, incumbent, start + budget);
    search.expand();

    RadioLabeling witness;
    witness.labels = std::move(search.best_labels);
    witness.span = search.best_span;
    witness.normalized = true;
    witness.method = LabelMethod::exact;
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    return ExactResult{search.best_span, std::move(witness),
                       search.out_of_time ? ExactStatus::budget_exceeded_upper_bound
                                          : ExactStatus::proven,
                       search.nodes, elapsed};
}

} // namespace starprism
