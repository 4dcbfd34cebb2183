#include "starprism/distance.hpp"

#include <algorithm>
#include <queue>

#include "starprism/errors.hpp"

namespace starprism {

DistanceMatrix::DistanceMatrix(int size, std::vector<int> dist)
    : size_(size), d_(std::move(dist)), diameter_(0) {
    diameter_ = *std::max_element(d_.begin(), d_.end());
}

DistanceMatrix all_pairs_distances(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> dist(static_cast<size_t>(n) * n, -1);

    std::vector<int> queue;
    queue.reserve(static_cast<size_t>(n));
    for (int src = 0; src < n; ++src) {
        int* row = dist.data() + static_cast<size_t>(src) * n;
        queue.clear();
        queue.push_back(src);
        row[src] = 0;
        for (size_t head = 0; head < queue.size(); ++head) {
            const int u = queue[head];
            for (int v : g.neighbors(u)) {
                if (row[v] < 0) {
                    row[v] = row[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        for (int v = 0; v < n; ++v) {
            if (row[v] < 0) {
                throw DisconnectedGraphError(
                    src, v,
                    "graph is disconnected: " + g.vertex_name(src) +
                        " cannot reach " + g.vertex_name(v));
            }
        }
    }
    return DistanceMatrix(n, std::move(dist));
}

} // namespace starprism
