#ifndef STARPRISM_DISTANCE_HPP
#define STARPRISM_DISTANCE_HPP

#include <vector>

#include "starprism/graph.hpp"

namespace starprism {

// Dense all-pairs hop distances with the diameter cached. Immutable after
// construction; safe to share across threads.
class DistanceMatrix {
public:
    DistanceMatrix(int size, std::vector<int> dist);

    int size() const { return size_; }
    int at(int u, int v) const { return d_[static_cast<size_t>(u) * size_ + v]; }
    int diameter() const { return diameter_; }

private:
    int size_;
    std::vector<int> d_;
    int diameter_;
};

// BFS from every vertex; throws DisconnectedGraphError naming an
// unreachable pair when the graph is not connected.
DistanceMatrix all_pairs_distances(const Graph& g);

} // namespace starprism

#endif // STARPRISM_DISTANCE_HPP
