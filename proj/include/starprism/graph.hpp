#ifndef STARPRISM_GRAPH_HPP
#define STARPRISM_GRAPH_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace starprism {

// Coordinates of a product-graph vertex: (v_i, u_j) with star_index i
// (0 = central vertex) and 0-based cycle_index j (files render j 1-based).
struct VertexKey {
    int star_index;
    int cycle_index;
    bool operator==(const VertexKey&) const = default;
};

enum class GraphKind { star, cycle, strong_product, generic };

std::string_view to_string(GraphKind kind);
GraphKind graph_kind_from_string(std::string_view s);

// Undirected simple graph. Vertices are dense ids 0..vertex_count-1; for a
// star-cycle strong product the id layout is cycle-major: id = j*(n+1) + i.
class Graph {
public:
    static Graph star(int n);
    static Graph cycle(int m);
    static Graph strong_product(const Graph& a, const Graph& b);
    static Graph star_cycle_product(int n, int m);
    static Graph from_edges(int vertex_count, std::vector<std::pair<int, int>> edges,
                            GraphKind kind = GraphKind::generic, int n = -1, int m = -1);

    int vertex_count() const { return vertex_count_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[static_cast<size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(adj_[static_cast<size_t>(v)].size()); }
    bool adjacent(int u, int v) const;

    GraphKind kind() const { return kind_; }
    // Parameters of the generating star/cycle; -1 when not applicable.
    int star_order() const { return n_; }
    int cycle_order() const { return m_; }

    bool is_star_cycle_product() const {
        return kind_ == GraphKind::strong_product && n_ >= 1 && m_ >= 3;
    }

    VertexKey key_of(int id) const;
    int id_of(VertexKey key) const;

    // Display name: s<i>c<j> for product vertices (j 1-based), s<i> / c<j>
    // for bare stars and cycles, v<id> otherwise.
    std::string vertex_name(int id) const;

    bool operator==(const Graph& other) const;

private:
    Graph() = default;

    int vertex_count_ = 0;
    std::vector<std::pair<int, int>> edges_;  // normalized (a < b), sorted
    std::vector<std::vector<int>> adj_;
    GraphKind kind_ = GraphKind::generic;
    int n_ = -1;
    int m_ = -1;
};

} // namespace starprism

#endif // STARPRISM_GRAPH_HPP
