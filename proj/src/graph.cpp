#include "starprism/graph.hpp"

#include <algorithm>
#include <stdexcept>

#include "starprism/errors.hpp"

namespace starprism {

std::string_view to_string(GraphKind kind) {
    switch (kind) {
        case GraphKind::star: return "star";
        case GraphKind::cycle: return "cycle";
        case GraphKind::strong_product: return "strong_product";
        case GraphKind::generic: return "generic";
    }
    return "generic";
}

GraphKind graph_kind_from_string(std::string_view s) {
    if (s == "star") return GraphKind::star;
    if (s == "cycle") return GraphKind::cycle;
    if (s == "strong_product") return GraphKind::strong_product;
    if (s == "generic") return GraphKind::generic;
    throw InvalidParameterError("unknown graph kind '" + std::string(s) + "'");
}

Graph Graph::from_edges(int vertex_count, std::vector<std::pair<int, int>> edges,
                        GraphKind kind, int n, int m) {
    if (vertex_count < 1) {
        throw InvalidParameterError("graph needs at least one vertex");
    }
    for (auto& [a, b] : edges) {
        if (a < 0 || b < 0 || a >= vertex_count || b >= vertex_count) {
            throw InvalidParameterError("edge endpoint out of range");
        }
        if (a == b) {
            throw InvalidParameterError("self-loop on vertex " + std::to_string(a));
        }
        if (a > b) std::swap(a, b);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
        throw InvalidParameterError("duplicate edge");
    }

    Graph g;
    g.vertex_count_ = vertex_count;
    g.edges_ = std::move(edges);
    g.kind_ = kind;
    g.n_ = n;
    g.m_ = m;
    g.adj_.assign(static_cast<size_t>(vertex_count), {});
    for (auto [a, b] : g.edges_) {
        g.adj_[static_cast<size_t>(a)].push_back(b);
        g.adj_[static_cast<size_t>(b)].push_back(a);
    }
    for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
    return g;
}

Graph Graph::star(int n) {
    if (n < 1) {
        throw InvalidParameterError("star order must be >= 1, got " + std::to_string(n));
    }
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(n));
    for (int k = 1; k <= n; ++k) edges.emplace_back(0, k);
    return from_edges(n + 1, std::move(edges), GraphKind::star, n, -1);
}

Graph Graph::cycle(int m) {
    if (m < 3) {
        throw InvalidParameterError("cycle length must be >= 3, got " + std::to_string(m));
    }
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(m));
    for (int j = 0; j < m; ++j) edges.emplace_back(j, (j + 1) % m);
    return from_edges(m, std::move(edges), GraphKind::cycle, -1, m);
}

Graph Graph::strong_product(const Graph& a, const Graph& b) {
    if (a.vertex_count() == 0 || b.vertex_count() == 0) {
        throw InvalidParameterError("strong product of an empty graph");
    }
    const int na = a.vertex_count();
    const int nb = b.vertex_count();
    const int total = na * nb;

    // id layout: second factor major, so star-cycle products come out
    // ordered by (cycle_index, star_index).
    auto id = [na](int ia, int ib) { return ib * na + ia; };

    std::vector<std::pair<int, int>> edges;
    for (int ib = 0; ib < nb; ++ib) {
        for (int ia = 0; ia < na; ++ia) {
            const int u = id(ia, ib);
            // same second coordinate, adjacent first
            for (int ja : a.neighbors(ia)) {
                if (ja > ia) edges.emplace_back(u, id(ja, ib));
            }
            for (int jb : b.neighbors(ib)) {
                if (jb < ib) continue;  // count each unordered pair once
                // same first coordinate, adjacent second
                edges.emplace_back(u, id(ia, jb));
                // adjacent in both coordinates
                for (int ja : a.neighbors(ia)) {
                    edges.emplace_back(u, id(ja, jb));
                }
            }
        }
    }
    for (auto& [u, v] : edges) {
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    const bool recognized = a.kind() == GraphKind::star && b.kind() == GraphKind::cycle;
    return from_edges(total, std::move(edges), GraphKind::strong_product,
                      recognized ? a.star_order() : -1,
                      recognized ? b.cycle_order() : -1);
}

Graph Graph::star_cycle_product(int n, int m) {
    return strong_product(star(n), cycle(m));
}

bool Graph::adjacent(int u, int v) const {
    const auto& nb = adj_[static_cast<size_t>(u)];
    return std::binary_search(nb.begin(), nb.end(), v);
}

VertexKey Graph::key_of(int id) const {
    if (!is_star_cycle_product()) {
        throw InvalidParameterError("vertex keys exist only on star-cycle products");
    }
    const int width = n_ + 1;
    return VertexKey{id % width, id / width};
}

int Graph::id_of(VertexKey key) const {
    if (!is_star_cycle_product()) {
        throw InvalidParameterError("vertex keys exist only on star-cycle products");
    }
    if (key.star_index < 0 || key.star_index > n_ || key.cycle_index < 0 || key.cycle_index >= m_) {
        throw InvalidParameterError("vertex key out of range");
    }
    return key.cycle_index * (n_ + 1) + key.star_index;
}

std::string Graph::vertex_name(int id) const {
    if (is_star_cycle_product()) {
        const VertexKey key = key_of(id);
        return "s" + std::to_string(key.star_index) + "c" + std::to_string(key.cycle_index + 1);
    }
    if (kind_ == GraphKind::star) return "s" + std::to_string(id);
    if (kind_ == GraphKind::cycle) return "c" + std::to_string(id + 1);
    return "v" + std::to_string(id);
}

bool Graph::operator==(const Graph& other) const {
    return kind_ == other.kind_ && n_ == other.n_ && m_ == other.m_ &&
           vertex_count_ == other.vertex_count_ && edges_ == other.edges_;
}

} // namespace starprism
