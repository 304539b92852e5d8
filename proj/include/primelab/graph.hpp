#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace primelab {

using VertexId = std::uint32_t;

/// Undirected edge in canonical form: first < second.
struct Edge {
    VertexId u = 0;
    VertexId v = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple connected graph on vertices 0..vertex_count()-1.
///
/// Construction canonicalizes every edge to (min, max), drops duplicates and
/// rejects self-loops, out-of-range endpoints and disconnected edge sets with
/// InvalidParameter.
class Graph {
public:
    Graph(std::size_t vertex_count, std::vector<Edge> edges);

    std::size_t vertex_count() const noexcept { return adjacency_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    /// Edges sorted ascending by (u, v).
    std::span<const Edge> edges() const noexcept { return edges_; }
    std::span<const VertexId> neighbors(VertexId v) const { return adjacency_.at(v); }
    std::size_t degree(VertexId v) const { return adjacency_.at(v).size(); }
    bool has_edge(VertexId a, VertexId b) const;

    friend bool operator==(const Graph& a, const Graph& b) noexcept {
        return a.vertex_count() == b.vertex_count() && a.edges_ == b.edges_;
    }

private:
    std::vector<Edge> edges_;
    std::vector<std::vector<VertexId>> adjacency_;
};

Graph path(int n);
Graph cycle(int n);
/// Center is vertex 0, leaves are 1..n.
Graph star(int n);

/// Vertex (a, b) gets id a * |V(h)| + b.
Graph cartesian_product(const Graph& g, const Graph& h);

}  // namespace primelab
