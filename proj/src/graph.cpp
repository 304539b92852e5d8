#include "primelab/graph.hpp"

#include <algorithm>
#include <string>

#include "primelab/error.hpp"

namespace primelab {

namespace {

bool is_connected(const std::vector<std::vector<VertexId>>& adjacency) {
    if (adjacency.empty()) {
        return false;
    }
    std::vector<bool> seen(adjacency.size(), false);
    std::vector<VertexId> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const VertexId v = stack.back();
        stack.pop_back();
        for (VertexId w : adjacency[v]) {
            if (!seen[w]) {
                seen[w] = true;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == adjacency.size();
}

}  // namespace

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges) : adjacency_(vertex_count) {
    if (vertex_count == 0) {
        throw InvalidParameter("graph must have at least one vertex");
    }
    for (Edge& e : edges) {
        if (e.u == e.v) {
            throw InvalidParameter("self-loop at vertex " + std::to_string(e.u));
        }
        if (e.u >= vertex_count || e.v >= vertex_count) {
            throw InvalidParameter("edge endpoint out of range");
        }
        if (e.u > e.v) {
            std::swap(e.u, e.v);
        }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);

    for (const Edge& e : edges_) {
        adjacency_[e.u].push_back(e.v);
        adjacency_[e.v].push_back(e.u);
    }
    for (auto& list : adjacency_) {
        std::sort(list.begin(), list.end());
    }
    if (!is_connected(adjacency_)) {
        throw InvalidParameter("graph is not connected");
    }
}

bool Graph::has_edge(VertexId a, VertexId b) const {
    if (a >= vertex_count() || b >= vertex_count()) {
        return false;
    }
    const auto& list = adjacency_[a];
    return std::binary_search(list.begin(), list.end(), b);
}

Graph path(int n) {
    if (n < 2) {
        throw InvalidParameter("path requires n >= 2, got " + std::to_string(n));
    }
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) {
        edges.push_back({VertexId(i), VertexId(i + 1)});
    }
    return Graph(std::size_t(n), std::move(edges));
}

Graph cycle(int n) {
    if (n < 3) {
        throw InvalidParameter("cycle requires n >= 3, got " + std::to_string(n));
    }
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
        edges.push_back({VertexId(i), VertexId((i + 1) % n)});
    }
    return Graph(std::size_t(n), std::move(edges));
}

Graph star(int n) {
    if (n < 1) {
        throw InvalidParameter("star requires n >= 1, got " + std::to_string(n));
    }
    std::vector<Edge> edges;
    for (int i = 1; i <= n; ++i) {
        edges.push_back({0, VertexId(i)});
    }
    return Graph(std::size_t(n) + 1, std::move(edges));
}

Graph cartesian_product(const Graph& g, const Graph& h) {
    const auto hn = VertexId(h.vertex_count());
    const auto gn = VertexId(g.vertex_count());
    auto id = [hn](VertexId a, VertexId b) { return a * hn + b; };

    std::vector<Edge> edges;
    edges.reserve(g.edge_count() * hn + gn * h.edge_count());
    for (VertexId a = 0; a < gn; ++a) {
        for (const Edge& e : h.edges()) {
            edges.push_back({id(a, e.u), id(a, e.v)});
        }
    }
    for (const Edge& e : g.edges()) {
        for (VertexId b = 0; b < hn; ++b) {
            edges.push_back({id(e.u, b), id(e.v, b)});
        }
    }
    return Graph(std::size_t(gn) * hn, std::move(edges));
}

}  // namespace primelab
