#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

namespace onep {

/// Unordered edge, stored with u <= v.
struct Edge {
    int u = -1;
    int v = -1;

    Edge() = default;
    Edge(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {}

    bool operator==(const Edge&) const = default;
    auto operator<=>(const Edge&) const = default;
};

/// Simple undirected graph over dense vertex ids 0..n-1.
/// Adjacency lists are kept sorted; no loops, no parallel edges.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adj_(n) {}

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return edge_count_; }

    int add_vertex();
    /// Inserts edge uv. Loops and duplicates are rejected with std::invalid_argument.
    void add_edge(int u, int v);
    /// Removes edge uv; throws if absent.
    void remove_edge(int u, int v);
    bool has_edge(int u, int v) const;

    int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
    const std::vector<int>& neighbors(int v) const { return adj_.at(v); }

    int max_degree() const;
    std::vector<Edge> edges() const;

    bool is_connected() const;
    /// Component id per vertex, ids dense from 0.
    std::vector<int> components(int* count = nullptr) const;

private:
    std::vector<std::vector<int>> adj_;
    int edge_count_ = 0;
};

}  // namespace onep
