#include "onep/graph.hpp"

#include <stdexcept>

namespace onep {

int Graph::add_vertex() {
    adj_.emplace_back();
    return vertex_count() - 1;
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
        throw std::invalid_argument("add_edge: vertex out of range");
    if (u == v) throw std::invalid_argument("add_edge: loop");
    if (has_edge(u, v)) throw std::invalid_argument("add_edge: parallel edge");
    adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
    adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
    ++edge_count_;
}

void Graph::remove_edge(int u, int v) {
    if (!has_edge(u, v)) throw std::invalid_argument("remove_edge: no such edge");
    auto erase = [&](int a, int b) {
        auto it = std::lower_bound(adj_[a].begin(), adj_[a].end(), b);
        adj_[a].erase(it);
    };
    erase(u, v);
    erase(v, u);
    --edge_count_;
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count()) return false;
    const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    int t = adj_[u].size() <= adj_[v].size() ? v : u;
    return std::binary_search(a.begin(), a.end(), t);
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& a : adj_) d = std::max<int>(d, static_cast<int>(a.size()));
    return d;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::vector<int> Graph::components(int* count) const {
    std::vector<int> comp(vertex_count(), -1);
    int c = 0;
    std::vector<int> stack;
    for (int s = 0; s < vertex_count(); ++s) {
        if (comp[s] != -1) continue;
        comp[s] = c;
        stack.push_back(s);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : adj_[u])
                if (comp[v] == -1) {
                    comp[v] = c;
                    stack.push_back(v);
                }
        }
        ++c;
    }
    if (count) *count = c;
    return comp;
}

bool Graph::is_connected() const {
    if (vertex_count() == 0) return true;
    int c = 0;
    components(&c);
    return c <= 1;
}

}  // namespace onep
