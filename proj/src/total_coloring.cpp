#include "onep/total_coloring.hpp"

#include <algorithm>
#include <array>
#include <climits>
#include <set>
#include <stdexcept>
#include <string>

namespace onep {

namespace {

std::string vname(int v) { return "vertex " + std::to_string(v + 1); }
std::string ename(Edge e) {
    return "edge " + std::to_string(e.u + 1) + "-" + std::to_string(e.v + 1);
}

}  // namespace

ValidationReport verify_total_coloring(const Graph& g, const TotalColoring& c, int k) {
    ValidationReport rep;
    const int n = g.vertex_count();
    if (static_cast<int>(c.vertex_colors.size()) != n) {
        rep.add("shape", "coloring", "vertex color table does not match graph");
        return rep;
    }
    for (int v = 0; v < n; ++v) {
        int col = c.vertex_colors[v];
        if (col == 0)
            rep.add("unassigned", vname(v), "vertex has no color");
        else if (col < 1 || col > k)
            rep.add("palette", vname(v), "color " + std::to_string(col) + " outside 1.." + std::to_string(k));
    }
    auto edges = g.edges();
    for (const Edge& e : edges) {
        int col = c.edge_color(e);
        if (col == 0)
            rep.add("unassigned", ename(e), "edge has no color");
        else if (col < 1 || col > k)
            rep.add("palette", ename(e), "color " + std::to_string(col) + " outside 1.." + std::to_string(k));
    }
    for (const auto& [e, col] : c.edge_colors)
        if (!g.has_edge(e.u, e.v))
            rep.add("shape", ename(e), "colored edge not in graph");

    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u)) {
            if (u < v && c.vertex_colors[u] != 0 && c.vertex_colors[u] == c.vertex_colors[v])
                rep.add("adjacent-vertices", vname(u) + "," + vname(v),
                        "both colored " + std::to_string(c.vertex_colors[u]));
            int ec = c.edge_color(Edge(u, v));
            if (ec != 0 && c.vertex_colors[u] != 0 && ec == c.vertex_colors[u])
                rep.add("edge-endpoint", ename(Edge(u, v)) + "," + vname(u),
                        "edge color equals endpoint color " + std::to_string(ec));
        }
    for (int u = 0; u < n; ++u) {
        const auto& nb = g.neighbors(u);
        for (size_t i = 0; i < nb.size(); ++i)
            for (size_t j = i + 1; j < nb.size(); ++j) {
                Edge e1(u, nb[i]), e2(u, nb[j]);
                int c1 = c.edge_color(e1), c2 = c.edge_color(e2);
                if (c1 != 0 && c1 == c2)
                    rep.add("incident-edges", ename(e1) + "," + ename(e2),
                            "both colored " + std::to_string(c1));
            }
    }
    return rep;
}

bool is_proper_partial(const Graph& g, const TotalColoring& c, int k) {
    for (int v = 0; v < g.vertex_count(); ++v) {
        int col = c.vertex_colors[v];
        if (col < 0 || col > k) return false;
    }
    for (const auto& [e, col] : c.edge_colors)
        if (col < 1 || col > k || !g.has_edge(e.u, e.v)) return false;
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v : g.neighbors(u)) {
            if (u < v && c.vertex_colors[u] != 0 && c.vertex_colors[u] == c.vertex_colors[v])
                return false;
            int ec = c.edge_color(Edge(u, v));
            if (ec != 0 && (ec == c.vertex_colors[u] || ec == c.vertex_colors[v])) return false;
        }
    for (int u = 0; u < g.vertex_count(); ++u) {
        const auto& nb = g.neighbors(u);
        for (size_t i = 0; i < nb.size(); ++i)
            for (size_t j = i + 1; j < nb.size(); ++j) {
                int c1 = c.edge_color(Edge(u, nb[i])), c2 = c.edge_color(Edge(u, nb[j]));
                if (c1 != 0 && c1 == c2) return false;
            }
    }
    return true;
}

namespace {

/// Conflict structure over elements of the total graph: vertices first,
/// then edges in Graph::edges() order.
struct TotalGraph {
    std::vector<std::vector<int>> adj;

    explicit TotalGraph(const Graph& g) {
        const int n = g.vertex_count();
        auto edges = g.edges();
        const int m = static_cast<int>(edges.size());
        adj.assign(n + m, {});
        std::map<Edge, int> eid;
        for (int i = 0; i < m; ++i) eid[edges[i]] = n + i;
        for (int u = 0; u < n; ++u)
            for (int v : g.neighbors(u))
                if (u < v) {
                    adj[u].push_back(v);
                    adj[v].push_back(u);
                }
        for (int i = 0; i < m; ++i) {
            int e = n + i;
            adj[e].push_back(edges[i].u);
            adj[edges[i].u].push_back(e);
            adj[e].push_back(edges[i].v);
            adj[edges[i].v].push_back(e);
        }
        for (int u = 0; u < n; ++u) {
            const auto& nb = g.neighbors(u);
            for (size_t i = 0; i < nb.size(); ++i)
                for (size_t j = i + 1; j < nb.size(); ++j) {
                    int a = eid.at(Edge(u, nb[i])), b = eid.at(Edge(u, nb[j]));
                    adj[a].push_back(b);
                    adj[b].push_back(a);
                }
        }
    }
};

struct OracleSearch {
    const TotalGraph& tg;
    int k;
    std::vector<int> color;
    int max_used = 0;

    OracleSearch(const TotalGraph& t, int palette)
        : tg(t), k(palette), color(t.adj.size(), 0) {}

    int pick() const {
        int best = -1, best_sat = -1, best_deg = -1;
        for (int e = 0; e < static_cast<int>(color.size()); ++e) {
            if (color[e] != 0) continue;
            std::set<int> seen;
            for (int f : tg.adj[e])
                if (color[f] != 0) seen.insert(color[f]);
            int sat = static_cast<int>(seen.size());
            int deg = static_cast<int>(tg.adj[e].size());
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best = e;
                best_sat = sat;
                best_deg = deg;
            }
        }
        return best;
    }

    bool run() {
        int e = pick();
        if (e < 0) return true;
        // colors above max_used+1 are symmetric to max_used+1: skip them
        int limit = std::min(k, max_used + 1);
        for (int c = 1; c <= limit; ++c) {
            bool clash = false;
            for (int f : tg.adj[e])
                if (color[f] == c) {
                    clash = true;
                    break;
                }
            if (clash) continue;
            color[e] = c;
            int prev = max_used;
            max_used = std::max(max_used, c);
            if (run()) return true;
            color[e] = 0;
            max_used = prev;
        }
        return false;
    }
};

}  // namespace

bool total_colorable_with(const Graph& g, int k) {
    return try_total_color(g, k).has_value();
}

std::optional<TotalColoring> try_total_color(const Graph& g, int k) {
    const int n = g.vertex_count();
    if (n == 0) return TotalColoring(0, k);
    if (k < 1) return std::nullopt;
    TotalGraph tg(g);
    OracleSearch s(tg, k);
    if (!s.run()) return std::nullopt;
    TotalColoring c(n, k);
    for (int v = 0; v < n; ++v) c.set_vertex(v, s.color[v]);
    auto edges = g.edges();
    for (int i = 0; i < static_cast<int>(edges.size()); ++i) c.set_edge(edges[i], s.color[n + i]);
    return c;
}

std::optional<int> exact_total_chromatic_number(const Graph& g, int max_k) {
    if (g.vertex_count() == 0) return 0;
    if (!g.is_connected())
        throw std::invalid_argument("exact_total_chromatic_number: graph must be connected");
    for (int k = g.max_degree() + 1; k <= max_k; ++k)
        if (total_colorable_with(g, k)) return k;
    return std::nullopt;
}

std::vector<int> color_even_cycle_from_lists(const std::vector<std::vector<int>>& cycle_lists) {
    const int L = static_cast<int>(cycle_lists.size());
    if (L < 4 || L % 2 != 0)
        throw std::invalid_argument("color_even_cycle_from_lists: cycle length must be even and >= 4");
    // Trim to exactly two colors per edge (the two smallest distinct values).
    std::vector<std::array<int, 2>> lists(L);
    for (int i = 0; i < L; ++i) {
        int min1 = INT_MAX, min2 = INT_MAX;
        for (int c : cycle_lists[i]) {
            if (c < min1) {
                if (min1 < min2) min2 = min1;
                min1 = c;
            } else if (c > min1 && c < min2) {
                min2 = c;
            }
        }
        if (min2 == INT_MAX)
            throw std::invalid_argument("color_even_cycle_from_lists: list of size < 2 at edge " +
                                        std::to_string(i));
        lists[i] = {min1, min2};
    }

    std::vector<int> out(L, 0);
    int start = -1;
    for (int i = 0; i < L && start < 0; ++i)
        if (lists[i] != lists[(i + 1) % L]) start = i;
    if (start < 0) {
        // identical 2-lists everywhere: alternate
        for (int i = 0; i < L; ++i) out[i] = lists[0][i % 2];
        return out;
    }
    // pick a color of edge `start` missing from the next edge's list, then
    // propagate greedily in the other direction; the final edge start+1 is
    // constrained only by its successor
    int nxt = (start + 1) % L;
    int chosen = -1;
    for (int c : lists[start])
        if (c != lists[nxt][0] && c != lists[nxt][1]) {
            chosen = c;
            break;
        }
    out[start] = chosen;
    for (int step = 1; step < L; ++step) {
        int j = (start - step + L) % L;
        int succ = out[(j + 1) % L];
        out[j] = (lists[j][0] != succ) ? lists[j][0] : lists[j][1];
    }
    return out;
}

}  // namespace onep
