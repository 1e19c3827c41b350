#include "onep/extend.hpp"

#include <algorithm>
#include <set>

namespace onep {

namespace {

/// Smallest color in 1..k avoiding every color in `forbidden`, or 0.
int first_free(const std::set<int>& forbidden, int k) {
    for (int c = 1; c <= k; ++c)
        if (!forbidden.count(c)) return c;
    return 0;
}

std::set<int> colors_around_vertex(const Graph& g, const TotalColoring& c, int v,
                                   bool include_neighbor_vertices) {
    std::set<int> out;
    for (int w : g.neighbors(v)) {
        if (int ec = c.edge_color(Edge(v, w))) out.insert(ec);
        if (include_neighbor_vertices)
            if (int vc = c.vertex_color(w)) out.insert(vc);
    }
    return out;
}

void require(bool cond, const std::string& what) {
    if (!cond) throw std::invalid_argument(what);
}

/// partial must totally color g minus exactly `missing`, properly as a
/// coloring of that reduced graph (endpoints of a removed edge may share a
/// color; the extension procedures erase and recolor as needed).
void check_partial(const Graph& g, const TotalColoring& partial, const std::vector<Edge>& missing,
                   int k, bool vertices_total) {
    require(static_cast<int>(partial.vertex_colors.size()) == g.vertex_count(),
            "partial coloring has wrong vertex count");
    std::set<Edge> gap(missing.begin(), missing.end());
    for (const Edge& e : gap) require(g.has_edge(e.u, e.v), "removed edge not in graph");
    for (const Edge& e : g.edges()) {
        bool colored = partial.edge_color(e) != 0;
        if (gap.count(e))
            require(!colored, "removed edge already colored");
        else
            require(colored, "partial coloring misses an edge");
    }
    if (vertices_total)
        for (int v = 0; v < g.vertex_count(); ++v)
            require(partial.vertex_color(v) != 0, "partial coloring misses a vertex");
    Graph reduced = g;
    for (const Edge& e : gap) reduced.remove_edge(e.u, e.v);
    require(is_proper_partial(reduced, partial, k), "partial coloring is not proper");
}

}  // namespace

TotalColoring extend_light_edge(const Graph& g, const TotalColoring& partial, Edge uv, int r) {
    require(r >= 13, "extend_light_edge: r must be >= 13");
    require(g.has_edge(uv.u, uv.v), "extend_light_edge: edge not in graph");
    const int k = r + 2;
    check_partial(g, partial, {uv}, k, /*vertices_total=*/true);

    // the side that gets uncolored and recolored must see at most 2d <= r colors
    int s = uv.u, t = uv.v;
    if (g.degree(t) < g.degree(s)) std::swap(s, t);
    require(g.degree(s) <= r / 2 && g.degree(s) + g.degree(t) <= r + 2,
            "extend_light_edge: degree bounds violated");

    TotalColoring c = partial;
    c.set_vertex(s, 0);

    std::set<int> forbidden = colors_around_vertex(g, c, uv.u, false);
    auto other = colors_around_vertex(g, c, uv.v, false);
    forbidden.insert(other.begin(), other.end());
    if (int tc = c.vertex_color(t)) forbidden.insert(tc);
    int ec = first_free(forbidden, k);
    if (ec == 0) throw ExtensionFailed("extend_light_edge: no color for the edge");
    c.set_edge(uv, ec);

    std::set<int> around_s = colors_around_vertex(g, c, s, true);
    int sc = first_free(around_s, k);
    if (sc == 0) throw ExtensionFailed("extend_light_edge: no color for the endpoint");
    c.set_vertex(s, sc);
    return c;
}

namespace {

struct Element {
    bool is_vertex;
    int v = -1;
    Edge e;
};

bool assignment_ok(const Graph& g, const TotalColoring& c, const Element& el, int color) {
    if (el.is_vertex) {
        for (int w : g.neighbors(el.v)) {
            if (c.vertex_color(w) == color) return false;
            if (c.edge_color(Edge(el.v, w)) == color) return false;
        }
        return true;
    }
    for (int x : {el.e.u, el.e.v}) {
        if (c.vertex_color(x) == color) return false;
        for (int w : g.neighbors(x)) {
            Edge other(x, w);
            if (other == el.e) continue;
            if (c.edge_color(other) == color) return false;
        }
    }
    return true;
}

bool exhaust(const Graph& g, TotalColoring& c, const std::vector<Element>& elems, size_t idx,
             int k) {
    if (idx == elems.size()) return true;
    const Element& el = elems[idx];
    for (int color = 1; color <= k; ++color) {
        if (!assignment_ok(g, c, el, color)) continue;
        if (el.is_vertex)
            c.set_vertex(el.v, color);
        else
            c.set_edge(el.e, color);
        if (exhaust(g, c, elems, idx + 1, k)) return true;
        if (el.is_vertex)
            c.set_vertex(el.v, 0);
        else
            c.set_edge(el.e, 0);
    }
    return false;
}

}  // namespace

TotalColoring extend_local_config(const Graph& g, const TotalColoring& partial,
                                  const Configuration& cfg, int r) {
    require(r >= 13, "extend_local_config: r must be >= 13");
    require(cfg.kind == ConfigKind::TriangularThreeVertex ||
                cfg.kind == ConfigKind::DoubleTriangleFourVertex,
            "extend_local_config: wrong configuration kind");
    const int k = r + 2;
    auto removed = cfg.removed_edges();
    check_partial(g, partial, removed, k, /*vertices_total=*/true);
    require(recheck_configuration(g, cfg, r), "extend_local_config: witness does not re-verify");

    // The proof-touched elements: the removed edge, every edge at the center,
    // the triangle edges among the neighbors, and the center's own color.
    std::vector<Element> elems;
    std::set<Edge> edge_set;
    auto push_edge = [&](Edge e) {
        if (edge_set.insert(e).second) elems.push_back({false, -1, e});
    };
    push_edge(removed[0]);
    for (int w : g.neighbors(cfg.v)) push_edge(Edge(cfg.v, w));
    if (cfg.kind == ConfigKind::TriangularThreeVertex) {
        push_edge(Edge(cfg.a, cfg.b));
    } else {
        push_edge(Edge(cfg.u, cfg.a));
        push_edge(Edge(cfg.u, cfg.b));
    }
    elems.push_back({true, cfg.v, Edge()});

    TotalColoring c = partial;
    for (const Element& el : elems) {
        if (el.is_vertex)
            c.set_vertex(el.v, 0);
        else
            c.set_edge(el.e, 0);
    }
    if (!exhaust(g, c, elems, 0, k))
        throw ExtensionFailed("extend_local_config: exhaustive re-assignment found no coloring (" +
                              to_string(cfg.kind) + ")");
    return c;
}

TotalColoring extend_alternating_cycle(const Graph& g, const TotalColoring& partial,
                                       const Configuration& cfg, int r) {
    require(r >= 13, "extend_alternating_cycle: r must be >= 13");
    require(cfg.kind == ConfigKind::AlternatingCycle, "extend_alternating_cycle: wrong kind");
    const auto& cyc = cfg.cycle;
    require(cyc.size() >= 4 && cyc.size() % 2 == 0,
            "extend_alternating_cycle: cycle must be even");
    {
        std::set<int> distinct(cyc.begin(), cyc.end());
        require(distinct.size() == cyc.size(), "extend_alternating_cycle: repeated vertex");
    }
    const int L = static_cast<int>(cyc.size());
    for (int i = 0; i < L; i += 2) {
        require(g.degree(cyc[i]) == 3, "extend_alternating_cycle: even positions must be 3-vertices");
        for (int j = i + 2; j < L; j += 2)
            require(!g.has_edge(cyc[i], cyc[j]),
                    "extend_alternating_cycle: 3-vertices on the cycle must be pairwise non-adjacent");
    }
    const int k = r + 2;
    auto removed = cfg.removed_edges();
    check_partial(g, partial, removed, k, /*vertices_total=*/false);
    for (int i = 1; i < L; i += 2)
        require(partial.vertex_color(cyc[i]) != 0,
                "extend_alternating_cycle: cycle connectors must be colored");

    TotalColoring c = partial;
    for (int i = 0; i < L; i += 2) c.set_vertex(cyc[i], 0);

    // available-color lists; each has >= 2 entries by the counting bound
    std::vector<std::vector<int>> lists(L);
    for (int i = 0; i < L; ++i) {
        int x = cyc[i], y = cyc[(i + 1) % L];
        std::set<int> forbidden = colors_around_vertex(g, c, x, false);
        auto fy = colors_around_vertex(g, c, y, false);
        forbidden.insert(fy.begin(), fy.end());
        if (int vc = c.vertex_color(x)) forbidden.insert(vc);
        if (int vc = c.vertex_color(y)) forbidden.insert(vc);
        for (int col = 1; col <= k; ++col)
            if (!forbidden.count(col)) lists[i].push_back(col);
        if (lists[i].size() < 2)
            throw ListTooSmall("extend_alternating_cycle: available list below 2 at edge " +
                               std::to_string(i));
    }
    std::vector<int> edge_cols = color_even_cycle_from_lists(lists);
    for (int i = 0; i < L; ++i) c.set_edge(Edge(cyc[i], cyc[(i + 1) % L]), edge_cols[i]);

    for (int i = 0; i < L; i += 2) {
        std::set<int> forbidden = colors_around_vertex(g, c, cyc[i], true);
        int vc = first_free(forbidden, k);
        if (vc == 0)
            throw ExtensionFailed("extend_alternating_cycle: no color for a 3-vertex");
        c.set_vertex(cyc[i], vc);
    }
    return c;
}

TotalColoring color_base_case(const Graph& g, int k) {
    auto c = try_total_color(g, k);
    if (!c)
        throw ExtensionFailed("base case is not totally colorable with k=" + std::to_string(k));
    return *c;
}

namespace {

Configuration remap_config(const Configuration& c, const std::vector<int>& to_global) {
    Configuration out = c;
    auto map1 = [&](int x) { return x < 0 ? x : to_global[x]; };
    out.u = map1(c.u);
    out.v = map1(c.v);
    out.a = map1(c.a);
    out.b = map1(c.b);
    for (int& x : out.cycle) x = to_global[x];
    return out;
}

}  // namespace

ColoringResult total_color(const Graph& g, int r) {
    if (r < 13) throw std::invalid_argument("total_color: r must be >= 13");
    if (g.max_degree() > r) throw std::invalid_argument("total_color: max degree exceeds r");
    const int k = r + 2;

    ColoringResult result;
    result.coloring = TotalColoring(g.vertex_count(), k);

    int comp_count = 0;
    auto comp = g.components(&comp_count);

    for (int ci = 0; ci < comp_count; ++ci) {
        std::vector<int> to_global;
        std::vector<int> to_local(g.vertex_count(), -1);
        for (int v = 0; v < g.vertex_count(); ++v)
            if (comp[v] == ci) {
                to_local[v] = static_cast<int>(to_global.size());
                to_global.push_back(v);
            }
        Graph work(static_cast<int>(to_global.size()));
        for (const Edge& e : g.edges())
            if (comp[e.u] == ci) work.add_edge(to_local[e.u], to_local[e.v]);

        // Reduce: strip configurations until the base-case threshold.
        std::vector<ReductionStep> steps;  // local ids
        while (work.vertex_count() + work.edge_count() > base_case_elements() &&
               work.edge_count() > 0) {
            auto cfg = find_any_configuration(work, r);
            if (!cfg) throw NoConfigurationFound(work, r);
            ReductionStep step{*cfg, cfg->removed_edges()};
            for (const Edge& e : step.removed) work.remove_edge(e.u, e.v);
            steps.push_back(std::move(step));
        }

        TotalColoring local = work.edge_count() == 0 && work.vertex_count() > 0
                                  ? [&] {
                                        TotalColoring c(work.vertex_count(), k);
                                        for (int v = 0; v < work.vertex_count(); ++v)
                                            c.set_vertex(v, 1);
                                        return c;
                                    }()
                                  : color_base_case(work, k);

        // Extend: re-add edge sets innermost-last, re-verifying each step.
        for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
            for (const Edge& e : it->removed) work.add_edge(e.u, e.v);
            switch (it->config.kind) {
                case ConfigKind::LightEdge:
                    local = extend_light_edge(work, local, it->removed[0], r);
                    break;
                case ConfigKind::TriangularThreeVertex:
                case ConfigKind::DoubleTriangleFourVertex:
                    local = extend_local_config(work, local, it->config, r);
                    break;
                case ConfigKind::AlternatingCycle:
                    local = extend_alternating_cycle(work, local, it->config, r);
                    break;
            }
            if (!verify_total_coloring(work, local, k).ok)
                throw ExtensionFailed("total_color: step re-verification failed");
        }

        for (int lv = 0; lv < static_cast<int>(to_global.size()); ++lv)
            result.coloring.set_vertex(to_global[lv], local.vertex_color(lv));
        for (const auto& [e, col] : local.edge_colors)
            result.coloring.set_edge(Edge(to_global[e.u], to_global[e.v]), col);
        for (const auto& step : steps) {
            ReductionStep global_step;
            global_step.config = remap_config(step.config, to_global);
            for (const Edge& e : step.removed)
                global_step.removed.emplace_back(to_global[e.u], to_global[e.v]);
            result.trace.push_back(std::move(global_step));
        }
    }

    if (!verify_total_coloring(g, result.coloring, k).ok)
        throw ExtensionFailed("total_color: final coloring failed verification");
    return result;
}

}  // namespace onep
