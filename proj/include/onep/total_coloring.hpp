#pragma once

#include <map>
#include <optional>
#include <vector>

#include "onep/drawing.hpp"  // ValidationReport
#include "onep/graph.hpp"

namespace onep {

/// Partial or total assignment of colors 1..k to vertices and edges.
/// 0 means unassigned.
struct TotalColoring {
    std::vector<int> vertex_colors;
    std::map<Edge, int> edge_colors;
    int k = 0;

    explicit TotalColoring(int n = 0, int palette = 0) : vertex_colors(n, 0), k(palette) {}

    int vertex_color(int v) const { return vertex_colors.at(v); }
    int edge_color(Edge e) const {
        auto it = edge_colors.find(e);
        return it == edge_colors.end() ? 0 : it->second;
    }
    void set_vertex(int v, int c) { vertex_colors.at(v) = c; }
    void set_edge(Edge e, int c) {
        if (c == 0)
            edge_colors.erase(e);
        else
            edge_colors[e] = c;
    }
};

/// ok iff c assigns every vertex and edge of g a color in 1..k and no two
/// adjacent or incident elements share a color. Violations name the pair.
ValidationReport verify_total_coloring(const Graph& g, const TotalColoring& c, int k);

/// Properness only (ignores unassigned elements); used on partial colorings.
bool is_proper_partial(const Graph& g, const TotalColoring& c, int k);

/// Smallest k <= max_k admitting a total k-coloring, by exhaustive
/// backtracking over elements with symmetry pruning. Empty optional means
/// the budget max_k was exceeded. Requires a connected graph, intended for
/// |V| <= 12.
std::optional<int> exact_total_chromatic_number(const Graph& g, int max_k);

/// Feasibility probe for a single k (same search as the oracle).
bool total_colorable_with(const Graph& g, int k);

/// The oracle's search, returning the found coloring. Works on disconnected
/// graphs as well (elements are searched globally).
std::optional<TotalColoring> try_total_color(const Graph& g, int k);

/// Proper list edge coloring of an even cycle from lists of size >= 2:
/// cycle_lists[i] colors edge i, edges i and i+1 (mod size) are adjacent.
/// Throws std::invalid_argument on an odd cycle or an undersized list.
std::vector<int> color_even_cycle_from_lists(const std::vector<std::vector<int>>& cycle_lists);

}  // namespace onep
