#pragma once

#include <stdexcept>
#include <vector>

#include "onep/configurations.hpp"
#include "onep/graph.hpp"
#include "onep/total_coloring.hpp"

namespace onep {

/// A reducible configuration was guaranteed but none was found. For valid
/// 1-planar inputs with max degree <= r this cannot happen; an occurrence is
/// a counterexample candidate and carries the graph that exhibited it.
struct NoConfigurationFound : std::runtime_error {
    Graph graph;
    int r;
    NoConfigurationFound(Graph g, int r_)
        : std::runtime_error("no reducible configuration found (counterexample candidate)"),
          graph(std::move(g)),
          r(r_) {}
};

/// A lemma-guaranteed extension failed: implementation bug or invalid input.
struct ExtensionFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An available-color list fell below 2 in the even-cycle extension.
struct ListTooSmall : ExtensionFailed {
    using ExtensionFailed::ExtensionFailed;
};

struct ReductionStep {
    Configuration config;
    std::vector<Edge> removed;
};

/// Reduction history, outermost first; replaying the removals from the input
/// graph yields the base graph that was colored directly.
using ReductionTrace = std::vector<ReductionStep>;

struct ColoringResult {
    TotalColoring coloring;
    ReductionTrace trace;
};

/// Total (r+2)-coloring of g by configuration reduction: find a reducible
/// configuration, remove its edges, color the smaller graph, extend back.
/// Requires r >= 13 and max degree <= r; g may be disconnected (components
/// are colored independently). Every extension step is re-verified.
ColoringResult total_color(const Graph& g, int r);

/// Extends a total coloring of g-uv to one of g. partial must totally color
/// g minus uv; uv must satisfy the light-edge degree bounds.
TotalColoring extend_light_edge(const Graph& g, const TotalColoring& partial, Edge uv, int r);

/// Extends over a removed edge of a triangular-3-vertex or
/// double-triangle-4-vertex configuration by bounded exhaustive re-assignment
/// of the elements the corresponding proof touches.
TotalColoring extend_local_config(const Graph& g, const TotalColoring& partial,
                                  const Configuration& cfg, int r);

/// Extends over the removed edge set of an alternating cycle: erases the
/// 3-vertices on the cycle, list-colors the cycle edges (lists of size >= 2
/// by the counting bound), then recolors the 3-vertices.
TotalColoring extend_alternating_cycle(const Graph& g, const TotalColoring& partial,
                                       const Configuration& cycle, int r);

/// Base-case colorer: greedy with backtracking, used for graphs with at most
/// base_case_elements() vertices+edges (always solvable with r+2 >= 15).
TotalColoring color_base_case(const Graph& g, int k);
constexpr int base_case_elements() { return 16; }

}  // namespace onep
