#pragma once

#include <optional>
#include <string>
#include <vector>

#include "onep/drawing.hpp"
#include "onep/graph.hpp"

namespace onep {

enum class ConfigKind {
    LightEdge,                // edge uv, d(u) <= floor(r/2), d(u)+d(v) <= r+2
    TriangularThreeVertex,    // 3-vertex v on a triangle v-a-b
    DoubleTriangleFourVertex, // 4-vertex v, edge v-apex on two triangles
    AlternatingCycle,         // even cycle alternating 3-vertices and neighbors
};

std::string to_string(ConfigKind k);

/// A reducible configuration together with its witness. The witness is
/// re-checkable: recheck_configuration re-evaluates the defining predicate.
struct Configuration {
    ConfigKind kind;

    // LightEdge: u (small side), v.
    // TriangularThreeVertex: v (center), a, b (triangle partners, a < b).
    // DoubleTriangleFourVertex: v (center), apex, wing1, wing2.
    int u = -1, v = -1, a = -1, b = -1;

    // AlternatingCycle: vertex sequence, even positions are the 3-vertices.
    std::vector<int> cycle;

    /// Edges removed when this configuration is reduced.
    std::vector<Edge> removed_edges() const;
};

std::optional<Configuration> find_light_edge(const Graph& g, int r);
std::optional<Configuration> find_triangular_3_vertex(const Graph& g);
std::optional<Configuration> find_double_triangle_4_vertex(const Graph& g);
std::optional<Configuration> find_alternating_cycle(const Graph& g, int r);

/// Runs the four detectors in reduction priority order.
std::optional<Configuration> find_any_configuration(const Graph& g, int r);

/// Re-evaluates the witness's defining predicate against g.
bool recheck_configuration(const Graph& g, const Configuration& c, int r);

/// One checked instance of an embedding lemma's hypothesis.
struct LemmaInstance {
    std::string location;  // human-readable, 1-based drawing ids
    bool holds = true;
    std::string detail;
};

/// Diagnostics for the embedding facts about the associated plane graph:
/// hypotheses are scanned, conclusions recorded as holds/violated. These are
/// diagnostics rather than hard validations; the facts are only guaranteed
/// for edge-minimal graphs.
struct DiagnosticsReport {
    std::vector<LemmaInstance> three_vertex_false_faces;  // 3-vertex on two false 3-faces
    std::vector<LemmaInstance> four_vertex_three_faces;   // 4-vertex on <= 3 3-faces
    std::vector<LemmaInstance> five_vertex_faces;         // 5-vertex face/neighbor split
    std::vector<LemmaInstance> five_face_small_vertices;  // 5-face with <= 4 small corners

    bool all_hold() const;
};

DiagnosticsReport check_embedding_lemmas(const OnePlanarDrawing& d);

std::string format_diagnostics(const DiagnosticsReport& rep);

}  // namespace onep
