#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "onep/graph.hpp"

namespace onep {

/// Thrown on malformed drawing/graph/coloring input.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A 1-planar drawing, encoded as the rotation system of its associated
/// plane graph: every crossing is a false vertex of degree 4 whose crossed
/// edges are the opposite pairs of its rotation. Rotations are clockwise.
/// Vertex ids are dense, 0-based in memory; drawing files use 1-based ids.
struct OnePlanarDrawing {
    std::vector<std::vector<int>> rotation;
    std::vector<bool> is_false;

    int vertex_count() const { return static_cast<int>(rotation.size()); }
    int degree(int v) const { return static_cast<int>(rotation.at(v).size()); }
    int edge_count() const;
    bool has_arc(int u, int v) const;  // v listed in rotation of u
    bool is_connected() const;
};

/// One facial walk of the rotation system. corners[i] = (vertex, previous
/// vertex on the walk); the incoming directed edge of corner i is
/// (corners[i].second -> corners[i].first). Incidences are counted with
/// multiplicity (a cut vertex may appear twice).
struct Face {
    std::vector<std::pair<int, int>> corners;
    bool touches_false = false;

    int degree() const { return static_cast<int>(corners.size()); }
    bool contains_vertex(int v) const;
};

struct Violation {
    std::string rule;
    std::string location;
    std::string message;
};

struct ValidationReport {
    bool ok = true;
    std::vector<Violation> violations;

    void add(std::string rule, std::string location, std::string message) {
        ok = false;
        violations.push_back({std::move(rule), std::move(location), std::move(message)});
    }
};

/// Underlying abstract graph of a drawing: false vertices smoothed back into
/// crossings. Graph ids are a compaction of the true vertices in ascending
/// drawing-id order; to_drawing/from_drawing translate between the two.
struct UnderlyingGraph {
    Graph graph;
    std::vector<int> to_drawing;    // graph id -> drawing id
    std::vector<int> from_drawing;  // drawing id -> graph id, -1 for false vertices
};

/// Parses the line-oriented drawing format:
///   # comment
///   v <id> [false]
///   r <id>: <id1> <id2> ... <idk>     (clockwise rotation, one per vertex)
/// Edges are implied by rotations and must be symmetric. Rejects duplicate
/// rotation entries, dangling references and adjacent false vertices.
OnePlanarDrawing parse_drawing(const std::string& text);

/// Inverse of parse_drawing; vertices in ascending id order, 1-based ids.
std::string serialize_drawing(const OnePlanarDrawing& d);

/// Checks every drawing invariant: rotation symmetry, simplicity, false
/// vertices of degree 4, no adjacent false vertices, and genus 0 via face
/// traversal (V - E + F = 2). Violations are data, not failures.
ValidationReport validate_drawing(const OnePlanarDrawing& d);

/// Face traversal: the successor of a directed edge (u,v) is (v,w) where w
/// follows u in the rotation at v. Every directed edge lies on exactly one
/// facial walk.
std::vector<Face> faces(const OnePlanarDrawing& d);

/// Smooths every false vertex w with rotation (a,b,c,d) into the crossing
/// edges a-c and b-d. Throws std::invalid_argument if the result would not
/// be simple.
UnderlyingGraph underlying_graph(const OnePlanarDrawing& d);

}  // namespace onep
