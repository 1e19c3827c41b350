#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "onep/drawing.hpp"

namespace onep {

/// Incremental rotation-system surgery with face bookkeeping. Every public
/// operation keeps the embedding plane (genus 0) and the underlying graph
/// simple; operations whose preconditions fail return false and change
/// nothing. Face handles are stable ints; stale handles are detectable via
/// face_alive().
class PlaneBuilder {
public:
    /// Starts with a cycle 0..k-1 embedded with two faces (inside, outside).
    explicit PlaneBuilder(int cycle_len);

    int vertex_count() const { return static_cast<int>(rot_.size()); }
    int degree(int v) const { return static_cast<int>(rot_[v].size()); }
    bool is_false(int v) const { return is_false_[v]; }
    const std::vector<int>& rotation(int v) const { return rot_[v]; }
    /// One past the largest face id ever created (dead ids included).
    int face_id_end() const { return static_cast<int>(faces_.size()); }

    bool face_alive(int f) const { return f >= 0 && f < (int)faces_.size() && !faces_[f].empty(); }
    /// Facial walk in order; corners are vertex ids (with multiplicity).
    const std::vector<int>& face_walk(int f) const { return faces_[f]; }
    int face_degree(int f) const { return static_cast<int>(faces_[f].size()); }
    std::vector<int> live_faces() const;
    int face_of_arc(int u, int v) const;

    /// Underlying-graph degree of a true vertex (crossed edges included).
    int true_degree(int v) const { return degree(v); }
    bool underlying_has_edge(int u, int v) const;

    /// Adds a vertex inside face f, attached to the corners at the given walk
    /// positions (ascending, at least one). Returns the new vertex id, or -1
    /// if the attachment would create a parallel edge.
    int add_vertex_in_face(int f, const std::vector<int>& attach_positions);

    /// Splits face f with a chord between the corners at walk positions i, j.
    bool add_chord(int f, int pos_i, int pos_j);

    /// Removes edge uv, merging its two distinct faces. Returns the merged
    /// face id, or -1 if uv is a bridge or absent.
    int delete_edge(int u, int v);

    /// Inserts a false vertex crossing the diagonals of the quadrilateral
    /// face f. Requires four distinct true corners and both diagonals absent
    /// from the underlying graph. Returns the false vertex id or -1.
    int add_crossing_in_quad(int f);

    /// Replaces edge uv (flanked by two triangles uvx, vuy) by a crossing:
    /// a false vertex w where uv crosses the new edge xy. Returns w or -1.
    int cross_edge(int u, int v);

    /// Triangulation edge flip: uv flanked by triangles uvx, vuy becomes xy.
    bool flip_edge(int u, int v);

    OnePlanarDrawing build() const;

private:
    std::vector<std::vector<int>> rot_;
    std::vector<bool> is_false_;
    std::vector<std::vector<int>> faces_;           // empty walk = dead face
    std::unordered_map<uint64_t, int> arc_face_;    // directed edge -> face id
    std::unordered_set<uint64_t> und_edges_;        // underlying simple graph

    static uint64_t arc_key(int u, int v);
    static uint64_t und_key(int u, int v);
    void insert_after(int at, int after, int neu);
    void erase_neighbor(int at, int gone);
    int new_face(std::vector<int> walk);
    void kill_face(int f);
    void add_und_edge(int u, int v);
    void remove_und_edge(int u, int v);
};

}  // namespace onep
