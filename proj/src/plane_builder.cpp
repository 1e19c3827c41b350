#include "onep/plane_builder.hpp"

#include <algorithm>
#include <stdexcept>

namespace onep {

uint64_t PlaneBuilder::arc_key(int u, int v) {
    return (static_cast<uint64_t>(static_cast<uint32_t>(u)) << 32) | static_cast<uint32_t>(v);
}

uint64_t PlaneBuilder::und_key(int u, int v) {
    if (u > v) std::swap(u, v);
    return arc_key(u, v);
}

PlaneBuilder::PlaneBuilder(int k) {
    if (k < 3) throw std::invalid_argument("PlaneBuilder: cycle length must be >= 3");
    rot_.assign(k, {});
    is_false_.assign(k, false);
    std::vector<int> inner(k), outer(k);
    for (int i = 0; i < k; ++i) {
        int prev = (i + k - 1) % k, next = (i + 1) % k;
        rot_[i] = {prev, next};
        inner[i] = i;
        outer[i] = k - 1 - i;
        add_und_edge(i, next);
    }
    // Inner face walks 0,1,...,k-1; with clockwise rotations the reverse walk
    // bounds the outer face.
    int fi = new_face(inner);
    int fo = new_face(outer);
    (void)fi;
    (void)fo;
}

std::vector<int> PlaneBuilder::live_faces() const {
    std::vector<int> out;
    for (int f = 0; f < (int)faces_.size(); ++f)
        if (!faces_[f].empty()) out.push_back(f);
    return out;
}

int PlaneBuilder::face_of_arc(int u, int v) const {
    auto it = arc_face_.find(arc_key(u, v));
    return it == arc_face_.end() ? -1 : it->second;
}

bool PlaneBuilder::underlying_has_edge(int u, int v) const {
    return und_edges_.count(und_key(u, v)) > 0;
}

void PlaneBuilder::insert_after(int at, int after, int neu) {
    auto& r = rot_[at];
    auto it = std::find(r.begin(), r.end(), after);
    if (it == r.end()) throw std::logic_error("insert_after: anchor not present");
    r.insert(it + 1, neu);
}

void PlaneBuilder::erase_neighbor(int at, int gone) {
    auto& r = rot_[at];
    auto it = std::find(r.begin(), r.end(), gone);
    if (it == r.end()) throw std::logic_error("erase_neighbor: not present");
    r.erase(it);
}

int PlaneBuilder::new_face(std::vector<int> walk) {
    int id = static_cast<int>(faces_.size());
    for (size_t i = 0; i < walk.size(); ++i) {
        int u = walk[i], v = walk[(i + 1) % walk.size()];
        arc_face_[arc_key(u, v)] = id;
    }
    faces_.push_back(std::move(walk));
    return id;
}

void PlaneBuilder::kill_face(int f) { faces_[f].clear(); }

void PlaneBuilder::add_und_edge(int u, int v) { und_edges_.insert(und_key(u, v)); }
void PlaneBuilder::remove_und_edge(int u, int v) { und_edges_.erase(und_key(u, v)); }

int PlaneBuilder::add_vertex_in_face(int f, const std::vector<int>& attach) {
    if (!face_alive(f) || attach.empty()) return -1;
    const std::vector<int> walk = faces_[f];
    const int L = static_cast<int>(walk.size());
    {
        std::unordered_set<int> verts;
        for (int p : attach) {
            if (p < 0 || p >= L) return -1;
            if (is_false_[walk[p]]) return -1;  // false vertices keep degree 4
            if (!verts.insert(walk[p]).second) return -1;  // parallel edge to same corner
        }
    }
    int w = vertex_count();
    rot_.emplace_back();
    is_false_.push_back(false);

    // At each attached corner, the new edge occupies the face slot between
    // the incoming and outgoing walk edges: insert w after the predecessor.
    for (int p : attach) {
        int corner = walk[p];
        int pred = walk[(p + L - 1) % L];
        // A vertex may appear several times in the walk; anchoring on the
        // predecessor is ambiguous only if pred repeats around corner, which
        // cannot happen in the walks produced by this builder's operations.
        insert_after(corner, pred, w);
        add_und_edge(corner, w);
    }
    // Rotation of w: attach list reversed closes every sub-face.
    {
        auto& rw = rot_[w];
        rw.push_back(walk[attach[0]]);
        for (int i = static_cast<int>(attach.size()) - 1; i >= 1; --i) rw.push_back(walk[attach[i]]);
    }
    kill_face(f);
    const int k = static_cast<int>(attach.size());
    if (k == 1) {
        std::vector<int> nw;
        int s = attach[0];
        for (int i = 0; i < L; ++i) nw.push_back(walk[(s + i) % L]);
        nw.push_back(walk[s]);
        nw.push_back(w);
        new_face(std::move(nw));
    } else {
        for (int a = 0; a < k; ++a) {
            int i = attach[a], j = attach[(a + 1) % k];
            std::vector<int> nw;
            for (int p = i; p != j; p = (p + 1) % L) nw.push_back(walk[p]);
            nw.push_back(walk[j]);
            nw.push_back(w);
            new_face(std::move(nw));
        }
    }
    return w;
}

bool PlaneBuilder::add_chord(int f, int pos_i, int pos_j) {
    if (!face_alive(f)) return false;
    const std::vector<int> walk = faces_[f];
    const int L = static_cast<int>(walk.size());
    if (pos_i == pos_j || pos_i < 0 || pos_j < 0 || pos_i >= L || pos_j >= L) return false;
    int a = walk[pos_i], b = walk[pos_j];
    if (a == b) return false;
    if ((pos_j - pos_i + L) % L < 2 || (pos_i - pos_j + L) % L < 2) return false;
    if (underlying_has_edge(a, b) || is_false_[a] || is_false_[b]) return false;

    insert_after(a, walk[(pos_i + L - 1) % L], b);
    insert_after(b, walk[(pos_j + L - 1) % L], a);
    add_und_edge(a, b);
    kill_face(f);
    auto segment = [&](int from, int to) {
        std::vector<int> nw;
        for (int p = from; p != to; p = (p + 1) % L) nw.push_back(walk[p]);
        nw.push_back(walk[to]);
        return nw;
    };
    new_face(segment(pos_i, pos_j));
    new_face(segment(pos_j, pos_i));
    return true;
}

int PlaneBuilder::delete_edge(int u, int v) {
    int f1 = face_of_arc(u, v), f2 = face_of_arc(v, u);
    if (f1 < 0 || f2 < 0 || f1 == f2) return -1;
    if (is_false_[u] || is_false_[v]) return -1;  // false vertices keep degree 4
    // Merged walk: f1's corners from v around to u, then f2's from u to v.
    auto segment = [&](int f, int from, int to) {
        const auto& w = faces_[f];
        const int L = static_cast<int>(w.size());
        int start = -1;
        for (int i = 0; i < L; ++i)
            if (w[i] == from && w[(i + 1) % L] == to) {
                start = (i + 1) % L;
                break;
            }
        std::vector<int> seq;  // corners to, ..., from (inclusive), L-1 arcs
        for (int c = 0; c < L - 1; ++c) seq.push_back(w[(start + c) % L]);
        return seq;
    };
    std::vector<int> s1 = segment(f1, u, v);  // v ... u
    std::vector<int> s2 = segment(f2, v, u);  // u ... v
    erase_neighbor(u, v);
    erase_neighbor(v, u);
    remove_und_edge(u, v);
    kill_face(f1);
    kill_face(f2);
    std::vector<int> merged = s1;
    merged.insert(merged.end(), s2.begin(), s2.end());
    return new_face(std::move(merged));
}

int PlaneBuilder::add_crossing_in_quad(int f) {
    if (!face_alive(f) || face_degree(f) != 4) return -1;
    const std::vector<int> walk = faces_[f];
    int p = walk[0], q = walk[1], r = walk[2], s = walk[3];
    std::unordered_set<int> distinct{p, q, r, s};
    if (distinct.size() != 4) return -1;
    for (int x : walk)
        if (is_false_[x]) return -1;
    if (underlying_has_edge(p, r) || underlying_has_edge(q, s)) return -1;

    int w = vertex_count();
    rot_.emplace_back();
    is_false_.push_back(true);
    rot_[w] = {p, s, r, q};  // opposite pairs: crossed edges p-r and q-s
    insert_after(p, s, w);
    insert_after(q, p, w);
    insert_after(r, q, w);
    insert_after(s, r, w);
    add_und_edge(p, r);
    add_und_edge(q, s);
    kill_face(f);
    new_face({p, q, w});
    new_face({q, r, w});
    new_face({r, s, w});
    new_face({s, p, w});
    return w;
}

int PlaneBuilder::cross_edge(int u, int v) {
    int f1 = face_of_arc(u, v), f2 = face_of_arc(v, u);
    if (f1 < 0 || f2 < 0 || f1 == f2) return -1;
    if (face_degree(f1) != 3 || face_degree(f2) != 3) return -1;
    if (is_false_[u] || is_false_[v]) return -1;
    // f1 = [u,v,x] up to rotation, f2 = [v,u,y]
    auto third = [&](int f, int a, int b) {
        for (int c : faces_[f])
            if (c != a && c != b) return c;
        return -1;
    };
    int x = third(f1, u, v), y = third(f2, u, v);
    if (x < 0 || y < 0 || x == y) return -1;
    if (is_false_[x] || is_false_[y]) return -1;
    if (underlying_has_edge(x, y)) return -1;

    int w = vertex_count();
    rot_.emplace_back();
    is_false_.push_back(true);
    rot_[w] = {u, x, v, y};  // crossed pairs u-v and x-y
    // u: v becomes w in place; same at v.
    *std::find(rot_[u].begin(), rot_[u].end(), v) = w;
    *std::find(rot_[v].begin(), rot_[v].end(), u) = w;
    insert_after(x, v, w);
    insert_after(y, u, w);
    add_und_edge(x, y);  // u-v stays an underlying edge, now crossed
    kill_face(f1);
    kill_face(f2);
    new_face({x, u, w});
    new_face({u, y, w});
    new_face({y, v, w});
    new_face({v, x, w});
    return w;
}

bool PlaneBuilder::flip_edge(int u, int v) {
    int f1 = face_of_arc(u, v), f2 = face_of_arc(v, u);
    if (f1 < 0 || f2 < 0 || f1 == f2) return false;
    if (face_degree(f1) != 3 || face_degree(f2) != 3) return false;
    if (degree(u) <= 3 || degree(v) <= 3) return false;
    auto third = [&](int f, int a, int b) {
        for (int c : faces_[f])
            if (c != a && c != b) return c;
        return -1;
    };
    int x = third(f1, u, v), y = third(f2, u, v);
    if (x < 0 || y < 0 || x == y) return false;
    if (is_false_[u] || is_false_[v] || is_false_[x] || is_false_[y]) return false;
    if (underlying_has_edge(x, y)) return false;

    erase_neighbor(u, v);
    erase_neighbor(v, u);
    remove_und_edge(u, v);
    insert_after(x, v, y);
    insert_after(y, u, x);
    add_und_edge(x, y);
    kill_face(f1);
    kill_face(f2);
    new_face({x, u, y});
    new_face({y, v, x});
    return true;
}

OnePlanarDrawing PlaneBuilder::build() const {
    OnePlanarDrawing d;
    d.rotation = rot_;
    d.is_false.assign(is_false_.begin(), is_false_.end());
    return d;
}

}  // namespace onep
