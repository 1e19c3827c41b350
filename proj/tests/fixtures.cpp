#include "fixtures.hpp"

#include <stdexcept>

#include "onep/plane_builder.hpp"

namespace onep::fixtures {

std::string k4_crossing_text() {
    return "# square with crossed diagonals\n"
           "v 1\nv 2\nv 3\nv 4\nv 5 false\n"
           "r 1: 2 5 4\n"
           "r 2: 3 5 1\n"
           "r 3: 4 5 2\n"
           "r 4: 1 5 3\n"
           "r 5: 1 2 3 4\n";
}

OnePlanarDrawing k4_crossing() { return parse_drawing(k4_crossing_text()); }

OnePlanarDrawing plane_triangle() {
    return parse_drawing("v 1\nv 2\nv 3\nr 1: 2 3\nr 2: 3 1\nr 3: 1 2\n");
}

OnePlanarDrawing plane_square() {
    return parse_drawing("v 1\nv 2\nv 3\nv 4\nr 1: 2 4\nr 2: 3 1\nr 3: 4 2\nr 4: 1 3\n");
}

namespace {

void check_valid(const OnePlanarDrawing& d, const char* name) {
    auto rep = validate_drawing(d);
    if (!rep.ok) {
        std::string msg = std::string("fixture '") + name + "' invalid:";
        for (const auto& v : rep.violations) msg += " [" + v.rule + "] " + v.message + ";";
        throw std::logic_error(msg);
    }
}

int outer_face_with(const PlaneBuilder& b, int v) {
    for (int f : b.live_faces()) {
        const auto& w = b.face_walk(f);
        if (std::find(w.begin(), w.end(), v) != w.end() && b.face_degree(f) >= 4) return f;
    }
    throw std::logic_error("fixture: no 4+-face at vertex");
}

}  // namespace

OnePlanarDrawing tight_false_vertex_fixture() {
    // square 0-1-2-3, crossing inside, five pendants per corner outside
    PlaneBuilder b(4);
    int inner = b.face_of_arc(0, 1) >= 0 ? b.face_of_arc(0, 1) : 0;
    if (b.add_crossing_in_quad(inner) < 0) {
        inner = b.face_of_arc(1, 0);
        if (b.add_crossing_in_quad(inner) < 0)
            throw std::logic_error("tight_false_vertex_fixture: cannot cross the square");
    }
    for (int corner = 0; corner < 4; ++corner) {
        for (int p = 0; p < 5; ++p) {
            int f = outer_face_with(b, corner);
            const auto& w = b.face_walk(f);
            int pos = -1;
            for (int i = 0; i < static_cast<int>(w.size()); ++i)
                if (w[i] == corner) pos = i;
            if (b.add_vertex_in_face(f, {pos}) < 0)
                throw std::logic_error("tight_false_vertex_fixture: pendant failed");
        }
    }
    auto d = b.build();
    check_valid(d, "tight_false_vertex");
    return d;
}

std::pair<OnePlanarDrawing, int> tight_true_4_vertex_fixture() {
    // Hand-built rotation system; ids 0-based:
    //   0 = audited true 4-vertex, 1..4 = false crossings on its four edges
    //   (N,E,S,W), 5..8 = degree-2 corner vertices (NE,SE,SW,NW),
    //   9..12 = far endpoints (N,E,S,W), 13 = crossing of the two far
    //   diagonals (keeps every far endpoint at underlying degree 4, so no
    //   3-vertices exist and the pot stays inert).
    OnePlanarDrawing d;
    d.rotation = {
        {1, 4, 3, 2},      // 0 = v
        {0, 5, 9, 8},      // 1 = w_N: crossed v-z_N and s_NE-s_NW
        {0, 6, 10, 5},     // 2 = w_E: crossed v-z_E and s_SE-s_NE
        {0, 7, 11, 6},     // 3 = w_S
        {0, 8, 12, 7},     // 4 = w_W
        {1, 2},            // 5 = s_NE
        {2, 3},            // 6 = s_SE
        {3, 4},            // 7 = s_SW
        {4, 1},            // 8 = s_NW
        {1, 10, 13, 12},   // 9 = z_N
        {2, 11, 13, 9},    // 10 = z_E
        {3, 12, 13, 10},   // 11 = z_S
        {4, 9, 13, 11},    // 12 = z_W
        {9, 10, 11, 12},   // 13: crossed z_N-z_S and z_E-z_W
    };
    d.is_false = {false, true,  true,  true,  true,  false, false,
                  false, false, false, false, false, false, true};
    check_valid(d, "tight_true_4_vertex");
    return {d, 0};
}

std::pair<OnePlanarDrawing, int> tight_3_vertex_fixture() {
    // ids 0-based:
    //   0 = audited 3-vertex v, 1 = false crossing on edge v-v1',
    //   2 = v2 (true, degree 6), 3 = v3 (true, degree 6), 4 = v1' (far
    //   endpoint, pendant-like), 5 = p (small corner of the 4-face f1),
    //   6 = y (small corner of the 4-face f2), 7..9 fan of v2, 10..12 fan
    //   of v3. Faces at v: f1 = [v,1,5,2] 4-face, f2 = [v,2,6,3] 4-face,
    //   f3 = [v,3,1] 3-face.
    OnePlanarDrawing d;
    d.rotation = {
        {1, 3, 2},            // 0 = v: faces [0,1,5,2], [0,2,6,3], [0,3,1]
        {0, 5, 4, 3},         // 1 = w: crossed v-v1' and p-v3
        {5, 0, 6, 7, 8, 9},   // 2 = v2
        {6, 0, 1, 10, 11, 12},// 3 = v3
        {1},                  // 4 = v1'
        {1, 2},               // 5 = p
        {2, 3},               // 6 = y
        {2}, {2}, {2},        // 7..9 pendants of v2
        {3}, {3}, {3},        // 10..12 pendants of v3
    };
    d.is_false = {false, true, false, false, false, false, false,
                  false, false, false, false, false, false};
    check_valid(d, "tight_3_vertex");
    return {d, 0};
}

Graph cycle(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph complete(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph star(int leaves) {
    Graph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
}

Graph wheel(int rim) {
    Graph g(rim + 1);
    for (int i = 1; i <= rim; ++i) {
        g.add_edge(0, i);
        g.add_edge(i, i == rim ? 1 : i + 1);
    }
    return g;
}

Graph complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
    return g;
}

Graph circulant(int n, const std::vector<int>& offsets) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int off : offsets) {
            int j = (i + off) % n;
            if (!g.has_edge(i, j)) g.add_edge(i, j);
        }
    return g;
}

Graph theta_gadget() {
    // 0 and 1 are 3-vertices, both adjacent to hubs 2 and 3; hubs are blown
    // up with extra neighbors, and each 3-vertex has one extra neighbor.
    Graph g(12);
    for (int x : {0, 1}) {
        g.add_edge(x, 2);
        g.add_edge(x, 3);
    }
    g.add_edge(0, 4);
    g.add_edge(1, 5);
    g.add_edge(4, 5);
    g.add_edge(2, 4);
    g.add_edge(3, 5);
    for (int extra : {6, 7, 8}) {
        g.add_edge(2, extra);
        g.add_edge(3, extra);
    }
    g.add_edge(6, 9);
    g.add_edge(7, 10);
    g.add_edge(8, 11);
    return g;
}

}  // namespace onep::fixtures
