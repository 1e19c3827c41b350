#include "onep/generator.hpp"

#include <algorithm>
#include <stdexcept>

#include "onep/plane_builder.hpp"

namespace onep {

namespace {

bool under_cap(const PlaneBuilder& b, const GeneratorConfig& cfg, int v) {
    return !cfg.max_degree_cap || b.true_degree(v) + 1 <= *cfg.max_degree_cap;
}

}  // namespace

OnePlanarDrawing generate_random_1planar(const GeneratorConfig& cfg) {
    if (cfg.n < 3) throw std::invalid_argument("generator: n must be >= 3");
    if (cfg.crossing_fraction < 0.0 || cfg.crossing_fraction > 1.0)
        throw std::invalid_argument("generator: crossing_fraction must be in [0,1]");
    if (cfg.max_degree_cap && *cfg.max_degree_cap < 6)
        throw std::invalid_argument("generator: max_degree_cap must be >= 6");
    SplitMix64 rng(cfg.seed);

    PlaneBuilder b(3);
    std::vector<int> triangles = b.live_faces();

    // Apollonian growth: drop each new vertex into a random triangle.
    while (b.vertex_count() < cfg.n) {
        bool placed = false;
        for (int attempt = 0; attempt < 256 && !placed; ++attempt) {
            int f = triangles[rng.below(triangles.size())];
            if (!b.face_alive(f) || b.face_degree(f) != 3) continue;
            const auto w = b.face_walk(f);
            if (!under_cap(b, cfg, w[0]) || !under_cap(b, cfg, w[1]) || !under_cap(b, cfg, w[2]))
                continue;
            int before = b.face_id_end();
            if (b.add_vertex_in_face(f, {0, 1, 2}) < 0) continue;
            triangles.erase(std::find(triangles.begin(), triangles.end(), f));
            for (int nf = before; nf < b.face_id_end(); ++nf) triangles.push_back(nf);
            placed = true;
        }
        if (!placed) throw std::runtime_error("generator: max_degree_cap too tight for n");
    }

    auto random_arc = [&](int& u, int& v) {
        u = static_cast<int>(rng.below(b.vertex_count()));
        const auto& rot = b.rotation(u);
        if (rot.empty()) return false;
        v = rot[rng.below(rot.size())];
        return true;
    };

    // Seeded flips to mix the triangulation.
    for (int i = 0; i < 2 * cfg.n; ++i) {
        int u, v;
        if (!random_arc(u, v)) continue;
        if (cfg.max_degree_cap) {
            int f1 = b.face_of_arc(u, v), f2 = b.face_of_arc(v, u);
            if (f1 < 0 || f2 < 0 || f1 == f2) continue;
            if (b.face_degree(f1) != 3 || b.face_degree(f2) != 3) continue;
            auto third = [&](int f) {
                for (int c : b.face_walk(f))
                    if (c != u && c != v) return c;
                return -1;
            };
            if (!under_cap(b, cfg, third(f1)) || !under_cap(b, cfg, third(f2))) continue;
        }
        b.flip_edge(u, v);
    }

    // Open quadrilateral faces by deleting edges between two triangles.
    std::vector<int> quads;
    {
        int target = std::max(1, cfg.n / 3);
        int attempts = 12 * target;
        while (static_cast<int>(quads.size()) < target && attempts-- > 0) {
            int u, v;
            if (!random_arc(u, v)) continue;
            if (b.degree(u) <= 3 || b.degree(v) <= 3) continue;
            if (b.is_false(u) || b.is_false(v)) continue;
            int f1 = b.face_of_arc(u, v), f2 = b.face_of_arc(v, u);
            if (f1 < 0 || f2 < 0 || f1 == f2) continue;
            if (b.face_degree(f1) != 3 || b.face_degree(f2) != 3) continue;
            auto third = [&](int f) {
                for (int c : b.face_walk(f))
                    if (c != u && c != v) return c;
                return -1;
            };
            if (third(f1) == third(f2)) continue;  // merged face must have 4 distinct corners
            int q = b.delete_edge(u, v);
            if (q >= 0) quads.push_back(q);
        }
    }

    // Insert a crossing pair of diagonals into a crossing_fraction share of
    // the quads (deterministic shuffle, then fill the quota).
    for (int i = static_cast<int>(quads.size()) - 1; i > 0; --i) {
        int j = static_cast<int>(rng.below(static_cast<uint64_t>(i) + 1));
        std::swap(quads[i], quads[j]);
    }
    int want = static_cast<int>(cfg.crossing_fraction * static_cast<double>(quads.size()) + 0.5);
    int made = 0;
    for (int f : quads) {
        if (made >= want) break;
        if (!b.face_alive(f) || b.face_degree(f) != 4) continue;
        bool ok = true;
        for (int c : b.face_walk(f))
            if (!under_cap(b, cfg, c)) ok = false;
        if (!ok) continue;
        if (b.add_crossing_in_quad(f) >= 0) ++made;
    }

    return b.build();
}

}  // namespace onep
