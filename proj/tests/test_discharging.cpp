#include <doctest.h>

#include "fixtures.hpp"
#include "onep/discharging.hpp"
#include "onep/generator.hpp"
#include "onep/plane_builder.hpp"

using namespace onep;
namespace fx = onep::fixtures;

namespace {

OnePlanarDrawing plane_k4() {
    PlaneBuilder b(3);
    REQUIRE(b.add_vertex_in_face(b.face_of_arc(0, 1), {0, 1, 2}) == 3);
    auto d = b.build();
    REQUIRE(validate_drawing(d).ok);
    return d;
}

OnePlanarDrawing octahedron() {
    PlaneBuilder b(4);
    REQUIRE(b.add_vertex_in_face(b.face_of_arc(0, 1), {0, 1, 2, 3}) == 4);
    REQUIRE(b.add_vertex_in_face(b.face_of_arc(1, 0), {0, 1, 2, 3}) == 5);
    auto d = b.build();
    REQUIRE(validate_drawing(d).ok);
    return d;
}

/// Spoked wheel with ring vertices between spokes: center 2k, ring of 2k,
/// all center faces are quads. Returns (builder-built drawing later), here
/// the builder itself for further surgery.
PlaneBuilder quad_fan(int spokes) {
    PlaneBuilder b(2 * spokes);
    std::vector<int> attach;
    for (int i = 0; i < 2 * spokes; i += 2) attach.push_back(i);
    REQUIRE(b.add_vertex_in_face(b.face_of_arc(0, 1), attach) == 2 * spokes);
    return b;
}

/// Adds pendants until the true vertex v has the given degree.
void raise_degree(PlaneBuilder& b, int v, int target) {
    while (b.degree(v) < target) {
        bool done = false;
        for (int f : b.live_faces()) {
            if (b.face_degree(f) < 4) continue;
            const auto& w = b.face_walk(f);
            for (int pos = 0; pos < static_cast<int>(w.size()); ++pos)
                if (w[pos] == v) {
                    REQUIRE(b.add_vertex_in_face(f, {pos}) >= 0);
                    done = true;
                    break;
                }
            if (done) break;
        }
        REQUIRE(done);
    }
}

Rational sent_by(const std::vector<Transfer>& log, int v) {
    Rational out = 0;
    for (const auto& t : log)
        if (t.from.kind == ElementKind::Vertex && t.from.id == v) out += t.amount;
    return out;
}

}  // namespace

TEST_CASE("initial charges: plane K4, crossing gadget, plane C5") {
    auto led1 = initial_charges(plane_k4());
    for (const auto& q : led1.vertex_charge) CHECK(q == Rational(-3));
    for (const auto& q : led1.face_charge) CHECK(q == Rational(0));
    CHECK(led1.total() == Rational(-12));

    auto d = fx::k4_crossing();
    auto led2 = initial_charges(d);
    for (int v = 0; v < 4; ++v) CHECK(led2.vertex_charge[v] == Rational(-3));
    CHECK(led2.vertex_charge[4] == Rational(-2));
    int zero_faces = 0, two_faces = 0;
    for (const auto& q : led2.face_charge) {
        if (q == Rational(0)) ++zero_faces;
        if (q == Rational(2)) ++two_faces;
    }
    CHECK(zero_faces == 4);
    CHECK(two_faces == 1);
    CHECK(led2.total() == Rational(-12));

    auto c5 = parse_drawing(
        "v 1\nv 2\nv 3\nv 4\nv 5\n"
        "r 1: 2 5\nr 2: 3 1\nr 3: 4 2\nr 4: 5 3\nr 5: 1 4\n");
    auto led3 = initial_charges(c5);
    for (const auto& q : led3.vertex_charge) CHECK(q == Rational(-4));
    for (const auto& q : led3.face_charge) CHECK(q == Rational(4));
    CHECK(led3.total() == Rational(-12));
}

TEST_CASE("run_discharging: hand replay on the crossing gadget") {
    auto d = fx::k4_crossing();
    auto [log, led] = run_discharging(d, 13);

    // R1: the single 4-face splits +2 over its four small true corners
    int r1 = 0;
    for (const auto& t : log)
        if (t.rule == Rule::R1) {
            ++r1;
            CHECK(t.amount == Rational(1, 2));
            CHECK(t.to.kind == ElementKind::Vertex);
            CHECK(t.to.id < 4);
        }
    CHECK(r1 == 4);

    // R2: every true vertex is a Delta-vertex and a 3-vertex
    Rational pot_in = 0, pot_out = 0;
    for (const auto& t : log)
        if (t.rule == Rule::R2) {
            if (t.to.kind == ElementKind::Pot) pot_in += t.amount;
            if (t.from.kind == ElementKind::Pot) pot_out += t.amount;
        }
    CHECK(pot_in == Rational(2));
    CHECK(pot_out == Rational(4));
    CHECK(led.pot == Rational(-2));

    // R3: eight ordered true pairs, 1/3 each, no tri-neighbor bonus
    int r3 = 0;
    for (const auto& t : log)
        if (t.rule == Rule::R3) {
            ++r3;
            CHECK(t.amount == Rational(1, 3));
        }
    CHECK(r3 == 8);

    // no crossing rules fire (all true degrees are 3)
    for (const auto& t : log)
        CHECK((t.rule == Rule::R1 || t.rule == Rule::R2 || t.rule == Rule::R3));

    for (int v = 0; v < 4; ++v) CHECK(led.vertex_charge[v] == Rational(-2));
    CHECK(led.vertex_charge[4] == Rational(-2));
    for (const auto& q : led.face_charge) CHECK(q == Rational(0));
    CHECK(led.total() == Rational(-12));
}

TEST_CASE("run_discharging: only R1/R3 can fire without false vertices and 3-vertices") {
    auto d = octahedron();
    auto [log, led] = run_discharging(d, 13);
    for (const auto& t : log)
        CHECK((t.rule == Rule::R1 || t.rule == Rule::R3));
    CHECK(led.total() == Rational(-12));
}

TEST_CASE("run_discharging: degree-8 endpoint with both quad edges sends one R8 of 1/2") {
    auto d = fx::tight_false_vertex_fixture();
    // the false vertex of the central crossing is id 4
    REQUIRE(d.is_false[4]);
    auto [log, led] = run_discharging(d, 13);
    for (int corner = 0; corner < 4; ++corner) {
        int crossing_rules = 0;
        for (const auto& t : log) {
            if (t.from.kind != ElementKind::Vertex || t.from.id != corner) continue;
            if (t.rule == Rule::R1 || t.rule == Rule::R2 || t.rule == Rule::R3) continue;
            ++crossing_rules;
            CHECK(t.rule == Rule::R8);
            CHECK(t.amount == Rational(1, 2));
            CHECK(t.to.id == 4);
        }
        CHECK(crossing_rules == 1);
    }
    CHECK(led.vertex_charge[4] == Rational(0));
    CHECK(led.total() == Rational(-12));
}

TEST_CASE("audit: conservation and expected pot on generated drawings") {
    for (uint64_t seed = 0; seed < 8; ++seed) {
        GeneratorConfig cfg;
        cfg.n = 8 + static_cast<int>(seed) * 11;
        cfg.seed = seed * 13 + 1;
        cfg.crossing_fraction = (seed % 4) / 3.0;
        auto d = generate_random_1planar(cfg);
        auto rep = audit(d, 13);
        CHECK(rep.connected);
        CHECK(rep.conserved);
        CHECK(rep.total_final == Rational(-12));
        if (rep.expected_pot) CHECK(rep.pot_balance == *rep.expected_pot);
    }
}

TEST_CASE("audit: face charges end at zero or keep 2d-6") {
    GeneratorConfig cfg;
    cfg.n = 40;
    cfg.seed = 4242;
    cfg.crossing_fraction = 0.5;
    auto d = generate_random_1planar(cfg);
    auto fs = faces(d);
    auto rep = audit(d, 13);
    for (int fi = 0; fi < static_cast<int>(fs.size()); ++fi) {
        int deg = fs[fi].degree();
        if (deg == 3) {
            CHECK(rep.final.face_charge[fi] == Rational(0));
            continue;
        }
        int smalls = 0;
        for (const auto& [v, _] : fs[fi].corners)
            if (d.degree(v) <= 5) ++smalls;
        if (smalls > 0)
            CHECK(rep.final.face_charge[fi] == Rational(0));
        else
            CHECK(rep.final.face_charge[fi] == Rational(2 * deg - 6));
    }
}

TEST_CASE("audit: crossing gadget reports negative elements") {
    auto rep = audit(fx::k4_crossing(), 13);
    CHECK(rep.conserved);
    CHECK_FALSE(rep.negative_elements.empty());
}

TEST_CASE("every transfer re-checks against the drawing") {
    for (auto d : {fx::k4_crossing(), fx::tight_false_vertex_fixture(),
                   fx::tight_true_4_vertex_fixture().first, fx::tight_3_vertex_fixture().first}) {
        auto [log, led] = run_discharging(d, 13);
        for (const auto& t : log) CHECK(recheck_transfer(d, 13, t));
    }
}

TEST_CASE("tight fixture: false vertex on four 3-faces with degree-8 endpoints ends at 0") {
    auto d = fx::tight_false_vertex_fixture();
    auto rep = audit(d, 13);
    CHECK(rep.final.vertex_charge[4] == Rational(0));
    CHECK(rep.conserved);
}

TEST_CASE("tight fixture: true 4-vertex on four quads ends at 0") {
    auto [d, v] = fx::tight_true_4_vertex_fixture();
    auto rep = audit(d, 13);
    CHECK(rep.final.vertex_charge[v] == Rational(-2) + 4 * Rational(1, 2));
    CHECK(rep.final.vertex_charge[v] == Rational(0));
    CHECK(rep.conserved);
}

TEST_CASE("tight fixture: 3-vertex with one false neighbor ends at exactly 1/3") {
    auto [d, v] = fx::tight_3_vertex_fixture();
    auto rep = audit(d, 13);
    CHECK(rep.final.vertex_charge[v] == Rational(1, 3));
    CHECK(rep.conserved);
}

TEST_CASE("decompose_clusters: all-quad fan gives pure type 5") {
    auto b = quad_fan(8);
    int c = 16;
    auto d = b.build();
    REQUIRE(validate_drawing(d).ok);
    auto dec = decompose_clusters(d, c);
    REQUIRE(dec.ok());
    CHECK(dec.counts.n == std::array<int, 5>{0, 0, 0, 0, 8});
    CHECK(dec.counts.boundary_weight() == 8);
    CHECK(dec.counts.m() == 0);
}

TEST_CASE("decompose_clusters: one crossing in a quad fan gives a type-1 cluster") {
    auto b = quad_fan(7);
    int c = 14;
    // cross the quad between spokes 0 and 2 (ring vertex 1 in between)
    int f = -1;
    for (int cand : b.live_faces()) {
        if (b.face_degree(cand) != 4) continue;
        const auto& w = b.face_walk(cand);
        if (std::find(w.begin(), w.end(), c) != w.end() &&
            std::find(w.begin(), w.end(), 0) != w.end() &&
            std::find(w.begin(), w.end(), 1) != w.end())
            f = cand;
    }
    REQUIRE(f >= 0);
    REQUIRE(b.add_crossing_in_quad(f) >= 0);
    auto d = b.build();
    REQUIRE(validate_drawing(d).ok);
    REQUIRE(d.degree(c) == 8);
    auto dec = decompose_clusters(d, c);
    REQUIRE(dec.ok());
    CHECK(dec.counts.n[0] == 1);
    CHECK(dec.counts.n[4] == 6);  // 7 trues, one owned by the type-1 cluster
    CHECK(dec.counts.n[1] + dec.counts.n[2] + dec.counts.n[3] == 0);
    CHECK(dec.counts.boundary_weight() <= dec.counts.d);

    // with ring degrees raised past small, the sent charge meets gamma exactly:
    // the only send is R8 (1/2) to the crossing
    for (int ring = 0; ring < 14; ++ring) raise_degree(b, ring, 6);
    auto d2 = b.build();
    REQUIRE(validate_drawing(d2).ok);
    auto dec2 = decompose_clusters(d2, c);
    REQUIRE(dec2.ok());
    CHECK(dec2.counts.n[0] == 1);
    auto [log, led] = run_discharging(d2, 13);
    CHECK(sent_by(log, c) == Rational(1, 2));
    CHECK(sent_by(log, c) <= gamma(d2.degree(c), dec2.counts));
}

TEST_CASE("decompose_clusters: opened crossing gives a type-2 cluster") {
    auto b = quad_fan(8);
    int c = 16;
    int f = -1;
    for (int cand : b.live_faces()) {
        if (b.face_degree(cand) != 4) continue;
        const auto& w = b.face_walk(cand);
        if (std::find(w.begin(), w.end(), c) != w.end() &&
            std::find(w.begin(), w.end(), 0) != w.end() &&
            std::find(w.begin(), w.end(), 1) != w.end())
            f = cand;
    }
    REQUIRE(f >= 0);
    REQUIRE(b.add_crossing_in_quad(f) >= 0);
    // open one flank: delete the spoke shared by the two 3-faces on one side
    REQUIRE(b.delete_edge(c, 2) >= 0);
    auto d = b.build();
    REQUIRE(validate_drawing(d).ok);
    REQUIRE(d.degree(c) == 8);
    auto dec = decompose_clusters(d, c);
    REQUIRE(dec.ok());
    CHECK(dec.counts.n[1] == 1);
    CHECK(dec.counts.n[0] == 0);
    CHECK(dec.counts.m() >= 1);

    // raise every ring vertex past small (and past degree 3, so the pot
    // stays inert and gamma's R3-free accounting applies)
    for (int ring = 0; ring < 16; ++ring) raise_degree(b, ring, 6);
    auto d2 = b.build();
    auto dec2 = decompose_clusters(d2, c);
    REQUIRE(dec2.ok());
    auto [log, led] = run_discharging(d2, 13);
    CHECK(sent_by(log, c) == Rational(1, 12));  // R9 only
    CHECK(sent_by(log, c) <= gamma(d2.degree(c), dec2.counts));
}

TEST_CASE("decompose_clusters: two crossings around one true spoke give a type-4 cluster") {
    auto b = quad_fan(9);
    int c = 18;
    auto find_quad = [&](int ring) {
        for (int cand : b.live_faces()) {
            if (b.face_degree(cand) != 4) continue;
            const auto& w = b.face_walk(cand);
            if (std::find(w.begin(), w.end(), c) != w.end() &&
                std::find(w.begin(), w.end(), ring) != w.end())
                return cand;
        }
        return -1;
    };
    // quads flanking spoke 2: (0,1,2) side and (2,3,4) side
    int f1 = find_quad(1), f2 = find_quad(3);
    REQUIRE(f1 >= 0);
    REQUIRE(f2 >= 0);
    REQUIRE(b.add_crossing_in_quad(f1) >= 0);
    REQUIRE(b.add_crossing_in_quad(f2) >= 0);
    REQUIRE(b.delete_edge(c, 0) >= 0);
    REQUIRE(b.delete_edge(c, 4) >= 0);
    auto d = b.build();
    REQUIRE(validate_drawing(d).ok);
    REQUIRE(d.degree(c) == 9);
    auto dec = decompose_clusters(d, c);
    REQUIRE(dec.ok());
    CHECK(dec.counts.n[3] == 1);
    CHECK(dec.counts.n[0] + dec.counts.n[1] + dec.counts.n[2] == 0);
    CHECK(dec.counts.m() >= 2);

    for (int ring = 0; ring < 18; ++ring) raise_degree(b, ring, 6);
    auto d2 = b.build();
    auto dec2 = decompose_clusters(d2, c);
    REQUIRE(dec2.ok());
    auto [log, led] = run_discharging(d2, 13);
    // both crossings: exactly-one flank edge remains, degree 9 sender: R5
    CHECK(sent_by(log, c) == Rational(1, 2));
    CHECK(sent_by(log, c) <= gamma(d2.degree(c), dec2.counts));
}

TEST_CASE("decompose_clusters: contract checks") {
    auto d = fx::k4_crossing();
    CHECK_THROWS_AS(decompose_clusters(d, 4), std::invalid_argument);  // false vertex
    CHECK_THROWS_AS(decompose_clusters(d, 0), std::invalid_argument);  // degree 3
}

TEST_CASE("gamma: band formulas") {
    ClusterCounts c;
    c.n = {4, 0, 0, 0, 0};
    c.d = 8;
    CHECK(gamma(8, c) == Rational(2));
    ClusterCounts c11;
    c11.n = {5, 0, 0, 0, 1};
    c11.d = 11;
    CHECK(gamma(11, c11) == Rational(59, 12));
    ClusterCounts c13;
    c13.n = {0, 0, 0, 0, 13};
    c13.d = 13;
    CHECK(gamma(13, c13) == Rational(29, 6));
    CHECK_THROWS_AS(gamma(7, c), std::invalid_argument);
}

TEST_CASE("cluster program optima match the degree-band bounds with equality") {
    CHECK(solve_cluster_program(8).q == Rational(2));
    CHECK(solve_cluster_program(9).q == Rational(3));
    CHECK(solve_cluster_program(10).q == Rational(15, 4));
    CHECK(solve_cluster_program(11).q == Rational(59, 12));
    CHECK(solve_cluster_program(12).q == Rational(6));
    CHECK_THROWS_AS(solve_cluster_program(13), std::invalid_argument);

    auto opt8 = solve_cluster_program(8);
    CHECK(gamma(8, opt8.argmax) == opt8.q);
    CHECK(opt8.argmax.boundary_weight() <= 8);

    // the side conditions do not move the optima
    CHECK(solve_cluster_program(9, true).q == Rational(3));
    CHECK(solve_cluster_program(11, true).q == Rational(59, 12));
}

TEST_CASE("degree 13..16 slack is nonpositive") {
    for (int dd = 13; dd <= 16; ++dd) CHECK(large_degree_slack(dd) <= Rational(0));
}

TEST_CASE("discharging: r below 13 rejected") {
    CHECK_THROWS_AS(run_discharging(fx::k4_crossing(), 12), std::invalid_argument);
}
