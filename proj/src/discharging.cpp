#include "onep/discharging.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace onep {

std::string to_string(const Rational& q) {
    std::ostringstream out;
    out << q;
    return out.str();
}

std::string to_string(const ElementRef& e) {
    switch (e.kind) {
        case ElementKind::Vertex: return "v" + std::to_string(e.id + 1);
        case ElementKind::Face: return "f#" + std::to_string(e.id);
        case ElementKind::Pot: return "pot";
    }
    return "?";
}

std::string to_string(Rule r) {
    static const char* names[] = {"R1", "R2", "R3", "R4", "R5", "R6", "R7", "R8", "R9"};
    return names[static_cast<int>(r)];
}

Rational ChargeLedger::total() const {
    Rational t = pot;
    for (const auto& q : vertex_charge) t += q;
    for (const auto& q : face_charge) t += q;
    return t;
}

namespace {

uint64_t und_key(int u, int v) {
    if (u > v) std::swap(u, v);
    return (static_cast<uint64_t>(static_cast<uint32_t>(u)) << 32) | static_cast<uint32_t>(v);
}

/// Shared per-drawing lookups for the rules.
struct Index {
    std::vector<Face> fs;
    std::unordered_set<uint64_t> gx_edges;
    std::vector<std::vector<int>> faces_at;           // per vertex, multiplicity
    std::map<uint64_t, std::vector<int>> tri_third;   // gx edge -> third corners of its 3-faces
    int delta_g = 0;                                  // max degree of the underlying graph
    std::vector<int> v3, vdelta;                      // true 3-vertices / Delta-vertices

    explicit Index(const OnePlanarDrawing& d) {
        fs = faces(d);
        const int n = d.vertex_count();
        faces_at.assign(n, {});
        for (int fi = 0; fi < static_cast<int>(fs.size()); ++fi) {
            for (const auto& [v, _] : fs[fi].corners) faces_at[v].push_back(fi);
            if (fs[fi].degree() == 3) {
                const auto& c = fs[fi].corners;
                int a = c[0].first, b = c[1].first, x = c[2].first;
                tri_third[und_key(a, b)].push_back(x);
                tri_third[und_key(b, x)].push_back(a);
                tri_third[und_key(x, a)].push_back(b);
            }
        }
        for (int u = 0; u < n; ++u)
            for (int v : d.rotation[u]) gx_edges.insert(und_key(u, v));
        for (int v = 0; v < n; ++v)
            if (!d.is_false[v]) delta_g = std::max(delta_g, d.degree(v));
        for (int v = 0; v < n; ++v) {
            if (d.is_false[v]) continue;
            if (d.degree(v) == 3) v3.push_back(v);
            if (d.degree(v) == delta_g) vdelta.push_back(v);
        }
    }

    bool adj(int u, int v) const { return gx_edges.count(und_key(u, v)) > 0; }

    bool tri_neighbor(const OnePlanarDrawing& d, int u, int v) const {
        if (d.is_false[u] || d.is_false[v]) return false;
        if (d.degree(v) != 4 || !adj(u, v)) return false;
        auto it = tri_third.find(und_key(u, v));
        if (it == tri_third.end()) return false;
        for (int w : it->second)
            if (!d.is_false[w]) return true;
        return false;
    }
};

bool small_gx(const OnePlanarDrawing& d, int v) { return d.degree(v) <= 5; }

struct CrossingSend {
    Rule rule;
    ElementRef to;
    Rational amount;
    std::optional<int> via;
};

/// Evaluates the crossing rules for endpoint u of the crossing at false
/// vertex w. v is the opposite endpoint, x/y the other crossed pair.
std::vector<CrossingSend> crossing_sends(const OnePlanarDrawing& d, const Index& ix, int w,
                                         int u) {
    const auto& rot = d.rotation[w];
    int pos = static_cast<int>(std::find(rot.begin(), rot.end(), u) - rot.begin());
    int v = rot[(pos + 2) % 4];
    int x = rot[(pos + 1) % 4];
    int y = rot[(pos + 3) % 4];
    const int du = d.degree(u);
    const bool ex = ix.adj(u, x), ey = ix.adj(u, y);

    std::vector<CrossingSend> out;
    auto to_w = [&](Rule rule, Rational amt) {
        out.push_back({rule, {ElementKind::Vertex, w}, std::move(amt), std::nullopt});
    };
    auto through_w = [&](Rule rule, Rational amt) {
        out.push_back({rule, {ElementKind::Vertex, v}, std::move(amt), w});
    };
    if (du >= 9) {
        if (!ex && !ey) {
            if (small_gx(d, v)) through_w(Rule::R4, Rational(1, 3));
        } else if (ex != ey) {
            to_w(Rule::R5, Rational(1, 4));
            if (d.degree(v) <= 4) through_w(Rule::R5, Rational(1, 3));
        } else {
            // x and y are interchangeable labels: R6 if either labeling
            // satisfies it, R7 otherwise
            bool r6 = (ix.adj(v, x) && small_gx(d, y)) || (ix.adj(v, y) && small_gx(d, x));
            if (r6) {
                to_w(Rule::R6, Rational(3, 4));
                if (d.degree(v) <= 4) through_w(Rule::R6, Rational(1, 24));
            } else {
                to_w(Rule::R7, Rational(2, 3));
                if (d.degree(v) <= 4) through_w(Rule::R7, Rational(1, 8));
            }
        }
    } else if (du == 8) {
        if (ex && ey)
            to_w(Rule::R8, Rational(1, 2));
        else if (ex != ey)
            to_w(Rule::R9, Rational(1, 12));
    }
    return out;
}

/// R1 share of face fi: (2d-6)/s over its s small corner incidences.
std::optional<Rational> r1_share(const OnePlanarDrawing& d, const Face& f) {
    if (f.degree() < 4) return std::nullopt;
    int s = 0;
    for (const auto& [v, _] : f.corners)
        if (small_gx(d, v)) ++s;
    if (s == 0) return std::nullopt;  // nobody qualifies: the face keeps its charge
    return Rational(2 * f.degree() - 6, s);
}

}  // namespace

ChargeLedger initial_charges(const OnePlanarDrawing& d) {
    ChargeLedger led;
    led.vertex_charge.reserve(d.vertex_count());
    for (int v = 0; v < d.vertex_count(); ++v) led.vertex_charge.emplace_back(d.degree(v) - 6);
    for (const Face& f : faces(d)) led.face_charge.emplace_back(2 * f.degree() - 6);
    led.pot = 0;
    return led;
}

std::pair<std::vector<Transfer>, ChargeLedger> run_discharging(const OnePlanarDrawing& d, int r) {
    if (r < 13) throw std::invalid_argument("run_discharging: r must be >= 13");
    Index ix(d);
    ChargeLedger led = initial_charges(d);
    std::vector<Transfer> log;

    auto apply = [&](Rule rule, ElementRef from, ElementRef to, Rational amount,
                     std::optional<int> via = std::nullopt) {
        auto& fq = from.kind == ElementKind::Pot
                       ? led.pot
                       : (from.kind == ElementKind::Vertex ? led.vertex_charge[from.id]
                                                           : led.face_charge[from.id]);
        auto& tq = to.kind == ElementKind::Pot
                       ? led.pot
                       : (to.kind == ElementKind::Vertex ? led.vertex_charge[to.id]
                                                         : led.face_charge[to.id]);
        fq -= amount;
        tq += amount;
        log.push_back({rule, from, to, std::move(amount), via});
    };

    // R1: every 4+-face splits its initial charge uniformly over its small
    // corner incidences (multiplicity counts).
    for (int fi = 0; fi < static_cast<int>(ix.fs.size()); ++fi) {
        auto share = r1_share(d, ix.fs[fi]);
        if (!share) continue;
        for (const auto& [v, _] : ix.fs[fi].corners)
            if (small_gx(d, v))
                apply(Rule::R1, {ElementKind::Face, fi}, {ElementKind::Vertex, v}, *share);
    }

    // R2: Delta-vertices pay 1/2 into the pot, 3-vertices draw 1, only when
    // 3-vertices exist.
    if (!ix.v3.empty()) {
        for (int v : ix.vdelta)
            apply(Rule::R2, {ElementKind::Vertex, v}, {ElementKind::Pot, -1}, Rational(1, 2));
        for (int v : ix.v3)
            apply(Rule::R2, {ElementKind::Pot, -1}, {ElementKind::Vertex, v}, Rational(1));
    }

    // R3: every true vertex pays 1/3 to each small true neighbor, plus 1/12
    // when it is a tri-neighbor of it.
    for (int u = 0; u < d.vertex_count(); ++u) {
        if (d.is_false[u]) continue;
        std::vector<int> nb = d.rotation[u];
        std::sort(nb.begin(), nb.end());
        for (int v : nb) {
            if (d.is_false[v] || !small_gx(d, v)) continue;
            apply(Rule::R3, {ElementKind::Vertex, u}, {ElementKind::Vertex, v}, Rational(1, 3));
            if (ix.tri_neighbor(d, u, v))
                apply(Rule::R3, {ElementKind::Vertex, u}, {ElementKind::Vertex, v},
                      Rational(1, 12));
        }
    }

    // R4-R9: per crossing, the sender role ranges over all four endpoints.
    for (int w = 0; w < d.vertex_count(); ++w) {
        if (!d.is_false[w]) continue;
        if (d.degree(w) != 4)
            throw std::invalid_argument("run_discharging: false vertex of degree != 4");
        for (int u : d.rotation[w])
            for (auto& send : crossing_sends(d, ix, w, u))
                apply(send.rule, {ElementKind::Vertex, u}, send.to, send.amount, send.via);
    }

    return {std::move(log), std::move(led)};
}

bool recheck_transfer(const OnePlanarDrawing& d, int r, const Transfer& t) {
    if (r < 13) return false;
    Index ix(d);
    if (t.amount <= 0) return false;
    switch (t.rule) {
        case Rule::R1: {
            if (t.from.kind != ElementKind::Face || t.to.kind != ElementKind::Vertex) return false;
            if (t.from.id < 0 || t.from.id >= static_cast<int>(ix.fs.size())) return false;
            const Face& f = ix.fs[t.from.id];
            auto share = r1_share(d, f);
            return share && *share == t.amount && f.contains_vertex(t.to.id) &&
                   small_gx(d, t.to.id);
        }
        case Rule::R2: {
            if (ix.v3.empty()) return false;
            if (t.from.kind == ElementKind::Vertex && t.to.kind == ElementKind::Pot)
                return t.amount == Rational(1, 2) && !d.is_false[t.from.id] &&
                       d.degree(t.from.id) == ix.delta_g;
            if (t.from.kind == ElementKind::Pot && t.to.kind == ElementKind::Vertex)
                return t.amount == Rational(1) && !d.is_false[t.to.id] &&
                       d.degree(t.to.id) == 3;
            return false;
        }
        case Rule::R3: {
            if (t.from.kind != ElementKind::Vertex || t.to.kind != ElementKind::Vertex)
                return false;
            int u = t.from.id, v = t.to.id;
            if (d.is_false[u] || d.is_false[v] || !ix.adj(u, v) || !small_gx(d, v)) return false;
            if (t.amount == Rational(1, 3)) return true;
            if (t.amount == Rational(1, 12)) return ix.tri_neighbor(d, u, v);
            return false;
        }
        default: {
            if (t.from.kind != ElementKind::Vertex || t.to.kind != ElementKind::Vertex)
                return false;
            int w = t.via ? *t.via : t.to.id;
            if (w < 0 || w >= d.vertex_count() || !d.is_false[w] || d.degree(w) != 4)
                return false;
            int u = t.from.id;
            const auto& rot = d.rotation[w];
            if (std::find(rot.begin(), rot.end(), u) == rot.end()) return false;
            for (const auto& send : crossing_sends(d, ix, w, u))
                if (send.rule == t.rule && send.to == t.to && send.amount == t.amount &&
                    send.via == t.via)
                    return true;
            return false;
        }
    }
}

AuditReport audit(const OnePlanarDrawing& d, int r) {
    AuditReport rep;
    rep.initial = initial_charges(d);
    auto [log, final_led] = run_discharging(d, r);
    rep.transfers = std::move(log);
    rep.final = std::move(final_led);
    rep.connected = d.is_connected();
    rep.total_final = rep.final.total();
    rep.conserved = rep.connected && rep.total_final == Rational(-12);
    rep.pot_balance = rep.final.pot;

    Index ix(d);
    if (!ix.v3.empty())
        rep.expected_pot =
            Rational(static_cast<int>(ix.vdelta.size()), 2) - Rational(static_cast<int>(ix.v3.size()));

    for (int v = 0; v < d.vertex_count(); ++v)
        if (rep.final.vertex_charge[v] < 0)
            rep.negative_elements.push_back({{ElementKind::Vertex, v}, rep.final.vertex_charge[v]});
    for (int fi = 0; fi < static_cast<int>(rep.final.face_charge.size()); ++fi)
        if (rep.final.face_charge[fi] < 0)
            rep.negative_elements.push_back({{ElementKind::Face, fi}, rep.final.face_charge[fi]});
    if (rep.final.pot < 0) rep.negative_elements.push_back({{ElementKind::Pot, -1}, rep.final.pot});
    return rep;
}

std::string format_audit(const AuditReport& rep, const OnePlanarDrawing& d, bool with_transfers) {
    std::ostringstream out;
    out << "element  initial  final\n";
    for (int v = 0; v < d.vertex_count(); ++v)
        out << "v" << (v + 1) << (d.is_false[v] ? " (false)" : "") << "  "
            << to_string(rep.initial.vertex_charge[v]) << "  "
            << to_string(rep.final.vertex_charge[v]) << "\n";
    for (int fi = 0; fi < static_cast<int>(rep.initial.face_charge.size()); ++fi)
        out << "f#" << fi << "  " << to_string(rep.initial.face_charge[fi]) << "  "
            << to_string(rep.final.face_charge[fi]) << "\n";
    out << "pot  0  " << to_string(rep.final.pot) << "\n";
    if (rep.expected_pot)
        out << "pot expected (|V_Delta|/2 - |V_3|): " << to_string(*rep.expected_pot) << "\n";
    if (with_transfers) {
        out << "transfers (" << rep.transfers.size() << "):\n";
        for (const auto& t : rep.transfers) {
            out << "  " << to_string(t.rule) << " " << to_string(t.from) << " -> "
                << to_string(t.to) << " : " << to_string(t.amount);
            if (t.via) out << " (through v" << (*t.via + 1) << ")";
            out << "\n";
        }
    }
    out << "negative elements: " << rep.negative_elements.size() << "\n";
    for (const auto& [e, q] : rep.negative_elements)
        out << "  " << to_string(e) << " = " << to_string(q) << "\n";
    if (rep.connected)
        out << "conservation: total final = " << to_string(rep.total_final)
            << (rep.conserved ? " == -12 OK" : " != -12 VIOLATED") << "\n";
    else
        out << "conservation: drawing disconnected, global -12 check skipped (total = "
            << to_string(rep.total_final) << ")\n";
    return out.str();
}

ClusterDecomposition decompose_clusters(const OnePlanarDrawing& d, int v) {
    if (v < 0 || v >= d.vertex_count() || d.is_false[v])
        throw std::invalid_argument("decompose_clusters: v must be a true vertex");
    if (d.degree(v) < 8)
        throw std::invalid_argument("decompose_clusters: degree of v must be >= 8");

    // face of the corner between spokes v_i and v_{i+1}
    std::vector<Face> fs = faces(d);
    auto dir_key = [](int a, int b) {
        return (static_cast<uint64_t>(static_cast<uint32_t>(a)) << 32) | static_cast<uint32_t>(b);
    };
    std::unordered_map<uint64_t, int> face_of_arc;
    for (int fi = 0; fi < static_cast<int>(fs.size()); ++fi)
        for (const auto& [to, from] : fs[fi].corners) face_of_arc[dir_key(from, to)] = fi;

    const int D = d.degree(v);
    const auto& rot = d.rotation[v];
    std::vector<int> corner_face(D);
    for (int i = 0; i < D; ++i) {
        auto it = face_of_arc.find(dir_key(v, rot[(i + 1) % D]));
        if (it == face_of_arc.end())
            throw std::invalid_argument("decompose_clusters: drawing has no consistent faces");
        corner_face[i] = it->second;
    }

    ClusterDecomposition out;
    out.counts.d = D;
    auto face_deg = [&](int i) { return fs[corner_face[i]].degree(); };
    auto left_face = [&](int i) { return (i + D - 1) % D; };  // corner between v_{i-1}, v_i

    // flank pattern per fan neighbor
    enum class FClass { Double3, Single3, No3 };
    std::vector<std::optional<FClass>> fclass(D);
    int n_true = 0, n_false = 0;
    for (int i = 0; i < D; ++i) {
        bool l3 = face_deg(left_face(i)) == 3, r3 = face_deg(i) == 3;
        if (d.is_false[rot[i]]) {
            ++n_false;
            fclass[i] = l3 && r3 ? FClass::Double3 : (l3 || r3 ? FClass::Single3 : FClass::No3);
        } else {
            ++n_true;
        }
    }

    std::vector<int> role(D, 0);  // 0 unassigned, 1..5 anchor of that type
    // type 1: double-3 false neighbors
    for (int i = 0; i < D; ++i)
        if (fclass[i] == FClass::Double3) {
            role[i] = 1;
            ++out.counts.n[0];
        }
    // type 4 centers: a true between two single-3 falses under the shared 3-faces;
    // type 3: a true flanked by two 3-faces whose other corners are true
    std::vector<char> consumed(D, 0);
    for (int i = 0; i < D; ++i) {
        if (d.is_false[rot[i]]) continue;
        bool l3 = face_deg(left_face(i)) == 3, r3 = face_deg(i) == 3;
        if (!(l3 && r3)) continue;
        int lm = (i + D - 1) % D, rm = (i + 1) % D;
        bool l_single = fclass[lm] == FClass::Single3 && !consumed[lm];
        bool r_single = fclass[rm] == FClass::Single3 && !consumed[rm];
        if (l_single && r_single) {
            role[i] = 4;
            consumed[lm] = consumed[rm] = 1;
            ++out.counts.n[3];
        } else if (!d.is_false[rot[lm]] && !d.is_false[rot[rm]]) {
            role[i] = 3;
            ++out.counts.n[2];
        }
    }
    // type 2: remaining single-3 falses
    for (int i = 0; i < D; ++i)
        if (fclass[i] == FClass::Single3 && !consumed[i]) {
            role[i] = 2;
            ++out.counts.n[1];
        }
    // type 5: leftover trues
    int n5 = n_true - out.counts.n[0] - out.counts.n[1] - out.counts.n[2] - out.counts.n[3];
    if (n5 < 0) {
        out.unclassified.push_back(
            "fan around v" + std::to_string(v + 1) +
            ": typed clusters need more owned true neighbors than exist (deficit " +
            std::to_string(-n5) + ")");
        return out;
    }
    out.counts.n[4] = n5;
    int assigned_5 = 0;
    for (int i = 0; i < D && assigned_5 < n5; ++i) {
        if (d.is_false[rot[i]] || role[i] != 0) continue;
        role[i] = 5;
        ++assigned_5;
    }

    // materialize clusters in fan order; no-3 falses join the nearest
    // preceding absorbing cluster (type 2, 4 or 5), cyclically
    std::vector<int> cluster_of(D, -1);
    for (int i = 0; i < D; ++i) {
        if (role[i] == 0) continue;
        Cluster c;
        c.type = role[i];
        c.members.push_back(rot[i]);
        if (role[i] == 1) {
            c.false_neighbors = 1;
            c.faces = {corner_face[left_face(i)], corner_face[i]};
        } else if (role[i] == 2) {
            c.false_neighbors = 1;
            c.faces = {corner_face[left_face(i)], corner_face[i]};
        } else if (role[i] == 3) {
            c.faces = {corner_face[left_face(i)], corner_face[i]};
        } else if (role[i] == 4) {
            int lm = (i + D - 1) % D, rm = (i + 1) % D;
            c.false_neighbors = 2;
            c.members = {rot[lm], rot[i], rot[rm]};
            c.faces = {corner_face[left_face(lm)], corner_face[left_face(i)], corner_face[i],
                       corner_face[rm]};
        }
        cluster_of[i] = static_cast<int>(out.clusters.size());
        if (role[i] == 4) {
            cluster_of[(i + D - 1) % D] = cluster_of[i];
            cluster_of[(i + 1) % D] = cluster_of[i];
        }
        out.clusters.push_back(std::move(c));
    }
    // absorber sweep
    {
        int last_absorber = -1;
        for (int i = D - 1; i >= 0; --i)
            if (role[i] == 2 || role[i] == 4 || role[i] == 5) {
                last_absorber = i;
                break;
            }
        if (last_absorber >= 0) {
            int cur = last_absorber;
            for (int step = 1; step <= D; ++step) {
                int i = (last_absorber + step) % D;
                if (role[i] == 2 || role[i] == 4 || role[i] == 5) cur = i;
                if (fclass[i] == FClass::No3) {
                    int ci = cluster_of[cur];
                    out.clusters[ci].members.push_back(rot[i]);
                    ++out.clusters[ci].false_neighbors;
                    out.clusters[ci].faces.push_back(corner_face[i]);
                    cluster_of[i] = ci;
                }
            }
        } else {
            // no absorbing cluster: legal only when the whole fan is false
            bool any_no3 = std::any_of(fclass.begin(), fclass.end(), [](const auto& f) {
                return f == FClass::No3;
            });
            if (any_no3) {
                if (n_true == 0) {
                    Cluster c;
                    c.type = 5;
                    for (int i = 0; i < D; ++i) {
                        c.members.push_back(rot[i]);
                        c.faces.push_back(corner_face[i]);
                        ++c.false_neighbors;
                    }
                    out.clusters.push_back(std::move(c));
                } else {
                    out.unclassified.push_back("fan around v" + std::to_string(v + 1) +
                                               ": 4+-region false neighbors with no absorbing "
                                               "cluster");
                }
            }
        }
    }

    // facts (1)-(3) must hold for a classified fan
    if (out.ok()) {
        bool f1 = n_true == out.counts.n[0] + out.counts.n[1] + out.counts.n[2] +
                                out.counts.n[3] + out.counts.n[4];
        bool f2 = n_false == out.counts.n[0] + out.counts.m();
        bool f3 = out.counts.boundary_weight() <= D;
        if (!f1 || !f2 || !f3)
            out.unclassified.push_back("fan around v" + std::to_string(v + 1) +
                                       ": cluster counts violate the counting facts");
    }
    return out;
}

Rational gamma(int d_deg, const ClusterCounts& c) {
    if (d_deg < 8) throw std::invalid_argument("gamma: degree must be >= 8");
    const int n1 = c.n[0], n2 = c.n[1], n3 = c.n[2], n4 = c.n[3], n5 = c.n[4];
    if (d_deg == 8) return Rational(1, 2) * n1 + Rational(1, 12) * n2 + Rational(1, 6) * n4;
    if (d_deg <= 10) return Rational(3, 4) * n1 + Rational(1, 4) * n2 + Rational(1, 2) * n4;
    if (d_deg == 11)
        return Rational(11, 12) * n1 + Rational(7, 12) * n2 + Rational(1, 4) * n3 +
               Rational(5, 6) * n4 + Rational(1, 3) * n5;
    if (d_deg == 12)
        return Rational(4) + Rational(7, 24) * n1 + Rational(1, 4) * n2 - Rational(1, 12) * n3 +
               Rational(1, 2) * n4;
    return Rational(d_deg, 3) + Rational(7, 24) * n1 + Rational(1, 4) * n2 -
           Rational(1, 12) * n3 + Rational(1, 2) * n4 + Rational(1, 2);
}

namespace {

template <typename F>
void enumerate_feasible(int d, F&& visit) {
    for (int n1 = 0; 2 * n1 <= d; ++n1)
        for (int n2 = 0; 2 * n1 + 2 * n2 <= d; ++n2)
            for (int n3 = 0; 2 * n1 + 2 * n2 + n3 <= d; ++n3)
                for (int n4 = 0; 2 * n1 + 2 * n2 + n3 + 3 * n4 <= d; ++n4)
                    for (int n5 = 0; 2 * n1 + 2 * n2 + n3 + 3 * n4 + n5 <= d; ++n5) {
                        ClusterCounts c;
                        c.n = {n1, n2, n3, n4, n5};
                        c.d = d;
                        visit(c);
                    }
}

}  // namespace

ProgramOptimum solve_cluster_program(int d_deg, bool side_conditions) {
    if (d_deg < 8 || d_deg > 12)
        throw std::invalid_argument("solve_cluster_program: degree band is 8..12");
    std::optional<ProgramOptimum> best;
    enumerate_feasible(d_deg, [&](const ClusterCounts& c) {
        if (side_conditions) {
            int w = c.boundary_weight();
            if (d_deg == 9 && w == 9 && c.n[2] + c.n[3] + c.n[4] < 1) return;
            if (d_deg == 11 && w == 11 && c.n[1] + c.n[2] + c.n[3] + c.n[4] < 1) return;
        }
        Rational q = gamma(d_deg, c);
        if (!best || q > best->q) best = ProgramOptimum{std::move(q), c};
    });
    return *best;
}

Rational large_degree_slack(int d_deg) {
    if (d_deg < 13) throw std::invalid_argument("large_degree_slack: degree must be >= 13");
    std::optional<Rational> worst;
    enumerate_feasible(d_deg, [&](const ClusterCounts& c) {
        Rational slack = gamma(d_deg, c) - Rational(d_deg - 6) - Rational(13 - d_deg, 2);
        if (!worst || slack > *worst) worst = std::move(slack);
    });
    return *worst;
}

}  // namespace onep
