#include "onep/drawing.hpp"

#include <map>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace onep {

namespace {

uint64_t arc_key(int u, int v) {
    return (static_cast<uint64_t>(static_cast<uint32_t>(u)) << 32) | static_cast<uint32_t>(v);
}

}  // namespace

int OnePlanarDrawing::edge_count() const {
    int arcs = 0;
    for (const auto& r : rotation) arcs += static_cast<int>(r.size());
    return arcs / 2;
}

bool OnePlanarDrawing::has_arc(int u, int v) const {
    if (u < 0 || u >= vertex_count()) return false;
    const auto& r = rotation[u];
    return std::find(r.begin(), r.end(), v) != r.end();
}

bool OnePlanarDrawing::is_connected() const {
    if (vertex_count() == 0) return true;
    std::vector<char> seen(vertex_count(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : rotation[u])
            if (v >= 0 && v < vertex_count() && !seen[v]) {
                seen[v] = 1;
                ++reached;
                stack.push_back(v);
            }
    }
    return reached == vertex_count();
}

bool Face::contains_vertex(int v) const {
    for (const auto& [x, _] : corners)
        if (x == v) return true;
    return false;
}

OnePlanarDrawing parse_drawing(const std::string& text) {
    struct VLine {
        int id;
        bool is_false;
        int line_no;
    };
    struct RLine {
        int id;
        std::vector<int> rot;
        int line_no;
    };
    std::vector<VLine> vlines;
    std::vector<RLine> rlines;

    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    auto fail = [](int no, const std::string& what) {
        throw ParseError("line " + std::to_string(no) + ": " + what);
    };
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag[0] == '#') continue;
        if (tag == "v") {
            int id;
            if (!(ls >> id) || id <= 0) fail(line_no, "expected 'v <positive id> [false]'");
            std::string flag;
            bool f = false;
            if (ls >> flag) {
                if (flag == "false")
                    f = true;
                else
                    fail(line_no, "unexpected token '" + flag + "' after vertex id");
            }
            vlines.push_back({id, f, line_no});
        } else if (tag == "r") {
            std::string head;
            if (!(ls >> head)) fail(line_no, "expected 'r <id>: ...'");
            if (head.back() == ':') head.pop_back();
            int id;
            try {
                size_t pos = 0;
                id = std::stoi(head, &pos);
                if (pos != head.size()) throw std::invalid_argument("");
            } catch (...) {
                fail(line_no, "bad rotation vertex id '" + head + "'");
                return {};
            }
            std::vector<int> rot;
            std::string tok;
            while (ls >> tok) {
                if (tok == ":") continue;
                try {
                    size_t pos = 0;
                    int x = std::stoi(tok, &pos);
                    if (pos != tok.size() || x <= 0) throw std::invalid_argument("");
                    rot.push_back(x);
                } catch (...) {
                    fail(line_no, "bad rotation entry '" + tok + "'");
                }
            }
            rlines.push_back({id, std::move(rot), line_no});
        } else {
            fail(line_no, "unknown directive '" + tag + "'");
        }
    }

    int n = static_cast<int>(vlines.size());
    std::unordered_map<int, int> id_map;  // file id -> 0-based id
    std::vector<bool> flags(n, false);
    {
        std::set<int> ids;
        for (const auto& v : vlines) {
            if (!ids.insert(v.id).second) fail(v.line_no, "duplicate vertex id " + std::to_string(v.id));
        }
        if (!ids.empty() && (*ids.begin() != 1 || *ids.rbegin() != n))
            throw ParseError("vertex ids must be exactly 1.." + std::to_string(n));
        for (const auto& v : vlines) {
            id_map[v.id] = v.id - 1;
            flags[v.id - 1] = v.is_false;
        }
    }

    OnePlanarDrawing d;
    d.rotation.assign(n, {});
    d.is_false = flags;
    std::vector<char> have_rot(n, 0);
    for (const auto& r : rlines) {
        auto it = id_map.find(r.id);
        if (it == id_map.end())
            fail(r.line_no, "rotation for undeclared vertex " + std::to_string(r.id));
        int u = it->second;
        if (have_rot[u]) fail(r.line_no, "duplicate rotation for vertex " + std::to_string(r.id));
        have_rot[u] = 1;
        std::set<int> seen;
        for (int x : r.rot) {
            if (!id_map.count(x))
                fail(r.line_no, "dangling vertex reference " + std::to_string(x));
            if (x == r.id) fail(r.line_no, "loop at vertex " + std::to_string(r.id));
            if (!seen.insert(x).second)
                fail(r.line_no, "duplicate rotation entry " + std::to_string(x) + " at vertex " +
                                    std::to_string(r.id));
            d.rotation[u].push_back(id_map[x]);
        }
    }
    for (int u = 0; u < n; ++u)
        if (!have_rot[u]) throw ParseError("missing rotation for vertex " + std::to_string(u + 1));

    // Symmetry: u lists v iff v lists u.
    for (int u = 0; u < n; ++u)
        for (int v : d.rotation[u])
            if (!d.has_arc(v, u))
                throw ParseError("asymmetric rotation: vertex " + std::to_string(u + 1) + " lists " +
                                 std::to_string(v + 1) + " but not vice versa");

    // Adjacent false vertices cannot occur in a crossing-minimal drawing.
    for (int u = 0; u < n; ++u)
        if (d.is_false[u])
            for (int v : d.rotation[u])
                if (d.is_false[v])
                    throw ParseError("adjacent false vertices " + std::to_string(u + 1) + " and " +
                                     std::to_string(v + 1));

    return d;
}

std::string serialize_drawing(const OnePlanarDrawing& d) {
    std::ostringstream out;
    for (int u = 0; u < d.vertex_count(); ++u) {
        out << "v " << (u + 1);
        if (d.is_false[u]) out << " false";
        out << "\n";
    }
    for (int u = 0; u < d.vertex_count(); ++u) {
        out << "r " << (u + 1) << ":";
        for (int v : d.rotation[u]) out << " " << (v + 1);
        out << "\n";
    }
    return out.str();
}

std::vector<Face> faces(const OnePlanarDrawing& d) {
    // Position of u within rotation of v, for O(1) successor lookup.
    std::unordered_map<uint64_t, int> pos;
    for (int v = 0; v < d.vertex_count(); ++v)
        for (int i = 0; i < d.degree(v); ++i) pos[arc_key(v, d.rotation[v][i])] = i;

    std::unordered_set<uint64_t> visited;
    std::vector<Face> out;
    for (int u = 0; u < d.vertex_count(); ++u) {
        for (int v0 : d.rotation[u]) {
            if (visited.count(arc_key(u, v0))) continue;
            Face f;
            int a = u, b = v0;
            do {
                visited.insert(arc_key(a, b));
                f.corners.emplace_back(b, a);
                if (d.is_false[b]) f.touches_false = true;
                // successor of (a,b): (b, w) with w following a in rotation at b
                int i = pos.at(arc_key(b, a));
                const auto& rot = d.rotation[b];
                int w = rot[(i + 1) % rot.size()];
                a = b;
                b = w;
            } while (!(a == u && b == v0));
            out.push_back(std::move(f));
        }
    }
    return out;
}

ValidationReport validate_drawing(const OnePlanarDrawing& d) {
    ValidationReport rep;
    auto vname = [](int v) { return "vertex " + std::to_string(v + 1); };

    for (int u = 0; u < d.vertex_count(); ++u) {
        std::set<int> seen;
        for (int v : d.rotation[u]) {
            if (v < 0 || v >= d.vertex_count()) {
                rep.add("dangling-reference", vname(u), "rotation entry out of range");
                continue;
            }
            if (v == u) rep.add("loop", vname(u), "vertex lists itself");
            if (!seen.insert(v).second)
                rep.add("parallel-edge", vname(u), "duplicate rotation entry " + std::to_string(v + 1));
            if (!d.has_arc(v, u))
                rep.add("asymmetric-rotation", vname(u),
                        "lists " + std::to_string(v + 1) + " without the reverse");
        }
    }
    if (!rep.ok) return rep;  // face traversal needs structural sanity

    for (int u = 0; u < d.vertex_count(); ++u) {
        if (!d.is_false[u]) continue;
        if (d.degree(u) != 4)
            rep.add("false-degree", vname(u),
                    "false vertex degree != 4 (is " + std::to_string(d.degree(u)) + ")");
        for (int v : d.rotation[u])
            if (d.is_false[v] && u < v)
                rep.add("adjacent-false", vname(u), "adjacent to false " + std::to_string(v + 1));
    }

    int V = d.vertex_count();
    int E = d.edge_count();
    int F = static_cast<int>(faces(d).size());
    if (d.is_connected()) {
        if (V - E + F != 2)
            rep.add("genus", "drawing",
                    "V - E + F = " + std::to_string(V - E + F) + ", expected 2 (genus != 0)");
    } else {
        // Euler for a plane graph with c components: V - E + F = 1 + c.
        int c = 0;
        {
            Graph skel(V);
            for (int u = 0; u < V; ++u)
                for (int v : d.rotation[u])
                    if (u < v) skel.add_edge(u, v);
            skel.components(&c);
        }
        if (V - E + F != 1 + c)
            rep.add("genus", "drawing",
                    "V - E + F = " + std::to_string(V - E + F) + ", expected " +
                        std::to_string(1 + c) + " for " + std::to_string(c) + " components");
    }
    return rep;
}

UnderlyingGraph underlying_graph(const OnePlanarDrawing& d) {
    UnderlyingGraph out;
    out.from_drawing.assign(d.vertex_count(), -1);
    for (int v = 0; v < d.vertex_count(); ++v) {
        if (!d.is_false[v]) {
            out.from_drawing[v] = static_cast<int>(out.to_drawing.size());
            out.to_drawing.push_back(v);
        }
    }
    Graph g(static_cast<int>(out.to_drawing.size()));
    auto add = [&](int du, int dv) {
        int u = out.from_drawing[du], v = out.from_drawing[dv];
        if (u < 0 || v < 0)
            throw std::invalid_argument("not a drawing of a simple graph: false-false incidence");
        if (u == v) throw std::invalid_argument("not a drawing of a simple graph: loop");
        if (g.has_edge(u, v))
            throw std::invalid_argument("not a drawing of a simple graph: parallel edge between " +
                                        std::to_string(du + 1) + " and " + std::to_string(dv + 1));
        g.add_edge(u, v);
    };
    for (int u = 0; u < d.vertex_count(); ++u) {
        if (d.is_false[u]) {
            if (d.degree(u) != 4)
                throw std::invalid_argument("false vertex " + std::to_string(u + 1) +
                                            " has degree != 4");
            const auto& r = d.rotation[u];
            add(r[0], r[2]);  // crossed edges are the opposite pairs
            add(r[1], r[3]);
        } else {
            for (int v : d.rotation[u])
                if (!d.is_false[v] && u < v) add(u, v);
        }
    }
    out.graph = std::move(g);
    return out;
}

}  // namespace onep
