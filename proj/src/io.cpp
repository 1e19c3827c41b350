#include "onep/io.hpp"

#include <fstream>
#include <sstream>

#include "onep/drawing.hpp"  // ParseError

namespace onep {

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    int n = -1;
    Graph g;
    auto fail = [](int no, const std::string& what) {
        throw ParseError("line " + std::to_string(no) + ": " + what);
    };
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag[0] == '#') continue;
        if (tag == "p") {
            if (n >= 0) fail(line_no, "duplicate header");
            if (!(ls >> n) || n < 0) fail(line_no, "expected 'p <n>'");
            g = Graph(n);
        } else if (tag == "e") {
            if (n < 0) fail(line_no, "edge before 'p' header");
            int u, v;
            if (!(ls >> u >> v)) fail(line_no, "expected 'e <u> <v>'");
            if (u < 1 || v < 1 || u > n || v > n) fail(line_no, "vertex id out of range");
            if (u == v) fail(line_no, "loop");
            if (g.has_edge(u - 1, v - 1)) fail(line_no, "duplicate edge");
            g.add_edge(u - 1, v - 1);
        } else {
            fail(line_no, "unknown directive '" + tag + "'");
        }
    }
    if (n < 0) throw ParseError("missing 'p <n>' header");
    return g;
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << "p " << g.vertex_count() << "\n";
    for (const Edge& e : g.edges()) out << "e " << (e.u + 1) << " " << (e.v + 1) << "\n";
    return out.str();
}

TotalColoring parse_coloring(const std::string& text, int vertex_count) {
    TotalColoring c(vertex_count, 0);
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
        if (tag == "V") {
            int v, col;
            if (!(ls >> v >> col) || v < 1 || v > vertex_count || col < 1)
                fail(line_no, "expected 'V <id> <color>'");
            c.set_vertex(v - 1, col);
            c.k = std::max(c.k, col);
        } else if (tag == "E") {
            int u, v, col;
            if (!(ls >> u >> v >> col) || u < 1 || v < 1 || u > vertex_count ||
                v > vertex_count || u == v || col < 1)
                fail(line_no, "expected 'E <u> <v> <color>'");
            c.set_edge(Edge(u - 1, v - 1), col);
            c.k = std::max(c.k, col);
        } else {
            fail(line_no, "unknown directive '" + tag + "'");
        }
    }
    return c;
}

std::string serialize_coloring(const TotalColoring& c) {
    std::ostringstream out;
    for (int v = 0; v < static_cast<int>(c.vertex_colors.size()); ++v)
        if (c.vertex_colors[v] != 0) out << "V " << (v + 1) << " " << c.vertex_colors[v] << "\n";
    for (const auto& [e, col] : c.edge_colors)
        out << "E " << (e.u + 1) << " " << (e.v + 1) << " " << col << "\n";
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

}  // namespace onep
