#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "onep/configurations.hpp"
#include "onep/discharging.hpp"
#include "onep/drawing.hpp"
#include "onep/extend.hpp"
#include "onep/generator.hpp"
#include "onep/io.hpp"
#include "onep/total_coloring.hpp"

namespace {

using namespace onep;

bool looks_like_drawing(const std::string& text) {
    for (size_t i = 0; i < text.size();) {
        size_t end = text.find('\n', i);
        if (end == std::string::npos) end = text.size();
        std::string line = text.substr(i, end - i);
        i = end + 1;
        size_t p = line.find_first_not_of(" \t\r");
        if (p == std::string::npos || line[p] == '#') continue;
        return line[p] == 'v' || line[p] == 'r';
    }
    return false;
}

/// Loads the graph to verify against: either a drawing (underlying graph,
/// ids compacted over true vertices) or a plain graph file.
Graph load_graph_arg(const std::string& path) {
    std::string text = read_file(path);
    if (looks_like_drawing(text)) return underlying_graph(parse_drawing(text)).graph;
    return parse_graph(text);
}

int cmd_validate(const std::string& path, bool diagnostics) {
    OnePlanarDrawing d = parse_drawing(read_file(path));
    ValidationReport rep = validate_drawing(d);
    if (rep.ok) {
        auto fs = faces(d);
        std::cout << "ok: " << d.vertex_count() << " vertices, " << d.edge_count() << " edges, "
                  << fs.size() << " faces\n";
    } else {
        std::cout << "invalid: " << rep.violations.size() << " violation(s)\n";
        for (const auto& v : rep.violations)
            std::cout << "  [" << v.rule << "] " << v.location << ": " << v.message << "\n";
    }
    if (diagnostics && rep.ok) std::cout << format_diagnostics(check_embedding_lemmas(d));
    return rep.ok ? 0 : 1;
}

int cmd_color(const std::string& path, std::optional<int> r_opt, const std::string& trace_path) {
    OnePlanarDrawing d = parse_drawing(read_file(path));
    auto und = underlying_graph(d);
    int r = r_opt.value_or(std::max(13, und.graph.max_degree()));
    try {
        ColoringResult res = total_color(und.graph, r);
        std::cout << "# total " << (r + 2) << "-coloring, vertex ids follow the graph compaction\n";
        std::cout << serialize_coloring(res.coloring);
        if (!trace_path.empty()) {
            std::ostringstream t;
            for (const auto& step : res.trace) {
                t << to_string(step.config.kind) << ":";
                for (const Edge& e : step.removed) t << " " << (e.u + 1) << "-" << (e.v + 1);
                t << "\n";
            }
            write_file(trace_path, t.str());
        }
        return 0;
    } catch (const NoConfigurationFound& ex) {
        std::cerr << "no reducible configuration found: counterexample candidate\n";
        std::cerr << "discharging audit of the input drawing follows\n";
        std::cerr << format_audit(audit(d, r), d, false);
        return 2;
    }
}

int cmd_verify(const std::string& graph_path, const std::string& coloring_path, int k) {
    Graph g = load_graph_arg(graph_path);
    TotalColoring c = parse_coloring(read_file(coloring_path), g.vertex_count());
    ValidationReport rep = verify_total_coloring(g, c, k);
    if (rep.ok) {
        std::cout << "valid total " << k << "-coloring\n";
        return 0;
    }
    std::cout << "invalid coloring: " << rep.violations.size() << " violation(s)\n";
    for (const auto& v : rep.violations)
        std::cout << "  [" << v.rule << "] " << v.location << ": " << v.message << "\n";
    return 1;
}

int cmd_oracle(const std::string& path, int max_k) {
    Graph g = parse_graph(read_file(path));
    auto chi = exact_total_chromatic_number(g, max_k);
    if (!chi) {
        std::cout << "exceeds budget (max-k " << max_k << ")\n";
        return 1;
    }
    std::cout << *chi << "\n";
    return 0;
}

int cmd_audit(const std::string& path, std::optional<int> r_opt, bool transfers) {
    OnePlanarDrawing d = parse_drawing(read_file(path));
    int r = r_opt.value_or(std::max(13, underlying_graph(d).graph.max_degree()));
    AuditReport rep = audit(d, r);
    std::cout << format_audit(rep, d, transfers);
    return 0;
}

int cmd_qd(int dv, bool side) {
    ProgramOptimum opt = solve_cluster_program(dv, side);
    std::cout << "q_" << dv << " = " << to_string(opt.q) << " at (n1..n5) = (" << opt.argmax.n[0]
              << "," << opt.argmax.n[1] << "," << opt.argmax.n[2] << "," << opt.argmax.n[3] << ","
              << opt.argmax.n[4] << ")";
    if (side) std::cout << " [side conditions enforced]";
    std::cout << "\n";
    return 0;
}

int cmd_gen(int n, uint64_t seed, double crossings, std::optional<int> cap) {
    GeneratorConfig cfg;
    cfg.n = n;
    cfg.seed = seed;
    cfg.crossing_fraction = crossings;
    cfg.max_degree_cap = cap;
    std::cout << serialize_drawing(generate_random_1planar(cfg));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"total (r+2)-coloring engine and discharging auditor for 1-planar drawings"};
    app.require_subcommand(1);

    std::string drawing_path, coloring_path, trace_path;
    std::optional<int> r_opt;
    bool diagnostics = false, transfers = false, side = false;
    int k = 15, max_k = 20, qd_d = 8, gen_n = 10;
    uint64_t gen_seed = 0;
    double gen_cross = 0.5;
    std::optional<int> gen_cap;

    auto* validate = app.add_subcommand("validate", "check a drawing's invariants");
    validate->add_option("drawing", drawing_path)->required();
    validate->add_flag("--diagnostics", diagnostics, "also check the embedding facts");

    auto* color = app.add_subcommand("color", "total (r+2)-coloring of a drawing");
    color->add_option("drawing", drawing_path)->required();
    color->add_option("--r", r_opt, "palette parameter, default max(13, max degree)");
    color->add_option("--trace", trace_path, "write the reduction trace to a file");

    auto* verify = app.add_subcommand("verify", "verify a coloring file");
    verify->add_option("graph", drawing_path, "drawing or graph file")->required();
    verify->add_option("coloring", coloring_path)->required();
    verify->add_option("--k", k)->required();

    auto* oracle = app.add_subcommand("oracle", "exact total chromatic number");
    oracle->add_option("graph", drawing_path)->required();
    oracle->add_option("--max-k", max_k);

    auto* audit_cmd = app.add_subcommand("audit", "discharging audit of a drawing");
    audit_cmd->add_option("drawing", drawing_path)->required();
    audit_cmd->add_option("--r", r_opt);
    audit_cmd->add_flag("--transfers", transfers, "print the transfer log");

    auto* qd = app.add_subcommand("qd", "cluster program optimum q_d");
    qd->add_option("--d", qd_d)->required()->check(CLI::Range(8, 12));
    qd->add_flag("--side-conditions", side);

    auto* gen = app.add_subcommand("gen", "generate a random 1-planar drawing");
    gen->add_option("--n", gen_n)->required();
    gen->add_option("--seed", gen_seed)->required();
    gen->add_option("--crossings", gen_cross)->required();
    gen->add_option("--cap", gen_cap, "max degree cap");

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) return cmd_validate(drawing_path, diagnostics);
        if (color->parsed()) return cmd_color(drawing_path, r_opt, trace_path);
        if (verify->parsed()) return cmd_verify(drawing_path, coloring_path, k);
        if (oracle->parsed()) return cmd_oracle(drawing_path, max_k);
        if (audit_cmd->parsed()) return cmd_audit(drawing_path, r_opt, transfers);
        if (qd->parsed()) return cmd_qd(qd_d, side);
        if (gen->parsed()) return cmd_gen(gen_n, gen_seed, gen_cross, gen_cap);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 0;
}
