#pragma once

#include <map>
#include <string>

#include "onep/graph.hpp"
#include "onep/total_coloring.hpp"

namespace onep {

/// Graph format: `p <n>` header, then `e <u> <v>` lines, 1-based ids.
Graph parse_graph(const std::string& text);
std::string serialize_graph(const Graph& g);

/// Coloring format: `V <id> <color>` and `E <id> <id> <color>` lines,
/// 1-based vertex ids.
TotalColoring parse_coloring(const std::string& text, int vertex_count);
std::string serialize_coloring(const TotalColoring& c);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace onep
