#pragma once

#include <string>

#include "onep/drawing.hpp"
#include "onep/graph.hpp"

namespace onep::fixtures {

/// Square 1-2-3-4 with its diagonals crossing at false vertex 5; the
/// smallest crossing gadget (underlying graph K4).
std::string k4_crossing_text();
OnePlanarDrawing k4_crossing();

OnePlanarDrawing plane_triangle();
OnePlanarDrawing plane_square();

/// K4-crossing fixture with each square corner raised to degree 8 by five
/// pendants: the false vertex sits on four 3-faces whose crossing endpoints
/// all have degree exactly 8, so it ends at charge -2 + 4*(1/2) = 0.
OnePlanarDrawing tight_false_vertex_fixture();

/// True 4-vertex whose four faces are 4-faces with four small corners each
/// and whose neighbors are all false; ends at exactly -2 + 4*(1/2) = 0.
/// Returns the drawing and the audited vertex id.
std::pair<OnePlanarDrawing, int> tight_true_4_vertex_fixture();

/// 3-vertex with one false and two big true neighbors arranged so its final
/// charge is exactly -3 + 2*(1/3) + 2/3 + 1 + 1 = 1/3.
std::pair<OnePlanarDrawing, int> tight_3_vertex_fixture();

Graph cycle(int n);
Graph complete(int n);
Graph star(int leaves);
Graph wheel(int rim);  // hub + rim-cycle
Graph complete_bipartite(int a, int b);
Graph circulant(int n, const std::vector<int>& offsets);

/// Two 3-vertices sharing two high-degree neighbors inside a larger graph;
/// H contains a 4-cycle through them.
Graph theta_gadget();

}  // namespace onep::fixtures
