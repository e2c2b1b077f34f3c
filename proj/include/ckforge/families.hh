#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ckforge/graph.hh"

namespace ckforge {

// row order for an adjacency matrix: permutation of vertex ids
using VertexOrdering = std::vector<std::string>;

// undirected colored square-lattice family; n in {2,3} are figure fixtures,
// n >= 4 extends the n=3 border pattern (see validate_sq for the contract)
ColoredGraph build_sq(int n);

// directed family; n in {3,4} are figure fixtures, n >= 5 is rule-generated
// best-effort (the validator is the contract)
ColoredGraph orient_sq(int n);

// directed graphs on the 2x2 / 3x3 index grids; n in {2,3} only
ColoredGraph gpi_graph(int n);

// permutation-graph commuting candidate: two 3-cycles and two loops
ColoredGraph commutant_sq3d();

// 0/1 adjacency matrix rows under the given row order
std::vector<std::vector<int>> adjacency(const ColoredGraph& g,
                                        const VertexOrdering& ord);

// search for a vertex order that reproduces `target`; <= 12 vertices
std::optional<VertexOrdering> find_matrix_ordering(
    const ColoredGraph& g, const std::vector<std::vector<int>>& target);

// structural expectations for the square families; returns human-readable
// violations (lines starting with "advisory:" are known rule/figure gaps)
std::vector<std::string> validate_sq(const ColoredGraph& g, int n,
                                     bool directed);

// ==================== fixture data ====================

// the 8x8 matrix printed for orient_sq(3), and the row order reproducing it
std::vector<std::vector<int>> a3d_printed();
VertexOrdering a3d_printed_ordering();

// letter aliases used by the path listing for orient_sq(3)
std::vector<std::pair<std::string, std::string>> sq3d_letter_map();

// the 28 listed paths for orient_sq(3) in letter form (duplicates kept)
std::vector<std::vector<std::string>> sq3d_listed_paths();

// the six listed paths H1..H6 for gpi_graph(3) as vertex-id sequences
std::vector<std::vector<std::string>> gpi3_listed_paths();

}  // namespace ckforge
