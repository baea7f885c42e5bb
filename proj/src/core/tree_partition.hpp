#pragma once

#include <utility>
#include <vector>

#include "core/coloring.hpp"
#include "core/tree_decomposition.hpp"

namespace ltc {

// Partition of V(G) into blocks arranged on a tree: every edge of G stays
// within a block or joins blocks adjacent in the tree. Width = max block size.
struct TreePartition {
  int node_count = 0;
  std::vector<std::pair<int, int>> tree_edges;
  std::vector<int> block_of;  // vertex -> partition node
  int root = 0;
  std::vector<int> depth;     // per partition node, from root

  int width() const;
  std::vector<std::vector<VertexId>> blocks() const;
};

// The minimum-depth decomposition node whose bag contains each vertex
// (unique when the decomposition is valid; rooted per root_tree()).
std::vector<NodeId> rootmost_assignment(const TreeDecomposition& td, int n_vertices);

// Vertical-path contraction: for every edge uv of g whose rootmost nodes sit
// at tree-distance >= 2, the path from the upper node down to the parent of the
// lower one is merged. The quotient of the decomposition tree by the merge
// classes is a tree and carries the partition. The tree-partition edge
// invariant is re-checked before returning; a failure is an internal error.
TreePartition tree_partition(const Graph& g, const TreeDecomposition& td);

// Colors blocks by depth parity, so every monochromatic component is confined
// to a single block and the clustering is at most the partition width.
Coloring parity_two_color(const TreePartition& tp, std::pair<int, int> palette);

struct TwoColorResult {
  Coloring coloring;
  int clustering = 0;  // measured max monochromatic component size
};

// tree_partition + parity_two_color, with the clustering measured on g.
TwoColorResult two_color_clustered(const Graph& g, const TreeDecomposition& td,
                                   std::pair<int, int> palette);

// Exhaustive 2-coloring oracle (vertex 0's color fixed for symmetry):
// returns a coloring minimizing the max monochromatic component size.
struct ExactColorResult {
  Coloring coloring;
  int optimum = 0;
};
ExactColorResult exact_two_color(const Graph& g, std::pair<int, int> palette, int max_n = 20);

// Measured clustering of an arbitrary (partial) coloring: max monochromatic
// component size over colored vertices.
int max_monochromatic_component(const Graph& g, const Coloring& c);

}  // namespace ltc
