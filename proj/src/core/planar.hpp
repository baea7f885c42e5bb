#pragma once

#include <vector>

#include "core/tree_decomposition.hpp"

namespace ltc {

// Combinatorial embedding: per-vertex cyclic order of neighbors.
struct RotationSystem {
  std::vector<std::vector<VertexId>> rotations;

  int vertex_count() const { return static_cast<int>(rotations.size()); }
  Graph to_graph() const;  // checks symmetry, simplicity
};

// Rotation system of the n x n square grid (clockwise: up, right, down, left),
// optionally with the (i,j)-(i+1,j+1) diagonals of the triangular grid.
RotationSystem grid_rotations(int n, bool diagonals);

// Layered tree-decomposition of an embedded connected planar graph with
// layered width at most 3. The layering is BFS distance from `root`.
//
// Construction: triangulate every face with chords (fan from the lowest-id
// occurrence, falling back to ear insertion on walks that repeat vertices),
// take a BFS spanning tree from the root, index decomposition nodes by the
// triangular faces, connect faces through the duals of non-tree edges
// (tree-cotree pairing), and let each face's bag be the union of the three
// root paths of its corners. Root paths meet each BFS layer once, so every
// bag meets every layer in at most 3 vertices.
//
// The result is re-validated before returning; a failure is an internal error.
LayeredTreeDecomposition planar_ltd(const RotationSystem& rot, VertexId root);

}  // namespace ltc
