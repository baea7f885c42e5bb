#pragma once

#include <cstdint>
#include <string>

#include "core/tree_decomposition.hpp"

namespace ltc {

enum class Family { SquareGrid, TriGrid, TorusGrid, CrossedGrid };

Family family_from_name(const std::string& name);
const char* family_name(Family f);

// Benchmark families with analytically constructed layered tree-decompositions.
//   square-grid   n x n grid; layering by rows, column-pair path of bags (l = 2)
//   tri-grid      square grid plus (i,j)-(i+1,j+1) diagonals; same bags (l = 2)
//   torus-grid    wraparound grid (n >= 3); folded row layering, bags are
//                 columns {j, j+1, 1, n} (l <= 8)
//   crossed-grid  square grid plus both diagonals (a 4-clique) on selected
//                 faces; faces picked every `crossings`-th candidate in
//                 row-major order starting at seed % crossings, skipping any
//                 face that shares an edge with one already selected
struct FamilySpec {
  Family family = Family::SquareGrid;
  int n = 2;
  int crossings = 2;      // crossed-grid density: every k-th face
  std::uint64_t seed = 0; // crossed-grid pattern offset
};

struct FamilyInstance {
  Graph graph;
  LayeredTreeDecomposition ltd;
};

FamilyInstance generate_family(const FamilySpec& spec);

}  // namespace ltc
