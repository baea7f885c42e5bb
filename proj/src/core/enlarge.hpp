#pragma once

#include <utility>
#include <vector>

#include "core/tree_decomposition.hpp"

namespace ltc::enlarge {

// One linkage entry: a covering node set, a connected subtree containing it,
// and vertex pairs drawn from the union of the covering nodes' bags.
struct LinkageEntry {
  std::vector<NodeId> covering_nodes;                     // sorted
  std::vector<NodeId> subtree;                            // sorted, connected, contains covering_nodes
  std::vector<std::pair<VertexId, VertexId>> pairs;       // u < v, distinct vertices
};

using LinkageFamily = std::vector<LinkageEntry>;

struct AugmentResult {
  Graph g_prime;
  TreeDecomposition td_prime;  // bags grown along the entries' subtrees
  int h_actual = 0;            // max number of entry subtrees through one node
  int k_actual = 0;            // max pairs in one entry
  int d_actual = 0;            // max distinct pairs containing one vertex
};

// Max number of entry subtrees containing a single tree node.
int measure_overlap(const TreeDecomposition& td, const LinkageFamily& fam);

// Adds every pair as an edge and extends each bag on an entry's subtree by the
// vertices appearing in that entry's pairs. Checks the family invariants up
// front (linkage-error) and asserts on return:
//   |bag'(t)| <= |bag(t)| + 2 * h_actual * k_actual      for every node
//   deg'(v)   <= deg(v) + (pairs containing v)           for every vertex
//   bag'(t) >= bag(t), and validate_td(g', td') is clean.
AugmentResult augment(const Graph& g, const TreeDecomposition& td, const LinkageFamily& fam);

}  // namespace ltc::enlarge
