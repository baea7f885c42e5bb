#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "core/graph.hpp"
#include "core/layering.hpp"

namespace ltc {

using NodeId = int;

struct TreeDecomposition {
  int node_count = 0;
  std::vector<std::pair<NodeId, NodeId>> tree_edges;
  std::vector<std::vector<VertexId>> bags;  // sorted, may be empty
  std::optional<NodeId> root;

  // Parse-time declarations from a .td file; validated separately from parsing.
  std::optional<int> declared_bag_size;      // header width+1 field
  std::optional<int> declared_vertex_count;  // header n field

  int width() const;  // max bag size - 1; -1 when there are no nodes

  std::vector<std::vector<NodeId>> node_adjacency() const;

  void check_node(NodeId t) const {
    if (t < 0 || t >= node_count)
      fail(Status::Validation, "tree-decomposition: node id out of range: " + std::to_string(t));
  }
};

// Checks all decomposition conditions for g: tree connectivity/acyclicity,
// vertex coverage, edge coverage, per-vertex bag-subtree connectivity, and
// (when declared) the header bag-size bound. Empty result means valid.
std::vector<std::string> validate_td(const Graph& g, const TreeDecomposition& td);

// Same tree, bags intersected with `subset`; empty bags are retained.
TreeDecomposition restrict_td(const TreeDecomposition& td, const std::vector<VertexId>& subset);

int layered_width(const TreeDecomposition& td, const Layering& L);

struct LayeredTreeDecomposition {
  TreeDecomposition td;
  Layering layering;
  int layered_width = 0;  // must equal the measured max |bag ∩ layer|
};

// Rooted view: parents and depths from a BFS over the decomposition tree.
struct RootedTree {
  NodeId root = 0;
  std::vector<NodeId> parent;  // parent[root] == root
  std::vector<int> depth;
  std::vector<NodeId> bfs_order;
};

// Roots at td.root when set, otherwise at node 0 (the smallest id).
// Fails with a validation error when the node graph is not a tree.
RootedTree root_tree(const TreeDecomposition& td);

}  // namespace ltc
