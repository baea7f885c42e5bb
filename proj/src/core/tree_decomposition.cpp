#include "core/tree_decomposition.hpp"

#include <algorithm>
#include <queue>

#include "core/union_find.hpp"

namespace ltc {

int TreeDecomposition::width() const {
  int w = -1;
  for (const auto& bag : bags) w = std::max(w, static_cast<int>(bag.size()) - 1);
  return w;
}

std::vector<std::vector<NodeId>> TreeDecomposition::node_adjacency() const {
  std::vector<std::vector<NodeId>> adj(static_cast<size_t>(node_count));
  for (const auto& [a, b] : tree_edges) {
    check_node(a);
    check_node(b);
    adj[static_cast<size_t>(a)].push_back(b);
    adj[static_cast<size_t>(b)].push_back(a);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  return adj;
}

std::vector<std::string> validate_td(const Graph& g, const TreeDecomposition& td) {
  std::vector<std::string> violations;
  const int n = g.vertex_count();
  const int b = td.node_count;

  if (static_cast<int>(td.bags.size()) != b) {
    violations.push_back("bag list size " + std::to_string(td.bags.size()) +
                         " does not match node count " + std::to_string(b));
    return violations;
  }
  for (NodeId t = 0; t < b; ++t)
    for (VertexId v : td.bags[static_cast<size_t>(t)])
      if (v < 0 || v >= n) {
        violations.push_back("bag " + std::to_string(t) + " contains out-of-range vertex " +
                             std::to_string(v));
        return violations;
      }

  // Tree shape: connected and acyclic.
  if (b > 0) {
    if (static_cast<int>(td.tree_edges.size()) != b - 1)
      violations.push_back("node graph has " + std::to_string(td.tree_edges.size()) +
                           " edges, a tree on " + std::to_string(b) + " nodes needs " +
                           std::to_string(b - 1));
    UnionFind uf(b);
    bool cycle = false;
    for (const auto& [x, y] : td.tree_edges) {
      if (x == y || !uf.unite(x, y)) cycle = true;
    }
    if (cycle) violations.push_back("node graph contains a cycle");
    int roots = 0;
    for (NodeId t = 0; t < b; ++t)
      if (uf.find(t) == t) ++roots;
    if (roots != 1) violations.push_back("node graph is disconnected (" + std::to_string(roots) +
                                         " components)");
  } else if (n > 0) {
    violations.push_back("decomposition has no nodes but the graph has vertices");
    return violations;
  }

  // Vertex coverage and per-vertex subtree connectivity.
  std::vector<std::vector<NodeId>> nodes_of(static_cast<size_t>(n));
  for (NodeId t = 0; t < b; ++t)
    for (VertexId v : td.bags[static_cast<size_t>(t)]) nodes_of[static_cast<size_t>(v)].push_back(t);
  for (VertexId v = 0; v < n; ++v)
    if (nodes_of[static_cast<size_t>(v)].empty())
      violations.push_back("vertex " + std::to_string(v) + " appears in no bag");

  auto adj = td.node_adjacency();
  std::vector<int> mark(static_cast<size_t>(b), -1);
  for (VertexId v = 0; v < n; ++v) {
    const auto& nodes = nodes_of[static_cast<size_t>(v)];
    if (nodes.size() <= 1) continue;
    for (NodeId t : nodes) mark[static_cast<size_t>(t)] = v;
    std::queue<NodeId> q;
    q.push(nodes.front());
    mark[static_cast<size_t>(nodes.front())] = -2 - v;  // visited tag for this vertex
    size_t reached = 1;
    while (!q.empty()) {
      NodeId t = q.front();
      q.pop();
      for (NodeId s : adj[static_cast<size_t>(t)])
        if (mark[static_cast<size_t>(s)] == v) {
          mark[static_cast<size_t>(s)] = -2 - v;
          ++reached;
          q.push(s);
        }
    }
    if (reached != nodes.size())
      violations.push_back("bags containing vertex " + std::to_string(v) +
                           " do not induce a connected subtree");
  }

  // Edge coverage.
  for (const auto& [u, v] : g.edges()) {
    bool covered = false;
    const auto& nu = nodes_of[static_cast<size_t>(u)];
    for (NodeId t : nu) {
      const auto& bag = td.bags[static_cast<size_t>(t)];
      if (std::binary_search(bag.begin(), bag.end(), v)) {
        covered = true;
        break;
      }
    }
    if (!covered)
      violations.push_back("edge " + std::to_string(u) + "-" + std::to_string(v) +
                           " is contained in no bag");
  }

  if (td.declared_bag_size && td.width() + 1 > *td.declared_bag_size)
    violations.push_back("declared max bag size " + std::to_string(*td.declared_bag_size) +
                         " is smaller than an actual bag of size " + std::to_string(td.width() + 1));

  return violations;
}

TreeDecomposition restrict_td(const TreeDecomposition& td, const std::vector<VertexId>& subset) {
  std::vector<VertexId> sorted = subset;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  TreeDecomposition out;
  out.node_count = td.node_count;
  out.tree_edges = td.tree_edges;
  out.root = td.root;
  out.bags.resize(td.bags.size());
  for (size_t t = 0; t < td.bags.size(); ++t) {
    auto& bag = out.bags[t];
    for (VertexId v : td.bags[t])
      if (std::binary_search(sorted.begin(), sorted.end(), v)) bag.push_back(v);
  }
  return out;
}

int layered_width(const TreeDecomposition& td, const Layering& L) {
  int best = 0;
  std::vector<int> count(static_cast<size_t>(L.n_layers) + 1, 0);
  for (const auto& bag : td.bags) {
    for (VertexId v : bag) {
      int l = L.layer(v);
      if (l >= 1 && l <= L.n_layers) best = std::max(best, ++count[static_cast<size_t>(l)]);
    }
    for (VertexId v : bag) {
      int l = L.layer(v);
      if (l >= 1 && l <= L.n_layers) count[static_cast<size_t>(l)] = 0;
    }
  }
  return best;
}

RootedTree root_tree(const TreeDecomposition& td) {
  RootedTree rt;
  if (td.node_count == 0) fail(Status::Validation, "root_tree: decomposition has no nodes");
  rt.root = td.root.value_or(0);
  td.check_node(rt.root);
  auto adj = td.node_adjacency();
  rt.parent.assign(static_cast<size_t>(td.node_count), -1);
  rt.depth.assign(static_cast<size_t>(td.node_count), -1);
  rt.parent[static_cast<size_t>(rt.root)] = rt.root;
  rt.depth[static_cast<size_t>(rt.root)] = 0;
  std::queue<NodeId> q;
  q.push(rt.root);
  while (!q.empty()) {
    NodeId t = q.front();
    q.pop();
    rt.bfs_order.push_back(t);
    for (NodeId s : adj[static_cast<size_t>(t)])
      if (rt.depth[static_cast<size_t>(s)] < 0) {
        rt.depth[static_cast<size_t>(s)] = rt.depth[static_cast<size_t>(t)] + 1;
        rt.parent[static_cast<size_t>(s)] = t;
        q.push(s);
      }
  }
  if (static_cast<int>(rt.bfs_order.size()) != td.node_count)
    fail(Status::Validation, "root_tree: node graph is not connected");
  if (static_cast<int>(td.tree_edges.size()) != td.node_count - 1)
    fail(Status::Validation, "root_tree: node graph is not a tree");
  return rt;
}

}  // namespace ltc
