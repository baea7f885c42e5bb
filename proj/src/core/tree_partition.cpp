#include "core/tree_partition.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "core/union_find.hpp"

namespace ltc {

int TreePartition::width() const {
  std::vector<int> size(static_cast<size_t>(node_count), 0);
  for (int b : block_of) ++size[static_cast<size_t>(b)];
  int w = 0;
  for (int s : size) w = std::max(w, s);
  return w;
}

std::vector<std::vector<VertexId>> TreePartition::blocks() const {
  std::vector<std::vector<VertexId>> out(static_cast<size_t>(node_count));
  for (VertexId v = 0; v < static_cast<int>(block_of.size()); ++v)
    out[static_cast<size_t>(block_of[static_cast<size_t>(v)])].push_back(v);
  return out;
}

std::vector<NodeId> rootmost_assignment(const TreeDecomposition& td, int n_vertices) {
  RootedTree rt = root_tree(td);
  std::vector<NodeId> rootmost(static_cast<size_t>(n_vertices), -1);
  std::vector<int> best_depth(static_cast<size_t>(n_vertices), -1);
  std::vector<int> count_at_best(static_cast<size_t>(n_vertices), 0);
  for (NodeId t = 0; t < td.node_count; ++t) {
    for (VertexId v : td.bags[static_cast<size_t>(t)]) {
      if (v < 0 || v >= n_vertices)
        fail(Status::Validation, "rootmost_assignment: bag vertex out of range");
      size_t vi = static_cast<size_t>(v);
      int d = rt.depth[static_cast<size_t>(t)];
      if (best_depth[vi] < 0 || d < best_depth[vi]) {
        best_depth[vi] = d;
        rootmost[vi] = t;
        count_at_best[vi] = 1;
      } else if (d == best_depth[vi]) {
        ++count_at_best[vi];
        rootmost[vi] = std::min(rootmost[vi], t);
      }
    }
  }
  for (VertexId v = 0; v < n_vertices; ++v) {
    if (rootmost[static_cast<size_t>(v)] < 0)
      fail(Status::Validation, "decomposition-error: vertex " + std::to_string(v) +
                                   " appears in no bag");
    if (count_at_best[static_cast<size_t>(v)] != 1)
      fail(Status::Validation, "decomposition-error: vertex " + std::to_string(v) +
                                   " has no unique rootmost node (bags not connected)");
  }
  return rootmost;
}

TreePartition tree_partition(const Graph& g, const TreeDecomposition& td) {
  auto violations = validate_td(g, td);
  if (!violations.empty())
    fail(Status::Validation, "decomposition-error: " + violations.front());

  RootedTree rt = root_tree(td);
  std::vector<NodeId> rootmost = rootmost_assignment(td, g.vertex_count());

  UnionFind uf(td.node_count);
  for (const auto& [u, v] : g.edges()) {
    NodeId upper = rootmost[static_cast<size_t>(u)];
    NodeId lower = rootmost[static_cast<size_t>(v)];
    if (rt.depth[static_cast<size_t>(upper)] > rt.depth[static_cast<size_t>(lower)])
      std::swap(upper, lower);
    if (upper == lower) continue;
    // upper must be a proper ancestor of lower; walk from lower's parent up.
    NodeId t = rt.parent[static_cast<size_t>(lower)];
    while (t != upper) {
      uf.unite(upper, t);
      if (t == rt.parent[static_cast<size_t>(t)])
        fail(Status::Internal, "tree_partition: rootmost nodes of an edge are not comparable");
      t = rt.parent[static_cast<size_t>(t)];
    }
  }

  // Compact class ids, ordered by smallest contained node.
  std::vector<int> class_of(static_cast<size_t>(td.node_count), -1);
  int classes = 0;
  for (NodeId t = 0; t < td.node_count; ++t) {
    int rep = uf.find(t);
    if (class_of[static_cast<size_t>(rep)] < 0) class_of[static_cast<size_t>(rep)] = classes++;
    class_of[static_cast<size_t>(t)] = class_of[static_cast<size_t>(rep)];
  }

  TreePartition tp;
  tp.node_count = classes;
  tp.block_of.resize(static_cast<size_t>(g.vertex_count()));
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    tp.block_of[static_cast<size_t>(v)] =
        class_of[static_cast<size_t>(rootmost[static_cast<size_t>(v)])];

  std::vector<std::pair<int, int>> quotient_edges;
  for (const auto& [x, y] : td.tree_edges) {
    int cx = class_of[static_cast<size_t>(x)], cy = class_of[static_cast<size_t>(y)];
    if (cx != cy) quotient_edges.emplace_back(std::min(cx, cy), std::max(cx, cy));
  }
  std::sort(quotient_edges.begin(), quotient_edges.end());
  quotient_edges.erase(std::unique(quotient_edges.begin(), quotient_edges.end()),
                       quotient_edges.end());
  tp.tree_edges = std::move(quotient_edges);
  if (static_cast<int>(tp.tree_edges.size()) != classes - 1)
    fail(Status::Internal, "tree_partition: quotient of the decomposition tree is not a tree");

  // Depths in the quotient from the class of the original root.
  tp.root = class_of[static_cast<size_t>(rt.root)];
  std::vector<std::vector<int>> qadj(static_cast<size_t>(classes));
  for (const auto& [x, y] : tp.tree_edges) {
    qadj[static_cast<size_t>(x)].push_back(y);
    qadj[static_cast<size_t>(y)].push_back(x);
  }
  tp.depth.assign(static_cast<size_t>(classes), -1);
  std::queue<int> q;
  q.push(tp.root);
  tp.depth[static_cast<size_t>(tp.root)] = 0;
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    for (int y : qadj[static_cast<size_t>(x)])
      if (tp.depth[static_cast<size_t>(y)] < 0) {
        tp.depth[static_cast<size_t>(y)] = tp.depth[static_cast<size_t>(x)] + 1;
        q.push(y);
      }
  }
  for (int d : tp.depth)
    if (d < 0) fail(Status::Internal, "tree_partition: quotient tree is disconnected");

  // Re-validate the tree-partition edge invariant before returning.
  for (const auto& [u, v] : g.edges()) {
    int bu = tp.block_of[static_cast<size_t>(u)], bv = tp.block_of[static_cast<size_t>(v)];
    if (bu == bv) continue;
    auto edge = std::make_pair(std::min(bu, bv), std::max(bu, bv));
    if (!std::binary_search(tp.tree_edges.begin(), tp.tree_edges.end(), edge))
      fail(Status::Internal, "tree_partition: edge " + std::to_string(u) + "-" +
                                 std::to_string(v) + " joins non-adjacent blocks");
  }
  return tp;
}

Coloring parity_two_color(const TreePartition& tp, std::pair<int, int> palette) {
  Coloring c = empty_coloring(static_cast<int>(tp.block_of.size()),
                              {palette.first, palette.second});
  for (VertexId v = 0; v < static_cast<int>(tp.block_of.size()); ++v) {
    int d = tp.depth[static_cast<size_t>(tp.block_of[static_cast<size_t>(v)])];
    c.color_of[static_cast<size_t>(v)] = d % 2 == 0 ? palette.first : palette.second;
  }
  return c;
}

int max_monochromatic_component(const Graph& g, const Coloring& c) {
  const int n = g.vertex_count();
  UnionFind uf(n);
  for (const auto& [u, v] : g.edges()) {
    int cu = c.color(u), cv = c.color(v);
    if (cu != 0 && cu == cv) uf.unite(u, v);
  }
  std::vector<int> size(static_cast<size_t>(n), 0);
  int best = 0;
  for (VertexId v = 0; v < n; ++v) {
    if (c.color(v) == 0) continue;
    int s = ++size[static_cast<size_t>(uf.find(v))];
    best = std::max(best, s);
  }
  return best;
}

TwoColorResult two_color_clustered(const Graph& g, const TreeDecomposition& td,
                                   std::pair<int, int> palette) {
  TreePartition tp = tree_partition(g, td);
  Coloring c = parity_two_color(tp, palette);
  int clustering = max_monochromatic_component(g, c);
  if (clustering > tp.width())
    fail(Status::Internal, "two_color_clustered: clustering exceeds tree-partition width");
  return {std::move(c), clustering};
}

namespace {

// Union-find with an undo log; no path compression so unions are reversible.
class RollbackUnionFind {
public:
  explicit RollbackUnionFind(int n)
      : parent_(static_cast<size_t>(n)), size_(static_cast<size_t>(n), 1) {
    for (int i = 0; i < n; ++i) parent_[static_cast<size_t>(i)] = i;
  }

  int find(int x) const {
    while (parent_[static_cast<size_t>(x)] != x) x = parent_[static_cast<size_t>(x)];
    return x;
  }

  int component_size(int x) const { return size_[static_cast<size_t>(find(x))]; }

  // Returns the size of the merged component.
  int unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) {
      log_.push_back({-1, -1});
      return size_[static_cast<size_t>(a)];
    }
    if (size_[static_cast<size_t>(a)] < size_[static_cast<size_t>(b)]) std::swap(a, b);
    parent_[static_cast<size_t>(b)] = a;
    size_[static_cast<size_t>(a)] += size_[static_cast<size_t>(b)];
    log_.push_back({a, b});
    return size_[static_cast<size_t>(a)];
  }

  void undo(size_t count) {
    while (count--) {
      auto [a, b] = log_.back();
      log_.pop_back();
      if (a < 0) continue;
      size_[static_cast<size_t>(a)] -= size_[static_cast<size_t>(b)];
      parent_[static_cast<size_t>(b)] = b;
    }
  }

  size_t log_size() const { return log_.size(); }

private:
  std::vector<int> parent_;
  std::vector<int> size_;
  std::vector<std::pair<int, int>> log_;
};

}  // namespace

ExactColorResult exact_two_color(const Graph& g, std::pair<int, int> palette, int max_n) {
  const int n = g.vertex_count();
  if (n > max_n)
    fail(Status::Size, "exact_two_color: graph has " + std::to_string(n) +
                           " vertices, cap is " + std::to_string(max_n));
  ExactColorResult result;
  result.coloring = empty_coloring(n, {palette.first, palette.second});
  if (n == 0) return result;

  std::vector<int> assigned(static_cast<size_t>(n), -1);  // 0/1 palette slot
  std::vector<int> best_assigned;
  int best = n + 1;
  RollbackUnionFind uf(n);

  auto dfs = [&](auto&& self, int v, int running_max) -> void {
    if (running_max >= best) return;
    if (v == n) {
      best = running_max;
      best_assigned = assigned;
      return;
    }
    const int last_slot = v == 0 ? 0 : 1;  // fix vertex 0's color
    for (int slot = 0; slot <= last_slot; ++slot) {
      assigned[static_cast<size_t>(v)] = slot;
      size_t mark = uf.log_size();
      int merged = 1;
      for (VertexId u : g.neighbors(v))
        if (u < v && assigned[static_cast<size_t>(u)] == slot)
          merged = std::max(merged, uf.unite(u, v));
      self(self, v + 1, std::max(running_max, merged));
      uf.undo(uf.log_size() - mark);
      assigned[static_cast<size_t>(v)] = -1;
    }
  };
  dfs(dfs, 0, n > 0 ? 1 : 0);

  result.optimum = best;
  const int colors[2] = {palette.first, palette.second};
  for (VertexId v = 0; v < n; ++v)
    result.coloring.color_of[static_cast<size_t>(v)] = colors[best_assigned[static_cast<size_t>(v)]];
  return result;
}

}  // namespace ltc
