#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "core/error.hpp"

namespace ltc {

using VertexId = int;

// Simple undirected graph over dense vertex ids [0, n).
// Adjacency lists are kept sorted and duplicate-free; self-loops are rejected.
class Graph {
public:
  Graph() = default;
  explicit Graph(int n) : adj_(n >= 0 ? static_cast<size_t>(n) : 0) {
    if (n < 0) fail(Status::Validation, "graph: negative vertex count");
  }

  static Graph from_edges(int n, const std::vector<std::pair<VertexId, VertexId>>& edges);

  // Returns false (and leaves the graph unchanged) when the edge already exists.
  bool add_edge(VertexId u, VertexId v);
  bool has_edge(VertexId u, VertexId v) const;

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  long long edge_count() const { return edge_count_; }
  const std::vector<VertexId>& neighbors(VertexId v) const {
    check_vertex(v);
    return adj_[static_cast<size_t>(v)];
  }
  int degree(VertexId v) const { return static_cast<int>(neighbors(v).size()); }
  int max_degree() const;

  std::optional<int> declared_max_degree() const { return declared_max_degree_; }
  void set_declared_max_degree(int d);

  // All edges as (u, v) with u < v, lexicographically sorted.
  std::vector<std::pair<VertexId, VertexId>> edges() const;

  void check_vertex(VertexId v) const {
    if (v < 0 || v >= vertex_count())
      fail(Status::Validation, "graph: vertex id out of range: " + std::to_string(v));
  }

private:
  std::vector<std::vector<VertexId>> adj_;
  long long edge_count_ = 0;
  std::optional<int> declared_max_degree_;
};

// Connected components of the subgraph induced by `subset`.
// Each component is sorted ascending; components are ordered by smallest member.
std::vector<std::vector<VertexId>> connected_components(const Graph& g,
                                                        const std::vector<VertexId>& subset);

// Induced subgraph with a compact relabeling [0, |subset|).
struct InducedSubgraph {
  Graph graph;
  std::vector<VertexId> to_original;  // local id -> original id
  std::vector<int> to_local;          // original id -> local id, -1 if absent
};

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<VertexId>& subset);

}  // namespace ltc
