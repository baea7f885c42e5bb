#include "core/graph.hpp"

#include <algorithm>
#include <queue>

namespace ltc {

Graph Graph::from_edges(int n, const std::vector<std::pair<VertexId, VertexId>>& edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

bool Graph::add_edge(VertexId u, VertexId v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) fail(Status::Validation, "graph: self-loop at vertex " + std::to_string(u));
  auto& au = adj_[static_cast<size_t>(u)];
  auto it = std::lower_bound(au.begin(), au.end(), v);
  if (it != au.end() && *it == v) return false;
  au.insert(it, v);
  auto& av = adj_[static_cast<size_t>(v)];
  av.insert(std::lower_bound(av.begin(), av.end(), u), u);
  ++edge_count_;
  return true;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  check_vertex(u);
  check_vertex(v);
  const auto& au = adj_[static_cast<size_t>(u)];
  return std::binary_search(au.begin(), au.end(), v);
}

int Graph::max_degree() const {
  int d = 0;
  for (const auto& a : adj_) d = std::max(d, static_cast<int>(a.size()));
  return d;
}

void Graph::set_declared_max_degree(int d) {
  if (d < 0) fail(Status::Validation, "graph: negative declared max degree");
  if (max_degree() > d)
    fail(Status::Validation, "graph: measured max degree " + std::to_string(max_degree()) +
                                 " exceeds declared " + std::to_string(d));
  declared_max_degree_ = d;
}

std::vector<std::pair<VertexId, VertexId>> Graph::edges() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  out.reserve(static_cast<size_t>(edge_count_));
  for (VertexId u = 0; u < vertex_count(); ++u)
    for (VertexId v : adj_[static_cast<size_t>(u)])
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::vector<std::vector<VertexId>> connected_components(const Graph& g,
                                                        const std::vector<VertexId>& subset) {
  const int n = g.vertex_count();
  std::vector<char> in_subset(static_cast<size_t>(n), 0);
  for (VertexId v : subset) {
    if (v < 0 || v >= n)
      fail(Status::Validation, "connected_components: vertex id out of range: " + std::to_string(v));
    in_subset[static_cast<size_t>(v)] = 1;
  }
  std::vector<VertexId> members;
  members.reserve(subset.size());
  for (VertexId v = 0; v < n; ++v)
    if (in_subset[static_cast<size_t>(v)]) members.push_back(v);

  std::vector<char> seen(static_cast<size_t>(n), 0);
  std::vector<std::vector<VertexId>> components;
  for (VertexId start : members) {
    if (seen[static_cast<size_t>(start)]) continue;
    std::vector<VertexId> comp;
    std::queue<VertexId> q;
    q.push(start);
    seen[static_cast<size_t>(start)] = 1;
    while (!q.empty()) {
      VertexId v = q.front();
      q.pop();
      comp.push_back(v);
      for (VertexId w : g.neighbors(v)) {
        if (in_subset[static_cast<size_t>(w)] && !seen[static_cast<size_t>(w)]) {
          seen[static_cast<size_t>(w)] = 1;
          q.push(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    components.push_back(std::move(comp));
  }
  // members is scanned ascending, so components are already ordered by smallest element.
  return components;
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<VertexId>& subset) {
  InducedSubgraph out;
  std::vector<VertexId> sorted = subset;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  out.to_local.assign(static_cast<size_t>(g.vertex_count()), -1);
  out.to_original = sorted;
  for (size_t i = 0; i < sorted.size(); ++i) {
    g.check_vertex(sorted[i]);
    out.to_local[static_cast<size_t>(sorted[i])] = static_cast<int>(i);
  }
  out.graph = Graph(static_cast<int>(sorted.size()));
  for (VertexId u : sorted)
    for (VertexId v : g.neighbors(u))
      if (u < v && out.to_local[static_cast<size_t>(v)] >= 0)
        out.graph.add_edge(out.to_local[static_cast<size_t>(u)],
                           out.to_local[static_cast<size_t>(v)]);
  return out;
}

}  // namespace ltc
