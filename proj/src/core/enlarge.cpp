#include "core/enlarge.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace ltc::enlarge {

namespace {

void check_family(const Graph& g, const TreeDecomposition& td, const LinkageFamily& fam) {
  auto adj = td.node_adjacency();
  for (size_t i = 0; i < fam.size(); ++i) {
    const LinkageEntry& e = fam[i];
    const std::string tag = "linkage-error: entry " + std::to_string(i);
    for (NodeId t : e.subtree) td.check_node(t);
    for (NodeId t : e.covering_nodes) {
      td.check_node(t);
      if (!std::binary_search(e.subtree.begin(), e.subtree.end(), t))
        fail(Status::Validation, tag + ": covering node " + std::to_string(t) +
                                     " outside its subtree");
    }
    // Subtree connectivity.
    if (!e.subtree.empty()) {
      std::set<NodeId> in(e.subtree.begin(), e.subtree.end());
      if (in.size() != e.subtree.size())
        fail(Status::Validation, tag + ": repeated subtree node");
      std::set<NodeId> seen{e.subtree.front()};
      std::queue<NodeId> q;
      q.push(e.subtree.front());
      while (!q.empty()) {
        NodeId t = q.front();
        q.pop();
        for (NodeId s : adj[static_cast<size_t>(t)])
          if (in.count(s) && !seen.count(s)) {
            seen.insert(s);
            q.push(s);
          }
      }
      if (seen.size() != in.size())
        fail(Status::Validation, tag + ": subtree is disconnected");
    } else if (!e.pairs.empty()) {
      fail(Status::Validation, tag + ": pairs without a subtree");
    }
    // Pairs: distinct endpoints inside the union of the covering nodes' bags.
    std::vector<VertexId> covered;
    for (NodeId t : e.covering_nodes)
      covered.insert(covered.end(), td.bags[static_cast<size_t>(t)].begin(),
                     td.bags[static_cast<size_t>(t)].end());
    std::sort(covered.begin(), covered.end());
    covered.erase(std::unique(covered.begin(), covered.end()), covered.end());
    for (const auto& [u, v] : e.pairs) {
      g.check_vertex(u);
      g.check_vertex(v);
      if (u == v)
        fail(Status::Validation, tag + ": self-pair at vertex " + std::to_string(u));
      if (!std::binary_search(covered.begin(), covered.end(), u) ||
          !std::binary_search(covered.begin(), covered.end(), v))
        fail(Status::Validation, tag + ": pair " + std::to_string(u) + "," + std::to_string(v) +
                                     " outside the covering nodes' bags");
    }
  }
}

}  // namespace

int measure_overlap(const TreeDecomposition& td, const LinkageFamily& fam) {
  std::vector<int> count(static_cast<size_t>(td.node_count), 0);
  int h = 0;
  for (const LinkageEntry& e : fam)
    for (NodeId t : e.subtree) {
      td.check_node(t);
      h = std::max(h, ++count[static_cast<size_t>(t)]);
    }
  return h;
}

AugmentResult augment(const Graph& g, const TreeDecomposition& td, const LinkageFamily& fam) {
  check_family(g, td, fam);

  AugmentResult res;
  res.g_prime = g;
  res.td_prime = td;
  res.td_prime.declared_bag_size.reset();
  res.h_actual = measure_overlap(td, fam);

  std::set<std::pair<VertexId, VertexId>> all_pairs;
  for (const LinkageEntry& e : fam) {
    res.k_actual = std::max(res.k_actual, static_cast<int>(e.pairs.size()));
    std::vector<VertexId> z;  // vertices appearing in this entry's pairs
    for (auto [u, v] : e.pairs) {
      if (v < u) std::swap(u, v);
      all_pairs.emplace(u, v);
      res.g_prime.add_edge(u, v);  // already-present edges stay deduplicated
      z.push_back(u);
      z.push_back(v);
    }
    std::sort(z.begin(), z.end());
    z.erase(std::unique(z.begin(), z.end()), z.end());
    for (NodeId t : e.subtree) {
      auto& bag = res.td_prime.bags[static_cast<size_t>(t)];
      std::vector<VertexId> merged;
      merged.reserve(bag.size() + z.size());
      std::set_union(bag.begin(), bag.end(), z.begin(), z.end(), std::back_inserter(merged));
      bag = std::move(merged);
    }
  }

  std::vector<int> pairs_per_vertex(static_cast<size_t>(g.vertex_count()), 0);
  for (const auto& [u, v] : all_pairs) {
    res.d_actual = std::max(res.d_actual, ++pairs_per_vertex[static_cast<size_t>(u)]);
    res.d_actual = std::max(res.d_actual, ++pairs_per_vertex[static_cast<size_t>(v)]);
  }

  // The lemma's guarantees, asserted exactly.
  for (NodeId t = 0; t < td.node_count; ++t) {
    const auto& before = td.bags[static_cast<size_t>(t)];
    const auto& after = res.td_prime.bags[static_cast<size_t>(t)];
    if (!std::includes(after.begin(), after.end(), before.begin(), before.end()))
      fail(Status::Internal, "augment: bag " + std::to_string(t) + " lost vertices");
    if (static_cast<int>(after.size()) >
        static_cast<int>(before.size()) + 2 * res.h_actual * res.k_actual)
      fail(Status::Internal, "augment: bag " + std::to_string(t) + " grew beyond 2hk");
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (res.g_prime.degree(v) > g.degree(v) + pairs_per_vertex[static_cast<size_t>(v)])
      fail(Status::Internal, "augment: degree of " + std::to_string(v) + " grew beyond d");
  auto violations = validate_td(res.g_prime, res.td_prime);
  if (!violations.empty())
    fail(Status::Internal, "augment: result is not a tree-decomposition: " + violations.front());
  return res;
}

}  // namespace ltc::enlarge
