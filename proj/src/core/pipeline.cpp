#include "core/pipeline.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "core/parallel.hpp"
#include "core/tree_partition.hpp"
#include "core/union_find.hpp"

namespace ltc::pipeline {

namespace {

// Restriction of td to the subgraph's vertex set, bags in local ids.
TreeDecomposition localize_restriction(const TreeDecomposition& td, const InducedSubgraph& sub) {
  TreeDecomposition out;
  out.node_count = td.node_count;
  out.tree_edges = td.tree_edges;
  out.root = td.root;
  out.bags.resize(td.bags.size());
  for (size_t t = 0; t < td.bags.size(); ++t) {
    for (VertexId v : td.bags[t]) {
      int local = sub.to_local[static_cast<size_t>(v)];
      if (local >= 0) out.bags[t].push_back(local);
    }
    std::sort(out.bags[t].begin(), out.bags[t].end());
  }
  return out;
}

std::vector<std::vector<NodeId>> nodes_containing(const std::vector<std::vector<VertexId>>& bags,
                                                  int n_vertices) {
  std::vector<std::vector<NodeId>> nodes_of(static_cast<size_t>(n_vertices));
  for (NodeId t = 0; t < static_cast<int>(bags.size()); ++t)
    for (VertexId v : bags[static_cast<size_t>(t)])
      nodes_of[static_cast<size_t>(v)].push_back(t);
  return nodes_of;  // ascending since t ascends
}

NodeId first_common_node(const std::vector<NodeId>& a, const std::vector<NodeId>& b) {
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return a[i];
    if (a[i] < b[j]) ++i;
    else ++j;
  }
  return -1;
}

enlarge::LinkageEntry build_entry(const Graph& g, const Layering& L,
                                  const std::vector<std::vector<NodeId>>& cover_nodes_of,
                                  const std::vector<std::vector<NodeId>>& subtree_nodes_of,
                                  const std::vector<VertexId>& component, int target_layer) {
  enlarge::LinkageEntry entry;
  std::set<NodeId> covering;
  std::vector<VertexId> next_layer_neighbors;
  for (VertexId c : component)
    for (VertexId x : g.neighbors(c))
      if (L.layer(x) == target_layer) {
        next_layer_neighbors.push_back(x);
        // Greedy cover: the smallest node whose bag holds both edge ends.
        NodeId t = first_common_node(cover_nodes_of[static_cast<size_t>(c)],
                                     cover_nodes_of[static_cast<size_t>(x)]);
        if (t < 0)
          fail(Status::Validation, "decomposition-error: edge " + std::to_string(c) + "-" +
                                       std::to_string(x) + " is contained in no bag");
        covering.insert(t);
      }
  std::sort(next_layer_neighbors.begin(), next_layer_neighbors.end());
  next_layer_neighbors.erase(
      std::unique(next_layer_neighbors.begin(), next_layer_neighbors.end()),
      next_layer_neighbors.end());
  for (size_t i = 0; i < next_layer_neighbors.size(); ++i)
    for (size_t j = i + 1; j < next_layer_neighbors.size(); ++j)
      entry.pairs.emplace_back(next_layer_neighbors[i], next_layer_neighbors[j]);

  std::set<NodeId> subtree;
  for (VertexId c : component)
    subtree.insert(subtree_nodes_of[static_cast<size_t>(c)].begin(),
                   subtree_nodes_of[static_cast<size_t>(c)].end());
  entry.covering_nodes.assign(covering.begin(), covering.end());
  entry.subtree.assign(subtree.begin(), subtree.end());
  return entry;
}

struct AugmentedLayer {
  int layer = 0;
  EnlargeCallStats stats;
  LayerGraph layer_graph;
  Coloring local_coloring;
  std::vector<VertexId> to_original;
  std::vector<std::vector<VertexId>> bags_original;  // augmented bags mapped back
  int clustering = 0;
  bool active = false;
};

// Shared per-layer step of phases 2 and 3: restrict, augment, two-color.
AugmentedLayer run_layer(const Graph& g, const std::vector<std::vector<VertexId>>& base_bags,
                         const TreeDecomposition& tree_shape, const std::vector<VertexId>& layer_vertices,
                         int layer, int phase, std::pair<int, int> palette,
                         const std::vector<const ComponentLinkage*>& links) {
  AugmentedLayer out;
  out.layer = layer;
  if (layer_vertices.empty()) return out;
  out.active = true;

  InducedSubgraph sub = induced_subgraph(g, layer_vertices);
  TreeDecomposition base;
  base.node_count = tree_shape.node_count;
  base.tree_edges = tree_shape.tree_edges;
  base.root = tree_shape.root;
  base.bags.resize(base_bags.size());
  for (size_t t = 0; t < base_bags.size(); ++t)
    for (VertexId v : base_bags[t]) {
      int local = sub.to_local[static_cast<size_t>(v)];
      if (local >= 0) base.bags[t].push_back(local);
    }
  for (auto& bag : base.bags) std::sort(bag.begin(), bag.end());

  enlarge::LinkageFamily fam;
  fam.reserve(links.size());
  for (const ComponentLinkage* link : links) {
    enlarge::LinkageEntry local = link->entry;
    for (auto& [u, v] : local.pairs) {
      u = sub.to_local[static_cast<size_t>(u)];
      v = sub.to_local[static_cast<size_t>(v)];
      if (u < 0 || v < 0)
        fail(Status::Internal, "pipeline: linkage pair outside its target layer");
    }
    fam.push_back(std::move(local));
  }

  enlarge::AugmentResult aug = enlarge::augment(sub.graph, base, fam);
  out.stats = {phase,
               layer,
               base.width(),
               aug.td_prime.width(),
               aug.h_actual,
               aug.k_actual,
               aug.d_actual};

  TwoColorResult colored = two_color_clustered(aug.g_prime, aug.td_prime, palette);
  out.clustering = colored.clustering;
  out.local_coloring = std::move(colored.coloring);
  out.to_original = sub.to_original;
  out.bags_original.resize(aug.td_prime.bags.size());
  for (size_t t = 0; t < aug.td_prime.bags.size(); ++t)
    for (VertexId local : aug.td_prime.bags[t])
      out.bags_original[t].push_back(sub.to_original[static_cast<size_t>(local)]);
  out.layer_graph = {layer, std::move(aug.g_prime), sub.to_original};
  return out;
}

int floored(int f) { return std::max(f, 1); }

std::string component_summary(const std::vector<VertexId>& comp) {
  std::ostringstream ss;
  ss << "component of size " << comp.size() << " {";
  for (size_t i = 0; i < comp.size() && i < 24; ++i) ss << (i ? "," : "") << comp[i];
  if (comp.size() > 24) ss << ",...";
  ss << "}";
  return ss.str();
}

[[noreturn]] void invariant_fail(const std::string& what, const std::vector<VertexId>& comp) {
  fail(Status::Invariant, "pipeline-invariant-error: " + what + "; " + component_summary(comp));
}

}  // namespace

LayerClasses split_layers(const Graph& g, const Layering& L) {
  LayerClasses out;
  for (int l = 1; l <= L.n_layers; ++l)
    out.layers[static_cast<size_t>(LayerClasses::class_of_layer(l))].push_back(l);
  for (VertexId v = 0; v < static_cast<int>(L.layer_of.size()); ++v)
    out.vertices[static_cast<size_t>(LayerClasses::class_of_layer(L.layer(v)))].push_back(v);
  // Same-class layers differ by >= 3, so no edge may join two of them.
  for (const auto& [u, v] : g.edges())
    if (LayerClasses::class_of_layer(L.layer(u)) == LayerClasses::class_of_layer(L.layer(v)) &&
        L.layer(u) != L.layer(v))
      fail(Status::Invariant, "split_layers: edge " + std::to_string(u) + "-" + std::to_string(v) +
                                  " joins two layers of the same class");
  return out;
}

PhaseResult phase1(const Graph& g, const TreeDecomposition& td, const Layering& L,
                   const LayerClasses& classes, int threads) {
  PhaseResult res;
  res.coloring = empty_coloring(g.vertex_count(), {1, 2});
  const auto layer_vertices = L.layers();
  const auto& lys = classes.layers[0];
  std::vector<int> clustering(lys.size(), 0);
  parallel_for(static_cast<int>(lys.size()), threads, [&](int i) {
    int layer = lys[static_cast<size_t>(i)];
    const auto& Vl = layer_vertices[static_cast<size_t>(layer)];
    if (Vl.empty()) return;
    InducedSubgraph sub = induced_subgraph(g, Vl);
    TreeDecomposition td_l = localize_restriction(td, sub);
    TwoColorResult r = two_color_clustered(sub.graph, td_l, {1, 2});
    clustering[static_cast<size_t>(i)] = r.clustering;
    for (VertexId local = 0; local < sub.graph.vertex_count(); ++local)
      res.coloring.color_of[static_cast<size_t>(sub.to_original[static_cast<size_t>(local)])] =
          r.coloring.color(local);
  });
  for (int c : clustering) res.max_component = std::max(res.max_component, c);
  return res;
}

std::vector<ComponentLinkage> build_linkages_phase2(const Graph& g, const TreeDecomposition& td,
                                                    const Layering& L, const Coloring& c1,
                                                    const LayerClasses& classes) {
  auto nodes_of = nodes_containing(td.bags, g.vertex_count());
  const auto layer_vertices = L.layers();
  std::vector<ComponentLinkage> out;
  for (int layer : classes.layers[0]) {
    if (layer + 1 > L.n_layers) continue;
    std::vector<VertexId> color2;
    for (VertexId v : layer_vertices[static_cast<size_t>(layer)])
      if (c1.color(v) == 2) color2.push_back(v);
    for (auto& comp : connected_components(g, color2)) {
      ComponentLinkage link;
      link.source_layer = layer;
      link.target_layer = layer + 1;
      link.entry = build_entry(g, L, nodes_of, nodes_of, comp, layer + 1);
      link.component = std::move(comp);
      out.push_back(std::move(link));
    }
  }
  return out;
}

Phase2Result phase2(const Graph& g, const TreeDecomposition& td, const Layering& L,
                    const LayerClasses& classes, const std::vector<ComponentLinkage>& linkages,
                    int layered_width, int f1_measured, int threads) {
  Phase2Result res;
  res.coloring = empty_coloring(g.vertex_count(), {2, 3});
  const auto layer_vertices = L.layers();
  const auto& lys = classes.layers[1];
  const int delta = g.max_degree();

  std::map<int, std::vector<const ComponentLinkage*>> by_target;
  for (const ComponentLinkage& link : linkages) by_target[link.target_layer].push_back(&link);

  std::vector<AugmentedLayer> done(lys.size());
  parallel_for(static_cast<int>(lys.size()), threads, [&](int i) {
    int layer = lys[static_cast<size_t>(i)];
    std::vector<const ComponentLinkage*> links;
    if (auto it = by_target.find(layer); it != by_target.end()) links = it->second;
    done[static_cast<size_t>(i)] = run_layer(g, td.bags, td, layer_vertices[static_cast<size_t>(layer)],
                                             layer, 2, {2, 3}, links);
  });

  // The lemma is invoked with declared parameters k = f1^2 d^2, d = f1 d^2,
  // h = w+1; the measured values must stay within them.
  const long long f1 = floored(f1_measured);
  for (const AugmentedLayer& al : done) {
    if (!al.active) continue;
    if (static_cast<long long>(al.stats.k) > f1 * f1 * delta * delta)
      fail(Status::Invariant, "phase2: measured k exceeds f1^2*delta^2 at layer " +
                                  std::to_string(al.layer));
    if (static_cast<long long>(al.stats.d) > f1 * delta * delta)
      fail(Status::Invariant, "phase2: measured d exceeds f1*delta^2 at layer " +
                                  std::to_string(al.layer));
    if (al.stats.h > layered_width + 1)
      fail(Status::Invariant, "phase2: measured h exceeds w+1 at layer " +
                                  std::to_string(al.layer));
  }

  res.w2_measured = std::max(layered_width - 1, 0);
  for (AugmentedLayer& al : done) {
    if (!al.active) continue;
    res.stats.push_back(al.stats);
    res.max_component = std::max(res.max_component, al.clustering);
    res.w2_measured = std::max(res.w2_measured, al.stats.augmented_width);
    for (VertexId local = 0; local < static_cast<int>(al.to_original.size()); ++local)
      res.coloring.color_of[static_cast<size_t>(al.to_original[static_cast<size_t>(local)])] =
          al.local_coloring.color(local);
    res.layer_graphs.push_back(std::move(al.layer_graph));
  }

  // Merge step: start from the original bags, add every layer's augmented
  // contents, then re-add the class-1 bag contents so the merged bags
  // decompose the graph on classes 1 and 2 together.
  res.merged_bags = td.bags;
  for (const AugmentedLayer& al : done) {
    if (!al.active) continue;
    for (size_t t = 0; t < al.bags_original.size(); ++t) {
      auto& bag = res.merged_bags[t];
      bag.insert(bag.end(), al.bags_original[t].begin(), al.bags_original[t].end());
    }
  }
  auto class1 = std::set<VertexId>(classes.vertices[0].begin(), classes.vertices[0].end());
  for (size_t t = 0; t < res.merged_bags.size(); ++t) {
    for (VertexId v : td.bags[t])
      if (class1.count(v)) res.merged_bags[t].push_back(v);
    auto& bag = res.merged_bags[t];
    std::sort(bag.begin(), bag.end());
    bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
  }

  // The merged bags must decompose the graph induced by classes 1 and 2.
  std::vector<VertexId> u12 = classes.vertices[0];
  u12.insert(u12.end(), classes.vertices[1].begin(), classes.vertices[1].end());
  std::sort(u12.begin(), u12.end());
  InducedSubgraph sub12 = induced_subgraph(g, u12);
  TreeDecomposition merged;
  merged.node_count = td.node_count;
  merged.tree_edges = td.tree_edges;
  merged.root = td.root;
  merged.bags.resize(res.merged_bags.size());
  for (size_t t = 0; t < res.merged_bags.size(); ++t)
    for (VertexId v : res.merged_bags[t]) {
      int local = sub12.to_local[static_cast<size_t>(v)];
      if (local >= 0) merged.bags[t].push_back(local);
    }
  for (auto& bag : merged.bags) std::sort(bag.begin(), bag.end());
  auto violations = validate_td(sub12.graph, merged);
  if (!violations.empty())
    fail(Status::Internal, "phase2: merged bags fail to decompose classes 1+2: " +
                               violations.front());
  return res;
}

std::vector<ComponentLinkage> build_linkages_phase3(const Graph& g, const TreeDecomposition& td,
                                                    const Layering& L, const Coloring& c1,
                                                    const LayerClasses& classes,
                                                    const Phase2Result& p2) {
  auto cover_nodes_of = nodes_containing(td.bags, g.vertex_count());
  auto merged_nodes_of = nodes_containing(p2.merged_bags, g.vertex_count());
  const auto layer_vertices = L.layers();

  std::map<int, const LayerGraph*> layer_graph_at;
  for (const LayerGraph& lg : p2.layer_graphs) layer_graph_at[lg.layer] = &lg;

  std::vector<ComponentLinkage> out;
  for (int target = 3; target <= L.n_layers; target += 3) {
    // Class-2 sources below: color-3 components of the augmented layer graph.
    if (auto it = layer_graph_at.find(target - 1); it != layer_graph_at.end()) {
      const LayerGraph& lg = *it->second;
      std::vector<VertexId> color3_local;
      for (VertexId local = 0; local < lg.graph.vertex_count(); ++local)
        if (p2.coloring.color(lg.to_original[static_cast<size_t>(local)]) == 3)
          color3_local.push_back(local);
      for (const auto& comp_local : connected_components(lg.graph, color3_local)) {
        std::vector<VertexId> comp;
        comp.reserve(comp_local.size());
        for (VertexId local : comp_local) comp.push_back(lg.to_original[static_cast<size_t>(local)]);
        std::sort(comp.begin(), comp.end());
        ComponentLinkage link;
        link.source_layer = target - 1;
        link.target_layer = target;
        link.entry = build_entry(g, L, cover_nodes_of, merged_nodes_of, comp, target);
        link.component = std::move(comp);
        out.push_back(std::move(link));
      }
    }
    // Class-0 sources above: color-1 components of the plain layer.
    if (target + 1 <= L.n_layers) {
      std::vector<VertexId> color1;
      for (VertexId v : layer_vertices[static_cast<size_t>(target + 1)])
        if (c1.color(v) == 1) color1.push_back(v);
      for (auto& comp : connected_components(g, color1)) {
        ComponentLinkage link;
        link.source_layer = target + 1;
        link.target_layer = target;
        link.entry = build_entry(g, L, cover_nodes_of, merged_nodes_of, comp, target);
        link.component = std::move(comp);
        out.push_back(std::move(link));
      }
    }
  }
  return out;
}

Phase3Result phase3(const Graph& g, const TreeDecomposition& td, const Layering& L,
                    const LayerClasses& classes, const std::vector<ComponentLinkage>& linkages,
                    const Phase2Result& p2, int layered_width, int f2_measured, int threads) {
  Phase3Result res;
  res.coloring = empty_coloring(g.vertex_count(), {1, 3});
  const auto layer_vertices = L.layers();
  const auto& lys = classes.layers[2];
  const int delta = g.max_degree();

  std::map<int, std::vector<const ComponentLinkage*>> by_target;
  for (const ComponentLinkage& link : linkages) by_target[link.target_layer].push_back(&link);

  std::vector<AugmentedLayer> done(lys.size());
  parallel_for(static_cast<int>(lys.size()), threads, [&](int i) {
    int layer = lys[static_cast<size_t>(i)];
    std::vector<const ComponentLinkage*> links;
    if (auto it = by_target.find(layer); it != by_target.end()) links = it->second;
    done[static_cast<size_t>(i)] = run_layer(g, p2.merged_bags, td,
                                             layer_vertices[static_cast<size_t>(layer)], layer, 3,
                                             {1, 3}, links);
  });

  const long long f2 = floored(f2_measured);
  for (const AugmentedLayer& al : done) {
    if (!al.active) continue;
    if (static_cast<long long>(al.stats.k) > f2 * f2 * delta * delta)
      fail(Status::Invariant, "phase3: measured k exceeds f2^2*delta^2 at layer " +
                                  std::to_string(al.layer));
    if (static_cast<long long>(al.stats.d) > f2 * delta * delta)
      fail(Status::Invariant, "phase3: measured d exceeds f2*delta^2 at layer " +
                                  std::to_string(al.layer));
    if (al.stats.h > 2 * (p2.w2_measured + 1))
      fail(Status::Invariant, "phase3: measured h exceeds 2(w2+1) at layer " +
                                  std::to_string(al.layer));
    (void)layered_width;
  }

  for (AugmentedLayer& al : done) {
    if (!al.active) continue;
    res.stats.push_back(al.stats);
    res.max_component = std::max(res.max_component, al.clustering);
    for (VertexId local = 0; local < static_cast<int>(al.to_original.size()); ++local)
      res.coloring.color_of[static_cast<size_t>(al.to_original[static_cast<size_t>(local)])] =
          al.local_coloring.color(local);
    res.layer_graphs.push_back(std::move(al.layer_graph));
  }
  return res;
}

namespace {

// Per-case instantiation of the proof's counting argument with measured
// clusterings. `phase_graphs` provides the augmented layer graphs whose
// components bound the upper part of each final component.
void assert_component_bounds(const Graph& g, const LayerClasses& classes,
                             const std::vector<LayerGraph>& phase_graphs, const Layering& L,
                             int color, const std::vector<VertexId>& comp, int f_low_raw,
                             int f_high_raw, int delta, const char* high_class_name) {
  std::vector<char> in_high(static_cast<size_t>(g.vertex_count()), 0);
  int high_class = color == 2 ? 1 : 2;
  for (VertexId v : classes.vertices[static_cast<size_t>(high_class)])
    in_high[static_cast<size_t>(v)] = 1;

  std::vector<VertexId> high_part, low_part;
  for (VertexId v : comp)
    (in_high[static_cast<size_t>(v)] ? high_part : low_part).push_back(v);

  if (high_part.empty()) {
    // The whole component is one monochromatic component of the lower phase.
    if (static_cast<int>(comp.size()) > f_low_raw)
      invariant_fail("component without " + std::string(high_class_name) +
                         " vertices exceeds its phase clustering",
                     comp);
    return;
  }

  // The high part must be connected in its (single) augmented layer graph.
  int layer = L.layer(high_part.front());
  for (VertexId v : high_part)
    if (L.layer(v) != layer)
      invariant_fail("component's upper part spans two layers of one class", comp);
  const LayerGraph* lg = nullptr;
  for (const LayerGraph& cand : phase_graphs)
    if (cand.layer == layer) lg = &cand;
  if (lg == nullptr) invariant_fail("component's upper layer has no phase graph", comp);
  std::vector<VertexId> high_local;
  std::vector<int> to_local(static_cast<size_t>(g.vertex_count()), -1);
  for (VertexId local = 0; local < static_cast<int>(lg->to_original.size()); ++local)
    to_local[static_cast<size_t>(lg->to_original[static_cast<size_t>(local)])] = local;
  for (VertexId v : high_part) {
    if (to_local[static_cast<size_t>(v)] < 0)
      invariant_fail("component vertex missing from its phase graph", comp);
    high_local.push_back(to_local[static_cast<size_t>(v)]);
  }
  auto high_components = connected_components(lg->graph, high_local);
  if (high_components.size() != 1)
    invariant_fail("component's upper part is disconnected in the phase graph", comp);

  // Counting: the lower side splits into at most (edges leaving the upper
  // part) components, each a monochromatic component of the lower phase.
  long long edges_out = 0;
  std::vector<char> in_high_part(static_cast<size_t>(g.vertex_count()), 0);
  for (VertexId v : high_part) in_high_part[static_cast<size_t>(v)] = 1;
  for (VertexId v : high_part)
    for (VertexId u : g.neighbors(v))
      if (!in_high_part[static_cast<size_t>(u)]) ++edges_out;
  long long low_components = static_cast<long long>(connected_components(g, low_part).size());
  if (edges_out > static_cast<long long>(floored(f_high_raw)) * delta)
    invariant_fail("edges leaving the upper part exceed f*delta", comp);
  if (low_components > edges_out && !low_part.empty())
    invariant_fail("lower components exceed the edges leaving the upper part", comp);
  long long bound = static_cast<long long>(1 + static_cast<long long>(floored(f_low_raw)) * delta) *
                    floored(f_high_raw);
  if (static_cast<long long>(comp.size()) > bound)
    invariant_fail("component exceeds (1+f_low*delta)*f_high", comp);
}

}  // namespace

PipelineReport three_color(const Graph& g, const LayeredTreeDecomposition& ltd,
                           const PipelineConfig& config) {
  auto td_violations = validate_td(g, ltd.td);
  if (!td_violations.empty())
    fail(Status::Validation, "three_color: invalid decomposition: " + td_violations.front());
  auto layer_violations = validate_layering(g, ltd.layering);
  if (!layer_violations.empty())
    fail(Status::Validation, "three_color: invalid layering: " + layer_violations.front());
  int measured_lw = layered_width(ltd.td, ltd.layering);
  if (measured_lw != ltd.layered_width)
    fail(Status::Validation, "three_color: stored layered width " +
                                 std::to_string(ltd.layered_width) + " does not match measured " +
                                 std::to_string(measured_lw));
  const int threads = std::max(1, config.threads);
  const int delta = g.max_degree();

  PipelineReport report;
  report.n = g.vertex_count();
  report.n_layers = ltd.layering.n_layers;
  report.max_degree = delta;
  report.layered_width = ltd.layered_width;
  report.f_model = config.f_model;

  LayerClasses classes = split_layers(g, ltd.layering);

  PhaseResult p1 = phase1(g, ltd.td, ltd.layering, classes, threads);
  report.f1 = p1.max_component;

  auto links2 = build_linkages_phase2(g, ltd.td, ltd.layering, p1.coloring, classes);
  Phase2Result p2 = phase2(g, ltd.td, ltd.layering, classes, links2, ltd.layered_width,
                           report.f1, threads);
  report.f2 = p2.max_component;
  report.w2_measured = p2.w2_measured;

  auto links3 = build_linkages_phase3(g, ltd.td, ltd.layering, p1.coloring, classes, p2);
  Phase3Result p3 = phase3(g, ltd.td, ltd.layering, classes, links3, p2, ltd.layered_width,
                           report.f2, threads);
  report.f3 = p3.max_component;

  report.enlarge_calls = p2.stats;
  report.enlarge_calls.insert(report.enlarge_calls.end(), p3.stats.begin(), p3.stats.end());
  for (const EnlargeCallStats& s : report.enlarge_calls) {
    report.h_max = std::max(report.h_max, s.h);
    report.k_max = std::max(report.k_max, s.k);
    report.d_max = std::max(report.d_max, s.d);
  }

  // Combine: each vertex takes its class's phase color.
  report.coloring = empty_coloring(g.vertex_count(), {1, 2, 3});
  const Coloring* phase_coloring[3] = {&p1.coloring, &p2.coloring, &p3.coloring};
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    int cls = LayerClasses::class_of_layer(ltd.layering.layer(v));
    int color = phase_coloring[cls]->color(v);
    if (color == 0) fail(Status::Internal, "three_color: vertex left uncolored");
    report.coloring.color_of[static_cast<size_t>(v)] = color;
  }

  // Palette by class, quantified over all vertices.
  static const std::array<std::array<int, 2>, 3> allowed = {{{1, 2}, {2, 3}, {1, 3}}};
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    int cls = LayerClasses::class_of_layer(ltd.layering.layer(v));
    int c = report.coloring.color(v);
    if (c != allowed[static_cast<size_t>(cls)][0] && c != allowed[static_cast<size_t>(cls)][1])
      fail(Status::Invariant, "pipeline-invariant-error: vertex " + std::to_string(v) +
                                  " of class " + std::to_string(cls + 1) + " has color " +
                                  std::to_string(c));
  }

  // Per-color components: class avoidance and the measured size inequalities.
  for (int color = 1; color <= 3; ++color) {
    std::vector<VertexId> colored;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
      if (report.coloring.color(v) == color) colored.push_back(v);
    auto comps = connected_components(g, colored);
    int max_size = 0;
    for (const auto& comp : comps) {
      max_size = std::max(max_size, static_cast<int>(comp.size()));
      int avoided_class = color == 2 ? 2 : (color == 1 ? 1 : 0);  // U3, U2, U1 resp.
      for (VertexId v : comp)
        if (LayerClasses::class_of_layer(ltd.layering.layer(v)) == avoided_class)
          invariant_fail("color-" + std::to_string(color) + " component touches class " +
                             std::to_string(avoided_class + 1),
                         comp);
      if (color == 2)
        assert_component_bounds(g, classes, p2.layer_graphs, ltd.layering, color, comp,
                                report.f1, report.f2, std::max(delta, 1), "class-2");
      else
        assert_component_bounds(g, classes, p3.layer_graphs, ltd.layering, color, comp,
                                color == 1 ? report.f1 : report.f2, report.f3,
                                std::max(delta, 1), "class-3");
    }
    report.clustering_per_color[static_cast<size_t>(color)] = max_size;
    report.clustering_overall = std::max(report.clustering_overall, max_size);
  }

  int w_for_bounds = std::max(1, ltd.layered_width);
  int delta_for_bounds = std::max(1, delta);
  report.bounds_model = compute_bounds(w_for_bounds, delta_for_bounds, config.f_model);
  report.bounds_measured =
      measured_bounds(w_for_bounds, delta_for_bounds, report.f1, report.f2, report.f3);
  return report;
}

namespace {

nlohmann::json bounds_to_json(const BoundsCascade& b) {
  return nlohmann::json{{"f1", b.f1.get_str()},     {"delta2", b.delta2.get_str()},
                        {"w2", b.w2.get_str()},     {"f2", b.f2.get_str()},
                        {"delta3", b.delta3.get_str()}, {"w3", b.w3.get_str()},
                        {"f3", b.f3.get_str()},     {"g", b.g.get_str()}};
}

BoundsCascade bounds_from_json(const nlohmann::json& j) {
  BoundsCascade b;
  b.f1 = mpz_class(j.at("f1").get<std::string>());
  b.delta2 = mpz_class(j.at("delta2").get<std::string>());
  b.w2 = mpz_class(j.at("w2").get<std::string>());
  b.f2 = mpz_class(j.at("f2").get<std::string>());
  b.delta3 = mpz_class(j.at("delta3").get<std::string>());
  b.w3 = mpz_class(j.at("w3").get<std::string>());
  b.f3 = mpz_class(j.at("f3").get<std::string>());
  b.g = mpz_class(j.at("g").get<std::string>());
  return b;
}

}  // namespace

std::string write_report(const PipelineReport& report) {
  nlohmann::json j;
  j["n"] = report.n;
  j["n_layers"] = report.n_layers;
  j["max_degree"] = report.max_degree;
  j["layered_width"] = report.layered_width;
  j["colors"] = report.coloring.color_of;
  j["palette_by_class"] = {{"U1", {1, 2}}, {"U2", {2, 3}}, {"U3", {1, 3}}};
  nlohmann::json widths = nlohmann::json::array();
  for (const EnlargeCallStats& s : report.enlarge_calls)
    widths.push_back({{"phase", s.phase},
                      {"layer", s.layer},
                      {"base_width", s.base_width},
                      {"augmented_width", s.augmented_width},
                      {"h", s.h},
                      {"k", s.k},
                      {"d", s.d}});
  j["measured"] = {{"f1", report.f1}, {"f2", report.f2},   {"f3", report.f3},
                   {"h", report.h_max}, {"k", report.k_max}, {"d", report.d_max},
                   {"w2", report.w2_measured}, {"widths", widths}};
  j["f_model"] = {{"kind", report.f_model.kind == FModel::Kind::Linear ? "linear" : "constant"},
                  {"value", report.f_model.value}};
  j["bounds"] = {{"model", bounds_to_json(report.bounds_model)},
                 {"measured", bounds_to_json(report.bounds_measured)}};
  j["clustering"] = {{"per_color",
                      {{"1", report.clustering_per_color[1]},
                       {"2", report.clustering_per_color[2]},
                       {"3", report.clustering_per_color[3]}}},
                     {"overall", report.clustering_overall}};
  return j.dump(2) + "\n";
}

PipelineReport parse_report(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    fail(Status::Parse, std::string("report: ") + e.what());
  }
  PipelineReport report;
  try {
    report.n = j.at("n").get<int>();
    report.n_layers = j.at("n_layers").get<int>();
    report.max_degree = j.at("max_degree").get<int>();
    report.layered_width = j.at("layered_width").get<int>();
    report.coloring = empty_coloring(report.n, {1, 2, 3});
    report.coloring.color_of = j.at("colors").get<std::vector<int>>();
    const auto& m = j.at("measured");
    report.f1 = m.at("f1").get<int>();
    report.f2 = m.at("f2").get<int>();
    report.f3 = m.at("f3").get<int>();
    report.h_max = m.at("h").get<int>();
    report.k_max = m.at("k").get<int>();
    report.d_max = m.at("d").get<int>();
    report.w2_measured = m.at("w2").get<int>();
    for (const auto& s : m.at("widths"))
      report.enlarge_calls.push_back({s.at("phase").get<int>(), s.at("layer").get<int>(),
                                      s.at("base_width").get<int>(),
                                      s.at("augmented_width").get<int>(), s.at("h").get<int>(),
                                      s.at("k").get<int>(), s.at("d").get<int>()});
    const auto& fm = j.at("f_model");
    report.f_model.kind = fm.at("kind").get<std::string>() == "constant" ? FModel::Kind::Constant
                                                                         : FModel::Kind::Linear;
    report.f_model.value = fm.at("value").get<long long>();
    report.bounds_model = bounds_from_json(j.at("bounds").at("model"));
    report.bounds_measured = bounds_from_json(j.at("bounds").at("measured"));
    const auto& cl = j.at("clustering");
    report.clustering_per_color[1] = cl.at("per_color").at("1").get<int>();
    report.clustering_per_color[2] = cl.at("per_color").at("2").get<int>();
    report.clustering_per_color[3] = cl.at("per_color").at("3").get<int>();
    report.clustering_overall = cl.at("overall").get<int>();
  } catch (const nlohmann::json::exception& e) {
    fail(Status::Parse, std::string("report: ") + e.what());
  }
  if (static_cast<int>(report.coloring.color_of.size()) != report.n)
    fail(Status::Parse, "report: colors array does not match n");
  return report;
}

}  // namespace ltc::pipeline
