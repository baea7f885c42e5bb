#pragma once

#include <array>
#include <string>
#include <vector>

#include "core/bounds.hpp"
#include "core/coloring.hpp"
#include "core/enlarge.hpp"
#include "core/layering.hpp"
#include "core/tree_decomposition.hpp"

namespace ltc::pipeline {

// Layers grouped by residue mod 3: class j holds layers j+1, j+4, j+7, ...
// Distinct layers of one class are pairwise non-adjacent in the graph.
struct LayerClasses {
  std::array<std::vector<int>, 3> layers;         // 1-based layer indices, ascending
  std::array<std::vector<VertexId>, 3> vertices;  // sorted

  static int class_of_layer(int layer) { return (layer - 1) % 3; }
};

LayerClasses split_layers(const Graph& g, const Layering& L);

// A monochromatic component together with the linkage data that feeds the
// augmentation of its target layer.
struct ComponentLinkage {
  int source_layer = 0;
  int target_layer = 0;
  std::vector<VertexId> component;  // sorted
  enlarge::LinkageEntry entry;
};

struct PhaseResult {
  Coloring coloring;      // global indexing; 0 outside the phase's class
  int max_component = 0;  // measured clustering over the phase graphs
};

struct EnlargeCallStats {
  int phase = 0;  // 2 or 3
  int layer = 0;
  int base_width = -1;
  int augmented_width = -1;
  int h = 0, k = 0, d = 0;
};

// Augmented per-layer graph in local ids plus its mapping back.
struct LayerGraph {
  int layer = 0;
  Graph graph;
  std::vector<VertexId> to_original;
};

struct Phase2Result {
  Coloring coloring;
  int max_component = 0;
  std::vector<EnlargeCallStats> stats;
  std::vector<LayerGraph> layer_graphs;
  std::vector<std::vector<VertexId>> merged_bags;  // bags extended and re-merged with class-1 contents
  int w2_measured = 0;  // max(layered_width - 1, max augmented width)
};

struct Phase3Result {
  Coloring coloring;
  int max_component = 0;
  std::vector<EnlargeCallStats> stats;
  std::vector<LayerGraph> layer_graphs;
};

PhaseResult phase1(const Graph& g, const TreeDecomposition& td, const Layering& L,
                   const LayerClasses& classes, int threads);

std::vector<ComponentLinkage> build_linkages_phase2(const Graph& g, const TreeDecomposition& td,
                                                    const Layering& L, const Coloring& c1,
                                                    const LayerClasses& classes);

Phase2Result phase2(const Graph& g, const TreeDecomposition& td, const Layering& L,
                    const LayerClasses& classes, const std::vector<ComponentLinkage>& linkages,
                    int layered_width, int f1_measured, int threads);

std::vector<ComponentLinkage> build_linkages_phase3(const Graph& g, const TreeDecomposition& td,
                                                    const Layering& L, const Coloring& c1,
                                                    const LayerClasses& classes,
                                                    const Phase2Result& p2);

Phase3Result phase3(const Graph& g, const TreeDecomposition& td, const Layering& L,
                    const LayerClasses& classes, const std::vector<ComponentLinkage>& linkages,
                    const Phase2Result& p2, int layered_width, int f2_measured, int threads);

struct PipelineConfig {
  FModel f_model = FModel::linear(1);
  int threads = 1;
};

struct PipelineReport {
  int n = 0;
  int n_layers = 0;
  int max_degree = 0;
  int layered_width = 0;
  Coloring coloring;  // full vertex set, palette {1,2,3}
  int f1 = 0, f2 = 0, f3 = 0;  // measured per-phase clusterings
  std::vector<EnlargeCallStats> enlarge_calls;
  int h_max = 0, k_max = 0, d_max = 0;
  int w2_measured = 0;
  FModel f_model;
  BoundsCascade bounds_model;
  BoundsCascade bounds_measured;
  std::array<int, 4> clustering_per_color{};  // indices 1..3
  int clustering_overall = 0;
};

// Runs all three phases, combines the class colorings, and asserts every
// output property the construction guarantees (palette by class, class
// avoidance, phase-graph connectivity of component cores, and the measured
// component-size inequalities). Assertion failures raise invariant errors
// with the offending component attached.
PipelineReport three_color(const Graph& g, const LayeredTreeDecomposition& ltd,
                           const PipelineConfig& config);

// Report JSON (see README for the schema). Deterministic byte-for-byte.
std::string write_report(const PipelineReport& report);
PipelineReport parse_report(const std::string& json_text);

}  // namespace ltc::pipeline
