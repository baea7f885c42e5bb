#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "core/coloring.hpp"
#include "core/layering.hpp"
#include "core/pipeline.hpp"

namespace ltc::verify {

struct ColorStats {
  int color = 0;
  int component_count = 0;
  std::map<int, int> size_histogram;  // size -> count
  int max_size = 0;
  std::vector<VertexId> largest_component;
};

struct ClusterReport {
  std::vector<ColorStats> per_color;
  int overall_max = 0;

  int max_size_of(int color) const;
};

// Exact monochromatic-component statistics via a component sweep per color.
// The coloring must cover every vertex (invalid-coloring otherwise).
ClusterReport cluster_stats(const Graph& g, const Coloring& c);

// Re-derives the layer classes and re-checks everything a pipeline report
// claims: palette by class, class avoidance per color, the measured
// component-size inequalities, the per-call augmented-width inequalities, and
// the recomputed clustering numbers. Empty result means ok.
std::vector<std::string> check_pipeline_invariants(const Graph& g, const Layering& L,
                                                   const pipeline::PipelineReport& report);

// Exhaustive 3-coloring oracle (vertex 0's color fixed, partial component
// pruning): minimum achievable max monochromatic component size.
int exact_three_color(const Graph& g, int max_n = 15);

struct HexCheckResult {
  bool ok = true;
  std::optional<std::vector<int>> counterexample;  // vertex colors (1/2) if found
};

// Enumerates all 2-colorings of the n x n triangular grid and verifies each
// contains a monochromatic path on at least n vertices. n <= 4.
HexCheckResult hex_check(int n);

}  // namespace ltc::verify
