#pragma once

#include <string>
#include <vector>

#include "core/graph.hpp"

namespace ltc {

// Ordered partition of the vertices into layers 1..n_layers (empty layers allowed).
// Every edge must join the same or consecutive layers.
struct Layering {
  std::vector<int> layer_of;  // vertex -> layer index, 1-based
  int n_layers = 0;

  int layer(VertexId v) const { return layer_of[static_cast<size_t>(v)]; }

  // Vertices per layer, 1-based index; [0] unused.
  std::vector<std::vector<VertexId>> layers() const;
};

Layering single_layer(int n);

// Empty result means valid. Coverage failures and layer-span violations
// are both reported as violation strings.
std::vector<std::string> validate_layering(const Graph& g, const Layering& L);

}  // namespace ltc
