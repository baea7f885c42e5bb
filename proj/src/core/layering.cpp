#include "core/layering.hpp"

#include <cstdlib>

namespace ltc {

std::vector<std::vector<VertexId>> Layering::layers() const {
  std::vector<std::vector<VertexId>> out(static_cast<size_t>(n_layers) + 1);
  for (VertexId v = 0; v < static_cast<int>(layer_of.size()); ++v) {
    int l = layer_of[static_cast<size_t>(v)];
    if (l >= 1 && l <= n_layers) out[static_cast<size_t>(l)].push_back(v);
  }
  return out;
}

Layering single_layer(int n) {
  Layering L;
  L.layer_of.assign(static_cast<size_t>(n), 1);
  L.n_layers = n > 0 ? 1 : 0;
  return L;
}

std::vector<std::string> validate_layering(const Graph& g, const Layering& L) {
  std::vector<std::string> violations;
  const int n = g.vertex_count();
  if (static_cast<int>(L.layer_of.size()) != n) {
    violations.push_back("layering covers " + std::to_string(L.layer_of.size()) +
                         " vertices, graph has " + std::to_string(n));
    return violations;
  }
  for (VertexId v = 0; v < n; ++v) {
    int l = L.layer(v);
    if (l < 1 || l > L.n_layers)
      violations.push_back("vertex " + std::to_string(v) + " has layer " + std::to_string(l) +
                           " outside [1," + std::to_string(L.n_layers) + "]");
  }
  if (!violations.empty()) return violations;
  for (const auto& [u, v] : g.edges()) {
    if (std::abs(L.layer(u) - L.layer(v)) > 1)
      violations.push_back("edge " + std::to_string(u) + "-" + std::to_string(v) +
                           " spans layers " + std::to_string(L.layer(u)) + " and " +
                           std::to_string(L.layer(v)));
  }
  return violations;
}

}  // namespace ltc
