#include "core/family.hpp"

#include <algorithm>

namespace ltc {

namespace {

int grid_id(int n, int row, int col) { return (row - 1) * n + (col - 1); }  // 1-based row/col

void check_spec(const FamilySpec& spec) {
  int min_n = spec.family == Family::TorusGrid ? 3 : 2;
  if (spec.n < min_n)
    fail(Status::Validation, std::string("invalid family spec: ") + family_name(spec.family) +
                                 " requires n >= " + std::to_string(min_n));
  if (spec.family == Family::CrossedGrid && spec.crossings < 1)
    fail(Status::Validation, "invalid family spec: crossings must be >= 1");
}

Layering row_layering(int n) {
  Layering L;
  L.n_layers = n;
  L.layer_of.resize(static_cast<size_t>(n) * static_cast<size_t>(n));
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= n; ++c) L.layer_of[static_cast<size_t>(grid_id(n, r, c))] = r;
  return L;
}

// Path of bags indexed by column j = 1..n-1; bag_j holds the listed columns.
TreeDecomposition column_path_td(int n, const std::vector<std::vector<int>>& columns_per_bag) {
  TreeDecomposition td;
  td.node_count = n - 1;
  td.bags.resize(static_cast<size_t>(n - 1));
  for (int j = 1; j <= n - 1; ++j) {
    auto& bag = td.bags[static_cast<size_t>(j - 1)];
    for (int c : columns_per_bag[static_cast<size_t>(j - 1)])
      for (int r = 1; r <= n; ++r) bag.push_back(grid_id(n, r, c));
    std::sort(bag.begin(), bag.end());
    bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
  }
  for (int j = 1; j < n - 1; ++j) td.tree_edges.emplace_back(j - 1, j);
  td.root = 0;
  return td;
}

Graph square_grid_graph(int n) {
  Graph g(n * n);
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= n; ++c) {
      if (c < n) g.add_edge(grid_id(n, r, c), grid_id(n, r, c + 1));
      if (r < n) g.add_edge(grid_id(n, r, c), grid_id(n, r + 1, c));
    }
  return g;
}

FamilyInstance build_grid(const FamilySpec& spec) {
  const int n = spec.n;
  Graph g = square_grid_graph(n);
  if (spec.family == Family::TriGrid)
    for (int r = 1; r < n; ++r)
      for (int c = 1; c < n; ++c) g.add_edge(grid_id(n, r, c), grid_id(n, r + 1, c + 1));

  if (spec.family == Family::CrossedGrid) {
    // Faces in row-major order; select every k-th candidate, never two that
    // share a grid edge, and add both diagonals of each selected face.
    const int k = spec.crossings;
    const int offset = static_cast<int>(spec.seed % static_cast<std::uint64_t>(k));
    std::vector<char> selected(static_cast<size_t>((n - 1) * (n - 1)), 0);
    int face_index = 0;
    for (int r = 1; r < n; ++r)
      for (int c = 1; c < n; ++c, ++face_index) {
        if (face_index % k != offset) continue;
        bool blocked = (c > 1 && selected[static_cast<size_t>(face_index - 1)]) ||
                       (r > 1 && selected[static_cast<size_t>(face_index - (n - 1))]);
        if (blocked) continue;
        selected[static_cast<size_t>(face_index)] = 1;
        g.add_edge(grid_id(n, r, c), grid_id(n, r + 1, c + 1));
        g.add_edge(grid_id(n, r + 1, c), grid_id(n, r, c + 1));
      }
  }

  std::vector<std::vector<int>> columns(static_cast<size_t>(n - 1));
  for (int j = 1; j <= n - 1; ++j) columns[static_cast<size_t>(j - 1)] = {j, j + 1};

  FamilyInstance inst{std::move(g), {column_path_td(n, columns), row_layering(n), 0}};
  inst.ltd.layered_width = layered_width(inst.ltd.td, inst.ltd.layering);
  return inst;
}

FamilyInstance build_torus(int n) {
  Graph g(n * n);
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= n; ++c) {
      g.add_edge(grid_id(n, r, c), grid_id(n, r, c % n + 1));
      g.add_edge(grid_id(n, r, c), grid_id(n, r % n + 1, c));
    }

  // Folded layering: rows r and n+2-r share a layer, so wrap edges stay adjacent.
  Layering L;
  L.layer_of.resize(static_cast<size_t>(n) * static_cast<size_t>(n));
  L.n_layers = 0;
  for (int r = 1; r <= n; ++r) {
    int layer = std::min(r, n + 2 - r);
    L.n_layers = std::max(L.n_layers, layer);
    for (int c = 1; c <= n; ++c) L.layer_of[static_cast<size_t>(grid_id(n, r, c))] = layer;
  }

  // Columns 1 and n ride along in every bag to cover the horizontal wrap edges.
  std::vector<std::vector<int>> columns(static_cast<size_t>(n - 1));
  for (int j = 1; j <= n - 1; ++j) {
    std::vector<int> cols = {j, j + 1, 1, n};
    std::sort(cols.begin(), cols.end());
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
    columns[static_cast<size_t>(j - 1)] = cols;
  }

  FamilyInstance inst{std::move(g), {column_path_td(n, columns), std::move(L), 0}};
  inst.ltd.layered_width = layered_width(inst.ltd.td, inst.ltd.layering);
  return inst;
}

}  // namespace

Family family_from_name(const std::string& name) {
  if (name == "square-grid") return Family::SquareGrid;
  if (name == "tri-grid") return Family::TriGrid;
  if (name == "torus-grid") return Family::TorusGrid;
  if (name == "crossed-grid") return Family::CrossedGrid;
  fail(Status::Usage, "unknown family '" + name +
                          "' (expected square-grid, tri-grid, torus-grid or crossed-grid)");
}

const char* family_name(Family f) {
  switch (f) {
    case Family::SquareGrid: return "square-grid";
    case Family::TriGrid: return "tri-grid";
    case Family::TorusGrid: return "torus-grid";
    case Family::CrossedGrid: return "crossed-grid";
  }
  return "?";
}

FamilyInstance generate_family(const FamilySpec& spec) {
  check_spec(spec);
  FamilyInstance inst =
      spec.family == Family::TorusGrid ? build_torus(spec.n) : build_grid(spec);
  inst.graph.set_declared_max_degree(inst.graph.max_degree());

  // Every emitted instance must pass its own validators.
  auto td_violations = validate_td(inst.graph, inst.ltd.td);
  auto layer_violations = validate_layering(inst.graph, inst.ltd.layering);
  if (!td_violations.empty() || !layer_violations.empty())
    fail(Status::Internal, std::string("generated family instance fails validation: ") +
                               (td_violations.empty() ? layer_violations.front()
                                                      : td_violations.front()));
  return inst;
}

}  // namespace ltc
