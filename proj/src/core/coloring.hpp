#pragma once

#include <algorithm>
#include <vector>

#include "core/graph.hpp"

namespace ltc {

// Partial vertex coloring; 0 means uncolored. Palette is a sorted subset of {1,2,3}.
struct Coloring {
  std::vector<int> color_of;
  std::vector<int> palette;

  int color(VertexId v) const { return color_of[static_cast<size_t>(v)]; }

  bool in_palette(int c) const {
    return std::binary_search(palette.begin(), palette.end(), c);
  }

  bool covers(const Graph& g) const {
    if (static_cast<int>(color_of.size()) != g.vertex_count()) return false;
    for (int c : color_of)
      if (c == 0 || !in_palette(c)) return false;
    return true;
  }
};

inline Coloring empty_coloring(int n, std::vector<int> palette) {
  Coloring c;
  c.color_of.assign(static_cast<size_t>(n), 0);
  std::sort(palette.begin(), palette.end());
  c.palette = std::move(palette);
  return c;
}

}  // namespace ltc
