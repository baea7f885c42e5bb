#pragma once

#include <iosfwd>
#include <string>

#include "core/graph.hpp"
#include "core/layering.hpp"
#include "core/tree_decomposition.hpp"

namespace ltc::io {

// PACE-style .gr: `c` comments, header `p tw <n> <m>`, then m lines `<u> <v>`
// with 1-based ids. Self-loops and duplicate edges are parse errors.
Graph parse_gr(std::istream& in);
Graph parse_gr_string(const std::string& text);
Graph read_gr(const std::string& path);
std::string write_gr(const Graph& g);
void write_gr_file(const Graph& g, const std::string& path);

// PACE .td: header `s td <#bags> <width+1> <n>`, bag lines `b <id> <v...>`,
// then tree edges `<b1> <b2>`. Header bounds are stored, not enforced here.
TreeDecomposition parse_td(std::istream& in);
TreeDecomposition parse_td_string(const std::string& text);
TreeDecomposition read_td(const std::string& path);
std::string write_td(const TreeDecomposition& td, int n);
void write_td_file(const TreeDecomposition& td, int n, const std::string& path);

// Layering: header `s layering <n> <n_layers>`, then n lines `<v> <layer>` (1-based).
Layering parse_layers(std::istream& in);
Layering parse_layers_string(const std::string& text);
Layering read_layers(const std::string& path);
std::string write_layers(const Layering& L);
void write_layers_file(const Layering& L, const std::string& path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

// Loads a .gr/.td/.layers bundle and enforces cross-file consistency
// (matching vertex counts, ids in range).
struct Bundle {
  Graph graph;
  TreeDecomposition td;
  Layering layering;
};
Bundle load_bundle(const std::string& gr_path, const std::string& td_path,
                   const std::string& layers_path);

}  // namespace ltc::io
