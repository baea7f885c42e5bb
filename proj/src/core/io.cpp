#include "core/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <vector>

namespace ltc::io {

namespace {

[[noreturn]] void parse_fail(int line, const std::string& what) {
  fail(Status::Parse, "line " + std::to_string(line) + ": " + what);
}

struct LineReader {
  std::istream& in;
  int line_no = 0;

  // Returns false at EOF; skips blank and `c ` comment lines.
  bool next(std::vector<std::string>& tokens, int& line_out) {
    std::string line;
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      std::istringstream ss(line);
      tokens.clear();
      std::string tok;
      while (ss >> tok) tokens.push_back(tok);
      if (tokens.empty() || tokens[0] == "c") continue;
      line_out = line_no;
      return true;
    }
    return false;
  }
};

long long to_int(const std::string& tok, int line) {
  try {
    size_t pos = 0;
    long long value = std::stoll(tok, &pos);
    if (pos != tok.size()) parse_fail(line, "not an integer: '" + tok + "'");
    return value;
  } catch (const Error&) {
    throw;
  } catch (...) {
    parse_fail(line, "not an integer: '" + tok + "'");
  }
}

int vertex_token(const std::string& tok, int line, int n) {
  long long v = to_int(tok, line);
  if (v < 1 || v > n)
    parse_fail(line, "vertex id " + std::to_string(v) + " outside [1," + std::to_string(n) + "]");
  return static_cast<int>(v - 1);
}

}  // namespace

Graph parse_gr(std::istream& in) {
  LineReader reader{in};
  std::vector<std::string> tok;
  int line = 0;
  if (!reader.next(tok, line)) fail(Status::Parse, "empty .gr input");
  if (tok.size() != 4 || tok[0] != "p" || tok[1] != "tw")
    parse_fail(line, "expected header 'p tw <n> <m>'");
  long long n = to_int(tok[2], line), m = to_int(tok[3], line);
  if (n < 0 || m < 0) parse_fail(line, "negative counts in header");
  Graph g(static_cast<int>(n));
  long long seen = 0;
  while (reader.next(tok, line)) {
    if (tok.size() != 2) parse_fail(line, "expected edge line '<u> <v>'");
    int u = vertex_token(tok[0], line, static_cast<int>(n));
    int v = vertex_token(tok[1], line, static_cast<int>(n));
    if (u == v) parse_fail(line, "self-loop at vertex " + tok[0]);
    if (g.has_edge(u, v)) parse_fail(line, "duplicate edge " + tok[0] + " " + tok[1]);
    g.add_edge(u, v);
    ++seen;
  }
  if (seen != m)
    fail(Status::Parse, "header declares " + std::to_string(m) + " edges, found " +
                            std::to_string(seen));
  return g;
}

std::string write_gr(const Graph& g) {
  std::ostringstream out;
  out << "p tw " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

TreeDecomposition parse_td(std::istream& in) {
  LineReader reader{in};
  std::vector<std::string> tok;
  int line = 0;
  if (!reader.next(tok, line)) fail(Status::Parse, "empty .td input");
  if (tok.size() != 5 || tok[0] != "s" || tok[1] != "td")
    parse_fail(line, "expected header 's td <#bags> <width+1> <n>'");
  long long b = to_int(tok[2], line);
  long long width_plus_1 = to_int(tok[3], line);
  long long n = to_int(tok[4], line);
  if (b < 0 || width_plus_1 < 0 || n < 0) parse_fail(line, "negative counts in header");

  TreeDecomposition td;
  td.node_count = static_cast<int>(b);
  td.bags.assign(static_cast<size_t>(b), {});
  td.declared_bag_size = static_cast<int>(width_plus_1);
  td.declared_vertex_count = static_cast<int>(n);
  std::vector<char> bag_seen(static_cast<size_t>(b), 0);

  while (reader.next(tok, line)) {
    if (tok[0] == "b") {
      if (tok.size() < 2) parse_fail(line, "bag line without id");
      long long id = to_int(tok[1], line);
      if (id < 1 || id > b) parse_fail(line, "bag id " + tok[1] + " outside [1," + std::to_string(b) + "]");
      size_t idx = static_cast<size_t>(id - 1);
      if (bag_seen[idx]) parse_fail(line, "duplicate bag " + tok[1]);
      bag_seen[idx] = 1;
      auto& bag = td.bags[idx];
      for (size_t i = 2; i < tok.size(); ++i) bag.push_back(vertex_token(tok[i], line, static_cast<int>(n)));
      std::sort(bag.begin(), bag.end());
      auto dup = std::adjacent_find(bag.begin(), bag.end());
      if (dup != bag.end())
        parse_fail(line, "bag " + tok[1] + " repeats vertex " + std::to_string(*dup + 1));
    } else {
      if (tok.size() != 2) parse_fail(line, "expected bag line or tree edge '<b1> <b2>'");
      long long x = to_int(tok[0], line), y = to_int(tok[1], line);
      if (x < 1 || x > b || y < 1 || y > b) parse_fail(line, "tree edge node id outside [1," + std::to_string(b) + "]");
      if (x == y) parse_fail(line, "tree edge self-loop at node " + tok[0]);
      td.tree_edges.emplace_back(static_cast<int>(x - 1), static_cast<int>(y - 1));
    }
  }
  for (size_t i = 0; i < bag_seen.size(); ++i)
    if (!bag_seen[i]) fail(Status::Parse, "bag " + std::to_string(i + 1) + " is missing");
  return td;
}

std::string write_td(const TreeDecomposition& td, int n) {
  std::ostringstream out;
  out << "s td " << td.node_count << ' ' << td.width() + 1 << ' ' << n << '\n';
  for (NodeId t = 0; t < td.node_count; ++t) {
    out << "b " << t + 1;
    for (VertexId v : td.bags[static_cast<size_t>(t)]) out << ' ' << v + 1;
    out << '\n';
  }
  auto edges = td.tree_edges;
  for (auto& [x, y] : edges)
    if (y < x) std::swap(x, y);
  std::sort(edges.begin(), edges.end());
  for (const auto& [x, y] : edges) out << x + 1 << ' ' << y + 1 << '\n';
  return out.str();
}

Layering parse_layers(std::istream& in) {
  LineReader reader{in};
  std::vector<std::string> tok;
  int line = 0;
  if (!reader.next(tok, line)) fail(Status::Parse, "empty .layers input");
  if (tok.size() != 4 || tok[0] != "s" || tok[1] != "layering")
    parse_fail(line, "expected header 's layering <n> <n_layers>'");
  long long n = to_int(tok[2], line), n_layers = to_int(tok[3], line);
  if (n < 0 || n_layers < 0) parse_fail(line, "negative counts in header");
  Layering L;
  L.n_layers = static_cast<int>(n_layers);
  L.layer_of.assign(static_cast<size_t>(n), 0);
  long long assigned = 0;
  while (reader.next(tok, line)) {
    if (tok.size() != 2) parse_fail(line, "expected line '<v> <layer>'");
    int v = vertex_token(tok[0], line, static_cast<int>(n));
    long long l = to_int(tok[1], line);
    if (l < 1 || l > n_layers)
      parse_fail(line, "layer " + tok[1] + " outside [1," + std::to_string(n_layers) + "]");
    if (L.layer_of[static_cast<size_t>(v)] != 0) parse_fail(line, "vertex " + tok[0] + " assigned twice");
    L.layer_of[static_cast<size_t>(v)] = static_cast<int>(l);
    ++assigned;
  }
  if (assigned != n)
    fail(Status::Parse, "layering assigns " + std::to_string(assigned) + " of " +
                            std::to_string(n) + " vertices");
  return L;
}

std::string write_layers(const Layering& L) {
  std::ostringstream out;
  out << "s layering " << L.layer_of.size() << ' ' << L.n_layers << '\n';
  for (size_t v = 0; v < L.layer_of.size(); ++v) out << v + 1 << ' ' << L.layer_of[v] << '\n';
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Status::Io, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Status::Io, "cannot open " + path + " for writing");
  out << content;
  if (!out) fail(Status::Io, "failed writing " + path);
}

Graph parse_gr_string(const std::string& text) {
  std::istringstream ss(text);
  return parse_gr(ss);
}

TreeDecomposition parse_td_string(const std::string& text) {
  std::istringstream ss(text);
  return parse_td(ss);
}

Layering parse_layers_string(const std::string& text) {
  std::istringstream ss(text);
  return parse_layers(ss);
}

Graph read_gr(const std::string& path) { return parse_gr_string(read_file(path)); }
TreeDecomposition read_td(const std::string& path) { return parse_td_string(read_file(path)); }
Layering read_layers(const std::string& path) { return parse_layers_string(read_file(path)); }

void write_gr_file(const Graph& g, const std::string& path) { write_file(path, write_gr(g)); }
void write_td_file(const TreeDecomposition& td, int n, const std::string& path) {
  write_file(path, write_td(td, n));
}
void write_layers_file(const Layering& L, const std::string& path) {
  write_file(path, write_layers(L));
}

Bundle load_bundle(const std::string& gr_path, const std::string& td_path,
                   const std::string& layers_path) {
  Bundle bundle{read_gr(gr_path), read_td(td_path), read_layers(layers_path)};
  const int n = bundle.graph.vertex_count();
  if (bundle.td.declared_vertex_count && *bundle.td.declared_vertex_count != n)
    fail(Status::Validation, "vertex count mismatch: graph has " + std::to_string(n) +
                                 ", decomposition declares " +
                                 std::to_string(*bundle.td.declared_vertex_count));
  if (static_cast<int>(bundle.layering.layer_of.size()) != n)
    fail(Status::Validation, "vertex count mismatch: graph has " + std::to_string(n) +
                                 ", layering covers " +
                                 std::to_string(bundle.layering.layer_of.size()));
  return bundle;
}

}  // namespace ltc::io
