#include "core/planar.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <queue>
#include <unordered_map>

#include "core/union_find.hpp"

namespace ltc {

namespace {

using Walk = std::vector<VertexId>;  // cyclic; consecutive entries are directed edges

struct Triangle {
  VertexId a, b, c;  // oriented: directed sides a->b, b->c, c->a
};

std::int64_t dir_key(int n, VertexId u, VertexId v) {
  return static_cast<std::int64_t>(u) * n + v;
}

bool bfs_connected(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return false;
  std::vector<char> seen(static_cast<size_t>(n), 0);
  std::queue<VertexId> q;
  q.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!q.empty()) {
    VertexId v = q.front();
    q.pop();
    for (VertexId w : g.neighbors(v))
      if (!seen[static_cast<size_t>(w)]) {
        seen[static_cast<size_t>(w)] = 1;
        ++reached;
        q.push(w);
      }
  }
  return reached == n;
}

// Face walks of the embedding: next edge after arriving at v from u is the
// successor of u in v's rotation. Every directed edge lies on exactly one walk.
std::vector<Walk> trace_faces(const RotationSystem& rot, const Graph& g) {
  const int n = rot.vertex_count();
  std::vector<int> offset(static_cast<size_t>(n) + 1, 0);
  for (int v = 0; v < n; ++v)
    offset[static_cast<size_t>(v) + 1] =
        offset[static_cast<size_t>(v)] + static_cast<int>(rot.rotations[static_cast<size_t>(v)].size());
  auto index_of = [&](VertexId v, VertexId u) {
    const auto& r = rot.rotations[static_cast<size_t>(v)];
    for (size_t i = 0; i < r.size(); ++i)
      if (r[i] == u) return static_cast<int>(i);
    fail(Status::Internal, "rotation lookup failed");
  };

  std::vector<char> visited(static_cast<size_t>(offset.back()), 0);
  std::vector<Walk> walks;
  for (VertexId u = 0; u < n; ++u) {
    const auto& ru = rot.rotations[static_cast<size_t>(u)];
    for (size_t i = 0; i < ru.size(); ++i) {
      if (visited[static_cast<size_t>(offset[static_cast<size_t>(u)]) + i]) continue;
      Walk walk;
      VertexId cu = u;
      int ci = static_cast<int>(i);
      while (!visited[static_cast<size_t>(offset[static_cast<size_t>(cu)] + ci)]) {
        visited[static_cast<size_t>(offset[static_cast<size_t>(cu)] + ci)] = 1;
        walk.push_back(cu);
        VertexId cv = rot.rotations[static_cast<size_t>(cu)][static_cast<size_t>(ci)];
        int j = index_of(cv, cu);
        int deg = static_cast<int>(rot.rotations[static_cast<size_t>(cv)].size());
        cu = cv;
        ci = (j + 1) % deg;
      }
      walks.push_back(std::move(walk));
    }
  }
  (void)g;
  return walks;
}

// Splits every face walk into oriented triangles, adding chords to `gt`.
// Fans from the lowest-id occurrence when all fan chords are insertable,
// otherwise peels ears; both scans are deterministic.
std::vector<Triangle> triangulate(std::vector<Walk> walks, Graph& gt) {
  std::vector<Triangle> triangles;
  std::deque<Walk> pending(walks.begin(), walks.end());
  while (!pending.empty()) {
    Walk w = std::move(pending.front());
    pending.pop_front();
    const int k = static_cast<int>(w.size());
    if (k < 3) fail(Status::Validation, "embedding-error: face walk of length " + std::to_string(k));
    if (k == 3) {
      if (w[0] == w[1] || w[1] == w[2] || w[0] == w[2])
        fail(Status::Validation, "embedding-error: degenerate triangular face");
      triangles.push_back({w[0], w[1], w[2]});
      continue;
    }

    std::vector<int> order(static_cast<size_t>(k));
    for (int p = 0; p < k; ++p) order[static_cast<size_t>(p)] = p;
    std::sort(order.begin(), order.end(), [&](int x, int y) {
      if (w[static_cast<size_t>(x)] != w[static_cast<size_t>(y)])
        return w[static_cast<size_t>(x)] < w[static_cast<size_t>(y)];
      return x < y;
    });

    bool fanned = false;
    for (int p : order) {
      VertexId apex = w[static_cast<size_t>(p)];
      bool ok = true;
      std::vector<VertexId> targets;
      for (int i = 2; i <= k - 2 && ok; ++i) {
        VertexId t = w[static_cast<size_t>((p + i) % k)];
        if (t == apex || gt.has_edge(apex, t) ||
            std::find(targets.begin(), targets.end(), t) != targets.end())
          ok = false;
        else
          targets.push_back(t);
      }
      if (!ok) continue;
      for (VertexId t : targets) gt.add_edge(apex, t);
      for (int i = 1; i <= k - 2; ++i)
        triangles.push_back({apex, w[static_cast<size_t>((p + i) % k)],
                             w[static_cast<size_t>((p + i + 1) % k)]});
      fanned = true;
      break;
    }
    if (fanned) continue;

    bool eared = false;
    for (int p = 0; p < k && !eared; ++p) {
      VertexId prev = w[static_cast<size_t>((p + k - 1) % k)];
      VertexId mid = w[static_cast<size_t>(p)];
      VertexId next = w[static_cast<size_t>((p + 1) % k)];
      if (prev == next || gt.has_edge(prev, next)) continue;
      gt.add_edge(prev, next);
      triangles.push_back({prev, mid, next});
      Walk reduced;
      reduced.reserve(static_cast<size_t>(k) - 1);
      for (int q = 0; q < k; ++q)
        if (q != p) reduced.push_back(w[static_cast<size_t>(q)]);
      pending.push_back(std::move(reduced));
      eared = true;
    }
    if (!eared)
      fail(Status::Validation, "embedding-error: face cannot be triangulated");
  }
  return triangles;
}

LayeredTreeDecomposition tiny_ltd(const Graph& g, VertexId root) {
  const int n = g.vertex_count();
  LayeredTreeDecomposition ltd;
  ltd.td.node_count = 1;
  ltd.td.root = 0;
  ltd.td.bags.emplace_back();
  for (VertexId v = 0; v < n; ++v) ltd.td.bags[0].push_back(v);
  std::vector<int> depth(static_cast<size_t>(n), -1);
  std::queue<VertexId> q;
  q.push(root);
  depth[static_cast<size_t>(root)] = 0;
  while (!q.empty()) {
    VertexId v = q.front();
    q.pop();
    for (VertexId u : g.neighbors(v))
      if (depth[static_cast<size_t>(u)] < 0) {
        depth[static_cast<size_t>(u)] = depth[static_cast<size_t>(v)] + 1;
        q.push(u);
      }
  }
  ltd.layering.layer_of.resize(static_cast<size_t>(n));
  ltd.layering.n_layers = 0;
  for (VertexId v = 0; v < n; ++v) {
    ltd.layering.layer_of[static_cast<size_t>(v)] = depth[static_cast<size_t>(v)] + 1;
    ltd.layering.n_layers = std::max(ltd.layering.n_layers, depth[static_cast<size_t>(v)] + 1);
  }
  ltd.layered_width = layered_width(ltd.td, ltd.layering);
  return ltd;
}

}  // namespace

Graph RotationSystem::to_graph() const {
  const int n = vertex_count();
  Graph g(n);
  for (VertexId v = 0; v < n; ++v) {
    std::vector<VertexId> seen;
    for (VertexId u : rotations[static_cast<size_t>(v)]) {
      if (u < 0 || u >= n)
        fail(Status::Validation, "rotation system: neighbor id out of range: " + std::to_string(u));
      if (u == v) fail(Status::Validation, "rotation system: self-loop at vertex " + std::to_string(v));
      if (std::find(seen.begin(), seen.end(), u) != seen.end())
        fail(Status::Validation, "rotation system: repeated neighbor " + std::to_string(u) +
                                     " at vertex " + std::to_string(v));
      seen.push_back(u);
    }
  }
  for (VertexId v = 0; v < n; ++v)
    for (VertexId u : rotations[static_cast<size_t>(v)]) {
      const auto& ru = rotations[static_cast<size_t>(u)];
      if (std::find(ru.begin(), ru.end(), v) == ru.end())
        fail(Status::Validation, "rotation system: edge " + std::to_string(v) + "-" +
                                     std::to_string(u) + " is not symmetric");
      if (v < u) g.add_edge(v, u);
    }
  return g;
}

RotationSystem grid_rotations(int n, bool diagonals) {
  if (n < 2) fail(Status::Validation, "grid_rotations: n must be >= 2");
  RotationSystem rot;
  rot.rotations.resize(static_cast<size_t>(n) * static_cast<size_t>(n));
  auto id = [n](int r, int c) { return (r - 1) * n + (c - 1); };
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= n; ++c) {
      auto& order = rot.rotations[static_cast<size_t>(id(r, c))];
      // Clockwise: N, E, SE, S, W, NW (rows grow downward).
      if (r > 1) order.push_back(id(r - 1, c));
      if (c < n) order.push_back(id(r, c + 1));
      if (diagonals && r < n && c < n) order.push_back(id(r + 1, c + 1));
      if (r < n) order.push_back(id(r + 1, c));
      if (c > 1) order.push_back(id(r, c - 1));
      if (diagonals && r > 1 && c > 1) order.push_back(id(r - 1, c - 1));
    }
  return rot;
}

LayeredTreeDecomposition planar_ltd(const RotationSystem& rot, VertexId root) {
  Graph g = rot.to_graph();
  const int n = g.vertex_count();
  if (n == 0) fail(Status::Validation, "invalid-input: empty rotation system");
  g.check_vertex(root);
  if (!bfs_connected(g)) fail(Status::Validation, "invalid-input: embedded graph is disconnected");
  if (n <= 3) return tiny_ltd(g, root);

  auto walks = trace_faces(rot, g);
  long long euler = static_cast<long long>(n) - g.edge_count() + static_cast<long long>(walks.size());
  if (euler != 2)
    fail(Status::Validation, "embedding-error: Euler characteristic " + std::to_string(euler) +
                                 " (expected 2)");

  Graph gt = g;  // triangulation adds chords only
  auto triangles = triangulate(std::move(walks), gt);
  const int faces = static_cast<int>(triangles.size());

  // BFS spanning tree of the triangulation.
  std::vector<VertexId> parent(static_cast<size_t>(n), -1);
  std::vector<int> depth(static_cast<size_t>(n), -1);
  std::queue<VertexId> q;
  q.push(root);
  depth[static_cast<size_t>(root)] = 0;
  parent[static_cast<size_t>(root)] = root;
  while (!q.empty()) {
    VertexId v = q.front();
    q.pop();
    for (VertexId u : gt.neighbors(v))
      if (depth[static_cast<size_t>(u)] < 0) {
        depth[static_cast<size_t>(u)] = depth[static_cast<size_t>(v)] + 1;
        parent[static_cast<size_t>(u)] = v;
        q.push(u);
      }
  }

  // Face on each side of every directed edge.
  std::unordered_map<std::int64_t, int> face_of;
  face_of.reserve(static_cast<size_t>(faces) * 3);
  for (int f = 0; f < faces; ++f) {
    const Triangle& t = triangles[static_cast<size_t>(f)];
    for (auto [x, y] : {std::pair{t.a, t.b}, std::pair{t.b, t.c}, std::pair{t.c, t.a}}) {
      if (!face_of.emplace(dir_key(n, x, y), f).second)
        fail(Status::Internal, "triangulation assigned a directed edge to two faces");
    }
  }
  if (face_of.size() != static_cast<size_t>(2 * gt.edge_count()))
    fail(Status::Internal, "triangulation face cover is incomplete");

  // Duals of non-tree edges form the decomposition tree (tree-cotree pairing).
  TreeDecomposition td;
  td.node_count = faces;
  td.root = 0;
  UnionFind uf(faces);
  for (const auto& [u, v] : gt.edges()) {
    bool tree_edge = parent[static_cast<size_t>(u)] == v || parent[static_cast<size_t>(v)] == u;
    if (tree_edge) continue;
    int f1 = face_of.at(dir_key(n, u, v));
    int f2 = face_of.at(dir_key(n, v, u));
    if (f1 == f2 || !uf.unite(f1, f2))
      fail(Status::Internal, "tree-cotree pairing produced a non-tree dual");
    td.tree_edges.emplace_back(std::min(f1, f2), std::max(f1, f2));
  }
  if (static_cast<int>(td.tree_edges.size()) != faces - 1)
    fail(Status::Internal, "tree-cotree pairing is not spanning");

  // Bag of a face: union of the three root paths of its corners.
  td.bags.resize(static_cast<size_t>(faces));
  for (int f = 0; f < faces; ++f) {
    auto& bag = td.bags[static_cast<size_t>(f)];
    const Triangle& t = triangles[static_cast<size_t>(f)];
    for (VertexId x : {t.a, t.b, t.c})
      for (VertexId v = x;; v = parent[static_cast<size_t>(v)]) {
        bag.push_back(v);
        if (v == root) break;
      }
    std::sort(bag.begin(), bag.end());
    bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
  }

  LayeredTreeDecomposition ltd;
  ltd.td = std::move(td);
  ltd.layering.layer_of.resize(static_cast<size_t>(n));
  ltd.layering.n_layers = 0;
  for (VertexId v = 0; v < n; ++v) {
    ltd.layering.layer_of[static_cast<size_t>(v)] = depth[static_cast<size_t>(v)] + 1;
    ltd.layering.n_layers = std::max(ltd.layering.n_layers, depth[static_cast<size_t>(v)] + 1);
  }

  // Validation is mandatory here: a bad dual or bag set must not escape.
  auto td_violations = validate_td(g, ltd.td);
  if (!td_violations.empty())
    fail(Status::Internal, "planar decomposition failed validation: " + td_violations.front());
  auto layer_violations = validate_layering(g, ltd.layering);
  if (!layer_violations.empty())
    fail(Status::Internal, "planar layering failed validation: " + layer_violations.front());
  ltd.layered_width = layered_width(ltd.td, ltd.layering);
  if (ltd.layered_width > 3)
    fail(Status::Internal, "planar decomposition exceeded layered width 3");
  return ltd;
}

}  // namespace ltc
