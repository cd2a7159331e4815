#include "surftw/face_width.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace surftw {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void join(int a, int b) { parent[find(a)] = find(b); }
};

bool contractible(const SurfaceMap& m, const FaceSet& faces, const std::vector<int>& cycle) {
  std::vector<char> on_cycle(m.num_edges(), 0);
  for (int e : cycle) on_cycle[e] = 1;
  std::vector<char> vertex_on(m.num_vertices(), 0);
  for (int e : cycle) {
    const auto [d, d2] = m.edge_darts(e);
    vertex_on[m.vertex_of(d)] = vertex_on[m.vertex_of(d2)] = 1;
  }
  auto sides = [&](int e) {
    const int d = m.edge_darts(e).first;
    return std::pair{faces.face_of_corner[d], faces.face_of_corner[m.prev_around(d)]};
  };
  UnionFind uf(faces.size());
  for (int e = 0; e < m.num_edges(); ++e)
    if (!on_cycle[e]) {
      const auto [f, g] = sides(e);
      uf.join(f, g);
    }
  std::set<int> roots;
  for (int e : cycle) {
    const auto [f, g] = sides(e);
    roots.insert(uf.find(f));
    roots.insert(uf.find(g));
  }
  // One side only: the cycle is one-sided or does not separate.
  if (roots.size() < 2) return false;
  for (int side : roots) {
    long chi = 0;
    for (int f = 0; f < faces.size(); ++f) chi += uf.find(f) == side;
    for (int e = 0; e < m.num_edges(); ++e)
      if (!on_cycle[e] && uf.find(sides(e).first) == side) --chi;
    for (int v = 0; v < m.num_vertices(); ++v)
      if (!vertex_on[v] && uf.find(faces.face_of_corner[m.darts_at(v).front()]) == side) ++chi;
    // The boundary copy of the cycle contributes |C| vertices and |C| edges.
    if (chi == 1) return true;
  }
  return false;
}

}  // namespace

bool is_contractible_cycle(const SurfaceMap& m, const std::vector<int>& cycle) {
  if (cycle.empty()) throw Error(ErrorCode::BadInput, "empty cycle");
  std::vector<int> degree(m.num_vertices(), 0);
  std::set<int> seen;
  for (int e : cycle) {
    if (e < 0 || e >= m.num_edges()) throw Error(ErrorCode::BadEdge, "unknown edge");
    if (!seen.insert(e).second) throw Error(ErrorCode::BadInput, "cycle repeats an edge");
    const auto [d, d2] = m.edge_darts(e);
    ++degree[m.vertex_of(d)];
    ++degree[m.vertex_of(d2)];
  }
  for (int v = 0; v < m.num_vertices(); ++v)
    if (degree[v] != 0 && degree[v] != 2) throw Error(ErrorCode::BadInput, "edges do not form a simple cycle");
  return contractible(m, trace_faces(m), cycle);
}

std::optional<std::vector<int>> short_noncontractible_radial_cycle(const EmbeddedHypergraph& l, int theta,
                                                                   std::int64_t budget) {
  if (!is_two_cell(l)) throw Error(ErrorCode::NotTwoCell, "face-width needs a 2-cell embedding");
  if (theta < 1) return std::nullopt;
  const SurfaceMap r = radial(l).map;
  const FaceSet faces = trace_faces(r);
  const int n = r.num_vertices();
  const int max_len = 2 * theta - 1;
  // Incident (edge, other end) per vertex.
  std::vector<std::vector<std::pair<int, int>>> inc(n);
  for (int e = 0; e < r.num_edges(); ++e) {
    const auto [d, d2] = r.edge_darts(e);
    inc[r.vertex_of(d)].emplace_back(e, r.vertex_of(d2));
    if (r.vertex_of(d) != r.vertex_of(d2)) inc[r.vertex_of(d2)].emplace_back(e, r.vertex_of(d));
  }
  std::int64_t spent = 0;
  std::vector<int> path_edges;
  std::vector<char> on_path(n, 0);
  std::optional<std::vector<int>> found;
  // Simple cycles whose smallest vertex is `start`, each seen in both directions.
  auto search = [&](auto&& self, int start, int v) -> bool {
    for (auto [e, w] : inc[v]) {
      if (!path_edges.empty() && e == path_edges.back()) continue;
      if (w == start && !path_edges.empty()) {
        path_edges.push_back(e);
        if (++spent > budget) throw Error(ErrorCode::TooLarge, "radial cycle budget exhausted");
        const bool ok = contractible(r, faces, path_edges);
        if (!ok) {
          found = path_edges;
          return true;
        }
        path_edges.pop_back();
        continue;
      }
      if (w <= start || on_path[w] || static_cast<int>(path_edges.size()) + 1 >= max_len) continue;
      on_path[w] = 1;
      path_edges.push_back(e);
      if (self(self, start, w)) return true;
      path_edges.pop_back();
      on_path[w] = 0;
    }
    return false;
  };
  for (int s = 0; s < n && !found; ++s) {
    on_path[s] = 1;
    search(search, s, s);
    on_path[s] = 0;
  }
  return found;
}

bool face_width_at_least(const EmbeddedHypergraph& l, int theta, std::int64_t budget) {
  return !short_noncontractible_radial_cycle(l, theta, budget);
}

bool face_width_at_least(const SurfaceMap& g, int theta, std::int64_t budget) {
  return face_width_at_least(EmbeddedHypergraph::from_graph_map(g), theta, budget);
}

}  // namespace surftw
