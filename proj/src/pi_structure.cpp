#include "surftw/pi_structure.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace surftw {

namespace {

VertexSet sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<char> membership(const PiStructure& pi, std::span<const int> subset) {
  std::vector<char> in(pi.num_faces(), 0);
  for (int e : subset) {
    if (e < 0 || e >= pi.num_faces()) throw Error(ErrorCode::BadEdge, "unknown edge index " + std::to_string(e));
    in[e] = 1;
  }
  return in;
}

bool inside(const PiCell& cell, const std::vector<char>& in) {
  return std::all_of(cell.faces.begin(), cell.faces.end(), [&](int f) { return in[f] != 0; });
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void join(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

PiStructure::PiStructure(Hypergraph lambda, std::vector<PiCell> edges, std::vector<PiCell> vertices, bool two_cell)
    : lambda_(std::move(lambda)), edges_(std::move(edges)), vertices_(std::move(vertices)), two_cell_(two_cell) {
  for (auto* cells : {&edges_, &vertices_})
    for (auto& c : *cells) {
      c.faces = sorted_unique(c.faces);
      if (c.faces.empty()) throw Error(ErrorCode::BadInput, "Π cell without incident faces");
      for (int f : c.faces)
        if (f < 0 || f >= num_faces()) throw Error(ErrorCode::BadInput, "Π cell references an unknown face");
    }
}

PiStructure PiStructure::of(const EmbeddedHypergraph& l) {
  const Hypermap hm = hypermap_of(l);
  const int n = hm.size();
  std::vector<PiCell> edges;
  for (int h = 0; h < n; ++h)
    if (h < hm.s1[h]) edges.push_back({{hm.centre[h], hm.centre[hm.s1[h]]}, -1, false});

  std::vector<PiCell> vertices;
  auto add_orbits = [&](const std::vector<int>& x, const std::vector<int>& y, bool face_vertex) {
    const auto orbit = orbits_of(x, y);
    const int count = n == 0 ? 0 : *std::max_element(orbit.begin(), orbit.end()) + 1;
    std::vector<PiCell> cells(count);
    for (int h = 0; h < n; ++h) {
      cells[orbit[h]].faces.push_back(hm.centre[h]);
      cells[orbit[h]].ref = face_vertex ? hm.face[h] : l.element_ids()[hm.element[h]];
      cells[orbit[h]].face_vertex = face_vertex;
    }
    std::sort(cells.begin(), cells.end(), [](const PiCell& a, const PiCell& b) { return a.ref < b.ref; });
    vertices.insert(vertices.end(), cells.begin(), cells.end());
  };
  add_orbits(hm.s1, hm.s2, false);
  add_orbits(hm.s0, hm.s1, true);
  return PiStructure(underlying_hypergraph(l), std::move(edges), std::move(vertices), is_two_cell(l));
}

PiRegion region(const PiStructure& pi, std::span<const int> subset) {
  const auto in = membership(pi, subset);
  PiRegion r;
  for (int f = 0; f < pi.num_faces(); ++f)
    if (in[f]) r.faces.push_back(f);
  for (int i = 0; i < static_cast<int>(pi.edges().size()); ++i)
    if (inside(pi.edges()[i], in)) r.private_edges.push_back(i);
  for (int i = 0; i < static_cast<int>(pi.vertices().size()); ++i)
    if (inside(pi.vertices()[i], in)) r.private_vertices.push_back(i);
  return r;
}

PiRegion region(const PiStructure& pi, const std::vector<EdgeLabel>& labels) {
  std::vector<int> subset;
  for (const auto& label : labels) subset.push_back(pi.lambda().index_of(label));
  return region(pi, subset);
}

EdgePartition pi_components(const PiStructure& pi, std::span<const int> subset) {
  const auto in = membership(pi, subset);
  UnionFind uf(pi.num_faces());
  for (const auto* cells : {&pi.edges(), &pi.vertices()})
    for (const auto& c : *cells)
      if (inside(c, in))
        for (int f : c.faces) uf.join(f, c.faces.front());
  std::map<int, std::vector<int>> groups;
  for (int f = 0; f < pi.num_faces(); ++f)
    if (in[f]) groups[uf.find(f)].push_back(f);
  EdgePartition out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_pi_connected(const PiStructure& pi, std::span<const int> subset) {
  return pi_components(pi, subset).size() == 1;
}

bool is_pi_connected(const PiStructure& pi, const EdgePartition& mu) {
  return std::all_of(mu.begin(), mu.end(), [&](const std::vector<int>& part) { return is_pi_connected(pi, part); });
}

std::vector<std::vector<int>> adjacency(const PiStructure& pi) {
  std::vector<std::set<int>> adj(pi.num_faces());
  for (const auto* cells : {&pi.edges(), &pi.vertices()})
    for (const auto& c : *cells)
      if (c.faces.size() == 2) {
        adj[c.faces[0]].insert(c.faces[1]);
        adj[c.faces[1]].insert(c.faces[0]);
      }
  std::vector<std::vector<int>> out;
  for (auto& s : adj) out.emplace_back(s.begin(), s.end());
  return out;
}

std::vector<int> troublesome_edges(const PiStructure& pi) {
  std::vector<int> out;
  if (pi.num_faces() < 2) return out;
  for (int e = 0; e < pi.num_faces(); ++e) {
    std::vector<int> rest;
    for (int f = 0; f < pi.num_faces(); ++f)
      if (f != e) rest.push_back(f);
    if (!is_pi_connected(pi, rest)) out.push_back(e);
  }
  return out;
}

EdgePartition e_partition(const PiStructure& pi, int e) {
  if (e < 0 || e >= pi.num_faces()) throw Error(ErrorCode::BadEdge, "unknown edge index " + std::to_string(e));
  std::vector<int> rest;
  for (int f = 0; f < pi.num_faces(); ++f)
    if (f != e) rest.push_back(f);
  auto comps = rest.empty() ? EdgePartition{} : pi_components(pi, rest);
  if (comps.size() < 2) throw Error(ErrorCode::NotTroublesome, "edge " + std::to_string(e) + " is not troublesome");
  EdgePartition out{{e}};
  out.insert(out.end(), comps.begin(), comps.end());
  return out;
}

PiStructure contract(const PiStructure& pi, std::span<const int> subset) {
  const auto in = membership(pi, subset);
  const int count = static_cast<int>(std::count(in.begin(), in.end(), 1));
  if (count == 0 || count == pi.num_faces())
    throw Error(ErrorCode::BadSubset, "contracted set must be nonempty and proper");
  if (!is_pi_connected(pi, subset)) throw Error(ErrorCode::NotPiConnected, "contracted set is not Π-connected");

  std::vector<int> remap(pi.num_faces());
  int next = 0;
  for (int f = 0; f < pi.num_faces(); ++f)
    if (!in[f]) remap[f] = next++;
  const int merged = next;
  for (int f = 0; f < pi.num_faces(); ++f)
    if (in[f]) remap[f] = merged;

  auto carry = [&](const std::vector<PiCell>& cells) {
    std::vector<PiCell> out;
    for (const auto& c : cells) {
      if (inside(c, in)) continue;
      PiCell moved = c;
      for (int& f : moved.faces) f = remap[f];
      moved.faces = sorted_unique(moved.faces);
      out.push_back(std::move(moved));
    }
    return out;
  };
  std::vector<int> a(subset.begin(), subset.end());
  return PiStructure(contract(pi.lambda(), a), carry(pi.edges()), carry(pi.vertices()), false);
}

}  // namespace surftw
