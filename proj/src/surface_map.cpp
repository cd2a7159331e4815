#include "surftw/surface_map.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

namespace surftw {

namespace {

bool is_permutation_of_range(const std::vector<int>& p) {
  const int n = static_cast<int>(p.size());
  std::vector<char> seen(n, 0);
  for (int x : p) {
    if (x < 0 || x >= n || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

bool is_fixed_point_free_involution(const std::vector<int>& p) {
  const int n = static_cast<int>(p.size());
  for (int i = 0; i < n; ++i) {
    if (p[i] < 0 || p[i] >= n || p[i] == i || p[p[i]] != i) return false;
  }
  return true;
}

// Union-find over small integer ranges.
struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

SurfaceMap::SurfaceMap(std::vector<int> edge_inv, std::vector<int> rotation,
                       std::vector<int> signature)
    : edge_inv_(std::move(edge_inv)), rotation_(std::move(rotation)), signature_(std::move(signature)) {
  const int n = num_darts();
  if (static_cast<int>(rotation_.size()) != n || !is_fixed_point_free_involution(edge_inv_) ||
      !is_permutation_of_range(rotation_))
    return;
  int edges = 0;
  for (int d = 0; d < n; ++d)
    if (d < edge_inv_[d]) ++edges;
  if (static_cast<int>(signature_.size()) != edges) return;
  for (int s : signature_)
    if (s != 1 && s != -1) return;

  rotation_inv_.assign(n, 0);
  for (int d = 0; d < n; ++d) rotation_inv_[rotation_[d]] = d;

  vertex_of_.assign(n, -1);
  for (int d = 0; d < n; ++d) {
    if (vertex_of_[d] >= 0) continue;
    const int v = static_cast<int>(vertex_rep_.size());
    vertex_rep_.push_back(d);
    for (Dart x = d; vertex_of_[x] < 0; x = rotation_[x]) vertex_of_[x] = v;
  }
  edge_of_.assign(n, -1);
  for (int d = 0; d < n; ++d) {
    if (edge_of_[d] >= 0) continue;
    const int e = static_cast<int>(edge_rep_.size());
    edge_rep_.push_back(d);
    edge_of_[d] = edge_of_[edge_inv_[d]] = e;
  }
  well_formed_ = true;
}

void SurfaceMap::require_well_formed() const {
  if (!well_formed_) throw Error(ErrorCode::BadInput, "map is not a valid signed rotation system");
}

int SurfaceMap::num_vertices() const {
  require_well_formed();
  return static_cast<int>(vertex_rep_.size());
}

int SurfaceMap::num_edges() const {
  require_well_formed();
  return static_cast<int>(edge_rep_.size());
}

Dart SurfaceMap::prev_around(Dart d) const {
  require_well_formed();
  return rotation_inv_[d];
}

int SurfaceMap::vertex_of(Dart d) const {
  require_well_formed();
  return vertex_of_[d];
}

int SurfaceMap::edge_of(Dart d) const {
  require_well_formed();
  return edge_of_[d];
}

int SurfaceMap::sign_of(Dart d) const { return signature_[edge_of(d)]; }

std::vector<Dart> SurfaceMap::darts_at(int v) const {
  require_well_formed();
  std::vector<Dart> out;
  const Dart start = vertex_rep_.at(v);
  Dart d = start;
  do {
    out.push_back(d);
    d = rotation_[d];
  } while (d != start);
  return out;
}

std::pair<Dart, Dart> SurfaceMap::edge_darts(int e) const {
  require_well_formed();
  const Dart d = edge_rep_.at(e);
  return {d, edge_inv_[d]};
}

bool SurfaceMap::connected() const {
  require_well_formed();
  const int nv = num_vertices();
  if (nv == 0) return true;
  Dsu dsu(nv);
  for (Dart d = 0; d < num_darts(); ++d) dsu.unite(vertex_of_[d], vertex_of_[edge_inv_[d]]);
  const int root = dsu.find(0);
  for (int v = 1; v < nv; ++v)
    if (dsu.find(v) != root) return false;
  return true;
}

ValidationReport validate_map(const SurfaceMap& m, bool require_connected) {
  ValidationReport report;
  const int n = m.num_darts();
  if (n == 0) report.violations.emplace_back("map has no darts");
  if (static_cast<int>(m.rotation().size()) != n)
    report.violations.emplace_back("rotation length differs from dart count");
  if (!is_fixed_point_free_involution(m.edge_inv())) {
    bool fixed = false;
    for (int d = 0; d < n; ++d) fixed = fixed || m.edge_inv()[d] == d;
    report.violations.emplace_back(fixed ? "edge_inv not fixed-point-free" : "edge_inv not an involution");
  }
  if (!is_permutation_of_range(m.rotation())) report.violations.emplace_back("rotation not a permutation");
  if (report.ok()) {
    int edges = 0;
    for (int d = 0; d < n; ++d)
      if (d < m.edge_inv()[d]) ++edges;
    if (static_cast<int>(m.signature().size()) != edges)
      report.violations.emplace_back("signature length differs from edge count");
  }
  for (int s : m.signature())
    if (s != 1 && s != -1) {
      report.violations.emplace_back("signature entries must be +1 or -1");
      break;
    }
  if (report.ok() && require_connected && !m.connected())
    report.violations.emplace_back("map not connected");
  return report;
}

SurfaceMap from_cycles(const std::vector<std::vector<int>>& cycles, std::vector<int> edge_signs) {
  int n = 0;
  for (const auto& c : cycles) n += static_cast<int>(c.size());
  std::vector<int> edge_inv(n), rotation(n, -1);
  for (int d = 0; d < n; ++d) edge_inv[d] = d ^ 1;
  for (const auto& c : cycles)
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] < 0 || c[i] >= n) throw Error(ErrorCode::BadInput, "dart out of range in rotation cycles");
      rotation[c[i]] = c[(i + 1) % c.size()];
    }
  if (edge_signs.empty()) edge_signs.assign(n / 2, 1);
  return SurfaceMap(std::move(edge_inv), std::move(rotation), std::move(edge_signs));
}

FaceState face_successor(const SurfaceMap& m, FaceState s) {
  const Dart across = m.opposite(s.dart);
  const bool reversed = s.reversed != (m.sign_of(s.dart) < 0);
  return {reversed ? m.prev_around(across) : m.next_around(across), reversed};
}

Dart corner_of(const SurfaceMap& m, FaceState s) {
  return s.reversed ? s.dart : m.prev_around(s.dart);
}

namespace {

void require_connected(const SurfaceMap& m) {
  const auto report = validate_map(m);
  if (!report.ok()) throw Error(ErrorCode::BadInput, report.violations.front());
  if (!m.connected()) throw Error(ErrorCode::Disconnected, "map is not connected");
}

}  // namespace

FaceSet trace_faces(const SurfaceMap& m) {
  require_connected(m);
  const int n = m.num_darts();
  FaceSet out;
  out.face_of_corner.assign(n, -1);
  for (Dart c = 0; c < n; ++c) {
    if (out.face_of_corner[c] >= 0) continue;
    const int f = out.size();
    // State (c, reversed) passes through corner c.
    const FaceState start{c, true};
    std::vector<FaceState> walk;
    FaceState s = start;
    do {
      const Dart corner = corner_of(m, s);
      if (out.face_of_corner[corner] >= 0)
        throw Error(ErrorCode::Internal, "corner visited by two faces");
      out.face_of_corner[corner] = f;
      walk.push_back(s);
      s = face_successor(m, s);
    } while (!(s == start));
    out.faces.push_back(std::move(walk));
  }
  return out;
}

int euler_genus(const SurfaceMap& m) {
  const int faces = trace_faces(m).size();
  return 2 - m.num_vertices() + m.num_edges() - faces;
}

bool is_orientable(const SurfaceMap& m) {
  require_connected(m);
  std::vector<int> side(m.num_vertices(), 0);
  std::queue<int> queue;
  side[0] = 1;
  queue.push(0);
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop();
    for (Dart d : m.darts_at(v)) {
      const int w = m.vertex_of(m.opposite(d));
      const int want = side[v] * m.sign_of(d);
      if (side[w] == 0) {
        side[w] = want;
        queue.push(w);
      } else if (side[w] != want) {
        return false;
      }
    }
  }
  return true;
}

Gem gem_of(const SurfaceMap& m) {
  const int n = m.num_darts();
  Gem g;
  g.a0.resize(2 * n);
  g.a1.resize(2 * n);
  g.a2.resize(2 * n);
  for (Dart d = 0; d < n; ++d) {
    const Dart r = m.next_around(d);
    g.a1[2 * d + 1] = 2 * r;
    g.a1[2 * r] = 2 * d + 1;
    const bool positive = m.sign_of(d) > 0;
    for (int j = 0; j < 2; ++j) {
      g.a2[2 * d + j] = 2 * d + 1 - j;
      g.a0[2 * d + j] = 2 * m.opposite(d) + (positive ? 1 - j : j);
    }
  }
  return g;
}

Realization realize(const Gem& g) {
  const int nf = g.size();
  if (nf % 2 != 0) throw Error(ErrorCode::BadInput, "gem must have an even number of flags");
  for (const auto* inv : {&g.a0, &g.a1, &g.a2})
    if (static_cast<int>(inv->size()) != nf || !is_fixed_point_free_involution(*inv))
      throw Error(ErrorCode::BadInput, "gem involutions must be fixed-point-free");

  std::vector<int> dart_of(nf, -1), side_of(nf, -1);
  std::vector<std::pair<int, int>> dart_flags;
  std::vector<int> rotation;
  for (int f0 = 0; f0 < nf; ++f0) {
    if (dart_of[f0] >= 0) continue;
    const int first = static_cast<int>(dart_flags.size());
    int f = f0;
    do {
      const int s1 = g.a2[f];
      const int d = static_cast<int>(dart_flags.size());
      if (dart_of[f] >= 0 || dart_of[s1] >= 0) throw Error(ErrorCode::BadInput, "malformed vertex orbit");
      dart_of[f] = dart_of[s1] = d;
      side_of[f] = 0;
      side_of[s1] = 1;
      dart_flags.emplace_back(f, s1);
      rotation.push_back(d + 1);
      f = g.a1[s1];
    } while (f != f0);
    rotation.back() = first;
  }

  const int n = static_cast<int>(dart_flags.size());
  std::vector<int> edge_inv(n);
  std::vector<int> signature;
  for (int d = 0; d < n; ++d) {
    const int across = g.a0[dart_flags[d].first];
    edge_inv[d] = dart_of[across];
    if (edge_inv[d] == d) throw Error(ErrorCode::BadInput, "gem edge with a single dart");
  }
  for (int d = 0; d < n; ++d) {
    if (d < edge_inv[d]) signature.push_back(side_of[g.a0[dart_flags[d].first]] == 1 ? 1 : -1);
  }

  Realization out{SurfaceMap(std::move(edge_inv), std::move(rotation), std::move(signature)), {}};
  out.gem_flag.resize(nf);
  for (int d = 0; d < n; ++d) {
    out.gem_flag[2 * d] = dart_flags[d].first;
    out.gem_flag[2 * d + 1] = dart_flags[d].second;
  }
  if (!out.map.well_formed()) throw Error(ErrorCode::BadInput, "gem does not realise a rotation system");
  return out;
}

std::vector<int> orbits_of(const std::vector<int>& x, const std::vector<int>& y) {
  const int n = static_cast<int>(x.size());
  std::vector<int> orbit(n, -1);
  int next = 0;
  std::vector<int> stack;
  for (int f = 0; f < n; ++f) {
    if (orbit[f] >= 0) continue;
    orbit[f] = next;
    stack.push_back(f);
    while (!stack.empty()) {
      const int a = stack.back();
      stack.pop_back();
      for (int b : {x[a], y[a]})
        if (orbit[b] < 0) {
          orbit[b] = next;
          stack.push_back(b);
        }
    }
    ++next;
  }
  return orbit;
}

SurfaceMap graph_dual(const SurfaceMap& m) {
  require_connected(m);
  Gem g = gem_of(m);
  std::swap(g.a0, g.a2);
  return realize(g).map;
}

namespace {

std::vector<std::vector<int>> gem_components(const Gem& g) {
  const int n = g.size();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (int f = 0; f < n; ++f) {
    if (comp[f] >= 0) continue;
    std::vector<int> members{f};
    comp[f] = static_cast<int>(out.size());
    for (std::size_t i = 0; i < members.size(); ++i) {
      const int a = members[i];
      for (int b : {g.a0[a], g.a1[a], g.a2[a]})
        if (comp[b] < 0) {
          comp[b] = comp[f];
          members.push_back(b);
        }
    }
    out.push_back(std::move(members));
  }
  return out;
}

// BFS relabelling from `start`; returns false as soon as the code exceeds `best`.
bool code_from(const Gem& g, std::span<const int> colour, int start,
               std::vector<int>& label, std::vector<int>& order, std::vector<int>& code,
               const std::vector<int>* best) {
  code.clear();
  order.clear();
  label[start] = 0;
  order.push_back(start);
  bool tied = best != nullptr;
  auto emit = [&](int value) {
    if (tied) {
      const int other = (*best)[code.size()];
      if (value > other) return false;
      if (value < other) tied = false;
    }
    code.push_back(value);
    return true;
  };
  bool ok = true;
  for (std::size_t i = 0; ok && i < order.size(); ++i) {
    const int f = order[i];
    if (!colour.empty() && !emit(colour[f])) ok = false;
    for (const auto* inv : {&g.a0, &g.a1, &g.a2}) {
      if (!ok) break;
      const int h = (*inv)[f];
      if (label[h] < 0) {
        label[h] = static_cast<int>(order.size());
        order.push_back(h);
      }
      if (!emit(label[h])) ok = false;
    }
  }
  for (int f : order) label[f] = -1;
  return ok;
}

}  // namespace

std::vector<int> canonical_code(const Gem& g, std::span<const int> colour) {
  std::vector<std::vector<int>> codes;
  std::vector<int> label(g.size(), -1), order, code;
  for (const auto& members : gem_components(g)) {
    int min_colour = 0;
    if (!colour.empty()) {
      min_colour = colour[members.front()];
      for (int f : members) min_colour = std::min(min_colour, colour[f]);
    }
    std::vector<int> best;
    for (int f : members) {
      if (!colour.empty() && colour[f] != min_colour) continue;
      if (code_from(g, colour, f, label, order, code,
                    best.empty() ? nullptr : &best))
        best = code;
    }
    best.insert(best.begin(), static_cast<int>(members.size()));
    codes.push_back(std::move(best));
  }
  std::sort(codes.begin(), codes.end());
  std::vector<int> out;
  for (const auto& c : codes) out.insert(out.end(), c.begin(), c.end());
  return out;
}

bool gem_isomorphic(const Gem& a, const Gem& b, std::span<const int> colour_a,
                    std::span<const int> colour_b) {
  if (a.size() != b.size() || colour_a.size() != colour_b.size()) return false;
  return canonical_code(a, colour_a) == canonical_code(b, colour_b);
}

bool map_isomorphic(const SurfaceMap& a, const SurfaceMap& b, int dart_limit) {
  for (const auto* m : {&a, &b}) {
    const auto report = validate_map(*m);
    if (!report.ok()) throw Error(ErrorCode::BadInput, report.violations.front());
    if (m->num_darts() > dart_limit)
      throw Error(ErrorCode::TooLarge, "isomorphism test limited to " + std::to_string(dart_limit) + " darts");
  }
  if (a.num_darts() != b.num_darts() || a.num_vertices() != b.num_vertices()) return false;
  return gem_isomorphic(gem_of(a), gem_of(b));
}

std::string to_dot(const SurfaceMap& m, std::string_view name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (int v = 0; v < m.num_vertices(); ++v) out << "  v" << v << ";\n";
  for (int e = 0; e < m.num_edges(); ++e) {
    const auto [d, o] = m.edge_darts(e);
    out << "  v" << m.vertex_of(d) << " -- v" << m.vertex_of(o);
    if (m.signature()[e] < 0) out << " [style=dashed]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace surftw
