#include "surftw/extremal_family.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>

namespace surftw {

Hypergraph grid(int n, int m) {
  if (n < 1 || m < 1) throw Error(ErrorCode::BadInput, "grid sides must be positive");
  std::vector<std::pair<int, int>> edges;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < m; ++c) {
      if (c + 1 < m) edges.emplace_back(r * m + c, r * m + c + 1);
      if (r + 1 < n) edges.emplace_back(r * m + c, (r + 1) * m + c);
    }
  return Hypergraph::from_graph(n * m, edges);
}

TreeDecomposition grid_path_decomposition(int n, int m) {
  if (n < 1 || m < 1) throw Error(ErrorCode::BadInput, "grid sides must be positive");
  const bool by_rows = m <= n;
  const int side = std::min(n, m);
  std::vector<int> order;
  if (by_rows) {
    order.resize(n * m);
    std::iota(order.begin(), order.end(), 0);
  } else {
    for (int c = 0; c < m; ++c)
      for (int r = 0; r < n; ++r) order.push_back(r * m + c);
  }
  TreeDecomposition td;
  const int total = n * m;
  if (total <= side + 1) {
    td.bags.push_back(order);
  } else {
    // Windows of side+1 consecutive vertices in sweep order.
    for (int s = 0; s + side < total; ++s) td.bags.emplace_back(order.begin() + s, order.begin() + s + side + 1);
  }
  for (auto& bag : td.bags) std::sort(bag.begin(), bag.end());
  for (int t = 1; t < td.num_nodes(); ++t) td.edges.emplace_back(t - 1, t);
  return td;
}

TreeDecomposition path_decomposition_from_order(const Hypergraph& h, const std::vector<int>& order) {
  const auto adj = h.primal_adjacency();
  const auto& vs = h.vertices();
  std::vector<int> pos(vs.size(), -1);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto it = std::lower_bound(vs.begin(), vs.end(), order[i]);
    if (it == vs.end() || *it != order[i]) throw Error(ErrorCode::BadInput, "order names an unknown vertex");
    pos[it - vs.begin()] = static_cast<int>(i);
  }
  if (std::count(pos.begin(), pos.end(), -1)) throw Error(ErrorCode::BadInput, "order must list every vertex");
  // last[x]: latest position of x or one of its neighbours.
  std::vector<int> last(vs.size());
  for (std::size_t x = 0; x < vs.size(); ++x) {
    last[x] = pos[x];
    for (int y : adj[x]) last[x] = std::max(last[x], pos[y]);
  }
  const int n = static_cast<int>(order.size());
  std::vector<std::vector<int>> starting(n);
  for (std::size_t x = 0; x < vs.size(); ++x) starting[pos[x]].push_back(static_cast<int>(x));
  TreeDecomposition td;
  std::set<std::pair<int, int>> live;  // (last, vertex index)
  for (int i = 0; i < n; ++i) {
    while (!live.empty() && live.begin()->first < i) live.erase(live.begin());
    for (int x : starting[i]) live.emplace(last[x], x);
    VertexSet bag;
    for (auto [l, x] : live) bag.push_back(vs[x]);
    std::sort(bag.begin(), bag.end());
    td.bags.push_back(std::move(bag));
    if (i > 0) td.edges.emplace_back(i - 1, i);
  }
  return td;
}

// ---------------------------------------------------------------------------
// Todinca graphs

TodincaSpec todinca_spec(int p, bool reversed) {
  if (p < 1) throw Error(ErrorCode::BadInput, "Todinca order must be positive");
  TodincaSpec s;
  s.p = p;
  s.ab.resize(p);
  std::iota(s.ab.begin(), s.ab.end(), 0);
  s.bc = s.ca = s.ab;
  if (reversed) std::reverse(s.bc.begin(), s.bc.end());
  return s;
}

namespace {

void require_spec(const TodincaSpec& s) {
  if (s.p < 1) throw Error(ErrorCode::BadInput, "Todinca order must be positive");
  for (const auto* link : {&s.ab, &s.bc, &s.ca}) {
    std::vector<int> sorted = *link;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> ident(s.p);
    std::iota(ident.begin(), ident.end(), 0);
    if (sorted != ident) throw Error(ErrorCode::BadInput, "linking must be a bijection on 0..p-1");
  }
}

int side_of(const TodincaSpec& s) { return 2 * s.p; }
// Column of x_{i+1} and x'_{i+1}.
int unprimed(int i) { return i; }
int primed(const TodincaSpec& s, int i) { return side_of(s) - 1 - i; }

// Linking edges as (grid, column) pairs: unprimed end of grid g to the primed
// end of grid g+1 (A→B, B→C, C→A).
std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> links(const TodincaSpec& s) {
  std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> out;
  const std::vector<int>* maps[3] = {&s.ab, &s.bc, &s.ca};
  for (int g = 0; g < 3; ++g)
    for (int i = 0; i < s.p; ++i) out.push_back({{g, unprimed(i)}, {(g + 1) % 3, primed(s, (*maps[g])[i])}});
  return out;
}

std::vector<std::pair<int, int>> todinca_edges(const TodincaSpec& s) {
  const int n = side_of(s);
  std::vector<std::pair<int, int>> edges;
  for (int g = 0; g < 3; ++g)
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        if (c + 1 < n) edges.emplace_back(todinca_vertex(s, g, r, c), todinca_vertex(s, g, r, c + 1));
        if (r + 1 < n) edges.emplace_back(todinca_vertex(s, g, r, c), todinca_vertex(s, g, r + 1, c));
      }
  for (const auto& [x, y] : links(s))
    edges.emplace_back(todinca_vertex(s, x.first, 0, x.second), todinca_vertex(s, y.first, 0, y.second));
  return edges;
}

}  // namespace

int todinca_vertex(const TodincaSpec& spec, int grid, int row, int col) {
  const int n = side_of(spec);
  if (grid < 0 || grid > 2 || row < 0 || row >= n || col < 0 || col >= n)
    throw Error(ErrorCode::BadInput, "Todinca vertex out of range");
  return grid * n * n + row * n + col;
}

Hypergraph todinca(const TodincaSpec& spec) {
  require_spec(spec);
  const int n = side_of(spec);
  return Hypergraph::from_graph(3 * n * n, todinca_edges(spec));
}

TreeDecomposition todinca_decomposition(const TodincaSpec& spec) {
  require_spec(spec);
  const int n = side_of(spec);
  const int p = spec.p;
  auto half = [&](int g) {
    VertexSet out;
    for (int i = 0; i < p; ++i) out.push_back(todinca_vertex(spec, g, 0, unprimed(i)));
    return out;
  };
  auto top = [&](int g) {
    VertexSet out;
    for (int c = 0; c < n; ++c) out.push_back(todinca_vertex(spec, g, 0, c));
    return out;
  };
  TreeDecomposition td;
  VertexSet centre;
  for (int g = 0; g < 3; ++g) {
    const auto h = half(g);
    centre.insert(centre.end(), h.begin(), h.end());
  }
  td.bags.push_back(centre);
  const auto sweep = grid_path_decomposition(n, n);
  for (int g = 0; g < 3; ++g) {
    // The primed half of grid g is linked to the unprimed half of grid g-1.
    VertexSet bag = top(g);
    const auto h = half((g + 2) % 3);
    bag.insert(bag.end(), h.begin(), h.end());
    const int joint = td.num_nodes();
    td.bags.push_back(bag);
    td.edges.emplace_back(0, joint);
    const int base = td.num_nodes();
    for (const auto& b : sweep.bags) {
      VertexSet mapped;
      for (int v : b) mapped.push_back(g * n * n + v);
      td.bags.push_back(mapped);
    }
    for (auto [x, y] : sweep.edges) td.edges.emplace_back(base + x, base + y);
    td.edges.emplace_back(joint, base);  // the first sweep bag holds the top row
  }
  for (auto& bag : td.bags) std::sort(bag.begin(), bag.end());
  return td;
}

Bramble crosses_bramble(const TodincaSpec& spec) {
  require_spec(spec);
  const int n = side_of(spec);
  Bramble b;
  for (const auto& [x, y] : links(spec)) {
    VertexSet column;
    for (int r = 0; r < n; ++r) {
      column.push_back(todinca_vertex(spec, x.first, r, x.second));
      column.push_back(todinca_vertex(spec, y.first, r, y.second));
    }
    for (int r = 0; r < n; ++r) {
      VertexSet cross = column;
      for (int c = 0; c < n; ++c) cross.push_back(todinca_vertex(spec, x.first, r, c));
      std::sort(cross.begin(), cross.end());
      cross.erase(std::unique(cross.begin(), cross.end()), cross.end());
      b.elements.push_back(std::move(cross));
    }
  }
  return b;
}

// ---------------------------------------------------------------------------
// Gadgets and the embedded graphs G_{k,p}

std::vector<std::pair<int, int>> gadget_rungs(GadgetKind kind, int size) {
  if (size < 1) throw Error(ErrorCode::BadInput, "gadget size must be positive");
  const int l = size;
  std::vector<std::pair<int, int>> out;
  switch (kind) {
    case GadgetKind::Ladder:
      for (int i = 0; i < l; ++i) out.emplace_back(i, i);
      break;
    case GadgetKind::Crosscap:
      for (int i = 0; i < l; ++i) out.emplace_back(i, i);
      for (int i = 0; i < l; ++i) out.emplace_back(l + i, 2 * l - 1 - i);
      for (int i = 2 * l; i < 3 * l; ++i) out.emplace_back(i, i);
      break;
    case GadgetKind::Handle:
      for (int i = 0; i < l; ++i) out.emplace_back(i, i);
      for (int i = 0; i < 2 * l; ++i) out.emplace_back(l + i, 2 * l + i);
      for (int i = 0; i < l; ++i) out.emplace_back(3 * l + i, l + i);
      for (int i = 4 * l; i < 5 * l; ++i) out.emplace_back(i, i);
      break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Rung i of a gadget that leaves the sphere: the last l rungs of a handle
// listed above, or the reversed middle block of a crosscap.
bool routed(GadgetKind kind, int l, int i) {
  if (kind == GadgetKind::Handle) return i >= 3 * l && i < 4 * l;
  if (kind == GadgetKind::Crosscap) return i >= l && i < 2 * l;
  return false;
}

enum Slot { Right, Up, Left, Down };

}  // namespace

GkpEmbedding build_gkp(int k, int p, bool crosscap) {
  if (k < 1 || p < 1) throw Error(ErrorCode::BadInput, "G_{k,p} needs k, p ≥ 1");
  GkpEmbedding out;
  out.k = k;
  out.p = p;
  out.crosscap = crosscap;
  out.outside_construction_range = p < 2;
  const GadgetKind kind = crosscap ? GadgetKind::Crosscap : GadgetKind::Handle;
  const int block = crosscap ? 3 * p : 5 * p;
  out.l = k * block;
  const int l = out.l;

  TodincaSpec spec = todinca_spec(l);
  std::vector<char> is_routed(l, 0);
  const auto rungs = gadget_rungs(kind, p);
  for (int g = 0; g < k; ++g)
    for (auto [i, j] : rungs) {
      spec.bc[g * block + i] = g * block + j;
      is_routed[g * block + i] = routed(kind, p, i);
    }
  out.spec = spec;

  const auto edges = todinca_edges(spec);
  const int n = side_of(spec);
  const int nv = 3 * n * n;
  // Slots of each dart: grid edges are horizontal (Right/Left) or vertical
  // (Down/Up); links leave both top-row ends upwards.
  std::vector<std::array<int, 4>> slot(nv);
  for (auto& s : slot) s.fill(-1);
  std::vector<int> signs(edges.size(), 1);
  const int grid_edges = 3 * 2 * n * (n - 1);
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    const auto [u, v] = edges[e];
    if (e < grid_edges) {
      const bool horizontal = v == u + 1;
      slot[u][horizontal ? Right : Down] = 2 * e;
      slot[v][horizontal ? Left : Up] = 2 * e + 1;
    } else {
      slot[u][Up] = 2 * e;
      slot[v][Up] = 2 * e + 1;
      const int link = e - grid_edges;
      if (link >= l && link < 2 * l && is_routed[link - l]) {
        out.routed_edges.push_back(e);
        if (crosscap) signs[e] = -1;
      }
    }
  }
  std::vector<std::vector<int>> cycles(nv);
  for (int v = 0; v < nv; ++v)
    for (int d : slot[v])
      if (d >= 0) cycles[v].push_back(d);
  out.edges = edges;
  out.map = from_cycles(cycles, signs);
  out.gamma = EmbeddedHypergraph::from_graph_map(out.map);

  const int expected = crosscap ? k : 2 * k;
  if (euler_genus(out.map) != expected || is_orientable(out.map) == crosscap)
    throw Error(ErrorCode::Internal, "G_{k,p} embedding has Euler genus " + std::to_string(euler_genus(out.map)));
  return out;
}

// ---------------------------------------------------------------------------
// The dual of Γ_{k,p}

DualDecompositionReport dual_decomposition_gkp(int k, int p, bool crosscap) {
  const GkpEmbedding gkp = build_gkp(k, p, crosscap);
  const SurfaceMap& m = gkp.map;
  const TodincaSpec& spec = gkp.spec;
  const int l = gkp.l;
  const int n = side_of(spec);
  const FaceSet faces = trace_faces(m);

  DualDecompositionReport r;
  r.k = k;
  r.p = p;
  r.l = l;
  r.crosscap = crosscap;
  r.euler_genus = euler_genus(m);
  r.faces = faces.size();
  r.outside_construction_range = gkp.outside_construction_range;

  auto mismatch = [](const std::string& what) { throw Error(ErrorCode::StructureMismatch, what); };
  std::map<std::pair<int, int>, int> dart_of;
  for (int e = 0; e < static_cast<int>(gkp.edges.size()); ++e) {
    dart_of[gkp.edges[e]] = 2 * e;
    dart_of[{gkp.edges[e].second, gkp.edges[e].first}] = 2 * e + 1;
  }
  auto dart_towards = [&](int u, int v) {
    const auto it = dart_of.find({u, v});
    if (it == dart_of.end()) mismatch("missing grid edge");
    return it->second;
  };
  auto vtx = [&](int g, int row, int col) { return todinca_vertex(spec, g, row, col); };
  auto face = [&](int d) { return faces.face_of_corner[d]; };
  // Cell (row, col) of grid g: the corner from the Down dart to the Right dart.
  auto cell = [&](int g, int row, int col) { return face(dart_towards(vtx(g, row, col), vtx(g, row + 1, col))); };
  // Face above the top-row edge between columns col and col+1.
  auto above = [&](int g, int col) { return face(dart_towards(vtx(g, 0, col), vtx(g, 0, col + 1))); };

  enum Kind { Unknown, Cell, PathAB, PathAC, Gadget, In, Out };
  std::vector<int> kind(faces.size(), Unknown);
  auto claim = [&](int f, int what, const char* name) {
    if (kind[f] != Unknown && kind[f] != what) mismatch(std::string("face claimed twice: ") + name);
    kind[f] = what;
  };

  std::vector<std::vector<int>> cells(3);
  for (int g = 0; g < 3; ++g)
    for (int row = 0; row + 1 < n; ++row)
      for (int col = 0; col + 1 < n; ++col) {
        const int f = cell(g, row, col);
        if (kind[f] == Cell) mismatch("two grid cells share a face");
        claim(f, Cell, "cell");
        cells[g].push_back(f);
      }

  r.v_in = above(0, l - 1);
  for (int g = 0; g < 3; ++g)
    if (above(g, l - 1) != r.v_in) mismatch("middle top edges do not share the central face");
  claim(r.v_in, In, "v_in");
  // v_out: the corner at a bottom-left vertex from Up back to Right.
  r.v_out = face(dart_towards(vtx(0, n - 1, 0), vtx(0, n - 2, 0)));
  claim(r.v_out, Out, "v_out");
  for (int g = 0; g < 3; ++g)
    for (int i = 0; i + 1 < n; ++i) {
      // Outer sides: below the bottom row and beside the side columns.
      if (face(dart_towards(vtx(g, n - 1, i + 1), vtx(g, n - 1, i))) != r.v_out ||
          face(dart_towards(vtx(g, i + 1, 0), vtx(g, i, 0))) != r.v_out ||
          face(dart_towards(vtx(g, i, n - 1), vtx(g, i + 1, n - 1))) != r.v_out)
        mismatch("grid boundary does not lie on the outer face");
    }

  // Ladder faces: above the unprimed half of A and the primed half of B form
  // P_AB; the primed half of A and the unprimed half of C form P_AC.
  std::vector<int> p_ab, p_ac;
  for (int i = 0; i + 1 < l; ++i) {
    const int ab = above(0, i);
    const int ac = above(0, n - 2 - i);
    if (above(1, n - 2 - i) != ab) mismatch("A-B ladder face is not shared by A and B");
    if (above(2, i) != ac) mismatch("A-C ladder face is not shared by A and C");
    claim(ab, PathAB, "P_AB");
    claim(ac, PathAC, "P_AC");
    p_ab.push_back(ab);
    p_ac.push_back(ac);
  }
  std::vector<int> gadget;
  for (int f = 0; f < faces.size(); ++f)
    if (kind[f] == Unknown) {
      kind[f] = Gadget;
      gadget.push_back(f);
    }

  r.grid_vertices = static_cast<int>(cells[0].size() + cells[1].size() + cells[2].size());
  r.path_vertices = static_cast<int>(p_ab.size() + p_ac.size());
  r.gadget_vertices = static_cast<int>(gadget.size());
  if (r.grid_vertices != 3 * (2 * l - 1) * (2 * l - 1)) mismatch("grid vertex count");
  if (r.path_vertices != 2 * (l - 1)) mismatch("ladder path vertex count");
  if (r.gadget_vertices != l - r.euler_genus - 1)
    mismatch("gadget vertex count " + std::to_string(r.gadget_vertices) + ", expected " +
             std::to_string(l - r.euler_genus - 1));

  // Γ*: one edge per edge of Γ between the faces on its two sides.
  std::set<std::pair<int, int>> dual_edges;
  for (int e = 0; e < m.num_edges(); ++e) {
    const int d = m.edge_darts(e).first;
    const int f1 = face(d), f2 = face(m.prev_around(d));
    if (f1 != f2) dual_edges.emplace(std::min(f1, f2), std::max(f1, f2));
  }
  {
    std::set<int> a_cells(cells[0].begin(), cells[0].end());
    for (auto [f1, f2] : dual_edges)
      if ((kind[f1] == Gadget && a_cells.count(f2)) || (kind[f2] == Gadget && a_cells.count(f1)))
        mismatch("gadget vertex adjacent to grid A");
  }

  std::vector<std::pair<int, int>> all_edges(dual_edges.begin(), dual_edges.end());
  std::vector<std::pair<int, int>> inner_edges;
  for (auto [f1, f2] : all_edges)
    if (f1 != r.v_out && f2 != r.v_out) inner_edges.emplace_back(f1, f2);
  r.dual = Hypergraph::from_graph(faces.size(), all_edges);
  {
    VertexSet vs;
    for (int f = 0; f < faces.size(); ++f)
      if (f != r.v_out) vs.push_back(f);
    std::vector<HyperEdge> hes;
    for (std::size_t i = 0; i < inner_edges.size(); ++i)
      hes.push_back({{static_cast<int>(i)}, {inner_edges[i].first, inner_edges[i].second}});
    r.dual_minus_out = Hypergraph(vs, hes);
  }

  // Central bag, then per grid: all of its outside neighbours, then a row
  // sweep of its cells.
  TreeDecomposition td;
  VertexSet centre = p_ab;
  centre.insert(centre.end(), p_ac.begin(), p_ac.end());
  centre.insert(centre.end(), gadget.begin(), gadget.end());
  centre.push_back(r.v_in);
  std::sort(centre.begin(), centre.end());
  td.bags.push_back(centre);
  std::vector<std::vector<int>> adj(faces.size());
  for (auto [f1, f2] : inner_edges) {
    adj[f1].push_back(f2);
    adj[f2].push_back(f1);
  }
  for (int g = 0; g < 3; ++g) {
    std::set<int> own(cells[g].begin(), cells[g].end());
    VertexSet boundary;
    for (int c : cells[g])
      for (int x : adj[c])
        if (!own.count(x)) boundary.push_back(x);
    std::sort(boundary.begin(), boundary.end());
    boundary.erase(std::unique(boundary.begin(), boundary.end()), boundary.end());
    for (int x : boundary)
      if (!std::binary_search(centre.begin(), centre.end(), x)) mismatch("grid cell adjacent outside the centre bag");
    // Local graph: the grid cells plus their neighbours, ordered boundary first.
    VertexSet local(boundary.begin(), boundary.end());
    local.insert(local.end(), cells[g].begin(), cells[g].end());
    std::sort(local.begin(), local.end());
    std::vector<HyperEdge> hes;
    for (auto [f1, f2] : inner_edges)
      if ((own.count(f1) || own.count(f2)) && std::binary_search(local.begin(), local.end(), f1) &&
          std::binary_search(local.begin(), local.end(), f2))
        hes.push_back({{static_cast<int>(hes.size())}, {f1, f2}});
    std::vector<int> order = boundary;
    order.insert(order.end(), cells[g].begin(), cells[g].end());
    const auto sweep = path_decomposition_from_order(Hypergraph(local, hes), order);
    // Keep the bags from the first cell on and put the whole boundary in front.
    const int first = static_cast<int>(boundary.size());
    const int joint = td.num_nodes();
    td.bags.push_back(boundary);
    td.edges.emplace_back(0, joint);
    for (int t = first; t < sweep.num_nodes(); ++t) {
      td.bags.push_back(sweep.bags[t]);
      td.edges.emplace_back(t == first ? joint : td.num_nodes() - 2, td.num_nodes() - 1);
    }
  }
  for (auto& bag : td.bags) std::sort(bag.begin(), bag.end());
  const auto check = validate_td(r.dual_minus_out, td);
  if (!check.ok()) throw Error(ErrorCode::Internal, "dual decomposition is invalid: " + check.violations.front());
  r.td_minus_out = td;
  r.width_minus_out = width(td);

  for (auto& bag : td.bags) {
    bag.push_back(r.v_out);
    std::sort(bag.begin(), bag.end());
  }
  const auto lifted = validate_td(r.dual, td);
  if (!lifted.ok()) throw Error(ErrorCode::Internal, "lifted dual decomposition is invalid: " + lifted.violations.front());
  r.td = std::move(td);
  r.width = width(r.td);
  r.target = 3 * l - 2 - r.euler_genus;
  r.lower_bound = 3 * l - 2 - r.euler_genus;
  return r;
}

}  // namespace surftw
