#include "surftw/embedded_hypergraph.hpp"

#include <algorithm>
#include <set>

namespace surftw {

EmbeddedHypergraph::EmbeddedHypergraph(SurfaceMap map, std::vector<VertexClass> vclass,
                                       std::vector<int> element_id, std::vector<EdgeLabel> edge_label,
                                       std::vector<int> non_disc_faces)
    : map_(std::move(map)), vclass_(std::move(vclass)), non_disc_faces_(std::move(non_disc_faces)) {
  const auto report = validate_map(map_);
  if (!report.ok()) throw Error(ErrorCode::BadInput, report.violations.front());
  if (!map_.connected()) throw Error(ErrorCode::Disconnected, "incidence map is not connected");
  if (static_cast<int>(vclass_.size()) != map_.num_vertices())
    throw Error(ErrorCode::BadInput, "vclass must list one class per vertex orbit");
  for (int d = 0; d < map_.num_darts(); ++d)
    if (vclass_[map_.vertex_of(d)] == vclass_[map_.vertex_of(map_.opposite(d))])
      throw Error(ErrorCode::BadInput, "incidence edge does not join an element-vertex to a centre");
  for (int v = 0; v < map_.num_vertices(); ++v)
    (vclass_[v] == VertexClass::Centre ? centres_ : elements_).push_back(v);
  if (centres_.empty()) throw Error(ErrorCode::NoEdges, "hypergraph has no edges");

  if (element_id.empty()) {
    element_id_.resize(elements_.size());
    for (std::size_t i = 0; i < elements_.size(); ++i) element_id_[i] = static_cast<int>(i);
  } else {
    if (element_id.size() != elements_.size())
      throw Error(ErrorCode::BadInput, "element_id must list one id per element-vertex");
    if (std::set<int>(element_id.begin(), element_id.end()).size() != element_id.size())
      throw Error(ErrorCode::BadInput, "element ids must be distinct");
    element_id_ = std::move(element_id);
  }
  if (edge_label.empty()) {
    edge_label_.resize(centres_.size());
    for (std::size_t i = 0; i < centres_.size(); ++i) edge_label_[i] = {static_cast<int>(i)};
  } else {
    if (edge_label.size() != centres_.size())
      throw Error(ErrorCode::BadInput, "edge_label must list one label per centre");
    for (auto& label : edge_label) {
      std::sort(label.begin(), label.end());
      if (label.empty()) throw Error(ErrorCode::BadInput, "empty edge label");
    }
    if (std::set<EdgeLabel>(edge_label.begin(), edge_label.end()).size() != edge_label.size())
      throw Error(ErrorCode::BadInput, "edge labels must be distinct");
    edge_label_ = std::move(edge_label);
  }
  faces_ = trace_faces(map_);
  for (int f : non_disc_faces_)
    if (f < 0 || f >= faces_.size()) throw Error(ErrorCode::BadInput, "non-disc face index out of range");
}

EmbeddedHypergraph EmbeddedHypergraph::from_graph_map(const SurfaceMap& g) {
  const auto report = validate_map(g, true);
  if (!report.ok()) throw Error(ErrorCode::BadInput, report.violations.front());
  const int n = g.num_darts();
  std::vector<int> edge_inv(2 * n), rotation(2 * n), signature(n);
  for (int d = 0; d < n; ++d) {
    edge_inv[d] = n + d;
    edge_inv[n + d] = d;
    rotation[d] = g.next_around(d);
    rotation[n + d] = n + g.opposite(d);
    signature[d] = d < g.opposite(d) ? g.sign_of(d) : 1;
  }
  SurfaceMap m(std::move(edge_inv), std::move(rotation), std::move(signature));
  std::vector<VertexClass> vclass(m.num_vertices(), VertexClass::Element);
  for (int v = g.num_vertices(); v < m.num_vertices(); ++v) vclass[v] = VertexClass::Centre;
  return EmbeddedHypergraph(std::move(m), std::move(vclass));
}

int EmbeddedHypergraph::element_id(int v) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), v);
  if (it == elements_.end() || *it != v) throw Error(ErrorCode::BadInput, "not an element-vertex");
  return element_id_[it - elements_.begin()];
}

const EdgeLabel& EmbeddedHypergraph::edge_label(int v) const {
  auto it = std::lower_bound(centres_.begin(), centres_.end(), v);
  if (it == centres_.end() || *it != v) throw Error(ErrorCode::BadInput, "not a centre");
  return edge_label_[it - centres_.begin()];
}

namespace {

int rank_in(const std::vector<int>& sorted, int v) {
  return static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin());
}

int face_of_flag(const SurfaceMap& m, const FaceSet& faces, int flag) {
  const Dart d = flag / 2;
  return faces.face_of_corner[flag % 2 == 1 ? d : m.prev_around(d)];
}

}  // namespace

Hypergraph underlying_hypergraph(const EmbeddedHypergraph& l) {
  const auto& m = l.map();
  std::vector<HyperEdge> edges;
  for (int c : l.centres()) {
    VertexSet ends;
    for (Dart d : m.darts_at(c)) ends.push_back(l.element_id(m.vertex_of(m.opposite(d))));
    edges.push_back({l.edge_label(c), ends});
  }
  return Hypergraph(l.element_ids(), std::move(edges));
}

Hypergraph face_hypergraph(const EmbeddedHypergraph& l) {
  const auto& m = l.map();
  VertexSet vertices(l.num_faces());
  for (int f = 0; f < l.num_faces(); ++f) vertices[f] = f;
  std::vector<HyperEdge> edges;
  for (int c : l.centres()) {
    VertexSet ends;
    for (Dart d : m.darts_at(c)) ends.push_back(l.faces().face_of_corner[d]);
    edges.push_back({l.edge_label(c), ends});
  }
  return Hypergraph(std::move(vertices), std::move(edges));
}

int euler_genus(const EmbeddedHypergraph& l) {
  return 2 - l.map().num_vertices() + l.map().num_edges() - l.num_faces();
}

bool is_two_cell(const EmbeddedHypergraph& l) { return l.non_disc_faces().empty(); }

int alpha_max(const EmbeddedHypergraph& l) { return underlying_hypergraph(l).max_edge_size(); }

std::vector<int> face_border(const EmbeddedHypergraph& l, const EdgePartition& mu) {
  const int ne = static_cast<int>(l.centres().size());
  std::vector<int> part(ne, -1);
  for (int p = 0; p < static_cast<int>(mu.size()); ++p) {
    if (mu[p].empty()) throw Error(ErrorCode::BadPartition, "partition has an empty part");
    for (int e : mu[p]) {
      if (e < 0 || e >= ne) throw Error(ErrorCode::BadPartition, "unknown edge index");
      if (part[e] >= 0) throw Error(ErrorCode::BadPartition, "edge appears in two parts");
      part[e] = p;
    }
  }
  if (std::find(part.begin(), part.end(), -1) != part.end())
    throw Error(ErrorCode::BadPartition, "partition does not cover every edge");

  const auto& m = l.map();
  std::vector<std::set<int>> touched(l.num_faces());
  for (int i = 0; i < ne; ++i)
    for (Dart d : m.darts_at(l.centres()[i])) touched[l.faces().face_of_corner[d]].insert(part[i]);
  std::vector<int> out;
  for (int f = 0; f < l.num_faces(); ++f)
    if (touched[f].size() >= 2) out.push_back(f);
  return out;
}

Hypermap hypermap_of(const EmbeddedHypergraph& l) {
  const auto& m = l.map();
  const Gem g = gem_of(m);
  Hypermap hm;
  std::vector<int> index(g.size(), -1);
  for (Dart d = 0; d < m.num_darts(); ++d) {
    if (l.is_centre(m.vertex_of(d))) continue;
    for (int j = 0; j < 2; ++j) {
      index[2 * d + j] = hm.size() + j;
    }
    for (int j = 0; j < 2; ++j) {
      hm.gem_flag.push_back(2 * d + j);
      hm.s0.push_back(-1);
      hm.s1.push_back(-1);
      hm.s2.push_back(-1);
    }
  }
  for (int h = 0; h < hm.size(); ++h) {
    const int f = hm.gem_flag[h];
    hm.s1[h] = index[g.a1[f]];
    hm.s2[h] = index[g.a2[f]];
    hm.s0[h] = index[g.a0[g.a1[g.a0[f]]]];
    const Dart d = f / 2;
    hm.element.push_back(rank_in(l.element_vertices(), m.vertex_of(d)));
    hm.centre.push_back(rank_in(l.centres(), m.vertex_of(m.opposite(d))));
    hm.face.push_back(face_of_flag(m, l.faces(), f));
  }
  return hm;
}

Gem layered_gem(const std::vector<int>& layer0, const std::vector<int>& layer1,
                const std::vector<int>& side) {
  const int n = static_cast<int>(side.size());
  Gem g;
  g.a0.resize(2 * n);
  g.a1.resize(2 * n);
  g.a2.resize(2 * n);
  for (int h = 0; h < n; ++h) {
    g.a0[2 * h] = 2 * h + 1;
    g.a0[2 * h + 1] = 2 * h;
    g.a1[2 * h] = 2 * layer0[h];
    g.a1[2 * h + 1] = 2 * layer1[h] + 1;
    g.a2[2 * h] = 2 * side[h];
    g.a2[2 * h + 1] = 2 * side[h] + 1;
  }
  return g;
}

EmbeddedHypergraph hyper_dual(const EmbeddedHypergraph& l) {
  if (!is_two_cell(l)) throw Error(ErrorCode::NotTwoCell, "dual requires a 2-cell embedding");
  const Hypermap hm = hypermap_of(l);
  Realization r = realize(layered_gem(hm.s1, hm.s2, hm.s0));
  const auto& m = r.map;
  std::vector<VertexClass> vclass(m.num_vertices());
  std::vector<int> ids;
  std::vector<EdgeLabel> labels;
  for (int v = 0; v < m.num_vertices(); ++v) {
    const int flag = r.gem_flag[2 * m.darts_at(v).front()];
    const int h = flag / 2;
    if (flag % 2 == 0) {
      vclass[v] = VertexClass::Element;
      ids.push_back(hm.face[h]);
    } else {
      vclass[v] = VertexClass::Centre;
      labels.push_back(l.edge_labels()[hm.centre[h]]);
    }
  }
  return EmbeddedHypergraph(std::move(r.map), std::move(vclass), std::move(ids), std::move(labels));
}

RadialEmbedding radial(const EmbeddedHypergraph& l) {
  if (l.centres().empty()) throw Error(ErrorCode::NoEdges, "radial embedding needs at least one edge");
  const Hypermap hm = hypermap_of(l);
  Realization r = realize(layered_gem(hm.s2, hm.s0, hm.s1));
  RadialEmbedding out;
  const auto& m = r.map;
  for (int v = 0; v < m.num_vertices(); ++v) {
    const int flag = r.gem_flag[2 * m.darts_at(v).front()];
    const int h = flag / 2;
    if (flag % 2 == 0) {
      out.vkind.push_back(RadialKind::LambdaVertex);
      out.vertex_ref.push_back(l.element_ids()[hm.element[h]]);
    } else {
      out.vkind.push_back(RadialKind::FaceVertex);
      out.vertex_ref.push_back(hm.face[h]);
    }
  }
  const FaceSet faces = trace_faces(m);
  for (const auto& walk : faces.faces) {
    const Dart c = corner_of(m, walk.front());
    out.face_of.push_back(hm.centre[r.gem_flag[2 * c + 1] / 2]);
  }
  out.map = std::move(r.map);
  return out;
}

bool radial_isomorphic(const RadialEmbedding& a, const RadialEmbedding& b) {
  return gem_isomorphic(gem_of(a.map), gem_of(b.map));
}

}  // namespace surftw
