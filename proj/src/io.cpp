#include "surftw/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace surftw {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::BadInput, what); }

template <class T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception& e) {
    bad(std::string("field \"") + key + "\": " + e.what());
  }
}

Json map_fields(const SurfaceMap& m) {
  return Json{{"darts", m.num_darts()},
              {"edge_inv", m.edge_inv()},
              {"rotation", m.rotation()},
              {"signature", m.signature()}};
}

}  // namespace

Json to_json(const SurfaceMap& m) { return map_fields(m); }

Json to_json(const EmbeddedHypergraph& l) {
  Json j = map_fields(l.map());
  std::vector<std::string> vclass;
  for (auto c : l.vclass()) vclass.emplace_back(c == VertexClass::Element ? "element" : "centre");
  j["vclass"] = vclass;
  bool default_ids = true;
  for (std::size_t i = 0; i < l.element_ids().size(); ++i) default_ids = default_ids && l.element_ids()[i] == int(i);
  if (!default_ids) j["element_id"] = l.element_ids();
  bool default_labels = true;
  for (std::size_t i = 0; i < l.edge_labels().size(); ++i)
    default_labels = default_labels && l.edge_labels()[i] == EdgeLabel{int(i)};
  if (!default_labels) j["edge_label"] = l.edge_labels();
  if (!l.non_disc_faces().empty()) j["non_disc_faces"] = l.non_disc_faces();
  return j;
}

Json to_json(const RadialEmbedding& r) {
  Json j = map_fields(r.map);
  std::vector<std::string> kinds;
  for (auto k : r.vkind) kinds.emplace_back(k == RadialKind::LambdaVertex ? "lambda" : "face");
  j["vkind"] = kinds;
  j["vertex_ref"] = r.vertex_ref;
  j["face_of"] = r.face_of;
  return j;
}

Json to_json(const Hypergraph& h) {
  Json edges = Json::array();
  for (const auto& e : h.edges()) edges.push_back({{"label", e.label}, {"ends", e.ends}});
  return {{"vertices", h.vertices()}, {"edges", edges}};
}

Json to_json(const PartitioningTree& t) {
  Json edges = Json::array(), labels = Json::array();
  for (auto [u, v] : t.edges) edges.push_back({u, v});
  for (const auto& [node, label] : t.leaf_label) labels.push_back({{"node", node}, {"label", label}});
  return {{"nodes", t.num_nodes}, {"edges", edges}, {"leaf_label", labels}};
}

Json to_json(const TreeDecomposition& td) {
  Json edges = Json::array();
  for (auto [u, v] : td.edges) edges.push_back({u, v});
  return {{"bags", td.bags}, {"edges", edges}};
}

Json to_json(const Bramble& b) { return {{"elements", b.elements}}; }

Json to_json(const NodeCheck& n) {
  return {{"node", n.node},
          {"case", std::string(to_string(n.kind))},
          {"x", n.x.size()},
          {"x_star", n.x_star.size()},
          {"ok", n.ok}};
}

Json to_json(const BoundReport& r) {
  Json nodes = Json::array();
  for (const auto& n : r.nodes) nodes.push_back(to_json(n));
  Json transcript = Json::array();
  for (const auto& s : r.transcript)
    transcript.push_back({{"depth", s.depth}, {"vertices", s.vertices}, {"edges", s.edges}, {"step", s.step}});
  Json j{{"tw", r.tw_lambda},
         {"tw_dual_tree", r.tw_dual_tree},
         {"k", r.k},
         {"orientable", r.orientable},
         {"alpha_dual", r.alpha_dual},
         {"bound", r.bound},
         {"nodes", nodes},
         {"nodes_ok", r.nodes_ok},
         {"verdict", r.pass ? "PASS" : "FAIL"},
         {"tight", r.tight},
         {"ptree", to_json(r.ptree)},
         {"transcript", transcript}};
  j["tw_dual"] = r.tw_dual ? Json(*r.tw_dual) : Json(nullptr);
  j["simultaneous_optimal"] = r.simultaneous_optimal ? Json(*r.simultaneous_optimal) : Json(nullptr);
  return j;
}

Json to_json(const FuzzSummary& s) {
  Json failures = Json::array();
  for (const auto& f : s.failures) failures.push_back({{"reason", f.reason}, {"instance", to_json(f.instance)}});
  return {{"enumerated", s.enumerated},
          {"random", s.random},
          {"checked", s.checked},
          {"symmetric_checked", s.symmetric_checked},
          {"tight", s.tight},
          {"simultaneous_optimal", s.simultaneous_optimal},
          {"genus_histogram", s.genus_histogram},
          {"violations", s.failures.size()},
          {"failures", failures}};
}

Json to_json(const DualDecompositionReport& r) {
  return {{"k", r.k},
          {"p", r.p},
          {"l", r.l},
          {"crosscap", r.crosscap},
          {"euler_genus", r.euler_genus},
          {"faces", r.faces},
          {"grid_vertices", r.grid_vertices},
          {"path_vertices", r.path_vertices},
          {"gadget_vertices", r.gadget_vertices},
          {"width_minus_out", r.width_minus_out},
          {"width", r.width},
          {"target", r.target},
          {"lower_bound", r.lower_bound},
          {"outside_construction_range", r.outside_construction_range}};
}

SurfaceMap map_from_json(const Json& j) {
  const int darts = field<int>(j, "darts");
  SurfaceMap m(field<std::vector<int>>(j, "edge_inv"), field<std::vector<int>>(j, "rotation"),
               field<std::vector<int>>(j, "signature"));
  if (m.num_darts() != darts) bad("\"darts\" disagrees with the dart arrays");
  const auto report = validate_map(m);
  if (!report.ok()) bad(report.violations.front());
  return m;
}

EmbeddedHypergraph embedded_from_json(const Json& j) {
  SurfaceMap m = map_from_json(j);
  std::vector<VertexClass> vclass;
  for (const auto& s : field<std::vector<std::string>>(j, "vclass")) {
    if (s == "element") vclass.push_back(VertexClass::Element);
    else if (s == "centre") vclass.push_back(VertexClass::Centre);
    else bad("vclass entries are \"element\" or \"centre\"");
  }
  std::vector<int> ids;
  std::vector<EdgeLabel> labels;
  std::vector<int> marks;
  if (j.contains("element_id")) ids = field<std::vector<int>>(j, "element_id");
  if (j.contains("edge_label")) labels = field<std::vector<EdgeLabel>>(j, "edge_label");
  if (j.contains("non_disc_faces")) marks = field<std::vector<int>>(j, "non_disc_faces");
  return EmbeddedHypergraph(std::move(m), std::move(vclass), std::move(ids), std::move(labels), std::move(marks));
}

Hypergraph hypergraph_from_json(const Json& j) {
  std::vector<HyperEdge> edges;
  const auto raw = j.contains("edges") ? j.at("edges") : Json();
  if (!raw.is_array()) bad("missing field \"edges\"");
  for (const auto& e : raw) {
    HyperEdge h{field<EdgeLabel>(e, "label"), field<VertexSet>(e, "ends")};
    std::sort(h.label.begin(), h.label.end());
    std::sort(h.ends.begin(), h.ends.end());
    edges.push_back(std::move(h));
  }
  auto vertices = field<VertexSet>(j, "vertices");
  std::sort(vertices.begin(), vertices.end());
  try {
    return Hypergraph(std::move(vertices), std::move(edges));
  } catch (const Error& e) {
    bad(e.what());
  }
}

PartitioningTree ptree_from_json(const Json& j) {
  PartitioningTree t;
  t.num_nodes = field<int>(j, "nodes");
  for (const auto& e : field<std::vector<std::vector<int>>>(j, "edges")) {
    if (e.size() != 2) bad("tree edges are pairs");
    t.edges.emplace_back(e[0], e[1]);
  }
  const auto raw = j.at("leaf_label");
  for (const auto& l : raw) t.leaf_label.emplace_back(field<int>(l, "node"), field<EdgeLabel>(l, "label"));
  return t;
}

TreeDecomposition td_from_json(const Json& j) {
  TreeDecomposition td;
  td.bags = field<std::vector<VertexSet>>(j, "bags");
  for (auto& bag : td.bags) std::sort(bag.begin(), bag.end());
  for (const auto& e : field<std::vector<std::vector<int>>>(j, "edges")) {
    if (e.size() != 2) bad("tree edges are pairs");
    td.edges.emplace_back(e[0], e[1]);
  }
  return td;
}

Bramble bramble_from_json(const Json& j) {
  Bramble b{field<std::vector<VertexSet>>(j, "elements")};
  for (auto& x : b.elements) std::sort(x.begin(), x.end());
  return b;
}

Hypergraph any_hypergraph_from_json(const Json& j) {
  if (j.contains("vclass")) return underlying_hypergraph(embedded_from_json(j));
  if (j.contains("darts")) return underlying_hypergraph(EmbeddedHypergraph::from_graph_map(map_from_json(j)));
  return hypergraph_from_json(j);
}

std::string to_pace_graph(const Hypergraph& h) {
  const auto adj = h.primal_adjacency();
  std::ostringstream out;
  int edges = 0;
  for (std::size_t x = 0; x < adj.size(); ++x)
    for (int y : adj[x]) edges += y > static_cast<int>(x);
  out << "p tw " << h.num_vertices() << ' ' << edges << '\n';
  for (std::size_t x = 0; x < adj.size(); ++x)
    for (int y : adj[x])
      if (y > static_cast<int>(x)) out << x + 1 << ' ' << y + 1 << '\n';
  return out.str();
}

std::string to_pace_td(const TreeDecomposition& td, const Hypergraph& h) {
  std::ostringstream out;
  out << "s td " << td.num_nodes() << ' ' << width(td) + 1 << ' ' << h.num_vertices() << '\n';
  for (int t = 0; t < td.num_nodes(); ++t) {
    out << "b " << t + 1;
    for (int v : td.bags[t]) {
      const auto it = std::lower_bound(h.vertices().begin(), h.vertices().end(), v);
      out << ' ' << (it - h.vertices().begin()) + 1;
    }
    out << '\n';
  }
  for (auto [a, b] : td.edges) out << a + 1 << ' ' << b + 1 << '\n';
  return out.str();
}

std::string to_dot(const Hypergraph& h, std::string_view name) {
  const auto adj = h.primal_adjacency();
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (int v : h.vertices()) out << "  " << v << ";\n";
  for (std::size_t x = 0; x < adj.size(); ++x)
    for (int y : adj[x])
      if (y > static_cast<int>(x)) out << "  " << h.vertices()[x] << " -- " << h.vertices()[y] << ";\n";
  out << "}\n";
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Json read_json_file(const std::string& path) {
  try {
    return Json::parse(read_text_file(path));
  } catch (const Json::parse_error& e) {
    bad(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) bad("cannot write " + path);
  out << text;
}

}  // namespace surftw
