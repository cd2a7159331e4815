#include "surftw/hypergraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace surftw {

namespace {

VertexSet normalized(VertexSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

bool contains_all(const VertexSet& big, const VertexSet& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

bool tree_shape_ok(int nodes, const std::vector<std::pair<int, int>>& edges, std::string* why) {
  if (nodes == 0) {
    if (why) *why = "decomposition has no nodes";
    return false;
  }
  if (static_cast<int>(edges.size()) != nodes - 1) {
    if (why) *why = "tree must have exactly nodes-1 edges";
    return false;
  }
  std::vector<int> parent(nodes);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= nodes || v >= nodes) {
      if (why) *why = "tree edge references unknown node";
      return false;
    }
    const int a = find(u), b = find(v);
    if (a == b) {
      if (why) *why = "tree contains a cycle";
      return false;
    }
    parent[a] = b;
  }
  return true;
}

}  // namespace

std::string label_string(const EdgeLabel& label) {
  if (label.size() == 1) return std::to_string(label.front());
  std::string out = "{";
  for (std::size_t i = 0; i < label.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(label[i]);
  }
  return out + "}";
}

Hypergraph::Hypergraph(VertexSet vertices, std::vector<HyperEdge> edges)
    : vertices_(normalized(std::move(vertices))), edges_(std::move(edges)) {
  std::set<EdgeLabel> labels;
  for (auto& e : edges_) {
    e.ends = normalized(std::move(e.ends));
    std::sort(e.label.begin(), e.label.end());
    if (e.label.empty()) throw Error(ErrorCode::BadInput, "hyperedge with empty label");
    if (!labels.insert(e.label).second)
      throw Error(ErrorCode::BadInput, "duplicate edge label " + label_string(e.label));
    if (!contains_all(vertices_, e.ends))
      throw Error(ErrorCode::BadInput, "edge " + label_string(e.label) + " uses an unknown vertex");
  }
}

Hypergraph Hypergraph::from_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  VertexSet vs(n);
  std::iota(vs.begin(), vs.end(), 0);
  std::vector<HyperEdge> es;
  es.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i)
    es.push_back({{static_cast<int>(i)}, {edges[i].first, edges[i].second}});
  return Hypergraph(std::move(vs), std::move(es));
}

int Hypergraph::index_of(const EdgeLabel& label) const {
  for (int i = 0; i < num_edges(); ++i)
    if (edges_[i].label == label) return i;
  throw Error(ErrorCode::BadEdge, "no edge labelled " + label_string(label));
}

bool Hypergraph::has_vertex(int v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

int Hypergraph::max_edge_size() const {
  int best = 0;
  for (const auto& e : edges_) best = std::max(best, static_cast<int>(e.ends.size()));
  return best;
}

std::vector<std::vector<int>> Hypergraph::primal_adjacency() const {
  std::vector<std::set<int>> adj(vertices_.size());
  auto pos = [&](int v) {
    return static_cast<int>(std::lower_bound(vertices_.begin(), vertices_.end(), v) - vertices_.begin());
  };
  for (const auto& e : edges_)
    for (int a : e.ends)
      for (int b : e.ends)
        if (a != b) adj[pos(a)].insert(pos(b));
  std::vector<std::vector<int>> out;
  out.reserve(adj.size());
  for (auto& s : adj) out.emplace_back(s.begin(), s.end());
  return out;
}

bool Hypergraph::connected() const {
  if (vertices_.empty()) return true;
  const auto adj = primal_adjacency();
  std::vector<char> seen(adj.size(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  return count == num_vertices();
}

bool Hypergraph::has_isolated_vertex() const {
  std::set<int> used;
  for (const auto& e : edges_) used.insert(e.ends.begin(), e.ends.end());
  return static_cast<int>(used.size()) != num_vertices();
}

void require_partition(const Hypergraph& h, const EdgePartition& mu) {
  std::vector<int> seen(h.num_edges(), 0);
  for (const auto& part : mu) {
    if (part.empty()) throw Error(ErrorCode::BadPartition, "partition has an empty part");
    for (int e : part) {
      if (e < 0 || e >= h.num_edges()) throw Error(ErrorCode::BadPartition, "unknown edge index");
      if (seen[e]++) throw Error(ErrorCode::BadPartition, "edge appears in two parts");
    }
  }
  for (int c : seen)
    if (!c) throw Error(ErrorCode::BadPartition, "partition does not cover every edge");
}

VertexSet border(const Hypergraph& h, const EdgePartition& mu) {
  require_partition(h, mu);
  std::map<int, int> first_part;
  std::set<int> out;
  for (int p = 0; p < static_cast<int>(mu.size()); ++p)
    for (int e : mu[p])
      for (int v : h.edges()[e].ends) {
        auto [it, fresh] = first_part.emplace(v, p);
        if (!fresh && it->second != p) out.insert(v);
      }
  return {out.begin(), out.end()};
}

VertexSet border_of_subset(const Hypergraph& h, std::span<const int> subset) {
  std::vector<char> in(h.num_edges(), 0);
  for (int e : subset) {
    if (e < 0 || e >= h.num_edges()) throw Error(ErrorCode::BadSubset, "unknown edge index");
    in[e] = 1;
  }
  std::set<int> inside, outside;
  for (int e = 0; e < h.num_edges(); ++e)
    (in[e] ? inside : outside).insert(h.edges()[e].ends.begin(), h.edges()[e].ends.end());
  VertexSet out;
  std::set_intersection(inside.begin(), inside.end(), outside.begin(), outside.end(), std::back_inserter(out));
  return out;
}

Hypergraph contract(const Hypergraph& h, std::span<const int> subset) {
  std::vector<char> in(h.num_edges(), 0);
  int count = 0;
  for (int e : subset) {
    if (e < 0 || e >= h.num_edges()) throw Error(ErrorCode::BadSubset, "unknown edge index");
    if (!in[e]) ++count;
    in[e] = 1;
  }
  if (count == 0 || count == h.num_edges())
    throw Error(ErrorCode::BadSubset, "contracted set must be nonempty and proper");

  std::vector<HyperEdge> edges;
  std::set<int> vertices;
  EdgeLabel merged;
  for (int e = 0; e < h.num_edges(); ++e) {
    const auto& edge = h.edges()[e];
    if (in[e]) {
      merged.insert(merged.end(), edge.label.begin(), edge.label.end());
    } else {
      edges.push_back(edge);
      vertices.insert(edge.ends.begin(), edge.ends.end());
    }
  }
  std::sort(merged.begin(), merged.end());
  edges.push_back({merged, border_of_subset(h, subset)});
  return Hypergraph(VertexSet(vertices.begin(), vertices.end()), std::move(edges));
}

ValidationReport validate_td(const Hypergraph& h, const TreeDecomposition& td) {
  ValidationReport report;
  std::string why;
  const int nodes = td.num_nodes();
  const bool shape = tree_shape_ok(nodes, td.edges, &why);
  if (!shape) report.violations.push_back(why);

  for (const auto& bag : td.bags)
    for (int v : bag)
      if (!h.has_vertex(v)) {
        report.violations.push_back("bag contains unknown vertex " + std::to_string(v));
        break;
      }

  std::vector<VertexSet> bags;
  bags.reserve(td.bags.size());
  for (const auto& b : td.bags) bags.push_back(normalized(b));

  // Nodes holding each vertex, indexed by position in h.vertices().
  const auto& vs = h.vertices();
  std::vector<std::vector<int>> occurs(vs.size());
  for (int t = 0; t < nodes; ++t)
    for (int v : bags[t]) {
      const auto it = std::lower_bound(vs.begin(), vs.end(), v);
      if (it != vs.end() && *it == v) occurs[it - vs.begin()].push_back(t);
    }
  auto position = [&](int v) { return static_cast<int>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin()); };

  for (const auto& e : h.edges()) {
    if (e.ends.empty()) continue;
    const auto& candidates = occurs[position(e.ends.front())];
    const bool covered = std::any_of(candidates.begin(), candidates.end(),
                                     [&](int t) { return contains_all(bags[t], e.ends); });
    if (!covered) report.violations.push_back("edge " + label_string(e.label) + " not contained in any bag");
  }
  if (!shape) return report;

  std::vector<std::vector<int>> adj(nodes);
  for (auto [u, v] : td.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<char> holds(nodes, 0), seen(nodes, 0);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const auto& at = occurs[i];
    if (at.empty()) {
      report.violations.push_back("vertex " + std::to_string(vs[i]) + " appears in no bag");
      continue;
    }
    for (int t : at) holds[t] = 1;
    std::vector<int> stack{at.front()};
    seen[at.front()] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
      const int t = stack.back();
      stack.pop_back();
      for (int u : adj[t])
        if (holds[u] && !seen[u]) {
          seen[u] = 1;
          ++reached;
          stack.push_back(u);
        }
    }
    for (int t : at) holds[t] = seen[t] = 0;
    if (reached != at.size())
      report.violations.push_back("bags containing vertex " + std::to_string(vs[i]) + " are not connected");
  }
  return report;
}

int width(const TreeDecomposition& td) {
  int best = 0;
  for (const auto& b : td.bags) best = std::max(best, static_cast<int>(b.size()));
  return best - 1;
}

TreeDecomposition normalize_td(const TreeDecomposition& td) {
  TreeDecomposition cur = td;
  for (auto& b : cur.bags) b = normalized(b);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < cur.edges.size(); ++i) {
      auto [u, v] = cur.edges[i];
      int keep = -1, drop = -1;
      if (contains_all(cur.bags[u], cur.bags[v])) {
        keep = u;
        drop = v;
      } else if (contains_all(cur.bags[v], cur.bags[u])) {
        keep = v;
        drop = u;
      } else {
        continue;
      }
      // Redirect drop's edges to keep, then delete node `drop`.
      std::vector<std::pair<int, int>> edges;
      for (std::size_t j = 0; j < cur.edges.size(); ++j) {
        if (j == i) continue;
        auto [a, b] = cur.edges[j];
        if (a == drop) a = keep;
        if (b == drop) b = keep;
        if (a > drop) --a;
        if (b > drop) --b;
        edges.emplace_back(a, b);
      }
      cur.bags.erase(cur.bags.begin() + drop);
      cur.edges = std::move(edges);
      changed = true;
      break;
    }
  }
  return cur;
}

namespace {

int node_containing(const TreeDecomposition& td, const VertexSet& target) {
  for (int t = 0; t < td.num_nodes(); ++t)
    if (contains_all(normalized(td.bags[t]), target)) return t;
  return -1;
}

}  // namespace

TreeDecomposition merge_td(const Hypergraph& h, std::span<const int> part_a,
                           const TreeDecomposition& td_contract_a,
                           const TreeDecomposition& td_contract_b) {
  const VertexSet sep = border_of_subset(h, part_a);
  const int u = node_containing(td_contract_a, sep);
  const int v = node_containing(td_contract_b, sep);
  if (u < 0 || v < 0) throw Error(ErrorCode::Internal, "no bag holds the contracted edge");
  TreeDecomposition out = td_contract_a;
  const int offset = out.num_nodes();
  out.bags.insert(out.bags.end(), td_contract_b.bags.begin(), td_contract_b.bags.end());
  for (auto [a, b] : td_contract_b.edges) out.edges.emplace_back(a + offset, b + offset);
  out.edges.emplace_back(u, v + offset);
  return out;
}

TreeDecomposition restrict_td(const Hypergraph& h, const TreeDecomposition& td,
                              std::span<const int> kept) {
  std::vector<char> in(h.num_edges(), 0);
  for (int e : kept) {
    if (e < 0 || e >= h.num_edges()) throw Error(ErrorCode::BadSubset, "unknown edge index");
    in[e] = 1;
  }
  if (std::all_of(in.begin(), in.end(), [](char c) { return c != 0; })) return td;
  const VertexSet sep = border_of_subset(h, kept);
  if (node_containing(td, sep) < 0)
    throw Error(ErrorCode::BorderNotCovered, "border of the kept edges is not inside a bag");
  std::set<int> keep_vertices;
  for (int e = 0; e < h.num_edges(); ++e)
    if (in[e]) keep_vertices.insert(h.edges()[e].ends.begin(), h.edges()[e].ends.end());
  TreeDecomposition out = td;
  for (auto& bag : out.bags) {
    VertexSet b;
    for (int v : normalized(bag))
      if (keep_vertices.count(v)) b.push_back(v);
    bag = std::move(b);
  }
  return out;
}

std::string to_pace_td(const TreeDecomposition& td, int num_vertices) {
  std::ostringstream out;
  out << "s td " << td.num_nodes() << ' ' << width(td) + 1 << ' ' << num_vertices << '\n';
  for (int t = 0; t < td.num_nodes(); ++t) {
    out << "b " << t + 1;
    for (int v : td.bags[t]) out << ' ' << v + 1;
    out << '\n';
  }
  for (auto [u, v] : td.edges) out << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

TreeDecomposition parse_pace_td(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  TreeDecomposition td;
  bool header = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream ls(line);
    if (line[0] == 's') {
      std::string s, kind;
      int n = 0, w = 0, nv = 0;
      if (!(ls >> s >> kind >> n >> w >> nv) || kind != "td")
        throw Error(ErrorCode::BadInput, "malformed .td header");
      td.bags.assign(n, {});
      header = true;
    } else if (line[0] == 'b') {
      if (!header) throw Error(ErrorCode::BadInput, ".td bag before header");
      char b = 0;
      int id = 0;
      ls >> b >> id;
      if (id < 1 || id > td.num_nodes()) throw Error(ErrorCode::BadInput, ".td bag id out of range");
      int v = 0;
      while (ls >> v) td.bags[id - 1].push_back(v - 1);
      td.bags[id - 1] = normalized(td.bags[id - 1]);
    } else {
      int u = 0, v = 0;
      if (!(ls >> u >> v)) throw Error(ErrorCode::BadInput, "malformed .td edge line");
      td.edges.emplace_back(u - 1, v - 1);
    }
  }
  if (!header) throw Error(ErrorCode::BadInput, "missing .td header");
  return td;
}

std::string shape_key(const Hypergraph& h) {
  std::vector<VertexSet> ends;
  for (const auto& e : h.edges()) ends.push_back(e.ends);
  std::sort(ends.begin(), ends.end());
  std::ostringstream out;
  for (int v : h.vertices()) out << v << ',';
  out << '|';
  for (const auto& e : ends) {
    for (int v : e) out << v << ',';
    out << ';';
  }
  return out.str();
}

}  // namespace surftw
