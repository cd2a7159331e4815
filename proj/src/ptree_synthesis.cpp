#include "surftw/ptree_synthesis.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "surftw/treewidth.hpp"

namespace surftw {

std::string_view to_string(PartitionCase c) {
  switch (c) {
    case PartitionCase::Troublesome: return "troublesome";
    case PartitionCase::Separator: return "separator";
    case PartitionCase::Trivial: return "trivial";
  }
  return "unknown";
}

std::string describe(const PiStructure& pi) {
  std::ostringstream out;
  out << "lambda:";
  for (const auto& e : pi.lambda().edges()) {
    out << ' ' << label_string(e.label) << "=[";
    for (std::size_t i = 0; i < e.ends.size(); ++i) out << (i ? "," : "") << e.ends[i];
    out << ']';
  }
  auto cells = [&](const char* name, const std::vector<PiCell>& cs) {
    out << "; " << name << ':';
    for (const auto& c : cs) {
      out << " {";
      for (std::size_t i = 0; i < c.faces.size(); ++i) out << (i ? "," : "") << c.faces[i];
      out << '}';
    }
  };
  cells("pi-edges", pi.edges());
  cells("pi-vertices", pi.vertices());
  return out.str();
}

namespace {

[[noreturn]] void fail(const PiStructure& pi, const std::string& what) {
  throw Error(ErrorCode::Internal, what + " (" + describe(pi) + ")");
}

int measure(const Hypergraph& h) { return h.num_vertices() + h.num_edges(); }

bool smaller_both(const Hypergraph& h, const std::vector<int>& a, const std::vector<int>& b) {
  return measure(contract(h, a)) < measure(h) && measure(contract(h, b)) < measure(h);
}

std::vector<int> complement(int m, const std::vector<int>& a) {
  std::vector<int> out;
  for (int e = 0; e < m; ++e)
    if (!std::binary_search(a.begin(), a.end(), e)) out.push_back(e);
  return out;
}

int bag_containing(const TreeDecomposition& td, const VertexSet& s) {
  for (int t = 0; t < td.num_nodes(); ++t)
    if (std::includes(td.bags[t].begin(), td.bags[t].end(), s.begin(), s.end())) return t;
  return -1;
}

// Components of the primal graph of h after deleting `removed`, as sorted
// vertex-id sets ordered by smallest vertex.
std::vector<VertexSet> components_without(const Hypergraph& h, const VertexSet& removed) {
  const auto adj = h.primal_adjacency();
  const auto& vs = h.vertices();
  std::vector<char> seen(vs.size(), 0);
  for (std::size_t i = 0; i < vs.size(); ++i)
    if (std::binary_search(removed.begin(), removed.end(), vs[i])) seen[i] = 1;
  std::vector<VertexSet> out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (seen[i]) continue;
    VertexSet comp;
    std::vector<int> stack{static_cast<int>(i)};
    seen[i] = 1;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      comp.push_back(vs[x]);
      for (int y : adj[x])
        if (!seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<int> edges_touching(const Hypergraph& h, const VertexSet& vertices) {
  std::vector<int> out;
  for (int e = 0; e < h.num_edges(); ++e) {
    const auto& ends = h.edges()[e].ends;
    if (std::any_of(ends.begin(), ends.end(),
                    [&](int v) { return std::binary_search(vertices.begin(), vertices.end(), v); }))
      out.push_back(e);
  }
  return out;
}

PartitionStep good(const PiStructure& pi, const TreeDecomposition& td, std::vector<int> a, PartitionCase c,
                   std::string note) {
  const Hypergraph& h = pi.lambda();
  std::sort(a.begin(), a.end());
  std::vector<int> b = complement(h.num_edges(), a);
  if (a.empty() || b.empty()) fail(pi, "good partition has an empty side");
  if (!is_pi_connected(pi, a) || !is_pi_connected(pi, b))
    fail(pi, std::string(to_string(c)) + " partition is not Π-connected");
  if (!smaller_both(h, a, b)) fail(pi, std::string(to_string(c)) + " partition does not shrink both sides");
  const int bag = bag_containing(td, border_of_subset(h, a));
  if (bag < 0) fail(pi, std::string(to_string(c)) + " partition border is not inside a bag");
  PartitionStep step;
  step.good = GoodPartition{std::move(a), std::move(b), bag, c};
  step.note = std::move(note);
  return step;
}

PartitionStep troublesome_case(const PiStructure& pi, const TreeDecomposition& td, const std::vector<int>& trouble) {
  const Hypergraph& h = pi.lambda();
  // Troublesome edge with the smallest label.
  int e = trouble.front();
  for (int f : trouble)
    if (h.edges()[f].label < h.edges()[e].label) e = f;
  const auto parts = e_partition(pi, e);
  const bool all_single =
      std::all_of(parts.begin(), parts.end(), [](const std::vector<int>& p) { return p.size() == 1; });
  if (all_single) {
    PartitionStep step;
    step.terminal = star_of_partition(h, parts);
    step.note = "troublesome edge " + label_string(h.edges()[e].label) + " separates all other edges";
    return step;
  }
  for (std::size_t i = 1; i < parts.size(); ++i) {
    const auto& a = parts[i];
    const auto b = complement(h.num_edges(), a);
    if (smaller_both(h, a, b))
      return good(pi, td, a, PartitionCase::Troublesome,
                  "component of E minus troublesome edge " + label_string(h.edges()[e].label));
  }
  fail(pi, "no component of the e-partition gives smaller contractions");
}

PartitionStep separator_case(const PiStructure& pi, const TreeDecomposition& td) {
  const Hypergraph& h = pi.lambda();
  const auto [t0, t1] = td.edges.front();
  VertexSet s;
  std::set_intersection(td.bags[t0].begin(), td.bags[t0].end(), td.bags[t1].begin(), td.bags[t1].end(),
                        std::back_inserter(s));
  auto comps = components_without(h, s);
  if (comps.size() < 2) fail(pi, "intersection of neighbouring bags is not a separator");
  const VertexSet c = *std::min_element(comps.begin(), comps.end(), [](const VertexSet& x, const VertexSet& y) {
    return x.size() != y.size() ? x.size() < y.size() : x.front() < y.front();
  });
  const auto e_c = edges_touching(h, c);
  if (!is_pi_connected(pi, e_c)) fail(pi, "E_C is not Π-connected");
  const auto rest = complement(h.num_edges(), e_c);
  const auto rest_parts = pi_components(pi, rest);
  const VertexSet s_prime = border_of_subset(h, e_c);
  const auto comps_prime = components_without(h, s_prime);
  const VertexSet* d = nullptr;
  for (const auto& comp : comps_prime) {
    VertexSet common;
    std::set_intersection(comp.begin(), comp.end(), c.begin(), c.end(), std::back_inserter(common));
    if (common.empty()) {
      d = &comp;
      break;
    }
  }
  if (!d) fail(pi, "no component of the graph minus S' avoids C");
  const auto e_d = edges_touching(h, *d);
  const std::vector<int>* e_1 = nullptr;
  for (const auto& part : rest_parts)
    if (std::includes(part.begin(), part.end(), e_d.begin(), e_d.end())) e_1 = &part;
  if (!e_1) fail(pi, "edges at D do not lie in one component of E minus E_C");
  return good(pi, td, *e_1, PartitionCase::Separator,
              "separator of size " + std::to_string(s.size()) + ", component C of size " + std::to_string(c.size()));
}

PartitionStep trivial_case(const PiStructure& pi, const TreeDecomposition& td) {
  const auto adj = adjacency(pi);
  const int m = pi.num_faces();
  // A path a-b-c-d in G^Π; its middle edge is cut in a spanning tree.
  for (int b = 0; b < m; ++b)
    for (int c : adj[b]) {
      for (int a : adj[b]) {
        if (a == c) continue;
        for (int d : adj[c]) {
          if (d == b || d == a) continue;
          std::vector<std::vector<int>> tree(m);
          std::vector<char> reached(m, 0);
          std::vector<int> queue{a, b, c, d};
          for (int x : queue) reached[x] = 1;
          tree[a].push_back(b), tree[b].push_back(a);
          tree[c].push_back(d), tree[d].push_back(c);
          for (std::size_t i = 0; i < queue.size(); ++i)
            for (int y : adj[queue[i]])
              if (!reached[y]) {
                reached[y] = 1;
                tree[queue[i]].push_back(y);
                tree[y].push_back(queue[i]);
                queue.push_back(y);
              }
          if (static_cast<int>(queue.size()) != m) fail(pi, "G^Π is not connected");
          std::vector<int> side{b};
          std::vector<char> in(m, 0);
          in[b] = 1;
          in[c] = 1;  // blocks the cut edge
          for (std::size_t i = 0; i < side.size(); ++i)
            for (int y : tree[side[i]])
              if (!in[y]) {
                in[y] = 1;
                side.push_back(y);
              }
          return good(pi, td, side, PartitionCase::Trivial, "spanning-tree split of G^Π");
        }
      }
    }
  fail(pi, "G^Π has no path on four vertices");
}

}  // namespace

PartitionStep find_good_partition(const PiStructure& pi, const TreeDecomposition& td) {
  const Hypergraph& h = pi.lambda();
  if (h.num_edges() <= 3) {
    PartitionStep step;
    step.terminal = star_tree(h);
    step.note = "at most three edges";
    return step;
  }
  const auto trouble = troublesome_edges(pi);
  if (!trouble.empty()) return troublesome_case(pi, td, trouble);
  if (td.num_nodes() >= 2) return separator_case(pi, td);
  return trivial_case(pi, td);
}

namespace {

std::vector<EdgeLabel> labels_of(const Hypergraph& h, const std::vector<int>& positions) {
  std::vector<EdgeLabel> out;
  for (int e : positions) out.push_back(h.edges()[e].label);
  return out;
}

PartitioningTree synthesize(const PiStructure& pi, int limit, int depth, std::vector<SynthesisRecord>& transcript) {
  const Hypergraph& h = pi.lambda();
  const TreeDecomposition td = normalize_td(exact_treewidth(h, limit).decomposition);
  const PartitionStep step = find_good_partition(pi, td);
  SynthesisRecord record{depth, h.num_vertices(), h.num_edges(), "terminal", {}, {}};
  if (step.terminal) {
    transcript.push_back(record);
    return *step.terminal;
  }
  const auto& g = *step.good;
  record.step = std::string(to_string(g.provenance));
  record.part_a = labels_of(h, g.a);
  record.part_b = labels_of(h, g.b);
  transcript.push_back(record);
  const PartitioningTree ta = synthesize(contract(pi, g.a), limit, depth + 1, transcript);
  const PartitioningTree tb = synthesize(contract(pi, g.b), limit, depth + 1, transcript);
  return merge_ptrees(h, g.a, ta, tb);
}

}  // namespace

SynthesisResult optimal_ptree(const PiStructure& pi, int oracle_limit) {
  const Hypergraph& h = pi.lambda();
  if (h.num_edges() == 0) throw Error(ErrorCode::NoEdges, "hypergraph has no edges");
  if (!h.connected()) throw Error(ErrorCode::Disconnected, "hypergraph is not connected");
  SynthesisResult result;
  result.tree = synthesize(pi, oracle_limit, 0, result.transcript);
  result.width = ptree_width(h, result.tree);
  const auto cert = is_ptree(result.tree, pi);
  if (!cert.ok()) fail(pi, "synthesised tree is not a p-tree: " + cert.violations.front());
  const int tw = exact_treewidth(h, oracle_limit).width;
  if (result.width != tw)
    fail(pi, "synthesised tree has width " + std::to_string(result.width) + " but tw = " + std::to_string(tw));
  return result;
}

}  // namespace surftw
