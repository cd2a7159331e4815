#include "surftw/duality_harness.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "surftw/treewidth.hpp"

namespace surftw {

std::string_view to_string(NodeCase c) {
  switch (c) {
    case NodeCase::Leaf: return "leaf";
    case NodeCase::TroublesomeNeighbour: return "troublesome-neighbour";
    case NodeCase::Internal: return "internal";
  }
  return "unknown";
}

namespace {

bool same_partition(EdgePartition a, EdgePartition b) {
  for (auto* mu : {&a, &b}) {
    for (auto& part : *mu) std::sort(part.begin(), part.end());
    std::sort(mu->begin(), mu->end());
  }
  return a == b;
}

NodeCheck check_node(const EmbeddedHypergraph& l, const PiStructure& pi, const PartitioningTree& t,
                     const std::vector<std::vector<int>>& adj, const std::vector<int>& trouble, const Hypergraph& faces,
                     int k, int alpha_dual, int v) {
  const Hypergraph& h = pi.lambda();
  NodeCheck out;
  out.node = v;
  if (adj[v].size() <= 1) {
    const int e = h.index_of(t.label_of(v));
    out.kind = NodeCase::Leaf;
    out.x = h.edges()[e].ends;
    out.x_star = faces.edges()[e].ends;
    out.ok = static_cast<int>(out.x_star.size()) <= alpha_dual;
    return out;
  }
  const auto lambda_v = node_partition(h, t, v);
  out.x = border(h, lambda_v);
  out.x_star = face_border(l, lambda_v);
  if (out.x_star != border(faces, lambda_v))
    throw Error(ErrorCode::Internal, "face border disagrees with the border in the face hypergraph");
  for (int w : adj[v]) {
    if (adj[w].size() > 1) continue;
    const int e = h.index_of(t.label_of(w));
    if (!std::binary_search(trouble.begin(), trouble.end(), e)) continue;
    if (!same_partition(e_partition(pi, e), lambda_v)) continue;
    const auto& e_star = faces.edges()[e].ends;
    out.kind = NodeCase::TroublesomeNeighbour;
    out.ok = std::includes(e_star.begin(), e_star.end(), out.x_star.begin(), out.x_star.end());
    return out;
  }
  out.kind = NodeCase::Internal;
  out.ok = out.x_star.size() <= out.x.size() + 1 + k;
  return out;
}

void require_ptree(const PartitioningTree& t, const PiStructure& pi) {
  const auto cert = is_ptree(t, pi);
  if (!cert.ok()) throw Error(ErrorCode::NotPtree, cert.violations.front());
}

}  // namespace

NodeCheck node_inequality(const EmbeddedHypergraph& l, const PiStructure& pi, const PartitioningTree& t, int v) {
  require_ptree(t, pi);
  if (v < 0 || v >= t.num_nodes) throw Error(ErrorCode::BadTree, "unknown node");
  const auto trouble = troublesome_edges(pi);
  return check_node(l, pi, t, t.adjacency(), trouble, face_hypergraph(l), euler_genus(l), alpha_max(hyper_dual(l)), v);
}

BoundReport check_duality_bound(const EmbeddedHypergraph& l, int oracle_limit) {
  const EmbeddedHypergraph dual = hyper_dual(l);
  const PiStructure pi = PiStructure::of(l);
  auto synth = optimal_ptree(pi, oracle_limit);

  BoundReport r;
  r.tw_lambda = synth.width;
  r.k = euler_genus(l);
  r.orientable = is_orientable(l.map());
  r.alpha_dual = alpha_max(dual);
  r.bound = std::max(r.tw_lambda + 1 + r.k, r.alpha_dual - 1);

  const Hypergraph faces = face_hypergraph(l);
  const PartitioningTree t_star = dual_ptree(synth.tree, l);
  r.tw_dual_tree = ptree_width(faces, t_star);

  const auto adj = synth.tree.adjacency();
  const auto trouble = troublesome_edges(pi);
  r.nodes_ok = true;
  int largest = 0;
  for (int v = 0; v < synth.tree.num_nodes; ++v) {
    r.nodes.push_back(check_node(l, pi, synth.tree, adj, trouble, faces, r.k, r.alpha_dual, v));
    r.nodes_ok = r.nodes_ok && r.nodes.back().ok;
    largest = std::max(largest, static_cast<int>(r.nodes.back().x_star.size()));
  }
  if (largest - 1 != r.tw_dual_tree) throw Error(ErrorCode::Internal, "node table disagrees with the width of T*");

  try {
    r.tw_dual = exact_treewidth(faces, oracle_limit).width;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::TooLarge) throw;
  }
  if (r.tw_dual) {
    if (*r.tw_dual > r.tw_dual_tree) throw Error(ErrorCode::Internal, "T* beats the exact tree-width of the dual");
    r.simultaneous_optimal = *r.tw_dual == r.tw_dual_tree;
    r.pass = *r.tw_dual <= r.bound;
    r.tight = *r.tw_dual == r.bound;
  } else {
    r.pass = r.tw_dual_tree <= r.bound;
  }
  r.ptree = std::move(synth.tree);
  r.transcript = std::move(synth.transcript);
  return r;
}

// ---------------------------------------------------------------------------
// Small incidence maps. Incidence edge i has its element dart 2i and its
// centre dart 2i+1.

namespace {

struct RawIncidence {
  std::vector<int> element_next;  // over incidence edges
  std::vector<int> centre_next;
  std::vector<int> sign;
};

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool join(int a, int b) {
    a = find(a), b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

// Darts 2i and 2i+1 lie on vertices cycle_of_element(i) and n + cycle_of_centre(i).
std::vector<int> cycle_index(const std::vector<int>& next) {
  std::vector<int> out(next.size(), -1);
  int count = 0;
  for (std::size_t i = 0; i < next.size(); ++i) {
    if (out[i] >= 0) continue;
    for (int j = static_cast<int>(i); out[j] < 0; j = next[j]) out[j] = count;
    ++count;
  }
  return out;
}

EmbeddedHypergraph build(const RawIncidence& raw) {
  const int m = static_cast<int>(raw.element_next.size());
  std::vector<int> inv(2 * m), rot(2 * m);
  for (int i = 0; i < m; ++i) {
    inv[2 * i] = 2 * i + 1;
    inv[2 * i + 1] = 2 * i;
    rot[2 * i] = 2 * raw.element_next[i];
    rot[2 * i + 1] = 2 * raw.centre_next[i] + 1;
  }
  SurfaceMap map(inv, rot, raw.sign);
  std::vector<VertexClass> vclass(map.num_vertices(), VertexClass::Element);
  for (int i = 0; i < m; ++i) vclass[map.vertex_of(2 * i + 1)] = VertexClass::Centre;
  return EmbeddedHypergraph(std::move(map), std::move(vclass));
}

bool connected(const RawIncidence& raw) {
  const int m = static_cast<int>(raw.element_next.size());
  const auto ce = cycle_index(raw.element_next);
  const auto cc = cycle_index(raw.centre_next);
  const int ne = *std::max_element(ce.begin(), ce.end()) + 1;
  const int nc = *std::max_element(cc.begin(), cc.end()) + 1;
  UnionFind uf(ne + nc);
  int components = ne + nc;
  for (int i = 0; i < m; ++i) components -= uf.join(ce[i], ne + cc[i]);
  return components == 1;
}

std::vector<int> flag_colour(const EmbeddedHypergraph& l) {
  std::vector<int> colour(2 * l.map().num_darts());
  for (int d = 0; d < l.map().num_darts(); ++d)
    colour[2 * d] = colour[2 * d + 1] = l.is_centre(l.map().vertex_of(d)) ? 1 : 0;
  return colour;
}

void integer_partitions(int n, int max_part, std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(prefix);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    prefix.push_back(p);
    integer_partitions(n - p, p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<EmbeddedHypergraph> enumerate_incidence_maps(int max_darts) {
  std::vector<EmbeddedHypergraph> out;
  std::set<std::vector<int>> seen;
  for (int m = 1; 2 * m <= max_darts; ++m) {
    std::vector<std::vector<int>> shapes;
    std::vector<int> prefix;
    integer_partitions(m, m, prefix, shapes);
    for (const auto& shape : shapes) {
      // Every element rotation of this cycle type is conjugate to this one.
      RawIncidence raw;
      raw.element_next.resize(m);
      int start = 0;
      for (int len : shape) {
        for (int j = 0; j < len; ++j) raw.element_next[start + j] = start + (j + 1) % len;
        start += len;
      }
      std::vector<int> perm(m);
      std::iota(perm.begin(), perm.end(), 0);
      do {
        raw.centre_next = perm;
        if (!connected(raw)) continue;
        // Switching lets a spanning tree carry +1; only the remaining edges vary.
        const auto ce = cycle_index(raw.element_next);
        const auto cc = cycle_index(raw.centre_next);
        UnionFind uf(2 * m);
        std::vector<int> free_edges;
        for (int i = 0; i < m; ++i)
          if (!uf.join(ce[i], m + cc[i])) free_edges.push_back(i);
        const int variants = 1 << free_edges.size();
        for (int mask = 0; mask < variants; ++mask) {
          raw.sign.assign(m, 1);
          for (std::size_t b = 0; b < free_edges.size(); ++b)
            if (mask >> b & 1) raw.sign[free_edges[b]] = -1;
          EmbeddedHypergraph l = build(raw);
          if (seen.insert(canonical_code(gem_of(l.map()), flag_colour(l))).second) out.push_back(std::move(l));
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
  return out;
}

EmbeddedHypergraph random_incidence_map(std::mt19937_64& rng, int max_darts) {
  if (max_darts < 2) throw Error(ErrorCode::BadInput, "an incidence map needs at least two darts");
  std::uniform_int_distribution<int> size(1, max_darts / 2);
  std::bernoulli_distribution flip(0.5);
  for (;;) {
    const int m = size(rng);
    RawIncidence raw;
    raw.element_next.resize(m);
    raw.centre_next.resize(m);
    std::iota(raw.element_next.begin(), raw.element_next.end(), 0);
    std::iota(raw.centre_next.begin(), raw.centre_next.end(), 0);
    std::shuffle(raw.element_next.begin(), raw.element_next.end(), rng);
    std::shuffle(raw.centre_next.begin(), raw.centre_next.end(), rng);
    raw.sign.resize(m);
    for (int& s : raw.sign) s = flip(rng) ? -1 : 1;
    if (connected(raw)) return build(raw);
  }
}

namespace {

void check_instance(const EmbeddedHypergraph& l, const FuzzConfig& config, FuzzSummary& summary) {
  const int k = euler_genus(l);
  if (static_cast<int>(summary.genus_histogram.size()) <= k) summary.genus_histogram.resize(k + 1, 0);
  ++summary.genus_histogram[k];
  ++summary.checked;
  auto failed = [&](std::string reason) { summary.failures.push_back({l, std::move(reason)}); };
  try {
    const auto r = check_duality_bound(l, config.oracle_limit);
    if (!r.pass) failed("tw(Λ*) exceeds the bound");
    if (!r.nodes_ok) failed("node inequality fails");
    if (r.tw_dual_tree > r.bound) failed("tw(T*) exceeds the bound");
    summary.tight += r.tight;
    summary.simultaneous_optimal += r.simultaneous_optimal.value_or(false);
    const auto back = check_duality_bound(hyper_dual(l), config.oracle_limit);
    ++summary.symmetric_checked;
    if (!back.pass || !back.nodes_ok) failed("bound fails on the dual");
  } catch (const Error& e) {
    failed(e.what());
  }
}

}  // namespace

FuzzSummary fuzz_small_embeddings(const FuzzConfig& config) {
  FuzzSummary summary;
  if (config.exhaustive_darts >= 2)
    for (const auto& l : enumerate_incidence_maps(config.exhaustive_darts)) {
      ++summary.enumerated;
      check_instance(l, config, summary);
    }
  std::mt19937_64 rng(config.seed);
  for (int i = 0; i < config.random_count; ++i) {
    ++summary.random;
    check_instance(random_incidence_map(rng, config.random_darts), config, summary);
  }
  return summary;
}

}  // namespace surftw
