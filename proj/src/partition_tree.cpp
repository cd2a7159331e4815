#include "surftw/partition_tree.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace surftw {

std::vector<std::vector<int>> PartitioningTree::adjacency() const {
  std::vector<std::vector<int>> adj(num_nodes);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

bool PartitioningTree::is_leaf(int v) const {
  int degree = 0;
  for (auto [a, b] : edges) degree += (a == v) + (b == v);
  return degree <= 1;
}

const EdgeLabel& PartitioningTree::label_of(int v) const {
  for (const auto& [node, label] : leaf_label)
    if (node == v) return label;
  throw Error(ErrorCode::BadTree, "node " + std::to_string(v) + " carries no label");
}

ValidationReport validate_ptree_shape(const Hypergraph& h, const PartitioningTree& t) {
  ValidationReport r;
  const int n = t.num_nodes;
  if (n <= 0) {
    r.violations.emplace_back("tree has no nodes");
    return r;
  }
  if (static_cast<int>(t.edges.size()) != n - 1) r.violations.emplace_back("tree must have exactly nodes-1 edges");
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [u, v] : t.edges) {
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) {
      r.violations.emplace_back("tree edge references unknown node");
      return r;
    }
    if (find(u) == find(v)) r.violations.emplace_back("tree contains a cycle");
    parent[find(u)] = find(v);
  }
  if (!r.ok()) return r;

  const auto adj = t.adjacency();
  std::set<int> labelled;
  std::set<EdgeLabel> used;
  for (const auto& [node, label] : t.leaf_label) {
    if (node < 0 || node >= n) {
      r.violations.emplace_back("leaf label on unknown node");
      continue;
    }
    if (adj[node].size() > 1) r.violations.push_back("internal node " + std::to_string(node) + " carries a label");
    if (!labelled.insert(node).second) r.violations.push_back("node " + std::to_string(node) + " labelled twice");
    if (!used.insert(label).second) r.violations.push_back("label " + label_string(label) + " used twice");
  }
  for (int v = 0; v < n; ++v)
    if (adj[v].size() <= 1 && !labelled.count(v)) r.violations.push_back("leaf " + std::to_string(v) + " is unlabelled");
  std::set<EdgeLabel> expected;
  for (const auto& e : h.edges()) expected.insert(e.label);
  if (used != expected) r.violations.emplace_back("leaf labels do not match the edges");
  return r;
}

namespace {

void require_valid(const Hypergraph& h, const PartitioningTree& t) {
  const auto r = validate_ptree_shape(h, t);
  if (!r.ok()) throw Error(ErrorCode::BadTree, r.violations.front());
}

// Edge positions of the leaves reachable from `start` without entering `block`.
std::vector<int> side_edges(const Hypergraph& h, const PartitioningTree& t, const std::vector<std::vector<int>>& adj,
                            int start, int block) {
  std::vector<int> out;
  std::vector<char> seen(t.num_nodes, 0);
  seen[block] = 1;
  seen[start] = 1;
  std::vector<int> stack{start};
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    if (adj[x].size() <= 1) out.push_back(h.index_of(t.label_of(x)));
    for (int y : adj[x])
      if (!seen[y]) {
        seen[y] = 1;
        stack.push_back(y);
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool same_partition(EdgePartition a, EdgePartition b) {
  for (auto* mu : {&a, &b}) {
    for (auto& part : *mu) std::sort(part.begin(), part.end());
    std::sort(mu->begin(), mu->end());
  }
  return a == b;
}

}  // namespace

PartitioningTree star_tree(const Hypergraph& h) {
  EdgePartition mu;
  for (int e = 0; e < h.num_edges(); ++e) mu.push_back({e});
  return star_of_partition(h, mu);
}

PartitioningTree star_of_partition(const Hypergraph& h, const EdgePartition& mu) {
  require_partition(h, mu);
  PartitioningTree t;
  if (h.num_edges() == 1) {
    t.num_nodes = 1;
    t.leaf_label.emplace_back(0, h.edges()[0].label);
    return t;
  }
  auto hang = [&](int parent, const std::vector<int>& part) {
    if (part.size() == 1) {
      const int leaf = t.num_nodes++;
      t.edges.emplace_back(parent, leaf);
      t.leaf_label.emplace_back(leaf, h.edges()[part[0]].label);
      return;
    }
    const int mid = t.num_nodes++;
    t.edges.emplace_back(parent, mid);
    for (int e : part) {
      const int leaf = t.num_nodes++;
      t.edges.emplace_back(mid, leaf);
      t.leaf_label.emplace_back(leaf, h.edges()[e].label);
    }
  };
  if (mu.size() == 2 && mu[0].size() == 1 && mu[1].size() == 1) {
    t.num_nodes = 2;
    t.edges.emplace_back(0, 1);
    t.leaf_label.emplace_back(0, h.edges()[mu[0][0]].label);
    t.leaf_label.emplace_back(1, h.edges()[mu[1][0]].label);
    return t;
  }
  t.num_nodes = 1;
  for (const auto& part : mu) hang(0, part);
  return t;
}

EdgePartition node_partition(const Hypergraph& h, const PartitioningTree& t, int v) {
  require_valid(h, t);
  if (v < 0 || v >= t.num_nodes) throw Error(ErrorCode::BadTree, "unknown node");
  const auto adj = t.adjacency();
  if (adj[v].size() <= 1) throw Error(ErrorCode::NotInternal, "node " + std::to_string(v) + " is a leaf");
  EdgePartition out;
  for (int w : adj[v]) out.push_back(side_edges(h, t, adj, w, v));
  std::sort(out.begin(), out.end());
  return out;
}

EdgePartition edge_partition(const Hypergraph& h, const PartitioningTree& t, int index) {
  require_valid(h, t);
  if (index < 0 || index >= static_cast<int>(t.edges.size())) throw Error(ErrorCode::BadTree, "unknown tree edge");
  const auto adj = t.adjacency();
  const auto [u, v] = t.edges[index];
  return {side_edges(h, t, adj, u, v), side_edges(h, t, adj, v, u)};
}

TreeDecomposition as_tree_decomposition(const Hypergraph& h, const PartitioningTree& t) {
  require_valid(h, t);
  const auto adj = t.adjacency();
  TreeDecomposition td;
  td.edges = t.edges;
  td.bags.resize(t.num_nodes);
  for (int v = 0; v < t.num_nodes; ++v) {
    if (adj[v].size() <= 1) {
      td.bags[v] = h.edges()[h.index_of(t.label_of(v))].ends;
    } else {
      EdgePartition mu;
      for (int w : adj[v]) mu.push_back(side_edges(h, t, adj, w, v));
      td.bags[v] = border(h, mu);
    }
  }
  return td;
}

int ptree_width(const Hypergraph& h, const PartitioningTree& t) { return width(as_tree_decomposition(h, t)); }

PartitioningTree merge_ptrees(const Hypergraph& h, std::span<const int> part_a, const PartitioningTree& t_contract_a,
                              const PartitioningTree& t_contract_b) {
  std::vector<char> in(h.num_edges(), 0);
  for (int e : part_a) {
    if (e < 0 || e >= h.num_edges()) throw Error(ErrorCode::BadSubset, "unknown edge index");
    in[e] = 1;
  }
  EdgeLabel label_a, label_b;
  for (int e = 0; e < h.num_edges(); ++e) {
    const auto& l = h.edges()[e].label;
    (in[e] ? label_a : label_b).insert((in[e] ? label_a : label_b).end(), l.begin(), l.end());
  }
  std::sort(label_a.begin(), label_a.end());
  std::sort(label_b.begin(), label_b.end());

  auto leaf_with = [](const PartitioningTree& t, const EdgeLabel& label) {
    for (const auto& [node, l] : t.leaf_label)
      if (l == label) return node;
    throw Error(ErrorCode::BadInput, "tree has no leaf labelled " + label_string(label));
  };
  // T/A contains e_A (label of A); T/B contains e_B.
  const int leaf_a = leaf_with(t_contract_a, label_a);
  const int leaf_b = leaf_with(t_contract_b, label_b);
  auto neighbour = [](const PartitioningTree& t, int leaf) {
    for (auto [u, v] : t.edges) {
      if (u == leaf) return v;
      if (v == leaf) return u;
    }
    throw Error(ErrorCode::BadInput, "contracted tree must have at least two nodes");
  };
  const int na = neighbour(t_contract_a, leaf_a);
  const int nb = neighbour(t_contract_b, leaf_b);

  PartitioningTree out;
  std::vector<int> map_a(t_contract_a.num_nodes, -1), map_b(t_contract_b.num_nodes, -1);
  for (int v = 0; v < t_contract_a.num_nodes; ++v)
    if (v != leaf_a) map_a[v] = out.num_nodes++;
  for (int v = 0; v < t_contract_b.num_nodes; ++v)
    if (v != leaf_b) map_b[v] = out.num_nodes++;
  for (auto [u, v] : t_contract_a.edges)
    if (u != leaf_a && v != leaf_a) out.edges.emplace_back(map_a[u], map_a[v]);
  for (auto [u, v] : t_contract_b.edges)
    if (u != leaf_b && v != leaf_b) out.edges.emplace_back(map_b[u], map_b[v]);
  out.edges.emplace_back(map_a[na], map_b[nb]);
  for (const auto& [node, l] : t_contract_a.leaf_label)
    if (node != leaf_a) out.leaf_label.emplace_back(map_a[node], l);
  for (const auto& [node, l] : t_contract_b.leaf_label)
    if (node != leaf_b) out.leaf_label.emplace_back(map_b[node], l);
  std::sort(out.leaf_label.begin(), out.leaf_label.end());
  require_valid(h, out);
  return out;
}

PartitioningTree dual_ptree(const PartitioningTree& t, const EmbeddedHypergraph& l) {
  if (!is_two_cell(l)) throw Error(ErrorCode::NotTwoCell, "dual tree requires a 2-cell embedding");
  require_valid(face_hypergraph(l), t);
  return t;
}

PtreeCertificate is_ptree(const PartitioningTree& t, const PiStructure& pi) {
  const Hypergraph& h = pi.lambda();
  PtreeCertificate cert;
  const auto shape = validate_ptree_shape(h, t);
  if (!shape.ok()) {
    cert.violations = shape.violations;
    return cert;
  }
  const auto adj = t.adjacency();
  const auto trouble = troublesome_edges(pi);
  auto troublesome_leaf = [&](int v) {
    if (adj[v].size() > 1) return -1;
    const int e = h.index_of(t.label_of(v));
    return std::count(trouble.begin(), trouble.end(), e) ? e : -1;
  };
  for (int i = 0; i < static_cast<int>(t.edges.size()); ++i) {
    const auto mu = edge_partition(h, t, i);
    if (is_pi_connected(pi, mu)) continue;
    const auto [u, v] = t.edges[i];
    if (troublesome_leaf(u) < 0 && troublesome_leaf(v) < 0)
      cert.violations.push_back("edge partition of tree edge " + std::to_string(u) + "-" + std::to_string(v) +
                                " is not Π-connected and touches no troublesome leaf");
  }
  for (int v = 0; v < t.num_nodes; ++v) {
    if (adj[v].size() <= 1 || adj[v].size() == 3) continue;
    const auto lambda_v = node_partition(h, t, v);
    bool justified = false;
    for (int w : adj[v]) {
      const int e = troublesome_leaf(w);
      if (e >= 0 && same_partition(e_partition(pi, e), lambda_v))
        justified = true;
    }
    if (!justified)
      cert.violations.push_back("internal node " + std::to_string(v) + " has degree " + std::to_string(adj[v].size()) +
                                " and its partition is not an e-partition of a neighbouring troublesome leaf");
  }
  return cert;
}

}  // namespace surftw
