#pragma once

#include "surftw/embedded_hypergraph.hpp"
#include "surftw/hypergraph.hpp"
#include "surftw/pi_structure.hpp"

namespace surftw {

/// A tree whose leaves (nodes of degree at most one) are bijectively labelled
/// by the edges of a hypergraph.
struct PartitioningTree {
  int num_nodes = 0;
  std::vector<std::pair<int, int>> edges;
  /// (leaf node, edge label), one entry per leaf.
  std::vector<std::pair<int, EdgeLabel>> leaf_label;

  std::vector<std::vector<int>> adjacency() const;
  bool is_leaf(int v) const;
  /// Label of leaf `v`; throws BAD_TREE when `v` carries none.
  const EdgeLabel& label_of(int v) const;

  friend bool operator==(const PartitioningTree&, const PartitioningTree&) = default;
};

/// Checks shape and leaf labelling against `h`; empty report iff valid.
ValidationReport validate_ptree_shape(const Hypergraph& h, const PartitioningTree& t);

/// Star with one leaf per edge (single leaf for one edge, a single tree edge
/// for two edges).
PartitioningTree star_tree(const Hypergraph& h);
/// Star whose centre has one subtree per part; a part with several edges
/// hangs below an extra node.
PartitioningTree star_of_partition(const Hypergraph& h, const EdgePartition& mu);

/// λ_v as edge positions of `h`, parts ordered by smallest member.
EdgePartition node_partition(const Hypergraph& h, const PartitioningTree& t, int v);
/// λ_e for tree edge `index`: {side of edges[index].first, other side}.
EdgePartition edge_partition(const Hypergraph& h, const PartitioningTree& t, int index);

/// Internal nodes get δ(λ_v), leaves the ends of their edge. Throws BAD_TREE.
TreeDecomposition as_tree_decomposition(const Hypergraph& h, const PartitioningTree& t);
int ptree_width(const Hypergraph& h, const PartitioningTree& t);

/// Joins a tree of H/A and one of H/B by removing the leaves of e_A and e_B
/// and linking their neighbours. Throws BAD_INPUT if a leaf is missing.
PartitioningTree merge_ptrees(const Hypergraph& h, std::span<const int> part_a, const PartitioningTree& t_contract_a,
                              const PartitioningTree& t_contract_b);

/// The same tree read as a partitioning tree of Λ*; dual edges keep their
/// labels. Throws NOT_TWO_CELL.
PartitioningTree dual_ptree(const PartitioningTree& t, const EmbeddedHypergraph& l);

struct PtreeCertificate {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

PtreeCertificate is_ptree(const PartitioningTree& t, const PiStructure& pi);

}  // namespace surftw
