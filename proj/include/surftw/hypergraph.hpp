#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "surftw/error.hpp"
#include "surftw/surface_map.hpp"

namespace surftw {

/// Sorted, duplicate-free vertex ids.
using VertexSet = std::vector<int>;

/// Hyperedge label: the sorted set of original edge ids it stands for. A plain
/// edge carries a singleton; a contracted edge e_A carries the union of A.
using EdgeLabel = std::vector<int>;

std::string label_string(const EdgeLabel& label);

struct HyperEdge {
  EdgeLabel label;
  VertexSet ends;

  friend bool operator==(const HyperEdge&, const HyperEdge&) = default;
};

/// A partition of edge positions (indices into Hypergraph::edges()).
using EdgePartition = std::vector<std::vector<int>>;

class Hypergraph {
 public:
  Hypergraph() = default;
  Hypergraph(VertexSet vertices, std::vector<HyperEdge> edges);

  /// Graph on vertices 0..n-1 with edge i labelled {i}.
  static Hypergraph from_graph(int n, const std::vector<std::pair<int, int>>& edges);

  const VertexSet& vertices() const { return vertices_; }
  const std::vector<HyperEdge>& edges() const { return edges_; }
  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  /// Position of the edge with this label; throws BAD_EDGE when absent.
  int index_of(const EdgeLabel& label) const;
  bool has_vertex(int v) const;
  int max_edge_size() const;
  bool connected() const;
  bool has_isolated_vertex() const;

  /// Adjacency of the primal graph (hyperedges cliquified), indexed by
  /// position in vertices().
  std::vector<std::vector<int>> primal_adjacency() const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  VertexSet vertices_;
  std::vector<HyperEdge> edges_;
};

/// Vertices incident with edges of at least two parts of `mu`.
VertexSet border(const Hypergraph& h, const EdgePartition& mu);
/// Border of the bipartition {A, E \ A}.
VertexSet border_of_subset(const Hypergraph& h, std::span<const int> subset);

/// Checks that `mu` partitions the edge positions; throws BAD_PARTITION.
void require_partition(const Hypergraph& h, const EdgePartition& mu);

/// H/A: keeps the edges outside A and adds e_A = border(A), labelled by the
/// union of the labels in A. The new edge is appended last.
Hypergraph contract(const Hypergraph& h, std::span<const int> subset);

struct TreeDecomposition {
  std::vector<VertexSet> bags;
  std::vector<std::pair<int, int>> edges;

  int num_nodes() const { return static_cast<int>(bags.size()); }
  friend bool operator==(const TreeDecomposition&, const TreeDecomposition&) = default;
};

ValidationReport validate_td(const Hypergraph& h, const TreeDecomposition& td);
int width(const TreeDecomposition& td);

/// Contracts tree edges whose bags are nested until no bag contains a
/// neighbouring one.
TreeDecomposition normalize_td(const TreeDecomposition& td);

/// Joins a decomposition of H/A and one of H/B (with {A, B} a bipartition)
/// by an edge between bags holding e_A and e_B.
TreeDecomposition merge_td(const Hypergraph& h, std::span<const int> part_a,
                           const TreeDecomposition& td_contract_a,
                           const TreeDecomposition& td_contract_b);

/// Decomposition of H/(E \ B) obtained by dropping the vertices outside the
/// union of B from every bag.
TreeDecomposition restrict_td(const Hypergraph& h, const TreeDecomposition& td,
                              std::span<const int> kept);

/// PACE .td text. Vertex v is written as v+1.
std::string to_pace_td(const TreeDecomposition& td, int num_vertices);
TreeDecomposition parse_pace_td(const std::string& text);

/// Key identifying a hypergraph up to edge labels.
std::string shape_key(const Hypergraph& h);

}  // namespace surftw
