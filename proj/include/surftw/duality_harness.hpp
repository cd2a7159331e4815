#pragma once

// Mechanical check of the duality bound tw(Λ*) ≤ max{tw(Λ)+1+k, α_{Λ*}−1}
// through p-trees, plus the small-instance corpus used to fuzz it.

#include <cstdint>
#include <optional>
#include <random>

#include "surftw/ptree_synthesis.hpp"

namespace surftw {

enum class NodeCase { Leaf, TroublesomeNeighbour, Internal };
std::string_view to_string(NodeCase c);

struct NodeCheck {
  int node = -1;
  NodeCase kind = NodeCase::Internal;
  VertexSet x;       // X_v
  VertexSet x_star;  // X*_v (face indices of Λ)
  bool ok = false;
};

/// Bag sizes of node `v` in T and T* and the inequality of the proof's case
/// (leaf: |X*| ≤ α*; neighbour of a troublesome leaf whose e-partition is λ_v:
/// X* ⊆ e*; otherwise |X*| ≤ |X|+1+k). Throws NOT_PTREE.
NodeCheck node_inequality(const EmbeddedHypergraph& l, const PiStructure& pi, const PartitioningTree& t, int v);

struct BoundReport {
  int tw_lambda = -1;
  std::optional<int> tw_dual;  // exact, when within the oracle limit
  int tw_dual_tree = -1;       // width of T*
  int k = 0;
  bool orientable = true;
  int alpha_dual = 0;
  int bound = 0;  // max{tw(Λ)+1+k, α*−1}
  std::vector<NodeCheck> nodes;
  bool nodes_ok = false;
  bool pass = false;
  /// tw(Λ*) attains the bound.
  bool tight = false;
  /// T* happens to be optimal for Λ* as well.
  std::optional<bool> simultaneous_optimal;
  PartitioningTree ptree;
  std::vector<SynthesisRecord> transcript;
};

/// Runs radial → optimal p-tree → dual tree → widths. TOO_LARGE when Λ itself
/// exceeds the oracle limit; a too large dual only drops tw_dual.
BoundReport check_duality_bound(const EmbeddedHypergraph& l, int oracle_limit = -1);

/// Connected incidence maps with at most `max_darts` darts, one per
/// isomorphism class (reflections and switchings identified, element and
/// centre classes kept apart).
std::vector<EmbeddedHypergraph> enumerate_incidence_maps(int max_darts);

/// Random connected incidence map with at most `max_darts` darts.
EmbeddedHypergraph random_incidence_map(std::mt19937_64& rng, int max_darts);

struct FuzzConfig {
  int exhaustive_darts = 12;
  int random_count = 1000;
  int random_darts = 16;
  std::uint64_t seed = 7;
  int oracle_limit = -1;
};

struct FuzzFailure {
  EmbeddedHypergraph instance;
  std::string reason;
};

struct FuzzSummary {
  int enumerated = 0;
  int random = 0;
  int checked = 0;
  int tight = 0;
  int simultaneous_optimal = 0;
  int symmetric_checked = 0;
  std::vector<int> genus_histogram;
  std::vector<FuzzFailure> failures;
};

/// Bound check (both directions), p-tree validity and node inequalities on the
/// exhaustive corpus followed by the random samples.
FuzzSummary fuzz_small_embeddings(const FuzzConfig& config);

}  // namespace surftw
