#pragma once

// Construction of a p-tree of optimal width by recursive good partitions.

#include <optional>
#include <string>

#include "surftw/partition_tree.hpp"
#include "surftw/pi_structure.hpp"

namespace surftw {

enum class PartitionCase { Troublesome, Separator, Trivial };
std::string_view to_string(PartitionCase c);

/// A Π-connected bipartition {A, B} whose border lies in bag `bag` of the
/// supplied decomposition and whose two contractions are smaller.
struct GoodPartition {
  std::vector<int> a, b;  // edge positions
  int bag = -1;
  PartitionCase provenance = PartitionCase::Trivial;
};

/// Either a good partition, or a terminal tree (at most three edges, or a
/// troublesome edge separating every other edge).
struct PartitionStep {
  std::optional<GoodPartition> good;
  std::optional<PartitioningTree> terminal;
  std::string note;
};

/// One step of the proof's case analysis on (Λ, Π) with a normalized optimal
/// decomposition `td`. Throws INTERNAL when no case applies.
PartitionStep find_good_partition(const PiStructure& pi, const TreeDecomposition& td);

struct SynthesisRecord {
  int depth = 0;
  int vertices = 0;
  int edges = 0;
  std::string step;  // "terminal", "troublesome", "separator" or "trivial"
  std::vector<EdgeLabel> part_a, part_b;
};

struct SynthesisResult {
  PartitioningTree tree;
  int width = -1;
  std::vector<SynthesisRecord> transcript;
};

/// p-tree T of (Λ, Π) with tw(T) = tw(Λ). Every recursion level calls the
/// exact oracle (TOO_LARGE beyond its limit). The result is checked with
/// is_ptree and against the exact tree-width; a failed check throws INTERNAL
/// carrying a description of the instance.
SynthesisResult optimal_ptree(const PiStructure& pi, int oracle_limit = -1);

/// Textual dump of (Λ, Π) used in diagnostics.
std::string describe(const PiStructure& pi);

}  // namespace surftw
