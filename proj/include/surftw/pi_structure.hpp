#pragma once

// Hypergraph Λ together with a radial embedding Π, kept at the level of
// incidences between Π's faces, edges and vertices. Faces of Π are in
// bijection with the edges of Λ (same positions, same labels), which is all
// that contraction needs; Π is never recomputed after a contraction.

#include <span>

#include "surftw/embedded_hypergraph.hpp"
#include "surftw/hypergraph.hpp"

namespace surftw {

/// An edge or vertex of Π, described by the Π-faces (edge positions of Λ) it
/// is incident with.
struct PiCell {
  VertexSet faces;
  /// For vertices: element id of a Λ-vertex or face index of a face-vertex.
  int ref = -1;
  bool face_vertex = false;

  friend bool operator==(const PiCell&, const PiCell&) = default;
};

class PiStructure {
 public:
  PiStructure() = default;
  PiStructure(Hypergraph lambda, std::vector<PiCell> edges, std::vector<PiCell> vertices, bool two_cell);

  /// Λ with its unique radial embedding.
  static PiStructure of(const EmbeddedHypergraph& l);

  const Hypergraph& lambda() const { return lambda_; }
  int num_faces() const { return lambda_.num_edges(); }
  const std::vector<PiCell>& edges() const { return edges_; }
  const std::vector<PiCell>& vertices() const { return vertices_; }
  /// False once a contraction has made 2-cellness unknown.
  bool two_cell() const { return two_cell_; }

 private:
  Hypergraph lambda_;
  std::vector<PiCell> edges_;
  std::vector<PiCell> vertices_;
  bool two_cell_ = true;
};

/// A_Π: the faces of A plus the Π-edges and Π-vertices private to A.
struct PiRegion {
  std::vector<int> faces;
  std::vector<int> private_edges;
  std::vector<int> private_vertices;
};

PiRegion region(const PiStructure& pi, std::span<const int> subset);
/// Same, with A given by edge labels; throws BAD_EDGE for unknown labels.
PiRegion region(const PiStructure& pi, const std::vector<EdgeLabel>& labels);

/// Connectivity of A_Π (faces glued along their private edges and vertices).
bool is_pi_connected(const PiStructure& pi, std::span<const int> subset);
/// Every part of `mu` is Π-connected.
bool is_pi_connected(const PiStructure& pi, const EdgePartition& mu);

/// G^Π as adjacency lists over edge positions: e ~ f iff {e, f} is
/// Π-connected.
std::vector<std::vector<int>> adjacency(const PiStructure& pi);

/// Components of A_Π, each sorted, ordered by smallest member.
EdgePartition pi_components(const PiStructure& pi, std::span<const int> subset);

std::vector<int> troublesome_edges(const PiStructure& pi);
/// {e} followed by the components of (E \ {e})_Π. Throws NOT_TROUBLESOME.
EdgePartition e_partition(const PiStructure& pi, int e);

/// (Λ/A, Π/A): private cells of A are deleted and the faces of A merge into
/// the face of e_A, appended last. Throws NOT_PI_CONNECTED or BAD_SUBSET.
PiStructure contract(const PiStructure& pi, std::span<const int> subset);

}  // namespace surftw
