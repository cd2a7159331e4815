#pragma once

// Hypergraphs embedded on surfaces through their incidence maps, with the
// hypergraph dual and the radial embedding.

#include <optional>

#include "surftw/hypergraph.hpp"
#include "surftw/surface_map.hpp"

namespace surftw {

enum class VertexClass { Element, Centre };

/// Incidence embedding of a hypergraph Λ. Vertex orbits of `map` are either
/// element-vertices or edge-centres and every map edge joins one of each.
///
/// Element-vertices carry an id (default: rank among element-vertices) and
/// centres carry an edge label (default: {rank among centres}). Duals keep the
/// labels of the centres they share with the primal.
class EmbeddedHypergraph {
 public:
  EmbeddedHypergraph() = default;
  /// Throws BAD_INPUT (or DISCONNECTED / NO_EDGES) when the incidence
  /// invariants fail.
  EmbeddedHypergraph(SurfaceMap map, std::vector<VertexClass> vclass,
                     std::vector<int> element_id = {}, std::vector<EdgeLabel> edge_label = {},
                     std::vector<int> non_disc_faces = {});

  /// Incidence map of a graph map: every edge is subdivided by a centre. The
  /// element-vertex ids and edge labels equal the graph's vertex and edge
  /// indices.
  static EmbeddedHypergraph from_graph_map(const SurfaceMap& g);

  const SurfaceMap& map() const { return map_; }
  const std::vector<VertexClass>& vclass() const { return vclass_; }
  bool is_centre(int v) const { return vclass_[v] == VertexClass::Centre; }

  /// Map vertex indices of the element-vertices / centres, ascending.
  const std::vector<int>& element_vertices() const { return elements_; }
  const std::vector<int>& centres() const { return centres_; }

  /// Id of element-vertex `v` (a map vertex index).
  int element_id(int v) const;
  /// Label of centre `v` (a map vertex index).
  const EdgeLabel& edge_label(int v) const;
  const std::vector<int>& element_ids() const { return element_id_; }
  const std::vector<EdgeLabel>& edge_labels() const { return edge_label_; }

  const std::vector<int>& non_disc_faces() const { return non_disc_faces_; }

  int num_faces() const { return faces_.size(); }
  const FaceSet& faces() const { return faces_; }

 private:
  SurfaceMap map_;
  std::vector<VertexClass> vclass_;
  std::vector<int> elements_, centres_;
  std::vector<int> element_id_;       // per element rank
  std::vector<EdgeLabel> edge_label_;  // per centre rank
  std::vector<int> non_disc_faces_;
  FaceSet faces_;
};

/// Vertices are element ids; one hyperedge per centre (ends collapsed to a set).
Hypergraph underlying_hypergraph(const EmbeddedHypergraph& l);

/// Hypergraph on the faces of Λ (face indices of trace_faces) with one edge per
/// centre joining the faces incident with it. Equals the underlying hypergraph
/// of hyper_dual(Λ).
Hypergraph face_hypergraph(const EmbeddedHypergraph& l);

int euler_genus(const EmbeddedHypergraph& l);
bool is_two_cell(const EmbeddedHypergraph& l);
int alpha_max(const EmbeddedHypergraph& l);

/// Faces (indices into l.faces()) incident with edges of at least two parts.
/// Parts list centre ranks.
std::vector<int> face_border(const EmbeddedHypergraph& l, const EdgePartition& mu);

/// Dual embedding: element-vertices are the faces of Λ (ids = face indices),
/// centres are shared and keep their labels. Throws NOT_TWO_CELL on marked
/// inputs.
EmbeddedHypergraph hyper_dual(const EmbeddedHypergraph& l);

enum class RadialKind { LambdaVertex, FaceVertex };

struct RadialEmbedding {
  SurfaceMap map;
  std::vector<RadialKind> vkind;
  /// Element id (LambdaVertex) or face index of Λ (FaceVertex), per vertex.
  std::vector<int> vertex_ref;
  /// Per face of `map` (trace order): the centre rank of the enclosed edge.
  std::vector<int> face_of;
};

/// The radial embedding of Λ; throws NO_EDGES on edge-less input.
RadialEmbedding radial(const EmbeddedHypergraph& l);

/// Radial embeddings as plain maps, for isomorphism checks.
bool radial_isomorphic(const RadialEmbedding& a, const RadialEmbedding& b);

// ---------------------------------------------------------------------------
// Hypermap view used by the constructions above and by pi_structure.
// Flags are the gem flags of the incidence map lying on element ends.

struct Hypermap {
  std::vector<int> s0, s1, s2;
  std::vector<int> gem_flag;  // hypermap flag -> gem flag of the incidence map
  std::vector<int> element;   // element rank per flag
  std::vector<int> centre;    // centre rank per flag
  std::vector<int> face;      // face index of Λ per flag

  int size() const { return static_cast<int>(s0.size()); }
};

Hypermap hypermap_of(const EmbeddedHypergraph& l);

/// Gem with flags (h, layer) = 2h+layer: a0 switches layer, a1 acts as
/// `layer0` / `layer1` on the two layers and a2 as `side` on both.
Gem layered_gem(const std::vector<int>& layer0, const std::vector<int>& layer1,
                const std::vector<int>& side);

}  // namespace surftw
