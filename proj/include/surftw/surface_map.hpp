#pragma once

// Signed rotation systems: the combinatorial encoding of cellular embeddings
// of graphs on orientable and non-orientable surfaces.

#include <span>
#include <string>
#include <vector>

#include "surftw/error.hpp"

namespace surftw {

using Dart = int;

struct ValidationReport {
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

/// A signed rotation system on darts 0..N-1.
///
/// `edge_inv` pairs the two darts of each edge, `rotation` is the cyclic
/// successor of a dart around its vertex, and `signature` holds one entry per
/// edge orbit, listed by ascending minimum dart. Vertices and edges are derived
/// orbit indices ordered by their minimum dart.
///
/// Construction never throws; a structurally broken map can be inspected with
/// validate_map() but every derived query throws BAD_INPUT on it.
class SurfaceMap {
 public:
  SurfaceMap() = default;
  SurfaceMap(std::vector<int> edge_inv, std::vector<int> rotation, std::vector<int> signature);

  int num_darts() const { return static_cast<int>(edge_inv_.size()); }
  int num_vertices() const;
  int num_edges() const;

  const std::vector<int>& edge_inv() const { return edge_inv_; }
  const std::vector<int>& rotation() const { return rotation_; }
  const std::vector<int>& signature() const { return signature_; }

  bool well_formed() const { return well_formed_; }

  Dart opposite(Dart d) const { return edge_inv_[d]; }
  Dart next_around(Dart d) const { return rotation_[d]; }
  Dart prev_around(Dart d) const;
  int vertex_of(Dart d) const;
  int edge_of(Dart d) const;
  int sign_of(Dart d) const;

  /// Darts of vertex `v` in rotation order, starting at its minimum dart.
  std::vector<Dart> darts_at(int v) const;
  /// Darts of edge `e`: {min dart, its partner}.
  std::pair<Dart, Dart> edge_darts(int e) const;

  bool connected() const;

  friend bool operator==(const SurfaceMap&, const SurfaceMap&) = default;

 private:
  void require_well_formed() const;

  std::vector<int> edge_inv_;
  std::vector<int> rotation_;
  std::vector<int> signature_;

  bool well_formed_ = false;
  std::vector<int> rotation_inv_;
  std::vector<int> vertex_of_;
  std::vector<int> edge_of_;
  std::vector<Dart> vertex_rep_;
  std::vector<Dart> edge_rep_;
};

ValidationReport validate_map(const SurfaceMap& m, bool require_connected = false);

/// Map whose edge e has darts 2e and 2e+1; `cycles` lists the darts around
/// each vertex in rotation order. `edge_signs` defaults to all +1.
SurfaceMap from_cycles(const std::vector<std::vector<int>>& cycles, std::vector<int> edge_signs = {});

/// A step of a face walk: leave the current vertex along `dart`, with the
/// local orientation flipped when `reversed` is set.
struct FaceState {
  Dart dart = 0;
  bool reversed = false;

  friend bool operator==(const FaceState&, const FaceState&) = default;
};

/// One boundary walk per face. Faces are ordered by their smallest corner,
/// where corner c sits between dart c and its rotation successor.
struct FaceSet {
  std::vector<std::vector<FaceState>> faces;
  std::vector<int> face_of_corner;

  int size() const { return static_cast<int>(faces.size()); }
};

/// Successor rule of face tracing; a permutation of the 2N states.
FaceState face_successor(const SurfaceMap& m, FaceState s);
/// The corner a state passes through before leaving along its dart.
Dart corner_of(const SurfaceMap& m, FaceState s);

FaceSet trace_faces(const SurfaceMap& m);
int euler_genus(const SurfaceMap& m);
bool is_orientable(const SurfaceMap& m);
SurfaceMap graph_dual(const SurfaceMap& m);

/// Isomorphism up to relabelling, reflection and vertex switching.
/// Limited to maps with at most `dart_limit` darts.
bool map_isomorphic(const SurfaceMap& a, const SurfaceMap& b, int dart_limit = 64);

std::string to_dot(const SurfaceMap& m, std::string_view name = "G");

// ---------------------------------------------------------------------------
// Flag (gem) representation. Flag 2d+j is side j of dart d; side 1 faces the
// rotation successor. a0 crosses the edge, a1 turns around the vertex and a2
// swaps the side. Faces are the <a0,a1> orbits.

struct Gem {
  std::vector<int> a0, a1, a2;

  int size() const { return static_cast<int>(a0.size()); }
};

Gem gem_of(const SurfaceMap& m);

struct Realization {
  SurfaceMap map;
  /// gem_flag[2d+j] is the gem flag realised as side j of dart d.
  std::vector<int> gem_flag;
};

/// Builds a signed rotation system whose flag structure is `g`.
Realization realize(const Gem& g);

/// Orbit index per flag for the group generated by two involutions, orbits
/// numbered by their minimum flag.
std::vector<int> orbits_of(const std::vector<int>& x, const std::vector<int>& y);

/// Colour-preserving gem isomorphism; `colour_a`/`colour_b` may be empty.
bool gem_isomorphic(const Gem& a, const Gem& b, std::span<const int> colour_a = {},
                    std::span<const int> colour_b = {});

/// Canonical code of a connected gem: equal codes iff colour-preserving
/// isomorphic. Starting flags are restricted to those of the smallest colour
/// when colours are given.
std::vector<int> canonical_code(const Gem& g, std::span<const int> colour = {});

}  // namespace surftw
