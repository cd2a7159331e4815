#pragma once

// Graphs attaining the duality bound: grids, Todinca graphs with their
// decompositions and cross brambles, and the embedded Todinca graphs whose
// B-C linking runs through handles or crosscaps.

#include <optional>

#include "surftw/bramble.hpp"
#include "surftw/embedded_hypergraph.hpp"

namespace surftw {

/// n rows and m columns; vertex (r, c) is r*m+c.
Hypergraph grid(int n, int m);
/// Sweep path decomposition of width min(n, m) (0 for the 1x1 grid) whose
/// first bag contains a shortest side: the top row when m ≤ n, else the left
/// column.
TreeDecomposition grid_path_decomposition(int n, int m);

/// Three 2p×2p grids A, B, C. Their top rows read x_1..x_p, x'_p..x'_1. The
/// linking bijections are 0-based: a_{i+1} ~ b'_{ab[i]+1}, b_{i+1} ~
/// c'_{bc[i]+1}, c_{i+1} ~ a'_{ca[i]+1}.
struct TodincaSpec {
  int p = 1;
  std::vector<int> ab, bc, ca;
};

/// Identity linking, or the variant linking b_i to c'_{p+1-i}.
TodincaSpec todinca_spec(int p, bool reversed = false);

/// Vertex (row, col) of grid 0 (A), 1 (B) or 2 (C); row 0 is the top row.
int todinca_vertex(const TodincaSpec& spec, int grid, int row, int col);

Hypergraph todinca(const TodincaSpec& spec);
/// Width 3p-1: a central bag {a, b, c}, one bag per grid joining its top row
/// to the matching half of the next grid, and the grid sweeps below.
TreeDecomposition todinca_decomposition(const TodincaSpec& spec);
/// The 6p² crosses: an X-row together with the column it meets through the
/// links leaving the unprimed half of X.
Bramble crosses_bramble(const TodincaSpec& spec);

enum class GadgetKind { Ladder, Crosscap, Handle };

/// Rungs (i, j) joining p_{i+1} to q_{j+1}: a k-ladder, an l-crosscap on 3l
/// vertices or an l-handle on 5l vertices.
std::vector<std::pair<int, int>> gadget_rungs(GadgetKind kind, int size);

struct GkpEmbedding {
  int k = 0, p = 0, l = 0;
  bool crosscap = false;
  /// The construction asks for p > 1; p = 1 is still generated for small checks.
  bool outside_construction_range = false;
  TodincaSpec spec;
  /// Edge e of `map` joins edges[e] (dart 2e at the first vertex).
  std::vector<std::pair<int, int>> edges;
  SurfaceMap map;
  EmbeddedHypergraph gamma;
  /// Map edges that carry a non-planar rung.
  std::vector<int> routed_edges;
};

/// G_{k,p} (l = 5kp, k p-handles) or its crosscap variant (l = 3kp, k
/// p-crosscaps). A is linked to B and C by ladders; rung edges routed through
/// a handle keep the grid rotation, rungs through a crosscap get signature −1.
GkpEmbedding build_gkp(int k, int p, bool crosscap);

struct DualDecompositionReport {
  int k = 0, p = 0, l = 0;
  bool crosscap = false;
  int euler_genus = 0;
  int faces = 0;
  int grid_vertices = 0;
  int path_vertices = 0;
  int gadget_vertices = 0;
  int v_in = -1, v_out = -1;
  /// Γ* − v_out and its decomposition.
  Hypergraph dual_minus_out;
  TreeDecomposition td_minus_out;
  int width_minus_out = -1;
  /// The same decomposition with v_out added to every bag, on Γ*.
  Hypergraph dual;
  TreeDecomposition td;
  int width = -1;
  /// 3l-2-k_Σ: the proof's arithmetic for the width of Γ* − v_out.
  int target = 0;
  /// tw(Γ) = 3l-1 and the duality bound give tw(Γ*) ≥ 3l-2-k_Σ.
  int lower_bound = 0;
  bool outside_construction_range = false;
};

/// Classifies the faces of Γ as the dual's grids, ladder paths, gadget
/// vertices, v_in and v_out (STRUCTURE_MISMATCH when the inventory differs)
/// and builds the decomposition of Γ* − v_out around the central bag
/// P_AB ∪ P_AC ∪ {v_in} ∪ gadget vertices.
DualDecompositionReport dual_decomposition_gkp(int k, int p, bool crosscap = false);

/// Path decomposition following `order`: the bag of position i holds v_i and
/// every earlier vertex with a neighbour at position ≥ i.
TreeDecomposition path_decomposition_from_order(const Hypergraph& h, const std::vector<int>& order);

}  // namespace surftw
