#pragma once

#include "surftw/hypergraph.hpp"

namespace surftw {

struct TreewidthResult {
  int width = -1;
  TreeDecomposition decomposition;
};

/// Vertex limit of the exact oracle: SURFTW_ORACLE_LIMIT when set, else 18.
int oracle_limit();

/// Exact tree-width by dynamic programming over vertex subsets of the primal
/// graph. `limit` < 0 selects oracle_limit(). Throws TOO_LARGE above the limit.
/// Results are memoised by shape_key().
TreewidthResult exact_treewidth(const Hypergraph& h, int limit = -1);

/// Decomposition built from an elimination order of the primal graph.
TreeDecomposition decomposition_from_order(const Hypergraph& h, const std::vector<int>& order);

}  // namespace surftw
