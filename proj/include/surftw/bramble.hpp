#pragma once

#include <cstdint>

#include "surftw/hypergraph.hpp"

namespace surftw {

struct Bramble {
  std::vector<VertexSet> elements;
};

/// Every element is nonempty and connected in the primal graph of `g`, and
/// every two elements touch (share a vertex or are joined by an edge).
bool is_bramble(const Hypergraph& g, const Bramble& b);

/// Minimum number of vertices meeting every element. Iterative deepening over
/// the hitting-set size; throws TOO_LARGE once `budget` search nodes are spent.
int bramble_order(const Bramble& b, std::int64_t budget = 50'000'000);

}  // namespace surftw
