#pragma once

// Representativity (face-width) of embeddings through short cycles of the
// radial graph: a noose meeting Γ in t points is a radial cycle of length 2t.

#include <cstdint>
#include <optional>

#include "surftw/embedded_hypergraph.hpp"

namespace surftw {

/// Whether the cycle formed by edges `cycle` of `m` bounds a disc: cut the
/// surface along it and test whether one side has Euler characteristic 1.
bool is_contractible_cycle(const SurfaceMap& m, const std::vector<int>& cycle);

/// Edges of the radial map (radial(l).map) forming a non-contractible cycle of
/// length below 2θ, if any. Throws TOO_LARGE after `budget` cycles.
std::optional<std::vector<int>> short_noncontractible_radial_cycle(const EmbeddedHypergraph& l, int theta,
                                                                   std::int64_t budget = 2'000'000);

/// No non-contractible radial cycle is shorter than 2θ. Throws NOT_TWO_CELL on
/// marked inputs.
bool face_width_at_least(const EmbeddedHypergraph& l, int theta, std::int64_t budget = 2'000'000);
bool face_width_at_least(const SurfaceMap& g, int theta, std::int64_t budget = 2'000'000);

}  // namespace surftw
