#include "doctest.h"
#include "fixtures.hpp"
#include "surftw/extremal_family.hpp"
#include "surftw/face_width.hpp"

using namespace surftw;

TEST_CASE("contractibility of cycles") {
  // A single loop is a cycle of length one.
  CHECK(is_contractible_cycle(fixtures::loop_sphere(), {0}));
  CHECK_FALSE(is_contractible_cycle(fixtures::projective_loop(), {0}));
  CHECK_FALSE(is_contractible_cycle(fixtures::torus_bouquet(), {0}));
  CHECK_FALSE(is_contractible_cycle(fixtures::torus_bouquet(), {1}));
  CHECK(is_contractible_cycle(fixtures::theta(), {0, 1}));
  CHECK(is_contractible_cycle(fixtures::theta(), {1, 2}));
  CHECK(is_contractible_cycle(fixtures::triangle(), {0, 1, 2}));
  // Every 4-cycle of the cube bounds a disc.
  CHECK(is_contractible_cycle(fixtures::cube(), {0, 1, 2, 3}));
  CHECK_THROWS_AS(is_contractible_cycle(fixtures::theta(), {0}), Error);
}

TEST_CASE("face width") {
  for (const auto& g : {fixtures::theta(), fixtures::cube(), fixtures::tetrahedron(), fixtures::prism(5)})
    for (int theta = 1; theta <= 3; ++theta) CHECK(face_width_at_least(g, theta));
  CHECK(face_width_at_least(fixtures::torus_bouquet(), 1));
  CHECK_FALSE(face_width_at_least(fixtures::torus_bouquet(), 2));
  CHECK_FALSE(face_width_at_least(fixtures::projective_loop(), 2));
  const auto witness = short_noncontractible_radial_cycle(EmbeddedHypergraph::from_graph_map(fixtures::torus_bouquet()), 2);
  REQUIRE(witness);
  CHECK(witness->size() == 2);

  const auto g11 = build_gkp(1, 1, false);
  CHECK(face_width_at_least(g11.gamma, 1));
  for (bool crosscap : {false, true}) {
    const auto g = build_gkp(1, 2, crosscap);
    CHECK(face_width_at_least(g.gamma, 2));
    CHECK_FALSE(face_width_at_least(g.gamma, 3));
  }
}
