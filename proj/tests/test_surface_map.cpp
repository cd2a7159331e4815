#include "doctest.h"
#include "fixtures.hpp"

using namespace surftw;

TEST_CASE("validate_map reports structural violations") {
  CHECK(validate_map(fixtures::loop_sphere()).ok());

  SurfaceMap fixed({0, 1}, {1, 0}, {1});
  auto r = validate_map(fixed);
  REQUIRE_FALSE(r.ok());
  CHECK(r.violations.front() == "edge_inv not fixed-point-free");

  SurfaceMap not_perm({1, 0}, {0, 0}, {1});
  r = validate_map(not_perm);
  REQUIRE_FALSE(r.ok());
  CHECK(std::find(r.violations.begin(), r.violations.end(), "rotation not a permutation") != r.violations.end());

  CHECK_FALSE(validate_map(from_cycles({{0, 1}, {2, 3}}), true).ok());
}

TEST_CASE("face counts of small maps") {
  CHECK(trace_faces(fixtures::loop_sphere()).size() == 2);
  CHECK(trace_faces(fixtures::torus_bouquet()).size() == 1);
  CHECK(trace_faces(fixtures::projective_loop()).size() == 1);
  CHECK(trace_faces(fixtures::theta()).size() == 3);
  CHECK(trace_faces(fixtures::cube()).size() == 6);
  CHECK(trace_faces(fixtures::tetrahedron()).size() == 4);
}

TEST_CASE("euler genus") {
  CHECK(euler_genus(fixtures::cube()) == 0);
  CHECK(euler_genus(fixtures::torus_bouquet()) == 2);
  CHECK(euler_genus(fixtures::projective_loop()) == 1);
  CHECK(euler_genus(fixtures::tetrahedron()) == 0);
}

TEST_CASE("orientability") {
  CHECK(is_orientable(fixtures::cube()));
  CHECK_FALSE(is_orientable(fixtures::projective_loop()));
  // Two -1 edges forming a 2-cycle between two vertices.
  CHECK(is_orientable(from_cycles({{0, 2}, {1, 3}}, {-1, -1})));
  // Switching changes nothing about the face structure.
  auto switched = from_cycles({{0, 2}, {3, 1}}, {-1, -1});
  CHECK(is_orientable(switched));
}

TEST_CASE("disconnected maps are rejected") {
  auto two = from_cycles({{0, 1}, {2, 3}});
  CHECK_THROWS_AS(trace_faces(two), Error);
  try {
    euler_genus(two);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Disconnected);
  }
}

TEST_CASE("face tracing partitions the states and is a permutation") {
  for (const auto& m : {fixtures::cube(), fixtures::torus_bouquet(), fixtures::projective_loop(), fixtures::prism(5)}) {
    const auto faces = trace_faces(m);
    std::vector<int> seen(2 * m.num_darts(), 0);
    for (const auto& walk : faces.faces) {
      for (auto s : walk) ++seen[2 * s.dart + (s.reversed ? 1 : 0)];
      FaceState s = walk.front();
      for (std::size_t i = 0; i < walk.size(); ++i) s = face_successor(m, s);
      CHECK(s == walk.front());
    }
    // Each face walk is one of a mirror pair, so every dart appears in exactly
    // one traced state up to the mirror.
    int total = 0;
    for (int c : seen) total += c;
    CHECK(total == m.num_darts());
    CHECK(m.num_vertices() - m.num_edges() + faces.size() + euler_genus(m) == 2);
  }
}

TEST_CASE("graph dual") {
  auto d = graph_dual(fixtures::loop_sphere());
  CHECK(d.num_vertices() == 2);
  CHECK(d.num_edges() == 1);
  CHECK(map_isomorphic(d, fixtures::bridge()));

  auto oct = graph_dual(fixtures::cube());
  CHECK(oct.num_vertices() == 6);
  CHECK(oct.num_edges() == 12);
  CHECK(trace_faces(oct).size() == 8);
  for (int v = 0; v < oct.num_vertices(); ++v) CHECK(oct.darts_at(v).size() == 4);

  auto tri = graph_dual(fixtures::theta());
  CHECK(map_isomorphic(tri, fixtures::triangle()));

  CHECK(map_isomorphic(fixtures::cube(), graph_dual(graph_dual(fixtures::cube()))));
  CHECK(euler_genus(graph_dual(fixtures::torus_bouquet())) == 2);
  CHECK(euler_genus(graph_dual(fixtures::projective_loop())) == 1);
  CHECK_FALSE(is_orientable(graph_dual(fixtures::projective_loop())));
}

TEST_CASE("map isomorphism") {
  CHECK(map_isomorphic(fixtures::cube(), fixtures::cube()));
  CHECK_FALSE(map_isomorphic(fixtures::loop_sphere(), fixtures::bridge()));
  CHECK_FALSE(map_isomorphic(fixtures::loop_sphere(), fixtures::projective_loop()));
  CHECK_FALSE(map_isomorphic(fixtures::theta(), from_cycles({{0, 2, 4}, {1, 3, 5}})));
  // Mirror image of the tetrahedron.
  auto mirror = from_cycles({{0, 5, 7}, {2, 1, 9}, {4, 3, 11}, {6, 10, 8}});
  CHECK(map_isomorphic(fixtures::tetrahedron(), mirror));
  // Vertex switching at one vertex.
  auto switched = from_cycles({{1, 0}}, {1});
  CHECK(map_isomorphic(fixtures::loop_sphere(), switched));
  CHECK_THROWS_AS(map_isomorphic(fixtures::prism(20), fixtures::prism(20)), Error);
}

TEST_CASE("gem realisation round-trips") {
  for (const auto& m : {fixtures::cube(), fixtures::torus_bouquet(), fixtures::projective_loop()}) {
    auto r = realize(gem_of(m));
    CHECK(map_isomorphic(r.map, m));
    CHECK(trace_faces(r.map).size() == trace_faces(m).size());
  }
}
