#include "doctest.h"
#include "fixtures.hpp"

using namespace surftw;

namespace {

EdgeLabel L(std::initializer_list<int> xs) { return EdgeLabel(xs); }

}  // namespace

TEST_CASE("underlying hypergraph") {
  auto star = fixtures::star3();
  auto h = underlying_hypergraph(star);
  REQUIRE(h.num_edges() == 1);
  CHECK(h.edges()[0].ends == VertexSet{0, 1, 2});

  auto loop = EmbeddedHypergraph::from_graph_map(fixtures::loop_sphere());
  h = underlying_hypergraph(loop);
  REQUIRE(h.num_edges() == 1);
  CHECK(h.edges()[0].ends == VertexSet{0});

  auto theta = EmbeddedHypergraph::from_graph_map(fixtures::theta());
  h = underlying_hypergraph(theta);
  REQUIRE(h.num_edges() == 3);
  for (const auto& e : h.edges()) CHECK(e.ends == VertexSet{0, 1});
  CHECK(h.edges()[1].label == L({1}));
}

TEST_CASE("incidence embeddings keep genus and faces") {
  for (const auto& g : {fixtures::cube(), fixtures::torus_bouquet(), fixtures::projective_loop(), fixtures::theta()}) {
    auto l = EmbeddedHypergraph::from_graph_map(g);
    CHECK(l.num_faces() == trace_faces(g).size());
    CHECK(euler_genus(l) == euler_genus(g));
    CHECK(is_two_cell(l));
  }
}

TEST_CASE("invalid incidence maps are rejected") {
  CHECK_THROWS_AS(EmbeddedHypergraph(fixtures::theta(), {VertexClass::Element, VertexClass::Element}), Error);
  try {
    EmbeddedHypergraph(from_cycles({{0}, {1}}), {VertexClass::Element, VertexClass::Element});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BadInput);
  }
}

TEST_CASE("non-disc face marker") {
  auto m = fixtures::star3();
  EmbeddedHypergraph marked(m.map(), m.vclass(), {}, {}, {0});
  CHECK_FALSE(is_two_cell(marked));
  CHECK_THROWS_AS(hyper_dual(marked), Error);
}

TEST_CASE("hypergraph dual") {
  auto star = fixtures::star3();
  auto dual = hyper_dual(star);
  auto h = underlying_hypergraph(dual);
  CHECK(h.num_vertices() == 1);
  REQUIRE(h.num_edges() == 1);
  CHECK(h.edges()[0].ends.size() == 1);
  CHECK(alpha_max(dual) == 1);
  CHECK(alpha_max(star) == 3);

  auto loop_dual = hyper_dual(EmbeddedHypergraph::from_graph_map(fixtures::loop_sphere()));
  h = underlying_hypergraph(loop_dual);
  CHECK(h.num_vertices() == 2);
  REQUIRE(h.num_edges() == 1);
  CHECK(h.edges()[0].ends.size() == 2);

  auto theta = EmbeddedHypergraph::from_graph_map(fixtures::theta());
  auto td = hyper_dual(theta);
  CHECK(map_isomorphic(td.map(), EmbeddedHypergraph::from_graph_map(fixtures::triangle()).map()));
  CHECK(alpha_max(EmbeddedHypergraph::from_graph_map(fixtures::cube())) == 2);
}

TEST_CASE("dual agrees with graph_dual and is an involution") {
  for (const auto& g : {fixtures::cube(), fixtures::torus_bouquet(), fixtures::projective_loop(), fixtures::theta(),
                        fixtures::tetrahedron(), fixtures::troublesome_loop()}) {
    auto l = EmbeddedHypergraph::from_graph_map(g);
    auto d = hyper_dual(l);
    CHECK(map_isomorphic(d.map(), EmbeddedHypergraph::from_graph_map(graph_dual(g)).map()));
    CHECK(map_isomorphic(hyper_dual(d).map(), l.map()));
    CHECK(euler_genus(d) == euler_genus(l));
    CHECK(d.element_vertices().size() == static_cast<std::size_t>(l.num_faces()));
    CHECK(d.num_faces() == static_cast<int>(l.element_vertices().size()));
    CHECK(underlying_hypergraph(d) == face_hypergraph(l));
  }
}

TEST_CASE("face border") {
  auto theta = EmbeddedHypergraph::from_graph_map(fixtures::theta());
  CHECK(face_border(theta, {{0, 1, 2}}).empty());
  CHECK(face_border(theta, {{0}, {1}, {2}}).size() == 3);
  auto two = face_border(theta, {{0}, {1, 2}});
  CHECK(two.size() == 2);
  CHECK_THROWS_AS(face_border(theta, {{0}, {0, 1, 2}}), Error);
  CHECK_THROWS_AS(face_border(theta, {{0}}), Error);
}

TEST_CASE("radial embeddings") {
  auto star = radial(fixtures::star3());
  CHECK(star.map.num_vertices() == 4);
  CHECK(star.face_of.size() == 1);
  CHECK(std::count(star.vkind.begin(), star.vkind.end(), RadialKind::FaceVertex) == 1);

  auto loop = radial(EmbeddedHypergraph::from_graph_map(fixtures::loop_sphere()));
  CHECK(std::count(loop.vkind.begin(), loop.vkind.end(), RadialKind::FaceVertex) == 2);
  CHECK(loop.map.num_edges() == 2);
  CHECK(loop.face_of.size() == 1);

  auto tet = EmbeddedHypergraph::from_graph_map(fixtures::tetrahedron());
  auto r = radial(tet);
  CHECK(r.map.num_vertices() == 8);
  CHECK(r.map.num_edges() == 12);
  const auto faces = trace_faces(r.map);
  REQUIRE(faces.size() == 6);
  for (const auto& walk : faces.faces) CHECK(walk.size() == 4);
  std::vector<int> sorted = r.face_of;
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == std::vector<int>{0, 1, 2, 3, 4, 5});
}

TEST_CASE("radial of an embedding and its dual coincide") {
  for (const auto& g : {fixtures::cube(), fixtures::torus_bouquet(), fixtures::projective_loop(), fixtures::theta()}) {
    auto l = EmbeddedHypergraph::from_graph_map(g);
    auto r = radial(l);
    CHECK(r.map.num_vertices() == static_cast<int>(l.element_vertices().size()) + l.num_faces());
    CHECK(trace_faces(r.map).size() == static_cast<int>(l.centres().size()));
    CHECK(radial_isomorphic(r, radial(hyper_dual(l))));
  }
}
