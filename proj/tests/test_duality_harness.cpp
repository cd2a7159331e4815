#include <algorithm>
#include <numeric>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "surftw/duality_harness.hpp"
#include "surftw/treewidth.hpp"

using namespace surftw;

namespace {

EmbeddedHypergraph graph(const SurfaceMap& g) { return EmbeddedHypergraph::from_graph_map(g); }

std::vector<int> colours(const EmbeddedHypergraph& l) {
  std::vector<int> c(2 * l.map().num_darts());
  for (int d = 0; d < l.map().num_darts(); ++d) c[2 * d] = c[2 * d + 1] = l.is_centre(l.map().vertex_of(d));
  return c;
}

// Every labelled incidence map with m incidence edges, no symmetry reduction.
std::set<std::vector<int>> brute_force_classes(int m) {
  std::set<std::vector<int>> out;
  std::vector<int> pe(m), pc(m);
  std::iota(pe.begin(), pe.end(), 0);
  do {
    std::iota(pc.begin(), pc.end(), 0);
    do {
      for (int mask = 0; mask < (1 << m); ++mask) {
        std::vector<int> inv(2 * m), rot(2 * m), sign(m);
        for (int i = 0; i < m; ++i) {
          inv[2 * i] = 2 * i + 1, inv[2 * i + 1] = 2 * i;
          rot[2 * i] = 2 * pe[i], rot[2 * i + 1] = 2 * pc[i] + 1;
          sign[i] = mask >> i & 1 ? -1 : 1;
        }
        SurfaceMap map(inv, rot, sign);
        if (!map.connected()) continue;
        std::vector<VertexClass> vc(map.num_vertices(), VertexClass::Element);
        for (int i = 0; i < m; ++i) vc[map.vertex_of(2 * i + 1)] = VertexClass::Centre;
        EmbeddedHypergraph l(map, vc);
        out.insert(canonical_code(gem_of(l.map()), colours(l)));
      }
    } while (std::next_permutation(pc.begin(), pc.end()));
  } while (std::next_permutation(pe.begin(), pe.end()));
  return out;
}

}  // namespace

TEST_CASE("node inequality on the theta graph") {
  const auto l = graph(fixtures::theta());
  const auto pi = PiStructure::of(l);
  const auto r = check_duality_bound(l);
  int centre = -1;
  for (int v = 0; v < r.ptree.num_nodes; ++v)
    if (!r.ptree.is_leaf(v)) centre = v;
  REQUIRE(centre >= 0);
  const auto n = node_inequality(l, pi, r.ptree, centre);
  CHECK(n.kind == NodeCase::Internal);
  CHECK(n.x.size() == 2);
  CHECK(n.x_star.size() == 3);
  CHECK(n.ok);
}

TEST_CASE("node inequality at leaves and troublesome neighbours") {
  const auto star = fixtures::star3();
  const auto r = check_duality_bound(star);
  REQUIRE(r.ptree.num_nodes == 1);
  const auto leaf = node_inequality(star, PiStructure::of(star), r.ptree, 0);
  CHECK(leaf.kind == NodeCase::Leaf);
  CHECK(leaf.x_star.size() == 1);
  CHECK(leaf.ok);

  const auto loop = graph(fixtures::troublesome_loop());
  const auto pi = PiStructure::of(loop);
  const auto rl = check_duality_bound(loop);
  const auto faces = face_hypergraph(loop);
  int found = 0;
  for (int v = 0; v < rl.ptree.num_nodes; ++v) {
    const auto n = node_inequality(loop, pi, rl.ptree, v);
    if (n.kind != NodeCase::TroublesomeNeighbour) continue;
    ++found;
    const auto& e_star = faces.edges()[0].ends;
    CHECK(e_star.size() == 2);
    CHECK(std::includes(e_star.begin(), e_star.end(), n.x_star.begin(), n.x_star.end()));
    CHECK(n.ok);
  }
  CHECK(found == 1);
}

TEST_CASE("node inequality rejects trees that are not p-trees") {
  // Loop with two pendant edges inside: grouping one inside edge with the
  // outside edge breaks condition (ii).
  const auto l = graph(fixtures::troublesome_loop4());
  const auto pi = PiStructure::of(l);
  PartitioningTree t;
  t.num_nodes = 6;
  t.edges = {{0, 1}, {0, 2}, {0, 3}, {3, 4}, {3, 5}};
  t.leaf_label = {{1, {0}}, {2, {1}}, {4, {2}}, {5, {3}}};
  CHECK_FALSE(is_ptree(t, pi).ok());
  CHECK_THROWS_AS(node_inequality(l, pi, t, 0), Error);
}

TEST_CASE("duality bound on named instances") {
  const auto theta = check_duality_bound(graph(fixtures::theta()));
  CHECK(theta.tw_lambda == 1);
  CHECK(theta.tw_dual == 2);
  CHECK(theta.k == 0);
  CHECK(theta.alpha_dual == 2);
  CHECK(theta.bound == 2);
  CHECK(theta.pass);
  CHECK(theta.tight);

  const auto star = fixtures::star3();
  const auto forward = check_duality_bound(star);
  CHECK(forward.tw_lambda == 2);
  CHECK(forward.tw_dual == 0);
  CHECK(forward.alpha_dual == 1);
  CHECK(forward.bound == 3);
  CHECK(forward.pass);
  const auto back = check_duality_bound(hyper_dual(star));
  CHECK(back.tw_lambda == 0);
  CHECK(back.tw_dual == 2);
  CHECK(back.alpha_dual == 3);
  CHECK(back.bound == 2);
  CHECK(back.pass);
  CHECK(back.tight);

  const auto bouquet = check_duality_bound(graph(fixtures::torus_bouquet()));
  CHECK(bouquet.k == 2);
  CHECK(bouquet.orientable);
  CHECK(bouquet.tw_lambda == 0);
  CHECK(bouquet.tw_dual == 0);
  CHECK(bouquet.pass);

  for (const auto& g : {fixtures::cube(), fixtures::tetrahedron(), fixtures::prism(5), fixtures::projective_loop(),
                        fixtures::troublesome_loop4(), fixtures::multi_theta(4)}) {
    const auto l = graph(g);
    const auto r = check_duality_bound(l);
    CHECK(r.pass);
    CHECK(r.nodes_ok);
    CHECK(check_duality_bound(hyper_dual(l)).pass);
  }
}

TEST_CASE("duality bound against an independent oracle") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 60; ++i) {
    const auto l = random_incidence_map(rng, 14);
    const auto r = check_duality_bound(l);
    const int tw = exact_treewidth(underlying_hypergraph(l)).width;
    const int tw_dual = exact_treewidth(underlying_hypergraph(hyper_dual(l))).width;
    int alpha = 0;
    for (const auto& e : underlying_hypergraph(hyper_dual(l)).edges()) alpha = std::max<int>(alpha, e.ends.size());
    const int k = 2 - (l.map().num_vertices() - l.map().num_edges() + l.num_faces());
    CHECK(r.tw_lambda == tw);
    CHECK(r.tw_dual == tw_dual);
    CHECK(r.k == k);
    CHECK(r.bound == std::max(tw + 1 + k, alpha - 1));
    CHECK(tw_dual <= r.bound);
    CHECK(r.tw_dual_tree >= tw_dual);
    CHECK(r.nodes_ok);
  }
}

TEST_CASE("enumeration matches unreduced enumeration") {
  const auto all = enumerate_incidence_maps(8);
  for (int m = 1; m <= 4; ++m) {
    std::size_t count = 0;
    for (const auto& l : all) count += l.map().num_edges() == m;
    CHECK(count == brute_force_classes(m).size());
  }
  std::set<std::vector<int>> codes;
  for (const auto& l : all) codes.insert(canonical_code(gem_of(l.map()), colours(l)));
  CHECK(codes.size() == all.size());
}

TEST_CASE("two-loop bouquets reach every Euler genus up to two") {
  std::set<int> genera;
  for (const auto& l : enumerate_incidence_maps(8)) {
    if (l.element_vertices().size() != 1 || l.centres().size() != 2) continue;
    bool loops = true;
    for (int c : l.centres()) loops = loops && l.map().darts_at(c).size() == 2;
    if (loops) genera.insert(euler_genus(l));
  }
  CHECK(genera == std::set<int>{0, 1, 2});
}

TEST_CASE("random maps are connected and reproducible") {
  std::mt19937_64 a(7), b(7);
  for (int i = 0; i < 50; ++i) {
    const auto x = random_incidence_map(a, 16);
    const auto y = random_incidence_map(b, 16);
    CHECK(x.map() == y.map());
    CHECK(x.map().connected());
    CHECK(x.map().num_darts() <= 16);
  }
}

TEST_CASE("small fuzz run finds no failures") {
  FuzzConfig config;
  config.exhaustive_darts = 8;
  config.random_count = 100;
  const auto s = fuzz_small_embeddings(config);
  CHECK(s.failures.empty());
  CHECK(s.checked == s.enumerated + s.random);
  CHECK(s.tight > 0);
}
