#include <algorithm>
#include <numeric>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "surftw/pi_structure.hpp"

using namespace surftw;

namespace {

PiStructure pi_of(const SurfaceMap& g) { return PiStructure::of(EmbeddedHypergraph::from_graph_map(g)); }

std::vector<int> subset_of(int mask, int m) {
  std::vector<int> out;
  for (int e = 0; e < m; ++e)
    if ((mask >> e) & 1) out.push_back(e);
  return out;
}

// Position of each old edge after contracting A (A -> last position).
std::vector<int> remap_after(int m, const std::vector<int>& a) {
  std::vector<int> out(m);
  int next = 0;
  for (int e = 0; e < m; ++e)
    if (!std::count(a.begin(), a.end(), e)) out[e] = next++;
  for (int e : a) out[e] = next;
  return out;
}

std::set<std::vector<int>> image(const EdgePartition& mu, const std::vector<int>& remap) {
  std::set<std::vector<int>> out;
  for (const auto& part : mu) {
    std::set<int> s;
    for (int e : part) s.insert(remap[e]);
    out.emplace(s.begin(), s.end());
  }
  return out;
}

// Remark on contraction, checked over every Π-connected proper A.
void check_contraction_remark(const PiStructure& pi) {
  const int m = pi.num_faces();
  const auto trouble = troublesome_edges(pi);
  for (int mask = 1; mask + 1 < (1 << m); ++mask) {
    const auto a = subset_of(mask, m);
    if (!is_pi_connected(pi, a)) {
      CHECK_THROWS_AS(contract(pi, a), Error);
      continue;
    }
    const auto c = contract(pi, a);
    CHECK(c.lambda() == contract(pi.lambda(), a));
    CHECK_FALSE(c.two_cell());
    const auto remap = remap_after(m, a);
    const int ea = c.num_faces() - 1;
    std::vector<int> identity(c.num_faces());
    std::iota(identity.begin(), identity.end(), 0);
    // (i) part by part.
    const int rest_mask = ((1 << m) - 1) & ~mask;
    for (int s = rest_mask;; s = (s - 1) & rest_mask) {
      const auto part = subset_of(s, m);
      std::vector<int> with_a = part, with_ea;
      with_a.insert(with_a.end(), a.begin(), a.end());
      for (int e : part) with_ea.push_back(remap[e]);
      std::vector<int> plain = with_ea;
      with_ea.push_back(ea);
      CHECK(is_pi_connected(pi, with_a) == is_pi_connected(c, with_ea));
      if (!part.empty()) CHECK(is_pi_connected(pi, part) == is_pi_connected(c, plain));
      if (s == 0) break;
    }
    // (ii) and (iii) for edges outside A.
    const auto trouble_c = troublesome_edges(c);
    for (int e = 0; e < m; ++e) {
      if (mask >> e & 1) continue;
      const bool in_lambda = std::count(trouble.begin(), trouble.end(), e) > 0;
      const bool in_contracted = std::count(trouble_c.begin(), trouble_c.end(), remap[e]) > 0;
      CHECK(in_lambda == in_contracted);
      if (in_lambda && in_contracted)
        CHECK(image(e_partition(pi, e), remap) == image(e_partition(c, remap[e]), identity));
    }
  }
}

}  // namespace

TEST_CASE("radial structure of the theta graph") {
  auto pi = pi_of(fixtures::theta());
  CHECK(pi.num_faces() == 3);
  CHECK(pi.edges().size() == 6);
  CHECK(pi.vertices().size() == 5);
  auto adj = adjacency(pi);
  for (int e = 0; e < 3; ++e) CHECK(adj[e].size() == 2);
  CHECK(troublesome_edges(pi).empty());

  std::vector<int> single{0};
  auto r = region(pi, single);
  CHECK(r.private_edges.empty());
  CHECK(r.private_vertices.empty());

  std::vector<int> two{0, 1};
  r = region(pi, two);
  CHECK(r.faces == std::vector<int>{0, 1});
  CHECK(r.private_edges.size() == 2);
  // The face-vertex between e1 and e2 sees only those two faces.
  REQUIRE(r.private_vertices.size() == 1);
  CHECK(pi.vertices()[r.private_vertices[0]].face_vertex);

  std::vector<int> all{0, 1, 2};
  r = region(pi, all);
  CHECK(r.private_edges.size() == pi.edges().size());
  CHECK(r.private_vertices.size() == pi.vertices().size());

  CHECK_THROWS_AS(region(pi, std::vector<EdgeLabel>{{7}}), Error);
  CHECK(region(pi, std::vector<EdgeLabel>{{1}}).faces == std::vector<int>{1});
}

TEST_CASE("troublesome loop") {
  // e = 0 (loop), a = 1 inside, f = 2 outside.
  auto pi = pi_of(fixtures::troublesome_loop());
  CHECK(troublesome_edges(pi) == std::vector<int>{0});
  CHECK(e_partition(pi, 0) == EdgePartition{{0}, {1}, {2}});
  CHECK_THROWS_AS(e_partition(pi, 1), Error);
  auto adj = adjacency(pi);
  CHECK(std::count(adj[1].begin(), adj[1].end(), 2) == 0);
  std::vector<int> af{1, 2};
  CHECK_FALSE(is_pi_connected(pi, af));
  CHECK(is_pi_connected(pi, EdgePartition{{0}, {1}, {2}}));
  CHECK_FALSE(is_pi_connected(pi, EdgePartition{{0}, {1, 2}}));
}

TEST_CASE("single edge has no troublesome edge") {
  auto pi = PiStructure::of(fixtures::star3());
  CHECK(troublesome_edges(pi).empty());
  std::vector<int> e{0};
  CHECK(is_pi_connected(pi, e));
}

TEST_CASE("contraction on theta") {
  auto pi = pi_of(fixtures::theta());
  std::vector<int> a{0};
  auto c = contract(pi, a);
  CHECK(c.num_faces() == 3);
  CHECK(c.lambda().num_edges() == 3);
  std::vector<int> rest{1, 2};
  auto c2 = contract(pi, rest);
  CHECK(c2.num_faces() == 2);
  // Contracting the complement next leaves e_A and e_B on the same border.
  std::vector<int> first{0};
  auto c3 = contract(c2, first);
  REQUIRE(c3.num_faces() == 2);
  CHECK(c3.lambda().edges()[0].ends == c3.lambda().edges()[1].ends);
  CHECK(c3.lambda().edges()[0].label == EdgeLabel{1, 2});
  CHECK(c3.lambda().edges()[1].label == EdgeLabel{0});
}

TEST_CASE("Π-connectivity matches connectivity in G^Π") {
  for (const auto& g : {fixtures::theta(), fixtures::troublesome_loop(), fixtures::tetrahedron(), fixtures::torus_bouquet(),
                        fixtures::projective_loop()}) {
    auto pi = pi_of(g);
    const auto adj = adjacency(pi);
    const int m = pi.num_faces();
    for (int mask = 1; mask < (1 << m); ++mask) {
      const auto a = subset_of(mask, m);
      std::vector<int> seen{a.front()};
      for (std::size_t i = 0; i < seen.size(); ++i)
        for (int f : adj[seen[i]])
          if ((mask >> f & 1) && !std::count(seen.begin(), seen.end(), f)) seen.push_back(f);
      CHECK(is_pi_connected(pi, a) == (seen.size() == a.size()));
    }
    for (int e = 0; e < m; ++e) {
      const auto t = troublesome_edges(pi);
      if (std::count(t.begin(), t.end(), e)) {
        CHECK(is_pi_connected(pi, e_partition(pi, e)));
      } else if (m > 1) {
        std::vector<int> rest;
        for (int f = 0; f < m; ++f)
          if (f != e) rest.push_back(f);
        CHECK(is_pi_connected(pi, rest));
      }
    }
  }
}

TEST_CASE("contraction remark on small instances") {
  for (const auto& g : {fixtures::theta(), fixtures::troublesome_loop(), fixtures::tetrahedron(), fixtures::torus_bouquet()})
    check_contraction_remark(pi_of(g));
}
