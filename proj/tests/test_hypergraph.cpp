#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "surftw/bramble.hpp"
#include "surftw/treewidth.hpp"

using namespace surftw;

namespace {

// a=0, b=1, c=2, d=3
Hypergraph triangle() { return Hypergraph::from_graph(3, {{0, 1}, {1, 2}, {2, 0}}); }
Hypergraph path4() { return Hypergraph::from_graph(4, {{0, 1}, {1, 2}, {2, 3}}); }

Hypergraph grid(int n, int m) {
  std::vector<std::pair<int, int>> edges;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < m; ++c) {
      if (c + 1 < m) edges.emplace_back(r * m + c, r * m + c + 1);
      if (r + 1 < n) edges.emplace_back(r * m + c, (r + 1) * m + c);
    }
  return Hypergraph::from_graph(n * m, edges);
}

// Brute-force oracle: minimum over all elimination orders.
int brute_treewidth(const Hypergraph& h) {
  std::vector<int> order(h.num_vertices());
  std::iota(order.begin(), order.end(), 0);
  int best = 1 << 20;
  do best = std::min(best, width(decomposition_from_order(h, order)));
  while (std::next_permutation(order.begin(), order.end()));
  return best;
}

Hypergraph random_hypergraph(std::mt19937& rng, int n, int m) {
  std::vector<HyperEdge> edges;
  std::uniform_int_distribution<int> size(1, 3), vertex(0, n - 1);
  for (int i = 0; i < m; ++i) {
    VertexSet ends;
    const int k = size(rng);
    for (int j = 0; j < k; ++j) ends.push_back(vertex(rng));
    edges.push_back({{i}, ends});
  }
  std::set<int> used;
  for (auto& e : edges) used.insert(e.ends.begin(), e.ends.end());
  return Hypergraph(VertexSet(used.begin(), used.end()), edges);
}

}  // namespace

TEST_CASE("border") {
  auto t = triangle();
  CHECK(border(t, {{0}, {1}, {2}}) == VertexSet{0, 1, 2});
  CHECK(border(t, {{0, 1}, {2}}) == VertexSet{0, 2});
  CHECK(border(t, {{0, 1, 2}}).empty());
  CHECK_THROWS_AS(border(t, {{0, 1}}), Error);
  CHECK_THROWS_AS(border(t, {{0, 1}, {1, 2}}), Error);
  std::vector<int> a{0, 1};
  CHECK(border_of_subset(t, a) == border(t, {{0, 1}, {2}}));
}

TEST_CASE("contraction") {
  auto t = triangle();
  std::vector<int> a{0};
  auto c = contract(t, a);
  CHECK(c.vertices() == VertexSet{0, 1, 2});
  REQUIRE(c.num_edges() == 3);
  CHECK(c.edges().back().ends == VertexSet{0, 1});
  CHECK(c.edges().back().label == EdgeLabel{0});

  std::vector<int> ab{0, 1};
  auto p = contract(path4(), ab);
  CHECK(p.vertices() == VertexSet{2, 3});
  REQUIRE(p.num_edges() == 2);
  CHECK(p.edges()[0].ends == VertexSet{2, 3});
  CHECK(p.edges()[1].ends == VertexSet{2});
  CHECK(p.edges()[1].label == EdgeLabel{0, 1});

  auto star = Hypergraph::from_graph(4, {{0, 1}, {0, 2}, {0, 3}});
  std::vector<int> pendant{2};
  CHECK(contract(star, pendant).edges().back().ends == VertexSet{0});

  std::vector<int> none, all{0, 1, 2};
  CHECK_THROWS_AS(contract(t, none), Error);
  CHECK_THROWS_AS(contract(t, all), Error);
}

TEST_CASE("tree decomposition validation") {
  auto t = triangle();
  TreeDecomposition single{{{0, 1, 2}}, {}};
  CHECK(validate_td(t, single).ok());
  CHECK(width(single) == 2);

  auto g = grid(4, 5);
  // Sweep decomposition: windows of 5 consecutive vertices in row-major order.
  TreeDecomposition sweep;
  for (int i = 0; i + 5 < 20; ++i) {
    VertexSet bag;
    for (int j = i; j <= i + 5; ++j) bag.push_back(j);
    sweep.bags.push_back(bag);
    if (i) sweep.edges.emplace_back(i - 1, i);
  }
  // A window of size 6 is needed for the row-major sweep; the transposed sweep
  // is the width-4 one.
  CHECK(validate_td(g, sweep).ok());
  TreeDecomposition columns;
  std::vector<int> colmajor;
  for (int c = 0; c < 5; ++c)
    for (int r = 0; r < 4; ++r) colmajor.push_back(r * 5 + c);
  for (int i = 0; i + 4 < 20; ++i) {
    VertexSet bag(colmajor.begin() + i, colmajor.begin() + i + 5);
    std::sort(bag.begin(), bag.end());
    columns.bags.push_back(bag);
    if (i) columns.edges.emplace_back(i - 1, i);
  }
  CHECK(validate_td(g, columns).ok());
  CHECK(width(columns) == 4);

  TreeDecomposition broken{{{0, 1}, {1, 2}, {0, 2}}, {{0, 1}, {1, 2}}};
  CHECK_FALSE(validate_td(t, broken).ok());
  TreeDecomposition cyclic{{{0, 1, 2}, {0, 1}}, {{0, 1}, {1, 0}}};
  CHECK_FALSE(validate_td(t, cyclic).ok());
}

TEST_CASE("normalize") {
  TreeDecomposition two{{{0, 1}, {0, 1, 2}}, {{0, 1}}};
  auto n = normalize_td(two);
  CHECK(n.bags == std::vector<VertexSet>{{0, 1, 2}});
  TreeDecomposition chain{{{0, 1}, {0, 1}, {1, 2}}, {{0, 1}, {1, 2}}};
  n = normalize_td(chain);
  CHECK(n.bags == std::vector<VertexSet>{{0, 1}, {1, 2}});
  CHECK(normalize_td(n) == n);
}

TEST_CASE("merge and restrict") {
  auto t = triangle();
  std::vector<int> a{0}, b{1, 2};
  auto ta = exact_treewidth(contract(t, a)).decomposition;
  auto tb = exact_treewidth(contract(t, b)).decomposition;
  auto merged = merge_td(t, a, ta, tb);
  CHECK(validate_td(t, merged).ok());
  CHECK(width(merged) == std::max(width(ta), width(tb)));

  auto p = path4();
  std::vector<int> left{0}, right{1, 2};
  auto pm = merge_td(p, left, exact_treewidth(contract(p, left)).decomposition,
                     exact_treewidth(contract(p, right)).decomposition);
  CHECK(validate_td(p, pm).ok());
  CHECK(width(pm) == 1);

  TreeDecomposition single{{{0, 1, 2}}, {}};
  auto r = restrict_td(t, single, b);
  CHECK(validate_td(contract(t, a), r).ok());

  TreeDecomposition pd{{{0, 1}, {1, 2}, {2, 3}}, {{0, 1}, {1, 2}}};
  std::vector<int> kept{2, 1};
  std::vector<int> gone{0};
  auto pr = restrict_td(p, pd, kept);
  CHECK(pr.bags == std::vector<VertexSet>{{1}, {1, 2}, {2, 3}});
  CHECK(validate_td(contract(p, gone), pr).ok());
  std::vector<int> every{0, 1, 2};
  CHECK(restrict_td(p, pd, every) == pd);

  TreeDecomposition loose{{{0, 1}, {1, 2}, {2, 3}}, {{0, 1}, {1, 2}}};
  auto square = Hypergraph::from_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  std::vector<int> two{1, 2};
  CHECK_THROWS_AS(restrict_td(square, loose, two), Error);
}

TEST_CASE("exact tree-width") {
  Hypergraph single({0, 1, 2}, {{{0}, {0, 1, 2}}});
  CHECK(exact_treewidth(single).width == 2);
  CHECK(exact_treewidth(triangle()).width == 2);
  CHECK(exact_treewidth(path4()).width == 1);
  for (int n = 2; n <= 4; ++n)
    for (int m = 2; m <= 4; ++m) CHECK(exact_treewidth(grid(n, m)).width == std::min(n, m));
  CHECK(exact_treewidth(Hypergraph()).width == -1);
  CHECK_THROWS_AS(exact_treewidth(grid(4, 5)), Error);
  CHECK(exact_treewidth(grid(4, 5), 20).width == 4);
}

TEST_CASE("exact tree-width agrees with brute force") {
  std::mt19937 rng(7);
  for (int i = 0; i < 40; ++i) {
    auto h = random_hypergraph(rng, 7, 6);
    auto r = exact_treewidth(h);
    CHECK(validate_td(h, r.decomposition).ok());
    CHECK(r.width == brute_treewidth(h));
  }
}

TEST_CASE("contraction of decompositions on random hypergraphs") {
  std::mt19937 rng(11);
  for (int i = 0; i < 25; ++i) {
    auto h = random_hypergraph(rng, 8, 7);
    const int tw = exact_treewidth(h).width;
    const auto opt = exact_treewidth(h).decomposition;
    const int m = h.num_edges();
    for (int mask = 1; mask + 1 < (1 << m); ++mask) {
      std::vector<int> a, b;
      for (int e = 0; e < m; ++e) ((mask >> e) & 1 ? a : b).push_back(e);
      const int wa = exact_treewidth(contract(h, a)).width;
      const int wb = exact_treewidth(contract(h, b)).width;
      CHECK(tw <= std::max(wa, wb));
      const VertexSet sep = border_of_subset(h, a);
      const bool in_bag = std::any_of(opt.bags.begin(), opt.bags.end(), [&](const VertexSet& bag) {
        return std::includes(bag.begin(), bag.end(), sep.begin(), sep.end());
      });
      if (in_bag) CHECK(tw == std::max(wa, wb));
    }
  }
}

TEST_CASE("border is stable under contraction of a disjoint set") {
  std::mt19937 rng(5);
  for (int i = 0; i < 30; ++i) {
    auto h = random_hypergraph(rng, 8, 7);
    std::vector<int> a{0, 1};
    auto c = contract(h, a);
    // Edges 2..6 keep their relative order at positions 0..4.
    std::vector<int> in_h{2, 4}, in_c{0, 2};
    CHECK(border_of_subset(h, in_h) == border_of_subset(c, in_c));
  }
}

TEST_CASE("pace round trip") {
  TreeDecomposition pd{{{0, 1}, {1, 2}, {2, 3}}, {{0, 1}, {1, 2}}};
  const auto text = to_pace_td(pd, 4);
  CHECK(text.rfind("s td 3 2 4\n", 0) == 0);
  CHECK(parse_pace_td(text) == pd);
  CHECK_THROWS_AS(parse_pace_td("b 1 1\n"), Error);
}

TEST_CASE("brambles") {
  auto p = path4();
  CHECK(bramble_order({{{0}}}) == 1);
  CHECK(is_bramble(p, {{{0, 1}, {1, 2}}}));
  CHECK_FALSE(is_bramble(p, {{{0}, {3}}}));
  CHECK_FALSE(is_bramble(p, {{{0, 2}}}));
  auto g = grid(3, 3);
  // Rows ∪ columns crosses: order 3 bramble of the 3x3 grid.
  Bramble crosses;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      std::set<int> s;
      for (int j = 0; j < 3; ++j) s.insert(r * 3 + j), s.insert(j * 3 + c);
      crosses.elements.emplace_back(s.begin(), s.end());
    }
  CHECK(is_bramble(g, crosses));
  CHECK(bramble_order(crosses) == 3);
  CHECK(bramble_order(crosses) - 1 <= exact_treewidth(g).width);
  CHECK_THROWS_AS(bramble_order(crosses, 2), Error);
}
