#pragma once

#include "surftw/embedded_hypergraph.hpp"
#include "surftw/surface_map.hpp"

namespace fixtures {

using surftw::from_cycles;
using surftw::SurfaceMap;

inline SurfaceMap loop_sphere() { return from_cycles({{0, 1}}); }
inline SurfaceMap torus_bouquet() { return from_cycles({{0, 2, 1, 3}}); }
inline SurfaceMap projective_loop() { return from_cycles({{0, 1}}, {-1}); }
inline SurfaceMap bridge() { return from_cycles({{0}, {1}}); }
inline SurfaceMap theta() { return from_cycles({{0, 2, 4}, {1, 5, 3}}); }
inline SurfaceMap triangle() { return from_cycles({{0, 5}, {1, 2}, {3, 4}}); }

// Planar K4: outer triangle 0,1,2 and centre 3.
inline SurfaceMap tetrahedron() { return from_cycles({{0, 7, 5}, {2, 9, 1}, {4, 11, 3}, {6, 8, 10}}); }

// Planar prism over an n-cycle; n = 4 is the cube.
inline SurfaceMap prism(int n) {
  std::vector<std::vector<int>> cycles;
  auto outer = [&](int k) { return 2 * ((k + n) % n); };
  auto inner = [&](int k) { return 2 * (n + (k + n) % n); };
  auto spoke = [&](int k) { return 2 * (2 * n + k); };
  for (int k = 0; k < n; ++k) cycles.push_back({outer(k), spoke(k), outer(k - 1) + 1});
  for (int k = 0; k < n; ++k) cycles.push_back({spoke(k) + 1, inner(k), inner(k - 1) + 1});
  return from_cycles(cycles);
}
inline SurfaceMap cube() { return prism(4); }

// Single hyperedge {a,b,c} on the sphere: a centre with three pendant elements.
inline surftw::EmbeddedHypergraph star3() {
  // darts: incidence edge i has darts 2i (centre) and 2i+1 (element).
  SurfaceMap m = from_cycles({{0, 2, 4}, {1}, {3}, {5}});
  using surftw::VertexClass;
  return {m, {VertexClass::Centre, VertexClass::Element, VertexClass::Element, VertexClass::Element}};
}

// Loop e at v with edge a inside and f outside (sphere); edges a, f are
// pendant edges to new vertices x, y.
inline SurfaceMap troublesome_loop() {
  // e = darts 0/1, a = 2/3 (v->x), f = 4/5 (v->y).
  return from_cycles({{0, 2, 1, 4}, {3}, {5}});
}

}  // namespace fixtures

namespace fixtures {

// Two vertices joined by k parallel edges, planar.
inline SurfaceMap multi_theta(int k) {
  std::vector<int> u, v;
  for (int e = 0; e < k; ++e) u.push_back(2 * e);
  for (int e = k - 1; e >= 0; --e) v.push_back(2 * e + 1);
  return from_cycles({u, v});
}

// Path on n+1 vertices with n edges.
inline SurfaceMap path(int n) {
  std::vector<std::vector<int>> cycles{{0}};
  for (int i = 1; i < n; ++i) cycles.push_back({2 * (i - 1) + 1, 2 * i});
  cycles.push_back({2 * (n - 1) + 1});
  return from_cycles(cycles);
}

// Loop e (0/1) at v with pendant edges a1 (2/3), a2 (4/5) inside and f (6/7)
// outside.
inline SurfaceMap troublesome_loop4() { return from_cycles({{0, 2, 4, 1, 6}, {3}, {5}, {7}}); }

}  // namespace fixtures
