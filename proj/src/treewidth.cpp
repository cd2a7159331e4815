#include "surftw/treewidth.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <mutex>
#include <set>

namespace surftw {

namespace {

using Mask = std::uint32_t;

// Vertices outside s ∪ {v} reachable from v through s.
int q_size(const std::vector<Mask>& adj, Mask s, int v) {
  Mask seen = Mask{1} << v;
  Mask frontier = seen;
  Mask outside = 0;
  while (frontier) {
    Mask next = 0;
    for (Mask f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
    outside |= next & ~s & ~seen;
    next &= s & ~seen;
    seen |= next;
    frontier = next;
  }
  return std::popcount(outside);
}

std::mutex cache_mutex;
std::map<std::string, TreewidthResult>& cache() {
  static std::map<std::string, TreewidthResult> c;
  return c;
}

}  // namespace

int oracle_limit() {
  if (const char* env = std::getenv("SURFTW_ORACLE_LIMIT")) {
    const int v = std::atoi(env);
    if (v > 0) return std::min(v, 30);
  }
  return 18;
}

TreeDecomposition decomposition_from_order(const Hypergraph& h, const std::vector<int>& order) {
  const int n = h.num_vertices();
  TreeDecomposition td;
  if (n == 0) {
    td.bags.push_back({});
    return td;
  }
  auto adj0 = h.primal_adjacency();
  std::vector<std::set<int>> adj(n);
  for (int v = 0; v < n; ++v) adj[v].insert(adj0[v].begin(), adj0[v].end());
  std::vector<int> position(n, -1);
  for (int i = 0; i < n; ++i) position[order[i]] = i;

  std::vector<int> parent(n, -1);
  td.bags.resize(n);
  for (int i = 0; i < n; ++i) {
    const int v = order[i];
    std::vector<int> later;
    for (int w : adj[v])
      if (position[w] > i) later.push_back(w);
    for (int a : later)
      for (int b : later)
        if (a != b) adj[a].insert(b);
    VertexSet bag{h.vertices()[v]};
    int best = -1;
    for (int w : later) {
      bag.push_back(h.vertices()[w]);
      if (best < 0 || position[w] < position[best]) best = w;
    }
    std::sort(bag.begin(), bag.end());
    td.bags[i] = std::move(bag);
    parent[i] = best < 0 ? -1 : position[best];
  }
  // Roots of the elimination forest are chained together.
  int previous_root = -1;
  for (int i = 0; i < n; ++i) {
    if (parent[i] >= 0) {
      td.edges.emplace_back(i, parent[i]);
    } else {
      if (previous_root >= 0) td.edges.emplace_back(previous_root, i);
      previous_root = i;
    }
  }
  return td;
}

TreewidthResult exact_treewidth(const Hypergraph& h, int limit) {
  if (limit < 0) limit = oracle_limit();
  const int n = h.num_vertices();
  if (n > limit)
    throw Error(ErrorCode::TooLarge, "exact tree-width limited to " + std::to_string(limit) + " vertices, got " +
                                         std::to_string(n));
  const std::string key = shape_key(h);
  {
    std::lock_guard lock(cache_mutex);
    auto it = cache().find(key);
    if (it != cache().end()) return it->second;
  }

  TreewidthResult result;
  if (n == 0) {
    result.width = -1;
    result.decomposition.bags.push_back({});
  } else {
    const auto lists = h.primal_adjacency();
    std::vector<Mask> adj(n, 0);
    for (int v = 0; v < n; ++v)
      for (int w : lists[v]) adj[v] |= Mask{1} << w;
    const std::size_t total = std::size_t{1} << n;
    std::vector<std::int8_t> tw(total, 0);
    tw[0] = -1;
    for (std::size_t s = 1; s < total; ++s) {
      int best = 127;
      for (Mask rest = static_cast<Mask>(s); rest; rest &= rest - 1) {
        const int v = std::countr_zero(rest);
        const Mask without = static_cast<Mask>(s) & ~(Mask{1} << v);
        const int prior = tw[without];
        if (prior >= best) continue;
        best = std::min(best, std::max(prior, q_size(adj, without, v)));
      }
      tw[s] = static_cast<std::int8_t>(best);
    }
    std::vector<int> order(n);
    Mask s = static_cast<Mask>(total - 1);
    for (int i = n - 1; i >= 0; --i) {
      for (Mask rest = s; rest; rest &= rest - 1) {
        const int v = std::countr_zero(rest);
        const Mask without = s & ~(Mask{1} << v);
        if (std::max<int>(tw[without], q_size(adj, without, v)) == tw[s]) {
          order[i] = v;
          s = without;
          break;
        }
      }
    }
    result.width = tw[total - 1];
    result.decomposition = decomposition_from_order(h, order);
    if (width(result.decomposition) != result.width || !validate_td(h, result.decomposition).ok())
      throw Error(ErrorCode::Internal, "exact oracle produced an inconsistent witness");
  }
  std::lock_guard lock(cache_mutex);
  cache().emplace(key, result);
  return result;
}

}  // namespace surftw
