#include "surftw/bramble.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace surftw {

namespace {

struct GraphView {
  std::map<int, int> position;
  std::vector<std::vector<int>> adj;

  explicit GraphView(const Hypergraph& g) : adj(g.primal_adjacency()) {
    for (int i = 0; i < g.num_vertices(); ++i) position[g.vertices()[i]] = i;
  }

  int at(int v) const {
    auto it = position.find(v);
    if (it == position.end()) throw Error(ErrorCode::BadInput, "bramble uses unknown vertex " + std::to_string(v));
    return it->second;
  }
};

bool connected_subset(const GraphView& g, const std::set<int>& members) {
  if (members.empty()) return false;
  std::set<int> seen{*members.begin()};
  std::vector<int> stack{*members.begin()};
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : g.adj[v])
      if (members.count(w) && seen.insert(w).second) stack.push_back(w);
  }
  return seen.size() == members.size();
}

struct HittingSearch {
  std::vector<std::vector<int>> sets;
  std::int64_t budget;
  std::int64_t spent = 0;
  std::vector<int> hit_count;

  bool feasible(int k) {
    if (++spent > budget) throw Error(ErrorCode::TooLarge, "hitting-set search budget exhausted");
    int pick = -1;
    for (int i = 0; i < static_cast<int>(sets.size()); ++i)
      if (hit_count[i] == 0 && (pick < 0 || sets[i].size() < sets[pick].size())) pick = i;
    if (pick < 0) return true;
    if (k == 0) return false;
    for (int v : sets[pick]) {
      apply(v, +1);
      const bool ok = feasible(k - 1);
      apply(v, -1);
      if (ok) return true;
    }
    return false;
  }

  std::vector<std::vector<int>> containing;
  void apply(int v, int delta) {
    for (int i : containing[v]) hit_count[i] += delta;
  }
};

}  // namespace

bool is_bramble(const Hypergraph& g, const Bramble& b) {
  const GraphView view(g);
  std::vector<std::set<int>> members;
  for (const auto& element : b.elements) {
    std::set<int> m;
    for (int v : element) m.insert(view.at(v));
    if (!connected_subset(view, m)) return false;
    members.push_back(std::move(m));
  }
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      bool touch = false;
      for (int v : members[i]) {
        if (members[j].count(v)) touch = true;
        for (int w : view.adj[v])
          if (members[j].count(w)) touch = true;
        if (touch) break;
      }
      if (!touch) return false;
    }
  return true;
}

int bramble_order(const Bramble& b, std::int64_t budget) {
  if (b.elements.empty()) return 0;
  std::map<int, int> index;
  HittingSearch search;
  search.budget = budget;
  for (const auto& element : b.elements) {
    if (element.empty()) throw Error(ErrorCode::BadInput, "empty bramble element");
    std::vector<int> s;
    for (int v : element) {
      auto [it, fresh] = index.emplace(v, static_cast<int>(index.size()));
      if (fresh) search.containing.emplace_back();
      s.push_back(it->second);
    }
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    search.sets.push_back(std::move(s));
  }
  for (int i = 0; i < static_cast<int>(search.sets.size()); ++i)
    for (int v : search.sets[i]) search.containing[v].push_back(i);
  search.hit_count.assign(search.sets.size(), 0);
  for (int k = 1;; ++k)
    if (search.feasible(k)) return k;
}

}  // namespace surftw
