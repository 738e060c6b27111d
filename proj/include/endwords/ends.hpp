#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <unordered_map>
#include <vector>

#include "endwords/graph.hpp"

namespace endwords {

namespace detail {

struct UnionFind {
  std::vector<std::size_t> parent;

  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a < b) std::swap(a, b);
    parent[a] = b;
    return true;
  }
};

}  // namespace detail

// Vertices of level `depth` strictly farther than `radius` from the
// base, grouped by the edges that stay outside the ball.  Components
// are named by their least vertex id.
struct OutsideComponents {
  std::unordered_map<std::uint64_t, std::uint64_t> comp_of;
  std::vector<std::uint64_t> reps;  // sorted
};

inline OutsideComponents components_outside(const GraphLevels& g, int radius,
                                            int depth) {
  auto view = g.view(depth);
  const std::size_t n = view->vertices.size();
  std::vector<bool> outside(n);
  for (std::size_t i = 0; i < n; ++i) {
    outside[i] = view->dist[i] > radius;
  }
  detail::UnionFind uf(n);
  for (const EdgeInfo& e : view->edges) {
    const std::size_t iu = view->vindex.at(e.u), iv = view->vindex.at(e.v);
    if (outside[iu] && outside[iv]) uf.unite(iu, iv);
  }
  // The root with the least vertex id names the component; sweep twice
  // so every member maps to that name.
  std::unordered_map<std::size_t, std::uint64_t> name;
  for (std::size_t i = 0; i < n; ++i) {
    if (!outside[i]) continue;
    auto [it, fresh] = name.try_emplace(uf.find(i), view->vertices[i].id);
    if (!fresh && view->vertices[i].id < it->second) {
      it->second = view->vertices[i].id;
    }
  }
  OutsideComponents out;
  for (std::size_t i = 0; i < n; ++i) {
    if (outside[i]) out.comp_of.emplace(view->vertices[i].id, name[uf.find(i)]);
  }
  out.reps.reserve(name.size());
  for (const auto& [root, rep] : name) {
    (void)root;
    out.reps.push_back(rep);
  }
  std::sort(out.reps.begin(), out.reps.end());
  return out;
}

// One direction to infinity, witnessed at every radius: entry r is the
// component outside the radius-r ball that this direction runs through.
struct EndThread {
  std::vector<std::uint64_t> rep_at_radius;  // size = depth

  std::uint64_t deepest() const { return rep_at_radius.back(); }
};

// Directions are seeded by the components outside the deepest ball and
// followed back down through every smaller radius.
inline std::vector<EndThread> end_threads(const GraphLevels& g, int depth) {
  std::vector<OutsideComponents> by_radius;
  by_radius.reserve(static_cast<std::size_t>(depth));
  for (int r = 0; r < depth; ++r) {
    by_radius.push_back(components_outside(g, r, depth));
  }
  std::vector<EndThread> threads;
  if (depth <= 0) return threads;
  const OutsideComponents& deepest = by_radius.back();
  // One witness vertex per deepest component.
  std::unordered_map<std::uint64_t, std::uint64_t> witness;
  for (const auto& [vid, rep] : deepest.comp_of) {
    auto it = witness.find(rep);
    if (it == witness.end() || vid < it->second) witness[rep] = vid;
  }
  for (std::uint64_t rep : deepest.reps) {
    EndThread t;
    t.rep_at_radius.reserve(static_cast<std::size_t>(depth));
    for (int r = 0; r < depth; ++r) {
      t.rep_at_radius.push_back(by_radius[r].comp_of.at(witness.at(rep)));
    }
    threads.push_back(std::move(t));
  }
  return threads;
}

}  // namespace endwords
