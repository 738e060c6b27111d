#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "endwords/ends.hpp"
#include "endwords/graph.hpp"
#include "endwords/verdict.hpp"

namespace endwords {

struct ChordInfo {
  std::uint32_t index;
  std::uint64_t edge_id;
  std::uint64_t u, v;  // u < v; forward traverses u to v
  int level;
};

// Spanning tree of one level, grown greedily over edges sorted by
// (level, id).  The greedy order makes the construction stable: deeper
// trees extend shallower ones, and an edge once kept or rejected never
// changes its mind.  Rejected edges are the chords, numbered in
// rejection order.
class SpanningTree {
 public:
  SpanningTree(const GraphLevels& g, int depth) : depth_(depth) {
    auto view = g.view(depth);
    build(*view, std::nullopt);
  }

  // Same split, but with the tree edge set imposed instead of grown.
  SpanningTree(const GraphLevels& g, int depth,
               const std::vector<std::uint64_t>& tree_edges)
      : depth_(depth) {
    auto view = g.view(depth);
    build(*view, std::set<std::uint64_t>(tree_edges.begin(), tree_edges.end()));
  }

  int depth() const { return depth_; }
  bool in_tree(std::uint64_t edge_id) const { return tree_ids_.count(edge_id); }
  const std::vector<EdgeInfo>& tree_edges() const { return tree_edges_; }
  const std::vector<ChordInfo>& chords() const { return chords_; }

  const ChordInfo& chord(std::uint32_t index) const {
    if (index >= chords_.size()) {
      throw std::out_of_range("chord " + std::to_string(index) +
                              " does not exist at depth " +
                              std::to_string(depth_));
    }
    return chords_[index];
  }

 private:
  void build(const LevelView& view, std::optional<std::set<std::uint64_t>> forced) {
    std::vector<EdgeInfo> edges = view.edges;
    std::sort(edges.begin(), edges.end(), [](const EdgeInfo& a, const EdgeInfo& b) {
      return a.level != b.level ? a.level < b.level : a.id < b.id;
    });
    detail::UnionFind uf(view.vertices.size());
    std::size_t joins = 0;
    for (const EdgeInfo& e : edges) {
      const std::size_t iu = view.vindex.at(e.u), iv = view.vindex.at(e.v);
      const bool take = forced ? forced->count(e.id) > 0 : uf.unite(iu, iv);
      if (forced && take && !uf.unite(iu, iv)) {
        throw std::invalid_argument("forced tree contains a cycle at edge " +
                                    std::to_string(e.id));
      }
      if (take) {
        ++joins;
        tree_ids_.insert(e.id);
        tree_edges_.push_back(e);
      } else {
        ChordInfo c;
        c.index = static_cast<std::uint32_t>(chords_.size());
        c.edge_id = e.id;
        c.u = std::min(e.u, e.v);
        c.v = std::max(e.u, e.v);
        c.level = e.level;
        chords_.push_back(c);
      }
    }
    if (!view.vertices.empty() && joins + 1 != view.vertices.size()) {
      throw std::invalid_argument("tree does not span level " +
                                  std::to_string(depth_));
    }
  }

  int depth_;
  std::unordered_set<std::uint64_t> tree_ids_;
  std::vector<EdgeInfo> tree_edges_;
  std::vector<ChordInfo> chords_;
};

// Region label of every chord at one radius: nullopt for chords touching
// the ball or straddling two outside components, otherwise the component
// both endpoints share.
inline std::vector<std::optional<std::uint64_t>> chord_regions(
    const GraphLevels& g, const SpanningTree& tree, int radius, int depth) {
  auto view = g.view(depth);
  OutsideComponents comps = components_outside(g, radius, depth);
  std::vector<std::optional<std::uint64_t>> out;
  out.reserve(tree.chords().size());
  for (const ChordInfo& c : tree.chords()) {
    auto iu = view->vindex.find(c.u);
    auto iv = view->vindex.find(c.v);
    if (iu == view->vindex.end() || iv == view->vindex.end()) {
      out.emplace_back(std::nullopt);
      continue;
    }
    if (view->dist[iu->second] <= radius || view->dist[iv->second] <= radius) {
      out.emplace_back(std::nullopt);
      continue;
    }
    const std::uint64_t cu = comps.comp_of.at(c.u), cv = comps.comp_of.at(c.v);
    out.emplace_back(cu == cv ? std::optional<std::uint64_t>(cu) : std::nullopt);
  }
  return out;
}

// Tree components outside a ball, as a map vertex id -> least member id.
inline std::unordered_map<std::uint64_t, std::uint64_t> tree_components_outside(
    const GraphLevels& g, const SpanningTree& tree, int radius, int depth) {
  auto view = g.view(depth);
  const std::size_t n = view->vertices.size();
  std::vector<bool> outside(n);
  for (std::size_t i = 0; i < n; ++i) outside[i] = view->dist[i] > radius;
  detail::UnionFind uf(n);
  for (const EdgeInfo& e : tree.tree_edges()) {
    const std::size_t iu = view->vindex.at(e.u), iv = view->vindex.at(e.v);
    if (outside[iu] && outside[iv]) uf.unite(iu, iv);
  }
  std::unordered_map<std::size_t, std::uint64_t> name;
  for (std::size_t i = 0; i < n; ++i) {
    if (!outside[i]) continue;
    auto [it, fresh] = name.try_emplace(uf.find(i), view->vertices[i].id);
    if (!fresh && view->vertices[i].id < it->second) {
      it->second = view->vertices[i].id;
    }
  }
  std::unordered_map<std::uint64_t, std::uint64_t> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (outside[i]) out.emplace(view->vertices[i].id, name[uf.find(i)]);
  }
  return out;
}

// A sound spanning tree must not approach one and the same direction to
// infinity along two branches that never meet outside any ball: gluing
// the direction's point back in would close a circle through it.  Deep
// tree pieces serving a direction may be many (a winding tree crosses a
// sphere in many arcs), but every pair of them has to hang together
// once the radius shrinks enough.  A pair still apart at radius 0 is a
// genuine second branch.
inline Verdict is_topological_tree_up_to(const GraphLevels& g,
                                         const SpanningTree& tree, int depth) {
  const std::vector<EndThread> threads = end_threads(g, depth);
  if (threads.empty()) return Verdict(VerdictKind::TreeOkUpTo, depth);
  const auto deep_graph = components_outside(g, depth - 1, depth);
  const auto deep_tree = tree_components_outside(g, tree, depth - 1, depth);
  // One witness vertex per deep tree piece.
  std::unordered_map<std::uint64_t, std::uint64_t> witness;
  for (const auto& [vid, rep] : deep_tree) {
    auto [it, fresh] = witness.try_emplace(rep, vid);
    if (!fresh && vid < it->second) it->second = vid;
  }
  std::vector<std::unordered_map<std::uint64_t, std::uint64_t>> comps_at;
  for (int r = 0; r + 2 <= depth; ++r) {
    comps_at.push_back(tree_components_outside(g, tree, r, depth));
  }
  for (const EndThread& t : threads) {
    std::vector<std::uint64_t> ws;
    for (const auto& [rep, w] : witness) {
      (void)rep;
      if (deep_graph.comp_of.at(w) == t.deepest()) ws.push_back(w);
    }
    if (ws.size() < 2) continue;
    std::sort(ws.begin(), ws.end());
    detail::UnionFind merged(ws.size());
    for (const auto& comps : comps_at) {
      std::unordered_map<std::uint64_t, std::size_t> first_in_piece;
      for (std::size_t i = 0; i < ws.size(); ++i) {
        auto [it, fresh] = first_in_piece.try_emplace(comps.at(ws[i]), i);
        if (!fresh) merged.unite(it->second, i);
      }
    }
    std::vector<std::size_t> roots;
    for (std::size_t i = 0; i < ws.size(); ++i) {
      if (merged.find(i) == i) roots.push_back(i);
    }
    if (roots.size() >= 2) {
      return Verdict(VerdictKind::TreeViolation, depth,
                     "branches through " + std::to_string(ws[roots[0]]) +
                         " and " + std::to_string(ws[roots[1]]) +
                         " approach the direction through " +
                         std::to_string(t.deepest()) +
                         " without ever meeting outside a ball");
    }
  }
  return Verdict(VerdictKind::TreeOkUpTo, depth);
}

// Searches for a radius past which a direction's territory carries no
// chord at all.  Radii run to depth-2 only; the last shell has no room
// left to show chords and would report hollow successes.
inline Verdict trivial_end_check(const GraphLevels& g, const SpanningTree& tree,
                                 const EndThread& thread, int depth) {
  std::size_t last_count = 0;
  for (int r = 0; r + 2 <= depth; ++r) {
    const OutsideComponents comps = components_outside(g, r, depth);
    std::size_t count = 0;
    for (const ChordInfo& c : tree.chords()) {
      auto iu = comps.comp_of.find(c.u);
      auto iv = comps.comp_of.find(c.v);
      if (iu == comps.comp_of.end() || iv == comps.comp_of.end()) continue;
      if (iu->second == thread.rep_at_radius[static_cast<std::size_t>(r)] &&
          iv->second == iu->second) {
        ++count;
      }
    }
    if (count == 0) {
      return Verdict(VerdictKind::TrivialAt, r,
                     "no chord beyond radius " + std::to_string(r) +
                         " in this direction (depth " + std::to_string(depth) +
                         ")");
    }
    last_count = count;
  }
  return Verdict(VerdictKind::NontrivialUpTo, depth - 2).with_count(last_count);
}

}  // namespace endwords
