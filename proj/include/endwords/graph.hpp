#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <queue>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace endwords {

struct VertexInfo {
  std::uint64_t id;
  int level;
  std::string name;  // optional display name
};

struct EdgeInfo {
  std::uint64_t id;
  std::uint64_t u, v;
  int level;
};

// What a level adds on top of the previous one.
struct GraphSlice {
  std::vector<VertexInfo> vertices;
  std::vector<EdgeInfo> edges;
};

// Everything known once the first n+1 slices are merged: index maps,
// adjacency, and hop distances from the base vertex.
struct LevelView {
  std::vector<VertexInfo> vertices;
  std::vector<EdgeInfo> edges;
  std::unordered_map<std::uint64_t, std::size_t> vindex;
  // per vertex: (neighbor index, edge index)
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj;
  std::vector<int> dist;  // -1 when unreachable from base
  std::size_t base_index = 0;
  bool base_present = false;
};

// A locally finite graph presented as a growing union of finite graphs.
// Slice generators must be pure; copies share one memo table.
class GraphLevels {
 public:
  using SliceGen = std::function<GraphSlice(int)>;

  static GraphLevels from_slices(SliceGen gen, std::uint64_t base) {
    return GraphLevels(std::move(gen), base);
  }

  std::uint64_t base() const { return state_->base; }

  GraphSlice slice(int n) const {
    if (n < 0) return GraphSlice{};
    {
      std::lock_guard<std::mutex> lock(state_->mu);
      auto it = state_->slices.find(n);
      if (it != state_->slices.end()) return it->second;
    }
    GraphSlice s = state_->gen(n);
    std::lock_guard<std::mutex> lock(state_->mu);
    return state_->slices.emplace(n, std::move(s)).first->second;
  }

  std::shared_ptr<const LevelView> view(int n) const {
    {
      std::lock_guard<std::mutex> lock(state_->mu);
      auto it = state_->views.find(n);
      if (it != state_->views.end()) return it->second;
    }
    auto v = std::make_shared<LevelView>(build_view(n));
    std::lock_guard<std::mutex> lock(state_->mu);
    return state_->views.emplace(n, std::move(v)).first->second;
  }

 private:
  struct State {
    SliceGen gen;
    std::uint64_t base;
    std::mutex mu;
    std::map<int, GraphSlice> slices;
    std::map<int, std::shared_ptr<const LevelView>> views;
  };

  GraphLevels(SliceGen gen, std::uint64_t base)
      : state_(std::make_shared<State>()) {
    state_->gen = std::move(gen);
    state_->base = base;
  }

  LevelView build_view(int n) const {
    LevelView out;
    for (int m = 0; m <= n; ++m) {
      GraphSlice s = slice(m);
      out.vertices.insert(out.vertices.end(), s.vertices.begin(),
                          s.vertices.end());
      out.edges.insert(out.edges.end(), s.edges.begin(), s.edges.end());
    }
    out.vindex.reserve(out.vertices.size());
    for (std::size_t i = 0; i < out.vertices.size(); ++i) {
      out.vindex.emplace(out.vertices[i].id, i);
    }
    out.adj.resize(out.vertices.size());
    for (std::size_t e = 0; e < out.edges.size(); ++e) {
      auto iu = out.vindex.find(out.edges[e].u);
      auto iv = out.vindex.find(out.edges[e].v);
      if (iu == out.vindex.end() || iv == out.vindex.end()) {
        throw std::runtime_error("edge " + std::to_string(out.edges[e].id) +
                                 " references a vertex missing at level " +
                                 std::to_string(n));
      }
      out.adj[iu->second].emplace_back(iv->second, e);
      out.adj[iv->second].emplace_back(iu->second, e);
    }
    out.dist.assign(out.vertices.size(), -1);
    auto ib = out.vindex.find(state_->base);
    if (ib != out.vindex.end()) {
      out.base_present = true;
      out.base_index = ib->second;
      std::queue<std::size_t> q;
      out.dist[ib->second] = 0;
      q.push(ib->second);
      while (!q.empty()) {
        std::size_t x = q.front();
        q.pop();
        for (auto [y, e] : out.adj[x]) {
          (void)e;
          if (out.dist[y] < 0) {
            out.dist[y] = out.dist[x] + 1;
            q.push(y);
          }
        }
      }
    }
    return out;
  }

  std::shared_ptr<State> state_;
};

// Structural checks every level 0..depth must pass before the end and
// tree machinery makes sense: unique ids, sane levels, base at level 0,
// each level connected.
inline void validate_levels(const GraphLevels& g, int depth) {
  std::unordered_map<std::uint64_t, int> vlevel;
  std::unordered_map<std::uint64_t, int> elevel;
  for (int n = 0; n <= depth; ++n) {
    GraphSlice s = g.slice(n);
    for (const VertexInfo& v : s.vertices) {
      if (v.level != n) {
        throw std::runtime_error("vertex " + std::to_string(v.id) +
                                 " carries level " + std::to_string(v.level) +
                                 " inside slice " + std::to_string(n));
      }
      if (!vlevel.emplace(v.id, n).second) {
        throw std::runtime_error("vertex id " + std::to_string(v.id) +
                                 " appears twice");
      }
    }
    for (const EdgeInfo& e : s.edges) {
      if (e.level != n) {
        throw std::runtime_error("edge " + std::to_string(e.id) +
                                 " carries level " + std::to_string(e.level) +
                                 " inside slice " + std::to_string(n));
      }
      if (!elevel.emplace(e.id, n).second) {
        throw std::runtime_error("edge id " + std::to_string(e.id) +
                                 " appears twice");
      }
      for (std::uint64_t x : {e.u, e.v}) {
        auto it = vlevel.find(x);
        if (it == vlevel.end() || it->second > n) {
          throw std::runtime_error("edge " + std::to_string(e.id) +
                                   " references vertex " + std::to_string(x) +
                                   " not present at level " + std::to_string(n));
        }
      }
      if (e.u == e.v) {
        throw std::runtime_error("edge " + std::to_string(e.id) +
                                 " is a loop");
      }
    }
  }
  auto v0 = vlevel.find(g.base());
  if (v0 == vlevel.end() || v0->second != 0) {
    throw std::runtime_error("base vertex must exist at level 0");
  }
  for (int n = 0; n <= depth; ++n) {
    auto view = g.view(n);
    for (std::size_t i = 0; i < view->vertices.size(); ++i) {
      if (view->dist[i] < 0) {
        throw std::runtime_error("level " + std::to_string(n) +
                                 " is disconnected at vertex " +
                                 std::to_string(view->vertices[i].id));
      }
    }
  }
}

// ---- builtin families ----------------------------------------------------

// One-way ladder: two rails of vertices top_i (id 2i) and bottom_i
// (id 2i+1) joined by rungs.  The greedy spanning tree keeps the top
// rail and all rungs; every bottom rail edge becomes a chord.
inline GraphLevels ladder_graph() {
  return GraphLevels::from_slices(
      [](int n) {
        GraphSlice s;
        const std::uint64_t k = static_cast<std::uint64_t>(n);
        s.vertices.push_back({2 * k, n, "top" + std::to_string(n)});
        s.vertices.push_back({2 * k + 1, n, "bottom" + std::to_string(n)});
        if (n == 0) {
          s.edges.push_back({0, 0, 1, 0});
        } else {
          s.edges.push_back({3 * k - 2, 2 * k - 2, 2 * k, n});
          s.edges.push_back({3 * k - 1, 2 * k, 2 * k + 1, n});
          s.edges.push_back({3 * k, 2 * k - 1, 2 * k + 1, n});
        }
        return s;
      },
      0);
}

// Two one-way ladders hanging off a shared base vertex by one stem edge
// each.  Chords alternate right, left as levels grow.
inline GraphLevels double_ladder_graph() {
  return GraphLevels::from_slices(
      [](int n) {
        GraphSlice s;
        const std::uint64_t k = static_cast<std::uint64_t>(n);
        if (n == 0) {
          s.vertices.push_back({0, 0, "base"});
          s.vertices.push_back({1, 0, "topR0"});
          s.vertices.push_back({2, 0, "bottomR0"});
          s.vertices.push_back({3, 0, "topL0"});
          s.vertices.push_back({4, 0, "bottomL0"});
          s.edges.push_back({0, 0, 1, 0});
          s.edges.push_back({1, 0, 3, 0});
          s.edges.push_back({2, 1, 2, 0});
          s.edges.push_back({3, 3, 4, 0});
        } else {
          s.vertices.push_back({4 * k + 1, n, "topR" + std::to_string(n)});
          s.vertices.push_back({4 * k + 2, n, "bottomR" + std::to_string(n)});
          s.vertices.push_back({4 * k + 3, n, "topL" + std::to_string(n)});
          s.vertices.push_back({4 * k + 4, n, "bottomL" + std::to_string(n)});
          s.edges.push_back({6 * k - 2, 4 * k - 3, 4 * k + 1, n});
          s.edges.push_back({6 * k - 1, 4 * k + 1, 4 * k + 2, n});
          s.edges.push_back({6 * k, 4 * k - 2, 4 * k + 2, n});
          s.edges.push_back({6 * k + 1, 4 * k - 1, 4 * k + 3, n});
          s.edges.push_back({6 * k + 2, 4 * k + 3, 4 * k + 4, n});
          s.edges.push_back({6 * k + 3, 4 * k, 4 * k + 4, n});
        }
        return s;
      },
      0);
}

// Binary tree with every parent-child edge doubled: one route direct,
// one subdivided through a middle vertex.  The subdivided routes form
// the spanning tree; the direct edge to child c is chord c-1.
inline GraphLevels t2_doubled_tree_graph() {
  constexpr std::uint64_t mid_offset = 1ull << 30;
  return GraphLevels::from_slices(
      [](int n) {
        GraphSlice s;
        if (n == 0) {
          s.vertices.push_back({0, 0, "c0"});
          return s;
        }
        const std::uint64_t first = (1ull << n) - 1;
        const std::uint64_t last = (1ull << (n + 1)) - 2;
        for (std::uint64_t c = first; c <= last; ++c) {
          const std::uint64_t parent = (c - 1) / 2;
          s.vertices.push_back({c, n, "c" + std::to_string(c)});
          s.vertices.push_back({mid_offset + c, n, "m" + std::to_string(c)});
          s.edges.push_back({3 * (c - 1), parent, mid_offset + c, n});
          s.edges.push_back({3 * (c - 1) + 1, mid_offset + c, c, n});
          s.edges.push_back({3 * (c - 1) + 2, parent, c, n});
        }
        return s;
      },
      0);
}

namespace grid_detail {

inline std::uint64_t zig(long i) {
  return i >= 0 ? 2 * static_cast<std::uint64_t>(i)
                : 2 * static_cast<std::uint64_t>(-i) - 1;
}

inline std::uint64_t vid(long x, long y) {
  const std::uint64_t a = zig(x), b = zig(y);
  return (a + b) * (a + b + 1) / 2 + b;
}

inline long ring(long x, long y) { return std::max(std::labs(x), std::labs(y)); }

// Square spiral from the origin; the first (2n+1)^2 points are exactly
// the box [-n,n]^2.
inline std::vector<std::pair<long, long>> spiral_points(int rings) {
  const std::size_t total =
      static_cast<std::size_t>(2 * rings + 1) * (2 * rings + 1);
  std::vector<std::pair<long, long>> pts;
  pts.reserve(total);
  long x = 0, y = 0;
  pts.emplace_back(0, 0);
  const long dx[4] = {1, 0, -1, 0};
  const long dy[4] = {0, 1, 0, -1};
  long len = 1;
  int dir = 0;
  while (pts.size() < total) {
    for (int rep = 0; rep < 2 && pts.size() < total; ++rep) {
      for (long s = 0; s < len && pts.size() < total; ++s) {
        x += dx[dir];
        y += dy[dir];
        pts.emplace_back(x, y);
      }
      dir = (dir + 1) % 4;
    }
    ++len;
  }
  return pts;
}

}  // namespace grid_detail

// Square grid on the integer plane; level n is the box [-n,n]^2.  The
// spanning tree is the square spiral around the origin, all other grid
// edges become chords.
inline GraphLevels grid_graph() {
  using namespace grid_detail;
  return GraphLevels::from_slices(
      [](int n) {
        GraphSlice s;
        auto pts = spiral_points(n);
        std::map<std::pair<long, long>, std::size_t> spiral_index;
        for (std::size_t i = 0; i < pts.size(); ++i) spiral_index[pts[i]] = i;
        for (const auto& [x, y] : pts) {
          if (ring(x, y) != n) continue;
          s.vertices.push_back({vid(x, y), n,
                                "(" + std::to_string(x) + "," +
                                    std::to_string(y) + ")"});
          const long dx[4] = {1, -1, 0, 0};
          const long dy[4] = {0, 0, 1, -1};
          for (int d = 0; d < 4; ++d) {
            const long qx = x + dx[d], qy = y + dy[d];
            if (ring(qx, qy) > n) continue;
            if (ring(qx, qy) == n && vid(qx, qy) < vid(x, y)) continue;
            const std::size_t sp = spiral_index.at({x, y});
            const std::size_t sq = spiral_index.at({qx, qy});
            std::uint64_t id;
            if (sp + 1 == sq || sq + 1 == sp) {
              id = 2 * static_cast<std::uint64_t>(std::min(sp, sq));
            } else {
              // off-spiral edges sort after every spiral edge of the level
              const bool mine = vid(x, y) < vid(qx, qy);
              const std::uint64_t w = mine ? vid(x, y) : vid(qx, qy);
              const int dd = mine ? d : (d ^ 1);
              id = (1ull << 33) + 2 * (8 * w + static_cast<std::uint64_t>(dd)) + 1;
            }
            s.edges.push_back({id, vid(x, y), vid(qx, qy), n});
          }
        }
        return s;
      },
      grid_detail::vid(0, 0));
}

// Single one-way ray; no cycles at all.
inline GraphLevels ray_graph() {
  return GraphLevels::from_slices(
      [](int n) {
        GraphSlice s;
        const std::uint64_t k = static_cast<std::uint64_t>(n);
        s.vertices.push_back({k, n, "r" + std::to_string(n)});
        if (n > 0) s.edges.push_back({k - 1, k - 1, k, n});
        return s;
      },
      0);
}

// One triangle at the base plus k disjoint rays: a single cycle and k
// cycle-free directions to infinity.
inline GraphLevels star_of_rays_graph(int k) {
  if (k < 1) throw std::invalid_argument("star needs at least one ray");
  return GraphLevels::from_slices(
      [k](int n) {
        GraphSlice s;
        const std::uint64_t kk = static_cast<std::uint64_t>(k);
        if (n == 0) {
          s.vertices.push_back({0, 0, "base"});
          return s;
        }
        const std::uint64_t i = static_cast<std::uint64_t>(n);
        if (n == 1) {
          s.vertices.push_back({1, 1, "t1"});
          s.vertices.push_back({2, 1, "t2"});
          s.edges.push_back({0, 0, 1, 1});
          s.edges.push_back({1, 1, 2, 1});
          s.edges.push_back({2, 0, 2, 1});
        }
        for (std::uint64_t j = 0; j < kk; ++j) {
          s.vertices.push_back(
              {3 + (i - 1) * kk + j, n,
               "ray" + std::to_string(j) + "_" + std::to_string(n)});
          const std::uint64_t from = n == 1 ? 0 : 3 + (i - 2) * kk + j;
          s.edges.push_back({3 + (i - 1) * kk + j, from, 3 + (i - 1) * kk + j, n});
        }
        return s;
      },
      0);
}

// Complete graph on four vertices; finite, three independent cycles.
inline GraphLevels k4_graph() {
  return GraphLevels::from_slices(
      [](int n) {
        GraphSlice s;
        if (n == 0) {
          for (std::uint64_t i = 0; i < 4; ++i) {
            s.vertices.push_back({i, 0, std::string(1, "abcd"[i])});
          }
          s.edges.push_back({0, 0, 1, 0});
          s.edges.push_back({1, 1, 2, 0});
          s.edges.push_back({2, 2, 3, 0});
          s.edges.push_back({3, 3, 0, 0});
          s.edges.push_back({4, 0, 2, 0});
          s.edges.push_back({5, 1, 3, 0});
        }
        return s;
      },
      0);
}

}  // namespace endwords
