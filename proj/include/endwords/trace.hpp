#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "endwords/graph.hpp"
#include "endwords/spanning.hpp"
#include "endwords/star.hpp"
#include "endwords/verdict.hpp"
#include "endwords/word_family.hpp"

namespace endwords {

// Chord word of a loop, with a stage profile on top of the plain level
// structure: stage s is the level at which the loop's s-th drawing pass
// is fully visible.  Certificates walk stages, not raw levels, so loops
// whose detail grows geometrically still separate their cancellations
// within few stages.
struct TraceWord {
  WordFamily family;
  std::function<int(int)> stage_level;
};

inline TraceWord empty_trace() {
  return TraceWord{WordFamily::empty_family(), [](int s) { return s; }};
}

// Out along one rail, back along the same rail: crosses chord k forward
// at pass k, then everything backward.  Stage s equals level s.
inline TraceWord ladder_loop_trace() {
  WordFamily f = WordFamily::from_generator([](int n) {
    FiniteWord w;
    for (int k = 0; k <= n; ++k) w.push_back(fwd(static_cast<std::uint32_t>(k)));
    for (int k = n; k >= 0; --k) w.push_back(bwd(static_cast<std::uint32_t>(k)));
    return w;
  });
  return TraceWord{std::move(f), [](int s) { return s; }};
}

namespace t2_detail {

// Stage s shows the tour of the first s generations: chords up to
// 2^(s+1)-3.
inline int stage_to_level(int s) {
  if (s <= 0) return s == 0 ? -1 : s;
  return static_cast<int>((1ll << (s + 1)) - 3);
}

inline int level_to_stage(int n) {
  int s = 0;
  while (stage_to_level(s) < n) ++s;
  return s;
}

}  // namespace t2_detail

// Tour of the doubled binary tree: descend to child c across chord c-1,
// tour the subtree, come back across the same chord.  Every leaf pass
// leaves an adjacent cancelling pair that the next stage pushes apart.
inline TraceWord t2_loop_trace() {
  WordFamily f = WordFamily::from_generator([](int n) {
    FiniteWord w;
    if (n < 0) return w;
    const std::uint64_t max_child = static_cast<std::uint64_t>(n) + 1;
    const int stage = t2_detail::level_to_stage(n);
    auto visit = [&](auto&& self, std::uint64_t v, int depth_v) -> void {
      if (depth_v >= stage) return;
      for (std::uint64_t c : {2 * v + 1, 2 * v + 2}) {
        if (c > max_child) continue;
        w.push_back(fwd(static_cast<std::uint32_t>(c - 1)));
        self(self, c, depth_v + 1);
        w.push_back(bwd(static_cast<std::uint32_t>(c - 1)));
      }
    };
    visit(visit, 0, 0);
    return w;
  });
  return TraceWord{std::move(f), t2_detail::stage_to_level};
}

inline TraceWord pi1_mul(const TraceWord& a, const TraceWord& b) {
  WordFamily f = WordFamily::from_generator(
      [fa = a.family, fb = b.family](int n) {
        return concat(fa.level(n), fb.level(n));
      });
  return TraceWord{std::move(f),
                   [sa = a.stage_level, sb = b.stage_level](int s) {
                     return std::max(sa(s), sb(s));
                   }};
}

inline TraceWord pi1_inv(const TraceWord& a) {
  WordFamily f = WordFamily::from_generator(
      [fa = a.family](int n) { return free_inv(fa.level(n)); });
  return TraceWord{std::move(f), a.stage_level};
}

inline Verdict homotopic_up_to(const TraceWord& a, const TraceWord& b,
                               int depth) {
  return star_eq_up_to(star_of(a.family), star_of(b.family), depth);
}

// Certifies that every adjacent cancelling pair with chord at most
// `depth`, in any of the first depth+1 stage words, is eventually pushed
// apart by letters arriving at later stages.  A pair still adjacent when
// the stages run out is reported as the witness.
inline Verdict adjacent_cancellation_certificate(const TraceWord& trace,
                                                 int depth) {
  struct Live {
    std::size_t left, right;  // positions at the current stage's level
    int born_stage;
    std::uint32_t chord;
  };
  std::vector<Live> live;
  std::size_t examined = 0;
  int prev_level = -1;
  for (int s = 0; s <= depth; ++s) {
    const int level = trace.stage_level(s);
    if (level < prev_level) {
      throw std::logic_error("stage profile must be nondecreasing");
    }
    const FiniteWord w = trace.family.level(level);
    // Carry pairs forward; separated ones are done.
    std::vector<Live> still;
    for (Live p : live) {
      p.left = trace.family.track(prev_level, p.left, level);
      p.right = trace.family.track(prev_level, p.right, level);
      if (p.right - p.left == 1) still.push_back(p);
    }
    live = std::move(still);
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (!cancels(w[i], w[i + 1])) continue;
      if (w[i].chord > static_cast<std::uint32_t>(depth)) continue;
      bool known = false;
      for (const Live& p : live) {
        if (p.left == i) {
          known = true;
          break;
        }
      }
      if (!known) {
        live.push_back(Live{i, i + 1, s, w[i].chord});
        ++examined;
      }
    }
    prev_level = level;
  }
  if (!live.empty()) {
    const Live& p = *std::min_element(
        live.begin(), live.end(),
        [](const Live& a, const Live& b) { return a.chord < b.chord; });
    return Verdict(VerdictKind::UnseparatedAt, depth,
                   "pair (e" + std::to_string(p.chord) + ", E" +
                       std::to_string(p.chord) + ") born at stage " +
                       std::to_string(p.born_stage) + " never separates")
        .at_position(p.left)
        .with_chords(p.chord, p.chord);
  }
  return Verdict(VerdictKind::SeparatedUpTo, depth).with_count(examined);
}

// Longest alternation between two distinct outside regions among the
// chords of one level word.  A loop cannot hop between two directions
// to infinity arbitrarily often at a fixed radius, so counts that keep
// growing with depth witness a word no loop draws.
inline Verdict realizability_scan(const GraphLevels& g, const SpanningTree& tree,
                                  const WordFamily& f, int radius, int depth,
                                  std::size_t threshold) {
  const FiniteWord w = f.level(depth);
  int view_depth = depth;
  for (Letter l : w) {
    if (l.chord >= tree.chords().size()) {
      throw std::out_of_range("word uses chord " + std::to_string(l.chord) +
                              " but the tree only has " +
                              std::to_string(tree.chords().size()));
    }
    view_depth = std::max(view_depth, tree.chord(l.chord).level);
  }
  const auto regions = chord_regions(g, tree, radius, view_depth);

  std::vector<std::uint64_t> labels;  // non-core only, in word order
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (const auto& r = regions[w[i].chord]) labels.push_back(*r);
  }
  std::vector<std::uint64_t> distinct = labels;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()),
                 distinct.end());

  std::size_t best = 0;
  std::optional<std::pair<std::uint64_t, std::uint64_t>> best_pair;
  for (std::size_t x = 0; x < distinct.size(); ++x) {
    for (std::size_t y = x + 1; y < distinct.size(); ++y) {
      std::size_t run = 0;
      std::uint64_t last = 0;
      for (std::uint64_t l : labels) {
        if (l != distinct[x] && l != distinct[y]) continue;
        if (run == 0 || l != last) {
          ++run;
          last = l;
        }
      }
      if (run > best) {
        best = run;
        best_pair = {distinct[x], distinct[y]};
      }
    }
  }
  if (best >= threshold && best_pair) {
    return Verdict(VerdictKind::NonConvergentWitness, depth,
                   "chords alternate between regions " +
                       std::to_string(best_pair->first) + " and " +
                       std::to_string(best_pair->second) + " " +
                       std::to_string(best) + " times at radius " +
                       std::to_string(radius))
        .with_chords(static_cast<std::uint32_t>(best_pair->first),
                     static_cast<std::uint32_t>(best_pair->second))
        .with_count(best);
  }
  return Verdict(VerdictKind::NoWitnessUpTo, depth).with_count(best);
}

}  // namespace endwords
