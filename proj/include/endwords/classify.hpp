#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "endwords/ends.hpp"
#include "endwords/graph.hpp"
#include "endwords/spanning.hpp"
#include "endwords/verdict.hpp"

namespace endwords {

// Coarse shape of the loop group, judged from one finite window.
//  FreeOfRank:   every direction ran out of chords and the chord count
//                stopped growing; free on that many generators.
//  FInfinity:    exactly one direction keeps carrying chords; free on
//                countably many generators in the limit.
//  Wild:         two or more directions keep carrying chords; infinite
//                words over several directions appear and the group
//                stops being free.
//  Inconclusive: the window shows growth that none of the patterns
//                above explains yet.
enum class GroupShape { FreeOfRank, FInfinity, Wild, Inconclusive };

inline const char* shape_name(GroupShape s) {
  switch (s) {
    case GroupShape::FreeOfRank: return "FreeOfRank";
    case GroupShape::FInfinity: return "FInfinity";
    case GroupShape::Wild: return "Wild";
    case GroupShape::Inconclusive: return "Inconclusive";
  }
  return "Unknown";
}

struct Classification {
  GroupShape shape;
  std::size_t rank = 0;  // meaningful for FreeOfRank only
  int depth = 0;
  std::vector<Verdict> ends;  // one triviality verdict per direction
  std::string detail;
};

inline Classification classify_graph(const GraphLevels& g, int depth) {
  Classification out;
  out.depth = depth;
  SpanningTree tree(g, depth);
  const std::size_t chords_now = tree.chords().size();
  std::size_t chords_before = 0;
  for (const ChordInfo& c : tree.chords()) {
    if (c.level <= depth - 1) ++chords_before;
  }
  const bool stable = chords_now == chords_before;

  std::size_t active = 0;
  for (const EndThread& t : end_threads(g, depth)) {
    out.ends.push_back(trivial_end_check(g, tree, t, depth));
    if (out.ends.back().kind == VerdictKind::NontrivialUpTo) ++active;
  }

  out.detail = std::to_string(out.ends.size()) + " directions, " +
               std::to_string(active) + " active; " +
               std::to_string(chords_now) + " chords" +
               (stable ? " (stable)" : " (growing)");

  if (active >= 2) {
    out.shape = GroupShape::Wild;
  } else if (active == 1) {
    out.shape = GroupShape::FInfinity;
  } else if (stable) {
    out.shape = GroupShape::FreeOfRank;
    out.rank = chords_now;
  } else {
    out.shape = GroupShape::Inconclusive;
  }
  return out;
}

inline std::string to_string(const Classification& c) {
  std::string out = shape_name(c.shape);
  if (c.shape == GroupShape::FreeOfRank) {
    out += '(' + std::to_string(c.rank) + ')';
  }
  out += " at depth " + std::to_string(c.depth) + ": " + c.detail;
  return out;
}

}  // namespace endwords
