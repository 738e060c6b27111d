#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "endwords/reduction.hpp"

namespace endwords {

// Pairs of one reduction, rearranged into a canonical executable order.
// Pairs of a valid reduction are pairwise nested or disjoint, so they
// form a forest under interval containment.  Chains are peeled off the
// forest greedily; concatenating the chains last-first, each innermost
// pair first, yields an order that is again a valid reduction.
struct NestingSchedule {
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  std::vector<PosPair> pairs;          // sorted by left position
  std::vector<std::size_t> parent;     // tightest enclosing pair, npos at roots
  std::vector<std::vector<std::size_t>> chains;  // each listed inner to outer
  Reduction order;
};

// Pairs may arrive in any order; only the set matters.  Throws when no
// order of the given pairs forms a valid reduction of w.
inline NestingSchedule reduction_schedule(const FiniteWord& w,
                                          const Reduction& r) {
  NestingSchedule s;
  s.pairs.reserve(r.pairs.size());
  for (auto [a, b] : r.pairs) {
    s.pairs.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(s.pairs.begin(), s.pairs.end());
  const std::size_t k = s.pairs.size();

  s.parent.assign(k, NestingSchedule::npos);
  std::vector<std::size_t> open;
  for (std::size_t i = 0; i < k; ++i) {
    while (!open.empty() && s.pairs[open.back()].second < s.pairs[i].first) {
      open.pop_back();
    }
    if (!open.empty()) s.parent[i] = open.back();
    open.push_back(i);
  }

  auto inside = [&](std::size_t inner, std::size_t outer) {
    return s.pairs[outer].first < s.pairs[inner].first &&
           s.pairs[inner].second < s.pairs[outer].second;
  };

  std::vector<bool> used(k, false);
  for (std::size_t start = 0; start < k; ++start) {
    if (used[start]) continue;
    // start has the least left position among unused pairs, so nothing
    // unused encloses it: the chain only descends.
    std::vector<std::size_t> chain{start};
    used[start] = true;
    for (;;) {
      std::size_t pick = NestingSchedule::npos;
      for (std::size_t j = 0; j < k; ++j) {
        if (!used[j] && inside(j, chain.back())) {
          pick = j;
          break;
        }
      }
      if (pick == NestingSchedule::npos) break;
      chain.push_back(pick);
      used[pick] = true;
    }
    std::reverse(chain.begin(), chain.end());  // inner to outer
    s.chains.push_back(std::move(chain));
  }

  for (std::size_t c = s.chains.size(); c-- > 0;) {
    for (std::size_t idx : s.chains[c]) s.order.pairs.push_back(s.pairs[idx]);
  }
  validate_reduction(w, s.order);
  return s;
}

}  // namespace endwords
