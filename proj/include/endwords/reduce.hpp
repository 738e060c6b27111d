#pragma once

#include <algorithm>
#include <cstdint>
#include <unordered_set>
#include <vector>

#include "endwords/letters.hpp"

namespace endwords {

// Free reduction by repeated cancellation of adjacent inverse pairs.
// The result is independent of cancellation order, so a single stack
// pass suffices.
inline FiniteWord reduce(const FiniteWord& w) {
  std::vector<Letter> stack;
  stack.reserve(w.size());
  for (Letter l : w) {
    if (!stack.empty() && cancels(stack.back(), l)) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return FiniteWord(std::move(stack));
}

inline bool is_reduced(const FiniteWord& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (cancels(w[i], w[i + 1])) return false;
  }
  return true;
}

// Keep only letters whose chord index is <= bound; order is preserved.
inline FiniteWord restrict_leq(const FiniteWord& w, std::uint32_t bound) {
  std::vector<Letter> out;
  for (Letter l : w) {
    if (l.chord <= bound) out.push_back(l);
  }
  return FiniteWord(std::move(out));
}

// Keep only letters whose chord index lies in the given set.
inline FiniteWord restrict_to(const FiniteWord& w,
                              const std::unordered_set<std::uint32_t>& chords) {
  std::vector<Letter> out;
  for (Letter l : w) {
    if (chords.count(l.chord)) out.push_back(l);
  }
  return FiniteWord(std::move(out));
}

inline FiniteWord free_inv(const FiniteWord& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (std::size_t i = w.size(); i-- > 0;) out.push_back(w[i].inverse());
  return FiniteWord(std::move(out));
}

// Product in the free group: concatenate, then reduce.
inline FiniteWord free_mul(const FiniteWord& a, const FiniteWord& b) {
  return reduce(concat(a, b));
}

}  // namespace endwords
