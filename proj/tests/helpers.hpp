#pragma once

#include <cstdint>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "endwords/letters.hpp"
#include "endwords/reduction.hpp"

namespace test_helpers {

// Shorthand word literal: wd("e0 E1 e2"), wd("eps").
inline endwords::FiniteWord wd(const std::string& text) {
  endwords::FiniteWord out;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok == "eps") continue;
    if (tok.size() < 2 || (tok[0] != 'e' && tok[0] != 'E')) {
      throw std::invalid_argument("bad letter token: " + tok);
    }
    out.push_back(endwords::Letter{
        static_cast<std::uint32_t>(std::stoul(tok.substr(1))), tok[0] == 'E'});
  }
  return out;
}

inline endwords::FiniteWord random_word(std::mt19937& rng, std::size_t len,
                                        std::uint32_t chords) {
  std::uniform_int_distribution<std::uint32_t> chord(0, chords - 1);
  std::uniform_int_distribution<int> orient(0, 1);
  endwords::FiniteWord out;
  for (std::size_t i = 0; i < len; ++i) {
    out.push_back(endwords::Letter{chord(rng), orient(rng) == 1});
  }
  return out;
}

// Ground-truth deletable set: a position is deletable iff it occurs in a
// pair of some enumerated reduction.
inline std::vector<bool> brute_deletable(const endwords::FiniteWord& w,
                                         std::size_t bound = 12) {
  std::vector<bool> out(w.size(), false);
  for (const endwords::Reduction& r : endwords::enumerate_reductions(w, bound)) {
    for (auto [a, b] : r.pairs) out[a] = out[b] = true;
  }
  return out;
}

}  // namespace test_helpers
