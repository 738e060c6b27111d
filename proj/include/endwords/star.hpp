#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "endwords/letters.hpp"
#include "endwords/reduce.hpp"
#include "endwords/verdict.hpp"
#include "endwords/word_family.hpp"

namespace endwords {

// One reduced word per level, tied together by the maps that drop the
// top chord and reduce.  This is the limit-side object; word families
// land here through star_of.
class StarElement {
 public:
  using Generator = std::function<FiniteWord(int)>;

  static StarElement from_levels(Generator gen) {
    return StarElement(std::move(gen));
  }

  static StarElement identity() {
    return from_levels([](int) { return FiniteWord(); });
  }

  static StarElement constant(FiniteWord w) {
    return from_levels([w = std::move(w)](int n) {
      return restrict_leq(w, static_cast<std::uint32_t>(n));
    });
  }

  // Levels are reduced on access, so generators need not bother.
  FiniteWord level(int n) const {
    if (n < 0) return FiniteWord();
    {
      std::lock_guard<std::mutex> lock(state_->mu);
      auto it = state_->levels.find(n);
      if (it != state_->levels.end()) return it->second;
    }
    FiniteWord w = reduce(state_->gen(n));
    std::lock_guard<std::mutex> lock(state_->mu);
    return state_->levels.emplace(n, std::move(w)).first->second;
  }

 private:
  struct State {
    Generator gen;
    std::mutex mu;
    std::map<int, FiniteWord> levels;
  };

  explicit StarElement(Generator gen) : state_(std::make_shared<State>()) {
    state_->gen = std::move(gen);
  }

  std::shared_ptr<State> state_;
};

inline StarElement star_of(const WordFamily& f) {
  return StarElement::from_levels([f](int n) { return f.level(n); });
}

inline StarElement star_mul(const StarElement& a, const StarElement& b) {
  return StarElement::from_levels(
      [a, b](int n) { return free_mul(a.level(n), b.level(n)); });
}

inline StarElement star_inv(const StarElement& a) {
  return StarElement::from_levels([a](int n) { return free_inv(a.level(n)); });
}

inline Verdict star_eq_up_to(const StarElement& a, const StarElement& b,
                             int depth) {
  for (int n = 0; n <= depth; ++n) {
    const FiniteWord wa = a.level(n), wb = b.level(n);
    if (wa != wb) {
      return Verdict(VerdictKind::DistinctAt, n,
                     to_string(wa) + " vs " + to_string(wb));
    }
  }
  return Verdict(VerdictKind::EqualUpTo, depth);
}

inline Verdict validate_star_coherence(const StarElement& a, int up_to) {
  for (int n = 0; n <= up_to; ++n) {
    const FiniteWord w = a.level(n);
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i].chord > static_cast<std::uint32_t>(n)) {
        return Verdict(VerdictKind::IncoherentAt, n,
                       "letter " + to_string(w[i]) + " outside chords 0.." +
                           std::to_string(n))
            .at_position(i);
      }
    }
    if (n >= 1 && reduce(restrict_leq(w, static_cast<std::uint32_t>(n - 1))) !=
                      a.level(n - 1)) {
      return Verdict(VerdictKind::IncoherentAt, n,
                     "projecting level " + std::to_string(n) +
                         " misses level " + std::to_string(n - 1));
    }
  }
  return Verdict(VerdictKind::CoherentUpTo, up_to);
}

// Whether any single oriented letter piles up beyond the threshold at
// some level.  Elements coming from genuine words keep every count flat,
// so unbounded growth certifies the element lies outside their image.
inline Verdict bounded_check(const StarElement& a, std::size_t threshold,
                             int depth) {
  std::size_t best = 0;
  for (int n = 0; n <= depth; ++n) {
    const FiniteWord w = a.level(n);
    std::map<std::pair<std::uint32_t, bool>, std::size_t> counts;
    for (std::size_t i = 0; i < w.size(); ++i) {
      const Letter l = w[i];
      const std::size_t c = ++counts[{l.chord, l.backward}];
      if (c > threshold) {
        return Verdict(VerdictKind::ExceededAt, n,
                       "letter " + to_string(l) + " occurs " + std::to_string(c) +
                           " times at level " + std::to_string(n))
            .at_position(i)
            .with_count(c);
      }
      best = std::max(best, c);
    }
  }
  return Verdict(VerdictKind::BoundedUpTo, depth).with_count(best);
}

// Concatenated commutator-like blocks push the count of one fixed letter
// past any bound while staying reduced and coherent level by level.
inline StarElement unbounded_star_element() {
  return StarElement::from_levels([](int n) {
    FiniteWord w;
    for (std::uint32_t j = 1; j <= static_cast<std::uint32_t>(n); ++j) {
      w.push_back(fwd(j));
      w.push_back(fwd(0));
      w.push_back(fwd(j));
      w.push_back(bwd(0));
    }
    return w;
  });
}

}  // namespace endwords
