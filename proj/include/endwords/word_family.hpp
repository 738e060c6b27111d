#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "endwords/letters.hpp"
#include "endwords/reduce.hpp"
#include "endwords/reduction.hpp"
#include "endwords/verdict.hpp"

namespace endwords {

// A word given one finite approximation per level.  Level n may only use
// chords 0..n, and dropping the chord-n letters from level n must give
// level n-1 back (checked by validate_coherence, assumed elsewhere).
// Copies share one memo table; generators must be pure.
class WordFamily {
 public:
  using Generator = std::function<FiniteWord(int)>;

  static WordFamily from_generator(Generator gen) {
    return WordFamily(std::move(gen));
  }

  // Family of restrictions of a fixed finite word; stabilizes once the
  // level passes every chord in w.
  static WordFamily constant(FiniteWord w) {
    return from_generator([w = std::move(w)](int n) {
      return restrict_leq(w, static_cast<std::uint32_t>(n));
    });
  }

  static WordFamily empty_family() {
    return from_generator([](int) { return FiniteWord(); });
  }

  FiniteWord level(int n) const {
    if (n < 0) return FiniteWord();
    {
      std::lock_guard<std::mutex> lock(state_->mu);
      auto it = state_->levels.find(n);
      if (it != state_->levels.end()) return it->second;
    }
    FiniteWord w = state_->gen(n);
    std::lock_guard<std::mutex> lock(state_->mu);
    return state_->levels.emplace(n, std::move(w)).first->second;
  }

  // Position map from level n-1 into level n: entry i is where the i-th
  // letter of level n-1 sits inside level n.
  std::vector<std::size_t> embedding(int n) const {
    {
      std::lock_guard<std::mutex> lock(state_->mu);
      auto it = state_->embeddings.find(n);
      if (it != state_->embeddings.end()) return it->second;
    }
    const FiniteWord above = level(n);
    const FiniteWord below = level(n - 1);
    std::vector<std::size_t> map;
    for (std::size_t i = 0; i < above.size(); ++i) {
      if (above[i].chord < static_cast<std::uint32_t>(n)) map.push_back(i);
    }
    if (map.size() != below.size()) {
      throw std::logic_error("family is not coherent at level " +
                             std::to_string(n));
    }
    std::lock_guard<std::mutex> lock(state_->mu);
    return state_->embeddings.emplace(n, std::move(map)).first->second;
  }

  // Follow a position of level `from` up to its slot in level `to`.
  std::size_t track(int from, std::size_t pos, int to) const {
    for (int m = from + 1; m <= to; ++m) pos = embedding(m)[pos];
    return pos;
  }

 private:
  struct State {
    Generator gen;
    std::mutex mu;
    std::map<int, FiniteWord> levels;
    std::map<int, std::vector<std::size_t>> embeddings;
  };

  explicit WordFamily(Generator gen) : state_(std::make_shared<State>()) {
    state_->gen = std::move(gen);
  }

  std::shared_ptr<State> state_;
};

inline Verdict validate_coherence(const WordFamily& f, int up_to) {
  for (int n = 0; n <= up_to; ++n) {
    const FiniteWord w = f.level(n);
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i].chord > static_cast<std::uint32_t>(n)) {
        return Verdict(VerdictKind::IncoherentAt, n,
                       "letter " + to_string(w[i]) + " outside chords 0.." +
                           std::to_string(n))
            .at_position(i);
      }
    }
    if (n >= 1 &&
        restrict_leq(w, static_cast<std::uint32_t>(n - 1)) != f.level(n - 1)) {
      return Verdict(VerdictKind::IncoherentAt, n,
                     "dropping chord-" + std::to_string(n) +
                         " letters does not give level " + std::to_string(n - 1));
    }
  }
  return Verdict(VerdictKind::CoherentUpTo, up_to);
}

// Permanence persists: a position permanent at one level stays permanent
// at all later levels.  So positions still deletable in level(depth) are
// exactly those never yet witnessed permanent, and one of them is
// reported.  The witness only covers the inspected range; the position
// could still turn permanent past it.
inline Verdict is_reduced_up_to(const WordFamily& f, int depth) {
  const FiniteWord w = f.level(depth);
  const std::vector<bool> del = deletable_positions(w);
  for (std::size_t p = 0; p < del.size(); ++p) {
    if (del[p]) {
      return Verdict(VerdictKind::NonPermanentWitness, depth,
                     "position " + std::to_string(p) + " (letter " +
                         to_string(w[p]) + ") deletable at every level through " +
                         std::to_string(depth))
          .at_position(p);
    }
  }
  return Verdict(VerdictKind::ReducedUpTo, depth);
}

}  // namespace endwords
