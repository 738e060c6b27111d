#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "endwords/errors.hpp"
#include "endwords/letters.hpp"
#include "endwords/reduce.hpp"

namespace endwords {

using PosPair = std::pair<std::size_t, std::size_t>;

// An ordered cancellation: pairs are erased one after another, and each
// pair must be adjacent once the earlier pairs are gone.
struct Reduction {
  std::vector<PosPair> pairs;

  friend bool operator==(const Reduction&, const Reduction&) = default;
};

inline bool is_valid_reduction(const FiniteWord& w, const Reduction& r,
                               std::string* why = nullptr) {
  auto fail = [&](std::string msg) {
    if (why) *why = std::move(msg);
    return false;
  };
  const std::size_t n = w.size();
  std::vector<bool> alive(n, true);
  // next[i]/prev[i] skip over erased positions; boundary sentinels at n.
  std::vector<std::size_t> next(n + 1), prev(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    next[i] = i + 1 <= n ? i + 1 : n;
    prev[i] = i ? i - 1 : n;
  }
  std::size_t head = n ? 0 : n;
  for (std::size_t k = 0; k < r.pairs.size(); ++k) {
    auto [a, b] = r.pairs[k];
    if (a > b) std::swap(a, b);
    if (b >= n) return fail("pair " + std::to_string(k) + " out of range");
    if (a == b) return fail("pair " + std::to_string(k) + " repeats a position");
    if (!alive[a] || !alive[b])
      return fail("pair " + std::to_string(k) + " reuses an erased position");
    if (!cancels(w[a], w[b]))
      return fail("pair " + std::to_string(k) + " letters do not cancel");
    if (next[a] != b)
      return fail("pair " + std::to_string(k) + " not adjacent when applied");
    alive[a] = alive[b] = false;
    const std::size_t before = prev[a], after = next[b];
    if (before == n) {
      head = after;
    } else {
      next[before] = after;
    }
    if (after != n) prev[after] = before;
  }
  (void)head;
  return true;
}

inline void validate_reduction(const FiniteWord& w, const Reduction& r) {
  std::string why;
  if (!is_valid_reduction(w, r, &why)) throw InvalidReduction(why);
}

inline FiniteWord apply_reduction(const FiniteWord& w, const Reduction& r) {
  validate_reduction(w, r);
  std::vector<bool> erased(w.size(), false);
  for (auto [a, b] : r.pairs) erased[a] = erased[b] = true;
  std::vector<Letter> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!erased[i]) out.push_back(w[i]);
  }
  return FiniteWord(std::move(out));
}

// A reduction is maximal when the leftover word has no adjacent
// cancelling pair, i.e. no further pair could be appended.
inline bool is_maximal_reduction(const FiniteWord& w, const Reduction& r) {
  return is_reduced(apply_reduction(w, r));
}

// Every ordered reduction of w, found by depth-first search over the
// currently adjacent cancelling pairs.  Output grows factorially, hence
// the hard size bound.
inline std::vector<Reduction> enumerate_reductions(const FiniteWord& w,
                                                   std::size_t bound = 10) {
  if (w.size() > bound) throw OracleBoundExceeded(w.size(), bound);
  const std::size_t n = w.size();
  std::vector<Reduction> out;
  std::vector<std::size_t> next(n + 1), prev(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    next[i] = i + 1 <= n ? i + 1 : n;
    prev[i] = i ? i - 1 : n;
  }
  std::size_t head = n ? 0 : n;
  std::vector<PosPair> current;

  auto erase_pair = [&](std::size_t a, std::size_t b) {
    const std::size_t before = prev[a], after = next[b];
    if (before == n) {
      head = after;
    } else {
      next[before] = after;
    }
    if (after != n) prev[after] = before;
  };
  auto restore_pair = [&](std::size_t a, std::size_t b) {
    const std::size_t before = prev[a], after = next[b];
    if (before == n) {
      head = a;
    } else {
      next[before] = a;
    }
    if (after != n) prev[after] = b;
  };

  auto dfs = [&](auto&& self) -> void {
    out.push_back(Reduction{current});
    std::vector<PosPair> candidates;
    for (std::size_t i = head; i != n && next[i] != n; i = next[i]) {
      if (cancels(w[i], w[next[i]])) candidates.emplace_back(i, next[i]);
    }
    for (auto [a, b] : candidates) {
      current.emplace_back(a, b);
      erase_pair(a, b);
      self(self);
      restore_pair(a, b);
      current.pop_back();
    }
  };
  dfs(dfs);
  return out;
}

// Hash-consed stack states: state(i) identifies the free reduction of
// the prefix w[0..i).  Two equal states mean equal reduced prefixes, so
// the factor w[a..b) reduces to the empty word iff state(a) == state(b).
class PrefixStates {
 public:
  explicit PrefixStates(const FiniteWord& w) {
    states_.reserve(w.size() + 1);
    states_.push_back(0);
    tops_.push_back(n_empty);
    std::size_t cur = 0;
    for (Letter l : w) {
      const std::size_t top = tops_[cur];
      if (top != n_empty && cancels(nodes_[top].letter, l)) {
        cur = nodes_[top].parent_state;
      } else {
        auto key = std::make_pair(cur, encode(l));
        auto it = interned_.find(key);
        if (it == interned_.end()) {
          nodes_.push_back(Node{l, cur});
          tops_.push_back(nodes_.size() - 1);
          it = interned_.emplace(key, tops_.size() - 1).first;
        }
        cur = it->second;
      }
      states_.push_back(cur);
    }
  }

  std::size_t state(std::size_t i) const { return states_[i]; }

  bool factor_trivial(std::size_t a, std::size_t b) const {
    return states_[a] == states_[b];
  }

 private:
  struct Node {
    Letter letter;
    std::size_t parent_state;
  };
  static constexpr std::size_t n_empty = static_cast<std::size_t>(-1);

  static std::uint64_t encode(Letter l) {
    return (static_cast<std::uint64_t>(l.chord) << 1) | (l.backward ? 1 : 0);
  }

  // tops_[s] = node holding the topmost letter of state s, n_empty for
  // the empty stack (state 0).
  std::vector<Node> nodes_;
  std::vector<std::size_t> tops_;
  std::map<std::pair<std::size_t, std::uint64_t>, std::size_t> interned_;
  std::vector<std::size_t> states_;
};

// Position s can be erased by some reduction iff an inverse letter sits
// at a position t with the strictly-between factor reducing to empty.
inline bool is_deletable(const FiniteWord& w, std::size_t s,
                         const PrefixStates& ps) {
  const Letter want = w[s].inverse();
  for (std::size_t t = 0; t < w.size(); ++t) {
    if (t == s || w[t] != want) continue;
    if (t > s ? ps.factor_trivial(s + 1, t) : ps.factor_trivial(t + 1, s)) {
      return true;
    }
  }
  return false;
}

inline bool is_deletable(const FiniteWord& w, std::size_t s) {
  return is_deletable(w, s, PrefixStates(w));
}

inline std::vector<bool> deletable_positions(const FiniteWord& w) {
  PrefixStates ps(w);
  // Bucket positions by letter so each query scans only candidates.
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> occ;
  for (std::size_t i = 0; i < w.size(); ++i) {
    occ[(static_cast<std::uint64_t>(w[i].chord) << 1) | (w[i].backward ? 1 : 0)]
        .push_back(i);
  }
  std::vector<bool> out(w.size(), false);
  for (std::size_t s = 0; s < w.size(); ++s) {
    const Letter want = w[s].inverse();
    auto it = occ.find((static_cast<std::uint64_t>(want.chord) << 1) |
                       (want.backward ? 1 : 0));
    if (it == occ.end()) continue;
    for (std::size_t t : it->second) {
      if (t > s ? ps.factor_trivial(s + 1, t)
                : (t < s && ps.factor_trivial(t + 1, s))) {
        out[s] = true;
        break;
      }
    }
  }
  return out;
}

// Positions no reduction can erase.  A finite word is reduced exactly
// when every position is permanent.
inline std::vector<std::size_t> permanent_positions(const FiniteWord& w) {
  std::vector<bool> del = deletable_positions(w);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!del[i]) out.push_back(i);
  }
  return out;
}

}  // namespace endwords
