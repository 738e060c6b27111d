#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace endwords {

// One oriented chord letter.  Forward traverses the chord in its natural
// direction (smaller endpoint id to larger), backward is the inverse.
// Rendered as e<i> (forward) / E<i> (backward).
struct Letter {
  std::uint32_t chord = 0;
  bool backward = false;

  Letter inverse() const { return Letter{chord, !backward}; }

  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

inline Letter fwd(std::uint32_t chord) { return Letter{chord, false}; }
inline Letter bwd(std::uint32_t chord) { return Letter{chord, true}; }

inline bool cancels(Letter a, Letter b) {
  return a.chord == b.chord && a.backward != b.backward;
}

inline std::string to_string(Letter l) {
  return (l.backward ? "E" : "e") + std::to_string(l.chord);
}

// A finite word over chord letters.  Plain value type, positions 0-based.
class FiniteWord {
 public:
  FiniteWord() = default;
  explicit FiniteWord(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  FiniteWord(std::initializer_list<Letter> letters) : letters_(letters) {}

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  void push_back(Letter l) { letters_.push_back(l); }
  void append(const FiniteWord& w) {
    letters_.insert(letters_.end(), w.letters_.begin(), w.letters_.end());
  }

  const std::vector<Letter>& letters() const { return letters_; }

  friend bool operator==(const FiniteWord&, const FiniteWord&) = default;

 private:
  std::vector<Letter> letters_;
};

inline FiniteWord concat(const FiniteWord& a, const FiniteWord& b) {
  FiniteWord out = a;
  out.append(b);
  return out;
}

inline std::string to_string(const FiniteWord& w) {
  if (w.empty()) return "eps";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += to_string(w[i]);
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const FiniteWord& w) {
  return os << to_string(w);
}

}  // namespace endwords
