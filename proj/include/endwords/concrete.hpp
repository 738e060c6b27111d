#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "endwords/errors.hpp"
#include "endwords/letters.hpp"
#include "endwords/reduce.hpp"
#include "endwords/word_family.hpp"

namespace endwords {

// Expression tree denoting a word with possibly infinitely many letters:
// literals, concatenation, inversion, and omega products of a block
// sequence.  Collecting at a level yields the restriction to chords
// 0..level, which is what compile() feeds into a family.
class WordExpr {
 public:
  using BlockFn = std::function<FiniteWord(int)>;
  // Least K such that every block at index >= K restricts to the empty
  // word at the queried level; nullopt when no such K exists.
  using CutoffFn = std::function<std::optional<int>(int)>;

  static WordExpr empty();
  static WordExpr lit(Letter l);
  static WordExpr cat(std::vector<WordExpr> parts);
  static WordExpr inv(WordExpr e);
  static WordExpr omega(BlockFn block, CutoffFn cutoff);

  FiniteWord collect(int level) const;

  // Level past which collect stops changing; nullopt when an omega node
  // keeps contributing forever.
  std::optional<int> stabilization_level() const;

  bool has_omega() const { return !stabilization_level().has_value(); }

  WordFamily compile() const {
    return WordFamily::from_generator(
        [self = *this](int n) { return self.collect(n); });
  }

 private:
  struct Node;
  explicit WordExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct WordExpr::Node {
  enum class Kind { Empty, Lit, Cat, Inv, Omega } kind;
  Letter letter{};
  std::vector<WordExpr> parts;
  BlockFn block;
  CutoffFn cutoff;
};

inline WordExpr WordExpr::empty() {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::Empty;
  return WordExpr(std::move(n));
}

inline WordExpr WordExpr::lit(Letter l) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::Lit;
  n->letter = l;
  return WordExpr(std::move(n));
}

inline WordExpr WordExpr::cat(std::vector<WordExpr> parts) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::Cat;
  n->parts = std::move(parts);
  return WordExpr(std::move(n));
}

inline WordExpr WordExpr::inv(WordExpr e) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::Inv;
  n->parts.push_back(std::move(e));
  return WordExpr(std::move(n));
}

inline WordExpr WordExpr::omega(BlockFn block, CutoffFn cutoff) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::Omega;
  n->block = std::move(block);
  n->cutoff = std::move(cutoff);
  return WordExpr(std::move(n));
}

inline FiniteWord WordExpr::collect(int level) const {
  switch (node_->kind) {
    case Node::Kind::Empty:
      return FiniteWord();
    case Node::Kind::Lit:
      return node_->letter.chord <= static_cast<std::uint32_t>(level)
                 ? FiniteWord{node_->letter}
                 : FiniteWord();
    case Node::Kind::Cat: {
      FiniteWord out;
      for (const WordExpr& p : node_->parts) out.append(p.collect(level));
      return out;
    }
    case Node::Kind::Inv:
      return free_inv(node_->parts[0].collect(level));
    case Node::Kind::Omega: {
      const std::optional<int> k_end = node_->cutoff(level);
      if (!k_end) throw DivergenceViolation(level);
      FiniteWord out;
      for (int k = 0; k < *k_end; ++k) {
        out.append(
            restrict_leq(node_->block(k), static_cast<std::uint32_t>(level)));
      }
      // The cutoff is caller-supplied; probe a few blocks past it.
      for (int k = *k_end; k < *k_end + 8; ++k) {
        if (!restrict_leq(node_->block(k), static_cast<std::uint32_t>(level))
                 .empty()) {
          throw std::logic_error("omega cutoff too small at level " +
                                 std::to_string(level));
        }
      }
      return out;
    }
  }
  return FiniteWord();
}

inline std::optional<int> WordExpr::stabilization_level() const {
  switch (node_->kind) {
    case Node::Kind::Empty:
      return 0;
    case Node::Kind::Lit:
      return static_cast<int>(node_->letter.chord);
    case Node::Kind::Cat:
    case Node::Kind::Inv: {
      int level = 0;
      for (const WordExpr& p : node_->parts) {
        const std::optional<int> sub = p.stabilization_level();
        if (!sub) return std::nullopt;
        level = std::max(level, *sub);
      }
      return level;
    }
    case Node::Kind::Omega:
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace endwords
