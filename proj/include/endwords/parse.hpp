#pragma once

#include <cctype>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "endwords/concrete.hpp"
#include "endwords/errors.hpp"
#include "endwords/graph.hpp"
#include "endwords/letters.hpp"

namespace endwords {

// Chord index as a function of the block variable: coef*var + shift.
// coef == 0 means a plain constant and carries no variable name.
struct Affine {
  std::uint32_t coef = 0;
  std::uint32_t shift = 0;
  std::string var;

  bool operator==(const Affine&) const = default;

  std::string render() const {
    if (coef == 0) return std::to_string(shift);
    std::string out;
    if (coef != 1) out += std::to_string(coef) + "*";
    out += var;
    if (shift != 0) out += "+" + std::to_string(shift);
    return out;
  }
};

// Syntax tree of the word grammar:
//   word  := term*                          (no terms: eps)
//   term  := 'eps' | letter | 'inv(' word ')'
//          | 'omega(' var '->' letter+ ')'
//   letter:= ('e'|'E') affine
// The omega body is a letter pattern; block k substitutes k for the
// variable, and the whole word is the infinite concatenation of blocks
// k = 0, 1, 2, ...
class WordSyntax {
 public:
  enum class Kind { Eps, Letter, Inv, Omega, Seq };

  static WordSyntax eps() { return WordSyntax(Kind::Eps); }

  static WordSyntax letter(bool backward, Affine a) {
    WordSyntax w(Kind::Letter);
    w.backward_ = backward;
    w.affine_ = std::move(a);
    return w;
  }

  static WordSyntax inv(WordSyntax inner) {
    WordSyntax w(Kind::Inv);
    w.parts_.push_back(std::move(inner));
    return w;
  }

  static WordSyntax omega(std::string var, std::vector<WordSyntax> pattern) {
    WordSyntax w(Kind::Omega);
    w.var_ = std::move(var);
    w.parts_ = std::move(pattern);
    return w;
  }

  static WordSyntax seq(std::vector<WordSyntax> parts) {
    if (parts.size() == 1) return std::move(parts.front());
    WordSyntax w(parts.empty() ? Kind::Eps : Kind::Seq);
    w.parts_ = std::move(parts);
    return w;
  }

  Kind kind() const { return kind_; }
  bool backward() const { return backward_; }
  const Affine& affine() const { return affine_; }
  const std::string& var() const { return var_; }
  const std::vector<WordSyntax>& parts() const { return parts_; }

  bool operator==(const WordSyntax& o) const {
    return kind_ == o.kind_ && backward_ == o.backward_ &&
           affine_ == o.affine_ && var_ == o.var_ && parts_ == o.parts_;
  }

  std::string render() const {
    switch (kind_) {
      case Kind::Eps:
        return "eps";
      case Kind::Letter:
        return (backward_ ? "E" : "e") + affine_.render();
      case Kind::Inv:
        return "inv(" + parts_.front().render() + ")";
      case Kind::Omega: {
        std::string out = "omega(" + var_ + " ->";
        for (const WordSyntax& p : parts_) out += " " + p.render();
        return out + ")";
      }
      case Kind::Seq: {
        std::string out;
        for (const WordSyntax& p : parts_) {
          if (!out.empty()) out += " ";
          out += p.render();
        }
        return out;
      }
    }
    return "";
  }

  WordExpr compile() const {
    switch (kind_) {
      case Kind::Eps:
        return WordExpr::empty();
      case Kind::Letter: {
        if (affine_.coef != 0) {
          throw std::logic_error("variable letter outside its omega");
        }
        const Letter l =
            backward_ ? bwd(affine_.shift) : fwd(affine_.shift);
        return WordExpr::lit(l);
      }
      case Kind::Inv:
        return WordExpr::inv(parts_.front().compile());
      case Kind::Seq: {
        std::vector<WordExpr> out;
        out.reserve(parts_.size());
        for (const WordSyntax& p : parts_) out.push_back(p.compile());
        return WordExpr::cat(std::move(out));
      }
      case Kind::Omega: {
        struct Pat {
          bool backward;
          std::uint64_t coef, shift;
        };
        auto pats = std::make_shared<std::vector<Pat>>();
        for (const WordSyntax& p : parts_) {
          pats->push_back(Pat{p.backward_, p.affine_.coef, p.affine_.shift});
        }
        auto block = [pats](int k) {
          FiniteWord w;
          for (const Pat& p : *pats) {
            const std::uint64_t chord =
                p.coef * static_cast<std::uint64_t>(k) + p.shift;
            const auto c = static_cast<std::uint32_t>(chord);
            w.push_back(p.backward ? bwd(c) : fwd(c));
          }
          return w;
        };
        auto cutoff = [pats](int n) -> std::optional<int> {
          const auto bound = static_cast<std::uint64_t>(n);
          std::int64_t need = 0;
          for (const Pat& p : *pats) {
            if (p.coef == 0) {
              if (p.shift <= bound) return std::nullopt;
              continue;
            }
            if (p.shift > bound) continue;
            const auto k = static_cast<std::int64_t>(
                (bound - p.shift) / p.coef + 1);
            need = std::max(need, k);
          }
          return static_cast<int>(need);
        };
        return WordExpr::omega(std::move(block), std::move(cutoff));
      }
    }
    return WordExpr::empty();
  }

 private:
  explicit WordSyntax(Kind k) : kind_(k) {}

  Kind kind_;
  bool backward_ = false;
  Affine affine_;
  std::string var_;
  std::vector<WordSyntax> parts_;
};

namespace parse_detail {

constexpr std::uint32_t kMaxIndex = 1u << 20;

inline bool atom_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '*' ||
         c == '+';
}

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
  }
  bool done() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() const { return text[pos]; }
  std::string atom() {
    const std::size_t start = pos;
    while (pos < text.size() && atom_char(text[pos])) ++pos;
    if (pos == start) throw ParseError(pos, "expected a word term");
    return text.substr(start, pos - start);
  }
  void expect(char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c) {
      throw ParseError(pos, std::string("expected '") + c + "'");
    }
    ++pos;
  }
  void expect_arrow() {
    skip_ws();
    if (pos + 1 >= text.size() || text[pos] != '-' || text[pos + 1] != '>') {
      throw ParseError(pos, "expected '->'");
    }
    pos += 2;
  }
};

inline std::uint32_t number(const std::string& s, std::size_t& i,
                            std::size_t err_at) {
  std::uint64_t v = 0;
  const std::size_t start = i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    v = v * 10 + static_cast<std::uint64_t>(s[i] - '0');
    if (v > kMaxIndex) throw ParseError(err_at + i, "index too large");
    ++i;
  }
  if (i == start) throw ParseError(err_at + i, "expected a number");
  return static_cast<std::uint32_t>(v);
}

inline std::string ident(const std::string& s, std::size_t& i,
                         std::size_t err_at) {
  const std::size_t start = i;
  while (i < s.size() &&
         (std::isalpha(static_cast<unsigned char>(s[i])) || s[i] == '_')) {
    ++i;
  }
  if (i == start) throw ParseError(err_at + i, "expected a variable");
  return s.substr(start, i - start);
}

// body of a letter atom after the leading e/E
inline Affine affine(const std::string& s, std::size_t err_at,
                     const std::string& scope_var) {
  Affine a;
  std::size_t i = 0;
  if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    const std::uint32_t first = number(s, i, err_at);
    if (i == s.size()) {
      a.shift = first;
      return a;
    }
    if (s[i] != '*') throw ParseError(err_at + i, "expected '*'");
    ++i;
    if (first == 0) throw ParseError(err_at, "zero coefficient");
    a.coef = first;
    a.var = ident(s, i, err_at);
  } else {
    a.coef = 1;
    a.var = ident(s, i, err_at);
  }
  if (a.var != scope_var) {
    throw ParseError(err_at, scope_var.empty()
                                 ? "variable letter outside omega"
                                 : "unknown variable '" + a.var + "'");
  }
  if (i < s.size()) {
    if (s[i] != '+') throw ParseError(err_at + i, "expected '+'");
    ++i;
    a.shift = number(s, i, err_at);
  }
  if (i != s.size()) throw ParseError(err_at + i, "trailing characters");
  return a;
}

inline WordSyntax term(Cursor& cur, const std::string& scope_var);

inline std::vector<WordSyntax> word(Cursor& cur, const std::string& scope_var,
                                    bool stop_at_paren) {
  std::vector<WordSyntax> parts;
  while (!cur.done()) {
    if (stop_at_paren && cur.peek() == ')') break;
    WordSyntax t = term(cur, scope_var);
    if (t.kind() != WordSyntax::Kind::Eps) parts.push_back(std::move(t));
  }
  return parts;
}

inline WordSyntax term(Cursor& cur, const std::string& scope_var) {
  cur.skip_ws();
  const std::size_t at = cur.pos;
  const std::string a = cur.atom();
  if (a == "eps") return WordSyntax::eps();
  if (a == "inv") {
    if (!scope_var.empty()) {
      throw ParseError(at, "only letters inside omega");
    }
    cur.expect('(');
    std::vector<WordSyntax> inner = word(cur, scope_var, true);
    cur.expect(')');
    return WordSyntax::inv(WordSyntax::seq(std::move(inner)));
  }
  if (a == "omega") {
    if (!scope_var.empty()) {
      throw ParseError(at, "only letters inside omega");
    }
    cur.expect('(');
    cur.skip_ws();
    std::size_t vp = cur.pos;
    std::string var = ident(cur.text, vp, 0);
    cur.pos = vp;
    cur.expect_arrow();
    std::vector<WordSyntax> pattern = word(cur, var, true);
    cur.expect(')');
    if (pattern.empty()) throw ParseError(at, "empty omega pattern");
    return WordSyntax::omega(std::move(var), std::move(pattern));
  }
  if (a.size() >= 2 && (a[0] == 'e' || a[0] == 'E')) {
    return WordSyntax::letter(a[0] == 'E',
                              affine(a.substr(1), at + 1, scope_var));
  }
  throw ParseError(at, "unrecognized term '" + a + "'");
}

}  // namespace parse_detail

inline WordSyntax parse_word(const std::string& text) {
  parse_detail::Cursor cur{text};
  return WordSyntax::seq(parse_detail::word(cur, "", false));
}

// ---- graph text ------------------------------------------------------------
//
//   # comment
//   vertex <name> [@level <n>]
//   edge <id> <u> <v> [@level <n>]
//   base <name>
//
// or a single line naming a builtin:
//
//   family ladder|double_ladder|tree2|grid|ray|k4|star <k>
//
// Vertex names are symbolic and become dense ids in first-mention order;
// a vertex first seen inside an edge line inherits that edge's level.

struct ParsedGraph {
  GraphLevels graph;
  int max_level = 0;
};

namespace parse_detail {

struct Token {
  std::string text;
  std::size_t offset;
};

inline std::vector<std::vector<Token>> token_lines(const std::string& text) {
  std::vector<std::vector<Token>> lines;
  std::vector<Token> cur;
  std::size_t i = 0;
  bool in_comment = false;
  while (i <= text.size()) {
    const char c = i < text.size() ? text[i] : '\n';
    if (c == '\n') {
      if (!cur.empty()) lines.push_back(std::move(cur));
      cur.clear();
      in_comment = false;
      ++i;
      continue;
    }
    if (in_comment || c == '#') {
      in_comment = true;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) &&
           text[i] != '#') {
      ++i;
    }
    cur.push_back(Token{text.substr(start, i - start), start});
  }
  return lines;
}

inline std::uint64_t token_number(const Token& t) {
  std::uint64_t v = 0;
  if (t.text.empty()) throw ParseError(t.offset, "expected a number");
  for (char c : t.text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ParseError(t.offset, "expected a number, got '" + t.text + "'");
    }
    v = v * 10 + static_cast<std::uint64_t>(c - '0');
  }
  return v;
}

// trailing [@level <n>] starting at index i; must consume the rest
inline int optional_level(const std::vector<Token>& line, std::size_t i) {
  if (i == line.size()) return 0;
  if (line[i].text != "@level" || i + 2 != line.size()) {
    throw ParseError(line[i].offset, "expected '@level <n>' at line end");
  }
  return static_cast<int>(token_number(line[i + 1]));
}

inline GraphLevels builtin_family(const std::vector<Token>& line) {
  const std::string& name = line[1].text;
  auto arity = [&](std::size_t n) {
    if (line.size() != n) {
      throw ParseError(line[0].offset, "wrong number of arguments for '" +
                                           name + "'");
    }
  };
  if (name == "ladder") { arity(2); return ladder_graph(); }
  if (name == "double_ladder") { arity(2); return double_ladder_graph(); }
  if (name == "tree2") { arity(2); return t2_doubled_tree_graph(); }
  if (name == "grid") { arity(2); return grid_graph(); }
  if (name == "ray") { arity(2); return ray_graph(); }
  if (name == "k4") { arity(2); return k4_graph(); }
  if (name == "star") {
    arity(3);
    return star_of_rays_graph(static_cast<int>(token_number(line[2])));
  }
  throw ParseError(line[1].offset, "unknown family '" + name + "'");
}

}  // namespace parse_detail

inline ParsedGraph parse_graph(const std::string& text) {
  using parse_detail::Token;
  const auto lines = parse_detail::token_lines(text);
  if (lines.empty()) throw ParseError(0, "empty graph description");

  if (lines[0][0].text == "family") {
    if (lines.size() > 1) {
      throw ParseError(lines[1][0].offset,
                       "family lines stand alone");
    }
    if (lines[0].size() < 2) {
      throw ParseError(lines[0][0].offset, "expected a family name");
    }
    return ParsedGraph{parse_detail::builtin_family(lines[0]), -1};
  }

  struct V {
    std::uint64_t id;
    int level;
  };
  std::map<std::string, V> by_name;
  std::vector<std::string> order;
  auto touch = [&](const Token& t, int level) -> std::uint64_t {
    auto it = by_name.find(t.text);
    if (it != by_name.end()) return it->second.id;
    const std::uint64_t id = by_name.size();
    by_name.emplace(t.text, V{id, level});
    order.push_back(t.text);
    return id;
  };

  std::map<int, GraphSlice> slices;
  std::map<std::uint64_t, std::size_t> edge_ids;
  std::optional<Token> base_name;

  for (const auto& line : lines) {
    const std::string& cmd = line[0].text;
    if (cmd == "vertex") {
      if (line.size() < 2) throw ParseError(line[0].offset, "expected a name");
      if (by_name.count(line[1].text)) {
        throw ParseError(line[1].offset,
                         "vertex '" + line[1].text + "' already declared");
      }
      touch(line[1], parse_detail::optional_level(line, 2));
    } else if (cmd == "edge") {
      if (line.size() < 4) {
        throw ParseError(line[0].offset, "expected: edge <id> <u> <v>");
      }
      const std::uint64_t id = parse_detail::token_number(line[1]);
      if (!edge_ids.emplace(id, line[1].offset).second) {
        throw ParseError(line[1].offset,
                         "edge id " + line[1].text + " already used");
      }
      const int level = parse_detail::optional_level(line, 4);
      const std::uint64_t u = touch(line[2], level);
      const std::uint64_t v = touch(line[3], level);
      slices[level].edges.push_back({id, u, v, level});
    } else if (cmd == "base") {
      if (line.size() != 2) throw ParseError(line[0].offset, "expected a name");
      if (base_name) throw ParseError(line[0].offset, "base already set");
      base_name = line[1];
    } else if (cmd == "family") {
      throw ParseError(line[0].offset, "family lines stand alone");
    } else {
      throw ParseError(line[0].offset, "unknown directive '" + cmd + "'");
    }
  }
  if (order.empty()) throw ParseError(0, "graph has no vertices");

  int max_level = 0;
  for (const std::string& name : order) {
    const V& v = by_name.at(name);
    slices[v.level].vertices.push_back({v.id, v.level, name});
    max_level = std::max(max_level, v.level);
  }
  for (const auto& [level, slice] : slices) {
    (void)slice;
    max_level = std::max(max_level, level);
  }

  std::uint64_t base = by_name.at(order.front()).id;
  if (base_name) {
    auto it = by_name.find(base_name->text);
    if (it == by_name.end()) {
      throw ParseError(base_name->offset,
                       "base names unknown vertex '" + base_name->text + "'");
    }
    base = it->second.id;
  }

  auto table = std::make_shared<std::map<int, GraphSlice>>(std::move(slices));
  return ParsedGraph{
      GraphLevels::from_slices(
          [table](int n) {
            auto it = table->find(n);
            return it == table->end() ? GraphSlice{} : it->second;
          },
          base),
      max_level};
}

}  // namespace endwords
