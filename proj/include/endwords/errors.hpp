#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace endwords {

// Thrown by the brute-force reduction oracle when the input word is longer
// than the enumeration bound.
struct OracleBoundExceeded : std::runtime_error {
  OracleBoundExceeded(std::size_t size, std::size_t bound)
      : std::runtime_error("word of length " + std::to_string(size) +
                           " exceeds oracle bound " + std::to_string(bound)),
        size(size), bound(bound) {}
  std::size_t size;
  std::size_t bound;
};

struct InvalidReduction : std::runtime_error {
  explicit InvalidReduction(std::string why)
      : std::runtime_error("invalid reduction: " + why) {}
};

// Thrown when an omega block generator keeps producing low chord indices, so
// the compiled word would use some letter infinitely often.
struct DivergenceViolation : std::runtime_error {
  explicit DivergenceViolation(int level)
      : std::runtime_error("omega blocks repeat chord indices <= " +
                           std::to_string(level) + " forever"),
        level(level) {}
  int level;
};

struct ParseError : std::runtime_error {
  ParseError(std::size_t offset, std::string why)
      : std::runtime_error("parse error at offset " + std::to_string(offset) +
                           ": " + why),
        offset(offset) {}
  std::size_t offset;
};

}  // namespace endwords
