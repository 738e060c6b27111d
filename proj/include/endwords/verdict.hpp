#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

namespace endwords {

// Outcome of a semi-decision procedure.  Kinds ending in "UpTo" only
// report how far the search got; the others carry a witness or an
// exhaustive check and settle the question.
enum class VerdictKind {
  EqualUpTo,
  DistinctAt,
  ReducedUpTo,
  NonPermanentWitness,
  BoundedUpTo,
  ExceededAt,
  CoherentUpTo,
  IncoherentAt,
  SeparatedUpTo,
  UnseparatedAt,
  TreeOkUpTo,
  TreeViolation,
  TrivialAt,
  NontrivialUpTo,
  NonConvergentWitness,
  NoWitnessUpTo,
};

inline bool is_conclusive(VerdictKind k) {
  switch (k) {
    case VerdictKind::EqualUpTo:
    case VerdictKind::ReducedUpTo:
    case VerdictKind::BoundedUpTo:
    case VerdictKind::CoherentUpTo:
    case VerdictKind::SeparatedUpTo:
    case VerdictKind::TreeOkUpTo:
    case VerdictKind::NontrivialUpTo:
    case VerdictKind::NoWitnessUpTo:
      return false;
    default:
      return true;
  }
}

inline const char* kind_name(VerdictKind k) {
  switch (k) {
    case VerdictKind::EqualUpTo: return "EqualUpTo";
    case VerdictKind::DistinctAt: return "DistinctAt";
    case VerdictKind::ReducedUpTo: return "ReducedUpTo";
    case VerdictKind::NonPermanentWitness: return "NonPermanentWitness";
    case VerdictKind::BoundedUpTo: return "BoundedUpTo";
    case VerdictKind::ExceededAt: return "ExceededAt";
    case VerdictKind::CoherentUpTo: return "CoherentUpTo";
    case VerdictKind::IncoherentAt: return "IncoherentAt";
    case VerdictKind::SeparatedUpTo: return "SeparatedUpTo";
    case VerdictKind::UnseparatedAt: return "UnseparatedAt";
    case VerdictKind::TreeOkUpTo: return "TreeOkUpTo";
    case VerdictKind::TreeViolation: return "TreeViolation";
    case VerdictKind::TrivialAt: return "TrivialAt";
    case VerdictKind::NontrivialUpTo: return "NontrivialUpTo";
    case VerdictKind::NonConvergentWitness: return "NonConvergentWitness";
    case VerdictKind::NoWitnessUpTo: return "NoWitnessUpTo";
  }
  return "UnknownVerdict";
}

struct Verdict {
  VerdictKind kind;
  // Level, depth, or radius the kind refers to: EqualUpTo(12) checked
  // levels 0..12, DistinctAt(5) witnessed a difference at level 5.
  int level = -1;
  std::optional<std::size_t> position;
  std::optional<std::pair<std::uint32_t, std::uint32_t>> chord_pair;
  std::optional<std::size_t> count;
  std::string detail;

  Verdict(VerdictKind k, int lvl, std::string note = "")
      : kind(k), level(lvl), detail(std::move(note)) {}

  Verdict&& at_position(std::size_t p) && {
    position = p;
    return std::move(*this);
  }
  Verdict&& with_chords(std::uint32_t a, std::uint32_t b) && {
    chord_pair = {a, b};
    return std::move(*this);
  }
  Verdict&& with_count(std::size_t c) && {
    count = c;
    return std::move(*this);
  }

  bool conclusive() const { return is_conclusive(kind); }
};

inline std::string to_string(const Verdict& v) {
  std::string out = kind_name(v.kind);
  out += '(' + std::to_string(v.level) + ')';
  if (v.position) out += " pos=" + std::to_string(*v.position);
  if (v.chord_pair) {
    out += " chords=(" + std::to_string(v.chord_pair->first) + ',' +
           std::to_string(v.chord_pair->second) + ')';
  }
  if (v.count) out += " count=" + std::to_string(*v.count);
  if (!v.detail.empty()) out += " " + v.detail;
  return out;
}

}  // namespace endwords
