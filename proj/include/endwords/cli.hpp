#pragma once

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "endwords/classify.hpp"
#include "endwords/parse.hpp"
#include "endwords/spanning.hpp"
#include "endwords/star.hpp"
#include "endwords/trace.hpp"
#include "endwords/verdict.hpp"

namespace endwords {
namespace cli_detail {

struct Options {
  int depth = 12;
  int radius = 3;
  std::size_t threshold = 6;
  std::string format = "human";

  bool lines() const { return format == "lines"; }
};

// Exit code contract: 0 for a conclusive answer, 2 for a verdict that
// only holds as far as the window reaches, 1 for any error.
constexpr int kConclusive = 0;
constexpr int kWindowOnly = 2;
constexpr int kFailure = 1;

inline void print_verdict(std::ostream& out, const Verdict& v,
                          const Options& opt) {
  if (!opt.lines()) {
    out << to_string(v) << "\n";
    return;
  }
  out << "verdict=" << kind_name(v.kind) << "\n";
  out << "level=" << v.level << "\n";
  if (v.position) out << "witness=" << *v.position << "\n";
  if (v.count) out << "count=" << *v.count << "\n";
  if (v.chord_pair) {
    out << "pair=" << v.chord_pair->first << "," << v.chord_pair->second
        << "\n";
  }
}

inline int verdict_exit(const Verdict& v) {
  return v.conclusive() ? kConclusive : kWindowOnly;
}

// A graph argument is a file path when a file of that name exists,
// otherwise inline text with ';' standing in for line breaks.
inline ParsedGraph load_graph(const std::string& arg) {
  std::ifstream f(arg);
  std::string text;
  if (f.good()) {
    std::ostringstream buf;
    buf << f.rdbuf();
    text = buf.str();
  } else {
    text = arg;
    std::replace(text.begin(), text.end(), ';', '\n');
  }
  return parse_graph(text);
}

struct CompiledWord {
  WordExpr expr;
  std::optional<int> stabilizes;
};

inline CompiledWord load_word(const std::string& arg) {
  WordExpr e = parse_word(arg).compile();
  return CompiledWord{e, e.stabilization_level()};
}

inline int cmd_reduce(std::ostream& out, const Options& opt,
                      const std::string& word) {
  const CompiledWord w = load_word(word);
  const int level = w.stabilizes ? *w.stabilizes : opt.depth;
  const FiniteWord r = reduce(w.expr.collect(level));
  if (opt.lines()) {
    out << "depth=" << level << "\n";
    out << "reduced_word=" << to_string(r) << "\n";
  } else {
    out << to_string(r) << "\n";
    if (!w.stabilizes) out << "(letters up to level " << level << ")\n";
  }
  return w.stabilizes ? kConclusive : kWindowOnly;
}

inline int cmd_eq(std::ostream& out, const Options& opt, const std::string& wa,
                  const std::string& wb) {
  const CompiledWord a = load_word(wa), b = load_word(wb);
  int depth = opt.depth;
  const bool finite = a.stabilizes && b.stabilizes;
  if (finite) depth = std::max({depth, *a.stabilizes, *b.stabilizes});
  const Verdict v = star_eq_up_to(star_of(a.expr.compile()),
                                  star_of(b.expr.compile()), depth);
  print_verdict(out, v, opt);
  if (v.conclusive()) return kConclusive;
  if (finite) {
    if (!opt.lines()) out << "(exact: both words are finite)\n";
    return kConclusive;
  }
  return kWindowOnly;
}

inline int cmd_permanent(std::ostream& out, const Options& opt,
                         const std::string& word) {
  const CompiledWord w = load_word(word);
  const int depth = w.stabilizes ? std::max(opt.depth, *w.stabilizes) : opt.depth;
  const Verdict v = is_reduced_up_to(w.expr.compile(), depth);
  print_verdict(out, v, opt);
  if (v.conclusive() || w.stabilizes) return kConclusive;
  return kWindowOnly;
}

inline int cmd_homotopic(std::ostream& out, const Options& opt,
                         const std::string& wa, const std::string& wb) {
  const CompiledWord a = load_word(wa), b = load_word(wb);
  int depth = opt.depth;
  const bool finite = a.stabilizes && b.stabilizes;
  if (finite) depth = std::max({depth, *a.stabilizes, *b.stabilizes});
  const TraceWord ta{a.expr.compile(), [](int s) { return s; }};
  const TraceWord tb{b.expr.compile(), [](int s) { return s; }};
  const Verdict v = homotopic_up_to(ta, tb, depth);
  print_verdict(out, v, opt);
  if (v.kind == VerdictKind::EqualUpTo) {
    const Verdict cert =
        adjacent_cancellation_certificate(pi1_mul(ta, pi1_inv(tb)), depth);
    print_verdict(out, cert, opt);
  }
  if (v.conclusive() || (finite && v.kind == VerdictKind::EqualUpTo)) {
    return kConclusive;
  }
  return kWindowOnly;
}

inline int cmd_ends(std::ostream& out, const Options& opt,
                    const std::string& graph) {
  const ParsedGraph pg = load_graph(graph);
  validate_levels(pg.graph, opt.depth);
  const SpanningTree tree(pg.graph, opt.depth);
  const auto threads = end_threads(pg.graph, opt.depth);
  if (opt.lines()) {
    out << "depth=" << opt.depth << "\n";
    out << "threads=" << threads.size() << "\n";
  } else {
    out << threads.size() << " directions at depth " << opt.depth << "\n";
  }
  bool all_conclusive = true;
  for (const EndThread& t : threads) {
    const Verdict v = trivial_end_check(pg.graph, tree, t, opt.depth);
    if (!opt.lines()) out << "through " << t.deepest() << ": ";
    print_verdict(out, v, opt);
    all_conclusive = all_conclusive && v.conclusive();
  }
  return all_conclusive ? kConclusive : kWindowOnly;
}

inline int cmd_tree(std::ostream& out, const Options& opt,
                    const std::string& graph) {
  const ParsedGraph pg = load_graph(graph);
  validate_levels(pg.graph, opt.depth);
  const SpanningTree tree(pg.graph, opt.depth);
  const Verdict v = is_topological_tree_up_to(pg.graph, tree, opt.depth);
  print_verdict(out, v, opt);
  return verdict_exit(v);
}

inline int cmd_chords(std::ostream& out, const Options& opt,
                      const std::string& graph) {
  const ParsedGraph pg = load_graph(graph);
  validate_levels(pg.graph, opt.depth);
  const SpanningTree tree(pg.graph, opt.depth);
  if (!opt.lines()) {
    out << tree.chords().size() << " chords at depth " << opt.depth << "\n";
  }
  for (const ChordInfo& c : tree.chords()) {
    if (opt.lines()) {
      out << "chord=" << c.index << " edge=" << c.edge_id << " u=" << c.u
          << " v=" << c.v << " level=" << c.level << "\n";
    } else {
      out << "  e" << c.index << ": edge " << c.edge_id << " between " << c.u
          << " and " << c.v << " (level " << c.level << ")\n";
    }
  }
  return kConclusive;
}

inline int cmd_classify(std::ostream& out, const Options& opt,
                        const std::string& graph) {
  const ParsedGraph pg = load_graph(graph);
  validate_levels(pg.graph, opt.depth);
  const Classification c = classify_graph(pg.graph, opt.depth);
  if (opt.lines()) {
    out << "shape=" << shape_name(c.shape) << "\n";
    out << "depth=" << c.depth << "\n";
    if (c.shape == GroupShape::FreeOfRank) out << "rank=" << c.rank << "\n";
    out << "threads=" << c.ends.size() << "\n";
  } else {
    out << to_string(c) << "\n";
  }
  return c.shape == GroupShape::Inconclusive ? kWindowOnly : kConclusive;
}

inline int cmd_realizable(std::ostream& out, const Options& opt,
                          const std::string& graph, const std::string& word) {
  const ParsedGraph pg = load_graph(graph);
  const WordFamily f = load_word(word).expr.compile();
  // The tree must be deep enough to know every chord the word uses at
  // the scan depth; grow it until the scan stops complaining.
  for (int extra : {1, 2, 4, 8}) {
    validate_levels(pg.graph, opt.depth + extra);
    const SpanningTree tree(pg.graph, opt.depth + extra);
    try {
      const Verdict v = realizability_scan(pg.graph, tree, f, opt.radius,
                                           opt.depth, opt.threshold);
      print_verdict(out, v, opt);
      return verdict_exit(v);
    } catch (const std::out_of_range&) {
      continue;
    }
  }
  throw std::out_of_range("word uses chords far beyond the scan depth");
}

inline int cmd_demo(std::ostream& out, const Options& opt) {
  Options human = opt;
  human.format = "human";
  out << "== one-way ladder, one busy direction ==\n";
  out << to_string(classify_graph(ladder_graph(), 8)) << "\n";
  out << "== doubled binary tree, every direction busy ==\n";
  out << to_string(classify_graph(t2_doubled_tree_graph(), 6)) << "\n";
  out << "== the ladder tour cancels level by level ==\n";
  print_verdict(out, homotopic_up_to(ladder_loop_trace(), empty_trace(), 10),
                human);
  out << "== but its deepest cancellation never separates ==\n";
  print_verdict(out, adjacent_cancellation_certificate(ladder_loop_trace(), 8),
                human);
  out << "== the tree tour separates all of its cancellations ==\n";
  print_verdict(out, adjacent_cancellation_certificate(t2_loop_trace(), 8),
                human);
  out << "== a star element no infinite word reaches ==\n";
  print_verdict(out, bounded_check(unbounded_star_element(), 3, 10), human);
  return kConclusive;
}

}  // namespace cli_detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err) {
  using namespace cli_detail;
  Options opt;
  std::string word_a, word_b, graph_arg;

  CLI::App app{"analyze loops and infinite words over a graph's chords"};
  app.require_subcommand(1);

  auto common = [&](CLI::App* sub) {
    sub->add_option("--depth", opt.depth, "window depth (default 12)");
    sub->add_option("--format", opt.format, "human or lines")
        ->check(CLI::IsMember({"human", "lines"}));
    return sub;
  };

  auto* reduce_cmd =
      common(app.add_subcommand("reduce", "freely reduce a word"));
  reduce_cmd->add_option("word", word_a)->required();

  auto* eq_cmd =
      common(app.add_subcommand("eq", "compare two words level by level"));
  eq_cmd->add_option("word_a", word_a)->required();
  eq_cmd->add_option("word_b", word_b)->required();

  auto* permanent_cmd = common(app.add_subcommand(
      "permanent", "check whether every letter survives reduction"));
  permanent_cmd->add_option("word", word_a)->required();

  auto* homotopic_cmd = common(app.add_subcommand(
      "homotopic", "compare two loops, with a separation certificate"));
  homotopic_cmd->add_option("word_a", word_a)->required();
  homotopic_cmd->add_option("word_b", word_b)->required();

  auto* ends_cmd = common(
      app.add_subcommand("ends", "list directions to infinity and their chords"));
  ends_cmd->add_option("graph", graph_arg)->required();

  auto* tree_cmd = common(app.add_subcommand(
      "tree", "check the greedy spanning tree for branch collisions"));
  tree_cmd->add_option("graph", graph_arg)->required();

  auto* chords_cmd =
      common(app.add_subcommand("chords", "list the spanning tree's chords"));
  chords_cmd->add_option("graph", graph_arg)->required();

  auto* classify_cmd = common(
      app.add_subcommand("classify", "judge the loop group from one window"));
  classify_cmd->add_option("graph", graph_arg)->required();

  auto* realizable_cmd = common(app.add_subcommand(
      "realizable", "scan a word for direction-hopping no loop can draw"));
  realizable_cmd->add_option("graph", graph_arg)->required();
  realizable_cmd->add_option("word", word_a)->required();
  realizable_cmd->add_option("--radius", opt.radius,
                             "ball radius for regions (default 3)");
  realizable_cmd->add_option("--threshold", opt.threshold,
                             "alternations that count as a witness (default 6)");

  auto* demo_cmd = common(app.add_subcommand("demo", "a short guided tour"));

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kFailure;
  }

  try {
    if (reduce_cmd->parsed()) return cmd_reduce(out, opt, word_a);
    if (eq_cmd->parsed()) return cmd_eq(out, opt, word_a, word_b);
    if (permanent_cmd->parsed()) return cmd_permanent(out, opt, word_a);
    if (homotopic_cmd->parsed()) return cmd_homotopic(out, opt, word_a, word_b);
    if (ends_cmd->parsed()) return cmd_ends(out, opt, graph_arg);
    if (tree_cmd->parsed()) return cmd_tree(out, opt, graph_arg);
    if (chords_cmd->parsed()) return cmd_chords(out, opt, graph_arg);
    if (classify_cmd->parsed()) return cmd_classify(out, opt, graph_arg);
    if (realizable_cmd->parsed()) {
      return cmd_realizable(out, opt, graph_arg, word_a);
    }
    if (demo_cmd->parsed()) return cmd_demo(out, opt);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kFailure;
}

}  // namespace endwords
