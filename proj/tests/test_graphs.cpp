#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "endwords/classify.hpp"
#include "endwords/ends.hpp"
#include "endwords/graph.hpp"
#include "endwords/spanning.hpp"

using namespace endwords;

namespace {

std::string thrown_message(const std::function<void()>& f) {
  try {
    f();
  } catch (const std::exception& e) {
    return e.what();
  }
  return "";
}

int dist_of(const LevelView& v, std::uint64_t id) {
  return v.dist[v.vindex.at(id)];
}

std::vector<std::uint64_t> chord_edge_ids(const SpanningTree& t) {
  std::vector<std::uint64_t> out;
  for (const ChordInfo& c : t.chords()) out.push_back(c.edge_id);
  return out;
}

// Rails plus one rung: spans the ladder but runs both rails into the
// single direction to infinity.
SpanningTree bad_ladder_tree(const GraphLevels& g, int depth) {
  std::vector<std::uint64_t> ids = {0};
  for (std::uint64_t k = 1; k <= static_cast<std::uint64_t>(depth); ++k) {
    ids.push_back(3 * k - 2);
    ids.push_back(3 * k);
  }
  return SpanningTree(g, depth, ids);
}

}  // namespace

TEST_CASE("level views accumulate slices") {
  const GraphLevels ladder = ladder_graph();
  auto v3 = ladder.view(3);
  CHECK(v3->vertices.size() == 8);
  CHECK(v3->edges.size() == 10);
  CHECK(v3->base_present);
  CHECK(dist_of(*v3, 6) == 3);   // top3
  CHECK(dist_of(*v3, 7) == 4);   // bottom3
  CHECK(ladder.view(0)->edges.size() == 1);

  const GraphLevels grid = grid_graph();
  CHECK(grid.view(0)->vertices.size() == 1);
  CHECK(grid.view(2)->vertices.size() == 25);
  CHECK(grid.view(2)->edges.size() == 40);

  const GraphLevels t2 = t2_doubled_tree_graph();
  CHECK(t2.view(3)->vertices.size() == 29);
  CHECK(t2.view(3)->edges.size() == 42);
}

TEST_CASE("structural validation accepts the builtins") {
  CHECK_NOTHROW(validate_levels(ladder_graph(), 8));
  CHECK_NOTHROW(validate_levels(double_ladder_graph(), 8));
  CHECK_NOTHROW(validate_levels(t2_doubled_tree_graph(), 6));
  CHECK_NOTHROW(validate_levels(grid_graph(), 4));
  CHECK_NOTHROW(validate_levels(ray_graph(), 10));
  CHECK_NOTHROW(validate_levels(star_of_rays_graph(3), 8));
  CHECK_NOTHROW(validate_levels(k4_graph(), 3));
  CHECK_THROWS_AS(star_of_rays_graph(0), std::invalid_argument);
}

TEST_CASE("structural validation rejects malformed levels") {
  auto one_vertex = [](std::uint64_t id, int lvl) {
    VertexInfo v;
    v.id = id;
    v.level = lvl;
    return v;
  };

  SECTION("level tag must match the slice") {
    auto g = GraphLevels::from_slices(
        [&](int n) {
          GraphSlice s;
          if (n == 0) {
            s.vertices.push_back(one_vertex(0, 0));
            s.vertices.push_back(one_vertex(1, 1));
          }
          return s;
        },
        0);
    CHECK(thrown_message([&] { validate_levels(g, 1); }).find("carries level") !=
          std::string::npos);
  }
  SECTION("vertex ids are unique") {
    auto g = GraphLevels::from_slices(
        [&](int n) {
          GraphSlice s;
          s.vertices.push_back(one_vertex(0, n));
          return s;
        },
        0);
    CHECK(thrown_message([&] { validate_levels(g, 1); }).find("appears twice") !=
          std::string::npos);
  }
  SECTION("edges need both endpoints") {
    auto g = GraphLevels::from_slices(
        [&](int n) {
          GraphSlice s;
          if (n == 0) {
            s.vertices.push_back(one_vertex(0, 0));
            s.edges.push_back({0, 0, 7, 0});
          }
          return s;
        },
        0);
    CHECK(thrown_message([&] { validate_levels(g, 0); }).find("not present") !=
          std::string::npos);
  }
  SECTION("loops rejected") {
    auto g = GraphLevels::from_slices(
        [&](int n) {
          GraphSlice s;
          if (n == 0) {
            s.vertices.push_back(one_vertex(0, 0));
            s.edges.push_back({0, 0, 0, 0});
          }
          return s;
        },
        0);
    CHECK(thrown_message([&] { validate_levels(g, 0); }).find("loop") !=
          std::string::npos);
  }
  SECTION("base must exist at level 0") {
    auto g = GraphLevels::from_slices(
        [&](int n) {
          GraphSlice s;
          if (n == 0) s.vertices.push_back(one_vertex(1, 0));
          return s;
        },
        0);
    CHECK(thrown_message([&] { validate_levels(g, 0); }).find("base") !=
          std::string::npos);
  }
  SECTION("every level must be connected") {
    auto g = GraphLevels::from_slices(
        [&](int n) {
          GraphSlice s;
          if (n == 0) {
            s.vertices.push_back(one_vertex(0, 0));
            s.vertices.push_back(one_vertex(1, 0));
          }
          return s;
        },
        0);
    CHECK(thrown_message([&] { validate_levels(g, 0); }).find("disconnected") !=
          std::string::npos);
  }
}

TEST_CASE("greedy split numbers chords in rejection order") {
  SECTION("ladder keeps top rail and rungs") {
    const GraphLevels g = ladder_graph();
    const SpanningTree t(g, 5);
    REQUIRE(t.chords().size() == 5);
    for (std::uint32_t i = 0; i < 5; ++i) {
      const ChordInfo& c = t.chord(i);
      CHECK(c.index == i);
      CHECK(c.edge_id == 3 * (i + 1));
      CHECK(c.u == 2 * i + 1);
      CHECK(c.v == 2 * i + 3);
      CHECK(c.level == static_cast<int>(i) + 1);
    }
    CHECK(t.in_tree(0));
    CHECK(t.in_tree(4));
    CHECK_FALSE(t.in_tree(3));
    CHECK_THROWS_AS(t.chord(5), std::out_of_range);
  }
  SECTION("doubled tree rejects every direct edge") {
    const SpanningTree t(t2_doubled_tree_graph(), 4);
    REQUIRE(t.chords().size() == 30);
    CHECK(t.chord(0).u == 0);
    CHECK(t.chord(0).v == 1);
    CHECK(t.chord(2).u == 1);
    CHECK(t.chord(2).v == 3);
    CHECK(t.chord(2).edge_id == 8);
    CHECK(t.chord(2).level == 2);
  }
  SECTION("double ladder alternates sides") {
    const SpanningTree t(double_ladder_graph(), 6);
    REQUIRE(t.chords().size() == 12);
    CHECK(t.chord(0).edge_id == 6);
    CHECK(t.chord(0).u == 2);
    CHECK(t.chord(0).v == 6);
    CHECK(t.chord(1).edge_id == 9);
    CHECK(t.chord(1).u == 4);
    CHECK(t.chord(1).v == 8);
    CHECK(t.chord(2).edge_id == 12);
  }
  SECTION("complete graph on four vertices has rank three") {
    const SpanningTree t(k4_graph(), 2);
    REQUIRE(t.chords().size() == 3);
    CHECK(chord_edge_ids(t) == std::vector<std::uint64_t>{3, 4, 5});
  }
  SECTION("single cycle in the star") {
    const SpanningTree t(star_of_rays_graph(3), 6);
    REQUIRE(t.chords().size() == 1);
    CHECK(t.chord(0).u == 0);
    CHECK(t.chord(0).v == 2);
  }
  SECTION("ray has no chords") {
    CHECK(SpanningTree(ray_graph(), 8).chords().empty());
  }
}

TEST_CASE("deeper trees extend shallower ones") {
  auto prefix_stable = [](const GraphLevels& g, int d1, int d2) {
    const auto a = chord_edge_ids(SpanningTree(g, d1));
    const auto b = chord_edge_ids(SpanningTree(g, d2));
    REQUIRE(a.size() <= b.size());
    return std::equal(a.begin(), a.end(), b.begin());
  };
  CHECK(prefix_stable(ladder_graph(), 3, 7));
  CHECK(prefix_stable(double_ladder_graph(), 4, 7));
  CHECK(prefix_stable(t2_doubled_tree_graph(), 3, 5));
  CHECK(prefix_stable(grid_graph(), 3, 4));
  CHECK(prefix_stable(star_of_rays_graph(2), 3, 9));
}

TEST_CASE("grid spanning tree is the spiral") {
  const SpanningTree t(grid_graph(), 4);
  CHECK(t.tree_edges().size() == 80);
  CHECK(t.chords().size() == 64);
  for (const EdgeInfo& e : t.tree_edges()) {
    CHECK(e.id < (1ull << 33));
    CHECK(e.id % 2 == 0);
  }
  for (const ChordInfo& c : t.chords()) CHECK(c.edge_id >= (1ull << 33));
}

TEST_CASE("forced trees are checked") {
  const GraphLevels g = ladder_graph();
  SECTION("a valid forced split works") {
    const SpanningTree t(g, 1, {0, 1, 2});
    REQUIRE(t.chords().size() == 1);
    CHECK(t.chords()[0].edge_id == 3);
  }
  SECTION("cycles rejected") {
    CHECK(thrown_message([&] {
            SpanningTree(g, 1, {0, 1, 2, 3});
          }).find("cycle") != std::string::npos);
  }
  SECTION("non-spanning sets rejected") {
    CHECK(thrown_message([&] { SpanningTree(g, 1, {0, 1}); }).find("span") !=
          std::string::npos);
  }
}

TEST_CASE("outside components and direction threads") {
  SECTION("ladder has one direction") {
    const GraphLevels g = ladder_graph();
    const OutsideComponents c = components_outside(g, 3, 10);
    CHECK(c.reps == std::vector<std::uint64_t>{7});
    CHECK(c.comp_of.at(20) == 7);
    const auto threads = end_threads(g, 10);
    REQUIRE(threads.size() == 1);
    for (int r = 0; r < 10; ++r) {
      CHECK(threads[0].rep_at_radius[static_cast<std::size_t>(r)] ==
            static_cast<std::uint64_t>(2 * r + 1));
    }
  }
  SECTION("double ladder has two") {
    const auto threads = end_threads(double_ladder_graph(), 10);
    REQUIRE(threads.size() == 2);
    CHECK(threads[0].rep_at_radius[1] == 2);
    CHECK(threads[1].rep_at_radius[1] == 4);
  }
  SECTION("doubled tree branches exponentially") {
    const GraphLevels g = t2_doubled_tree_graph();
    for (int r = 0; r <= 3; ++r) {
      CHECK(components_outside(g, r, r + 4).reps.size() ==
            (std::size_t{1} << (r + 1)));
    }
  }
  SECTION("stars fan out, grids do not") {
    CHECK(end_threads(star_of_rays_graph(4), 8).size() == 4);
    CHECK(end_threads(grid_graph(), 8).size() == 1);
    CHECK(end_threads(k4_graph(), 5).empty());
    const auto ray = end_threads(ray_graph(), 10);
    REQUIRE(ray.size() == 1);
    CHECK(ray[0].rep_at_radius[4] == 5);
  }
}

TEST_CASE("chord regions at a radius") {
  SECTION("double ladder splits into left and right") {
    const GraphLevels g = double_ladder_graph();
    const SpanningTree t(g, 8);
    const auto regions = chord_regions(g, t, 2, 8);
    REQUIRE(regions.size() == 16);
    CHECK_FALSE(regions[0].has_value());  // touches the ball
    CHECK_FALSE(regions[1].has_value());
    REQUIRE(regions[2].has_value());
    REQUIRE(regions[3].has_value());
    CHECK(*regions[2] == 6);
    CHECK(*regions[3] == 8);
    CHECK(regions[4] == regions[2]);
    CHECK(regions[5] == regions[3]);
  }
  SECTION("ladder chords all share the one direction") {
    const GraphLevels g = ladder_graph();
    const SpanningTree t(g, 5);
    const auto regions = chord_regions(g, t, 0, 5);
    REQUIRE(regions.size() == 5);
    for (const auto& r : regions) {
      REQUIRE(r.has_value());
      CHECK(*r == 1);
    }
  }
}

TEST_CASE("topological soundness of spanning trees") {
  SECTION("greedy trees pass") {
    const GraphLevels ladder = ladder_graph();
    const Verdict ok = is_topological_tree_up_to(ladder, SpanningTree(ladder, 10), 10);
    CHECK(ok.kind == VerdictKind::TreeOkUpTo);
    CHECK(ok.level == 10);
    CHECK_FALSE(ok.conclusive());

    const GraphLevels dbl = double_ladder_graph();
    CHECK(is_topological_tree_up_to(dbl, SpanningTree(dbl, 8), 8).kind ==
          VerdictKind::TreeOkUpTo);
    const GraphLevels t2 = t2_doubled_tree_graph();
    CHECK(is_topological_tree_up_to(t2, SpanningTree(t2, 5), 5).kind ==
          VerdictKind::TreeOkUpTo);
    const GraphLevels star = star_of_rays_graph(3);
    CHECK(is_topological_tree_up_to(star, SpanningTree(star, 6), 6).kind ==
          VerdictKind::TreeOkUpTo);
  }
  SECTION("the winding spiral still passes") {
    const GraphLevels grid = grid_graph();
    CHECK(is_topological_tree_up_to(grid, SpanningTree(grid, 6), 6).kind ==
          VerdictKind::TreeOkUpTo);
  }
  SECTION("two rails into one direction fail") {
    const GraphLevels g = ladder_graph();
    const Verdict bad = is_topological_tree_up_to(g, bad_ladder_tree(g, 4), 4);
    CHECK(bad.kind == VerdictKind::TreeViolation);
    CHECK(bad.conclusive());
    CHECK(bad.detail.find("without ever meeting") != std::string::npos);
  }
}

TEST_CASE("directions with and without chords") {
  SECTION("ladder direction keeps carrying chords") {
    const GraphLevels g = ladder_graph();
    const SpanningTree t(g, 10);
    const auto threads = end_threads(g, 10);
    REQUIRE(threads.size() == 1);
    const Verdict v = trivial_end_check(g, t, threads[0], 10);
    CHECK(v.kind == VerdictKind::NontrivialUpTo);
    CHECK(v.level == 8);
    CHECK(v.count == std::size_t{2});
  }
  SECTION("ray and star directions run dry immediately") {
    const GraphLevels ray = ray_graph();
    const SpanningTree rt(ray, 10);
    const Verdict rv = trivial_end_check(ray, rt, end_threads(ray, 10)[0], 10);
    CHECK(rv.kind == VerdictKind::TrivialAt);
    CHECK(rv.level == 0);
    CHECK(rv.conclusive());

    const GraphLevels star = star_of_rays_graph(3);
    const SpanningTree st(star, 8);
    for (const EndThread& t : end_threads(star, 8)) {
      CHECK(trivial_end_check(star, st, t, 8).kind == VerdictKind::TrivialAt);
    }
  }
  SECTION("every doubled tree direction stays busy") {
    const GraphLevels g = t2_doubled_tree_graph();
    const SpanningTree t(g, 6);
    const auto threads = end_threads(g, 6);
    REQUIRE(threads.size() == 64);
    for (const EndThread& th : threads) {
      CHECK(trivial_end_check(g, t, th, 6).kind == VerdictKind::NontrivialUpTo);
    }
  }
}

TEST_CASE("window classification") {
  CHECK(classify_graph(ladder_graph(), 10).shape == GroupShape::FInfinity);
  CHECK(classify_graph(grid_graph(), 7).shape == GroupShape::FInfinity);
  CHECK(classify_graph(double_ladder_graph(), 10).shape == GroupShape::Wild);
  CHECK(classify_graph(t2_doubled_tree_graph(), 6).shape == GroupShape::Wild);

  const Classification k4 = classify_graph(k4_graph(), 5);
  CHECK(k4.shape == GroupShape::FreeOfRank);
  CHECK(k4.rank == 3);
  CHECK(to_string(k4) ==
        "FreeOfRank(3) at depth 5: 0 directions, 0 active; 3 chords (stable)");

  const Classification ray = classify_graph(ray_graph(), 10);
  CHECK(ray.shape == GroupShape::FreeOfRank);
  CHECK(ray.rank == 0);

  const Classification star = classify_graph(star_of_rays_graph(3), 10);
  CHECK(star.shape == GroupShape::FreeOfRank);
  CHECK(star.rank == 1);

  const Classification ladder = classify_graph(ladder_graph(), 10);
  CHECK(ladder.ends.size() == 1);
  CHECK(ladder.detail.find("1 active") != std::string::npos);
  CHECK(ladder.detail.find("(growing)") != std::string::npos);
  CHECK(classify_graph(t2_doubled_tree_graph(), 6).ends.size() == 64);
}
