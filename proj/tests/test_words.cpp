#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>
#include <unordered_set>

#include "endwords/letters.hpp"
#include "endwords/reduce.hpp"
#include "endwords/reduction.hpp"
#include "endwords/schedule.hpp"
#include "helpers.hpp"

using namespace endwords;
using test_helpers::brute_deletable;
using test_helpers::random_word;
using test_helpers::wd;

TEST_CASE("letters render and invert") {
  CHECK(to_string(fwd(3)) == "e3");
  CHECK(to_string(bwd(3)) == "E3");
  CHECK(fwd(3).inverse() == bwd(3));
  CHECK(cancels(fwd(1), bwd(1)));
  CHECK_FALSE(cancels(fwd(1), fwd(1)));
  CHECK_FALSE(cancels(fwd(1), bwd(2)));
  CHECK(to_string(FiniteWord()) == "eps");
  CHECK(to_string(wd("e0 E1")) == "e0 E1");
}

TEST_CASE("free reduction") {
  CHECK(reduce(wd("e0 E0")) == wd("eps"));
  CHECK(reduce(wd("e0 E1 e1 E0 e2")) == wd("e2"));
  CHECK(reduce(wd("e0 E0 e0")) == wd("e0"));
  CHECK(is_reduced(wd("e0 e1 e0")));
  CHECK_FALSE(is_reduced(wd("e0 e1 E1")));

  SECTION("group operations") {
    const FiniteWord w = wd("e0 e1 E2");
    CHECK(free_mul(w, free_inv(w)) == wd("eps"));
    CHECK(free_inv(w) == wd("e2 E1 E0"));
    CHECK(free_mul(wd("e0 e1"), wd("E1 e2")) == wd("e0 e2"));
  }

  SECTION("restriction") {
    const FiniteWord w = wd("e0 e3 E1 e2");
    CHECK(restrict_leq(w, 1) == wd("e0 E1"));
    CHECK(restrict_leq(w, 0) == wd("e0"));
    CHECK(restrict_to(w, {0, 2}) == wd("e0 e2"));
  }
}

TEST_CASE("restriction commutes with reduction") {
  // Both orders compute the image of the same group element under the
  // chord-dropping homomorphism, so they agree on normal forms.
  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 2000; ++trial) {
    const FiniteWord w = random_word(rng, 1 + trial % 30, 5);
    const std::uint32_t bound = trial % 5;
    CHECK(reduce(restrict_leq(w, bound)) ==
          reduce(restrict_leq(reduce(w), bound)));
  }
}

TEST_CASE("reduction validation") {
  const FiniteWord w = wd("e0 e1 E1 E0");
  CHECK(is_valid_reduction(w, Reduction{{{1, 2}, {0, 3}}}));
  CHECK(is_valid_reduction(w, Reduction{{}}));

  std::string why;
  SECTION("non-adjacent pair rejected") {
    CHECK_FALSE(is_valid_reduction(w, Reduction{{{0, 3}}}, &why));
    CHECK(why.find("not adjacent") != std::string::npos);
    CHECK_THROWS_AS(validate_reduction(w, Reduction{{{0, 3}}}), InvalidReduction);
  }
  SECTION("non-cancelling pair rejected") {
    CHECK_FALSE(is_valid_reduction(wd("e0 e0"), Reduction{{{0, 1}}}, &why));
    CHECK(why.find("cancel") != std::string::npos);
  }
  SECTION("position reuse rejected") {
    CHECK_FALSE(
        is_valid_reduction(wd("e0 E0 e0"), Reduction{{{0, 1}, {1, 2}}}, &why));
    CHECK(why.find("reuses") != std::string::npos);
  }
  SECTION("out of range rejected") {
    CHECK_FALSE(is_valid_reduction(w, Reduction{{{2, 9}}}, &why));
    CHECK(why.find("range") != std::string::npos);
  }

  SECTION("apply deletes exactly the paired positions") {
    CHECK(apply_reduction(w, Reduction{{{1, 2}}}) == wd("e0 E0"));
    CHECK(apply_reduction(w, Reduction{{{1, 2}, {0, 3}}}) == wd("eps"));
    CHECK(is_maximal_reduction(w, Reduction{{{1, 2}, {0, 3}}}));
    CHECK_FALSE(is_maximal_reduction(w, Reduction{{{1, 2}}}));
  }
}

TEST_CASE("reduction enumeration") {
  SECTION("single pair word") {
    auto rs = enumerate_reductions(wd("e0 E0"));
    REQUIRE(rs.size() == 2);
    CHECK(rs[0] == Reduction{{}});
    CHECK(rs[1] == Reduction{{{0, 1}}});
  }

  SECTION("alternating square has seven ordered reductions") {
    auto rs = enumerate_reductions(wd("e0 E0 e0 E0"));
    CHECK(rs.size() == 7);
    int maximal = 0;
    for (const auto& r : rs) {
      CHECK(is_valid_reduction(wd("e0 E0 e0 E0"), r));
      if (is_maximal_reduction(wd("e0 E0 e0 E0"), r)) ++maximal;
    }
    CHECK(maximal == 3);
  }

  SECTION("reduced word admits only the empty reduction") {
    auto rs = enumerate_reductions(wd("e0 e1 e0"));
    REQUIRE(rs.size() == 1);
    CHECK(rs[0].pairs.empty());
  }

  SECTION("bound is enforced") {
    FiniteWord big;
    for (int i = 0; i < 11; ++i) big.push_back(fwd(0));
    CHECK_THROWS_AS(enumerate_reductions(big, 10), OracleBoundExceeded);
  }

  SECTION("enumerated reductions are distinct and valid") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
      const FiniteWord w = random_word(rng, 8, 2);
      auto rs = enumerate_reductions(w);
      std::set<std::vector<PosPair>> seen;
      for (const auto& r : rs) {
        CHECK(is_valid_reduction(w, r));
        seen.insert(r.pairs);
      }
      CHECK(seen.size() == rs.size());
    }
  }
}

TEST_CASE("deletable and permanent positions") {
  SECTION("frozen cases") {
    CHECK(deletable_positions(wd("e0 E0 e0")) ==
          std::vector<bool>{true, true, true});
    CHECK(permanent_positions(wd("e0 E0 e0")).empty());
    CHECK(permanent_positions(wd("e0 e1 E1 e1")) ==
          std::vector<std::size_t>{0});
    CHECK(permanent_positions(wd("e0 e1 e0")) ==
          std::vector<std::size_t>{0, 1, 2});
  }

  SECTION("a word is reduced iff every position is permanent") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 500; ++trial) {
      const FiniteWord w = random_word(rng, 1 + trial % 12, 3);
      CHECK((permanent_positions(w).size() == w.size()) == is_reduced(w));
    }
  }

  SECTION("interval criterion matches enumeration") {
    std::mt19937 rng(123);
    for (int trial = 0; trial < 300; ++trial) {
      const FiniteWord w = random_word(rng, 1 + trial % 9, 2);
      CHECK(deletable_positions(w) == brute_deletable(w));
    }
  }
}

TEST_CASE("prefix states identify trivial factors") {
  const FiniteWord w = wd("e0 E0 e1 E1");
  PrefixStates ps(w);
  CHECK(ps.factor_trivial(0, 0));
  CHECK(ps.factor_trivial(0, 2));
  CHECK(ps.factor_trivial(0, 4));
  CHECK(ps.factor_trivial(2, 4));
  CHECK_FALSE(ps.factor_trivial(0, 1));
  CHECK_FALSE(ps.factor_trivial(1, 3));

  SECTION("agrees with reduce on random factors") {
    std::mt19937 rng(5150);
    for (int trial = 0; trial < 200; ++trial) {
      const FiniteWord v = random_word(rng, 12, 2);
      PrefixStates states(v);
      for (std::size_t a = 0; a <= v.size(); ++a) {
        for (std::size_t b = a; b <= v.size(); ++b) {
          FiniteWord factor;
          for (std::size_t i = a; i < b; ++i) factor.push_back(v[i]);
          CHECK(states.factor_trivial(a, b) == reduce(factor).empty());
        }
      }
    }
  }
}

TEST_CASE("nesting schedule") {
  SECTION("nested pair runs inside first") {
    const FiniteWord w = wd("e0 e1 E1 E0");
    auto s = reduction_schedule(w, Reduction{{{0, 3}, {1, 2}}});
    CHECK(s.order.pairs == std::vector<PosPair>{{1, 2}, {0, 3}});
    REQUIRE(s.chains.size() == 1);
    CHECK(s.parent[1] == 0);
    CHECK(s.parent[0] == NestingSchedule::npos);
  }

  SECTION("disjoint chains run last-extracted first") {
    const FiniteWord w = wd("e0 E0 e1 E1");
    auto s = reduction_schedule(w, Reduction{{{0, 1}, {2, 3}}});
    CHECK(s.order.pairs == std::vector<PosPair>{{2, 3}, {0, 1}});
    CHECK(s.chains.size() == 2);
  }

  SECTION("descent takes the leftmost inner pair") {
    const FiniteWord w = wd("e0 e1 E1 e1 E1 E0");
    auto s = reduction_schedule(w, Reduction{{{0, 5}, {1, 2}, {3, 4}}});
    CHECK(s.order.pairs == std::vector<PosPair>{{3, 4}, {1, 2}, {0, 5}});
    CHECK(s.chains.size() == 2);
  }

  SECTION("invalid input is rejected") {
    CHECK_THROWS_AS(reduction_schedule(wd("e0 E0"), Reduction{{{0, 9}}}),
                    InvalidReduction);
  }

  SECTION("schedule of any enumerated reduction is again valid") {
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 60; ++trial) {
      const FiniteWord w = random_word(rng, 8, 2);
      for (const auto& r : enumerate_reductions(w)) {
        auto s = reduction_schedule(w, r);
        CHECK(is_valid_reduction(w, s.order));
        CHECK(s.order.pairs.size() == r.pairs.size());
        // Same pair set, possibly reordered.
        auto key = [](Reduction red) {
          for (auto& [a, b] : red.pairs) {
            if (a > b) std::swap(a, b);
          }
          std::sort(red.pairs.begin(), red.pairs.end());
          return red.pairs;
        };
        CHECK(key(s.order) == key(r));
        CHECK(apply_reduction(w, s.order) == apply_reduction(w, r));
      }
    }
  }
}
