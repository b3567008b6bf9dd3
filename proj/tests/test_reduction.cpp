#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "setramsey/embed.hpp"
#include "setramsey/patterns.hpp"
#include "setramsey/reduction.hpp"
#include "test_util.hpp"

using namespace setramsey;
using K = PatternKind::Kind;

TEST_CASE("reducedness of small examples") {
  CHECK(is_reduced(SetFamily(1, {0b0, 0b1})));
  CHECK(!is_reduced(SetFamily(2, {0b01, 0b11})));  // element 1 is useless
  CHECK(is_reduced(SetFamily()));                  // degenerate
  CHECK(!is_reduced(SetFamily(1, {0b0})));         // unused column
}

TEST_CASE("nine distinct sets over four elements are always reduced") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    CHECK(is_reduced(testutil::random_family(rng, 4, 9)));
  }
}

TEST_CASE("reduce deletes the smallest useless element first") {
  const SetFamily f(2, {0b01, 0b11});  // {1}, {1,2}
  const ReduceResult r = reduce(f);
  CHECK(r.family == SetFamily(1, {0b0, 0b1}));
  CHECK(r.deleted == std::vector<int>{1});
  CHECK(r.kept == std::vector<int>{2});
  CHECK(is_reduced(r.family));
}

TEST_CASE("reduce is the identity on reduced families") {
  const SetFamily f(1, {0b0, 0b1});
  const ReduceResult r = reduce(f);
  CHECK(r.family == f);
  CHECK(r.deleted.empty());
}

TEST_CASE("reduce preserves size and distinctness") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 400; ++trial) {
    const int u = 1 + static_cast<int>(rng() % 8);
    const int m = 1 + static_cast<int>(rng() % std::min(12, 1 << u));
    const SetFamily f = testutil::random_family(rng, u, m);
    const ReduceResult r = reduce(f);
    CHECK(r.family.size() == f.size());
    CHECK(is_reduced(r.family));
    CHECK(kogan_bound_check(r.family));
    CHECK(static_cast<int>(r.kept.size()) == r.family.universe_size());

    // Kept columns must reproduce the original incidence.
    for (int i = 1; i <= f.size(); ++i) {
      for (int e = 1; e <= r.family.universe_size(); ++e) {
        CHECK(r.family.has(i, e) == f.has(i, r.kept[e - 1]));
      }
    }
  }
}

TEST_CASE("kogan bound on documented cases") {
  CHECK(kogan_bound_check(SetFamily(1, {0b0, 0b1})));  // 1 <= 1
  CHECK_THROWS_AS(kogan_bound_check(SetFamily(2, {0b01, 0b11})),
                  std::invalid_argument);
  std::mt19937_64 rng(33);
  const SetFamily nine = reduce(testutil::random_family(rng, 4, 9)).family;
  CHECK(kogan_bound_check(nine));
}

TEST_CASE("reduced families have no universal or duplicated elements") {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 200; ++trial) {
    const int u = 2 + static_cast<int>(rng() % 6);
    const int m = 2 + static_cast<int>(rng() % std::min(10, (1 << u) - 1));
    const SetFamily g = reduce(testutil::random_family(rng, u, m)).family;
    if (g.universe_size() == 0) continue;
    SetMask inter = full_mask(g.universe_size());
    for (SetMask w : g.members()) inter &= w;
    CHECK(inter == 0);  // no universal element
    for (int c = 1; c <= g.universe_size(); ++c) {
      for (int d = c + 1; d <= g.universe_size(); ++d) {
        bool same = true;
        for (int i = 1; i <= g.size() && same; ++i) {
          same = g.has(i, c) == g.has(i, d);
        }
        CHECK(!same);  // no duplicated elements
      }
    }
  }
}

TEST_CASE("distinct traces on documented cases") {
  const SetFamily two(1, {0b0, 0b1});
  CHECK(distinct_traces(two, {}) == std::vector<int>{1});

  const SetFamily four(2, {0b00, 0b01, 0b10, 0b11});
  CHECK(distinct_traces(four, {1, 2}) == std::vector<int>{1, 2, 3, 4});

  const SetFamily F = parse_family(std::string_view{
      "1000\n0100\n1101\n1110\n0011\n0110\n1001\n1100\n"});
  const auto picked = distinct_traces(F, {1, 2, 3});
  REQUIRE(picked.size() == 4);
  std::set<SetMask> traces;
  for (int i : picked) traces.insert(F.member(i) & 0b111);
  CHECK(traces.size() == 4);
  CHECK(picked == std::vector<int>{1, 2, 3, 4});  // greedy is deterministic
}

TEST_CASE("distinct traces rejects bad inputs") {
  const SetFamily not_reduced(2, {0b01, 0b11});
  CHECK_THROWS_AS(distinct_traces(not_reduced, {1}), std::invalid_argument);
  const SetFamily ok(1, {0b0, 0b1});
  CHECK_THROWS_AS(distinct_traces(ok, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(distinct_traces(ok, {7}), std::invalid_argument);
}

TEST_CASE("merge pairs on documented cases") {
  const SetFamily ab(1, {0b0, 0b1});
  const MergePair mp = merge_pairs(ab, 1);
  REQUIRE(mp.pairs.size() == 1);
  CHECK(mp.pairs[0].i == 1);
  CHECK(mp.pairs[0].j == 2);
  CHECK(mp.pairs[0].zero_side == 1);
  CHECK(mp.pairs[0].one_side == 2);

  const SetFamily two(2, {0b01, 0b10});
  CHECK(merge_pairs(two, 1).pairs.empty());

  const SetFamily F = parse_family(std::string_view{
      "1000\n0100\n1101\n1110\n0011\n0110\n1001\n1100\n"});
  const MergePair col4 = merge_pairs(F, 4);
  REQUIRE(col4.pairs.size() == 2);
  CHECK(col4.pairs[0].i == 1);
  CHECK(col4.pairs[0].j == 7);
  CHECK(col4.pairs[0].one_side == 7);  // 1001 holds element 4
  CHECK(col4.pairs[1].i == 3);
  CHECK(col4.pairs[1].j == 8);
  CHECK(col4.pairs[1].one_side == 3);  // 1101 holds element 4

  CHECK_THROWS_AS(merge_pairs(F, 9), std::invalid_argument);
}

TEST_CASE("patterns found in the reduced family lift to the original") {
  std::mt19937_64 rng(55);
  int lifted = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int u = 2 + static_cast<int>(rng() % 5);
    const int m = 3 + static_cast<int>(rng() % std::min(8, (1 << u) - 2));
    const SetFamily f = testutil::random_family(rng, u, m);
    const ReduceResult r = reduce(f);
    for (K k : {K::Singleton, K::CoSingleton, K::Monotone}) {
      const PatternMatrix p = generate({k, 1 + static_cast<int>(rng() % 2)});
      const auto e = find_embedding(r.family, p);
      if (!e) continue;
      ++lifted;
      Embedding composed = *e;
      for (int& c : composed.col_map) c = r.kept[c - 1];
      CHECK(verify_embedding(f, p, composed));
    }
  }
  CHECK(lifted > 50);
}
