#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "setramsey/patterns.hpp"

using namespace setramsey;
using K = PatternKind::Kind;

namespace {

std::vector<std::string> rows_of(const PatternMatrix& p) {
  std::vector<std::string> out;
  std::string line;
  for (int i = 1; i <= p.rows(); ++i) {
    line.clear();
    for (int j = 1; j <= p.cols(); ++j) {
      switch (p.cell(i, j)) {
        case Cell::Zero: line += '0'; break;
        case Cell::One: line += '1'; break;
        case Cell::Wildcard: line += '?'; break;
      }
    }
    out.push_back(line);
  }
  return out;
}

PatternMatrix rotate_last_row_to_front(const PatternMatrix& p) {
  auto rows = rows_of(p);
  std::rotate(rows.begin(), rows.end() - 1, rows.end());
  return PatternMatrix::from_rows(rows);
}

}  // namespace

TEST_CASE("order one: all three concrete kinds coincide") {
  const PatternMatrix s = generate({K::Singleton, 1});
  CHECK(s == generate({K::Monotone, 1}));
  CHECK(s == generate({K::CoSingleton, 1}));
  CHECK(rows_of(s) == std::vector<std::string>{"0", "1"});
}

TEST_CASE("singleton(3) rows") {
  CHECK(rows_of(generate({K::Singleton, 3})) ==
        std::vector<std::string>{"000", "100", "010", "001"});
}

TEST_CASE("cosingleton(3) rows") {
  CHECK(rows_of(generate({K::CoSingleton, 3})) ==
        std::vector<std::string>{"011", "101", "110", "111"});
}

TEST_CASE("monotone rows against a cell-by-cell recount") {
  CHECK(rows_of(generate({K::Monotone, 3})) ==
        std::vector<std::string>{"000", "100", "110", "111"});
  for (int n = 1; n <= 5; ++n) {
    const PatternMatrix m = generate({K::Monotone, n});
    for (int i = 1; i <= n + 1; ++i) {
      for (int j = 1; j <= n; ++j) {
        CHECK(m.cell(i, j) == (i >= j + 1 ? Cell::One : Cell::Zero));
      }
    }
  }
}

TEST_CASE("templates leave the documented cells free") {
  const PatternMatrix inc = generate({K::IncreasingTemplate, 3});
  CHECK(rows_of(inc) == std::vector<std::string>{"000", "100", "?10", "??1"});
  const PatternMatrix dec = generate({K::DecreasingTemplate, 3});
  CHECK(rows_of(dec) == std::vector<std::string>{"0??", "10?", "110", "111"});
}

TEST_CASE("classify named shapes") {
  const auto s3 = classify(generate({K::Singleton, 3}));
  CHECK(s3 == std::vector<PatternKind>{{K::Singleton, 3},
                                       {K::IncreasingTemplate, 3}});
  const auto m3 = classify(generate({K::Monotone, 3}));
  CHECK(m3 == std::vector<PatternKind>{{K::Monotone, 3},
                                       {K::IncreasingTemplate, 3},
                                       {K::DecreasingTemplate, 3}});
  const auto c3 = classify(generate({K::CoSingleton, 3}));
  CHECK(c3 == std::vector<PatternKind>{{K::CoSingleton, 3},
                                       {K::DecreasingTemplate, 3}});
  CHECK(classify(PatternMatrix::from_rows({"11", "11"})).empty());
  CHECK_THROWS_AS(classify(PatternMatrix(2, 1)), std::invalid_argument);
}

TEST_CASE("structural invariants across orders") {
  for (int n = 1; n <= 6; ++n) {
    const PatternMatrix s = generate({K::Singleton, n});
    const PatternMatrix c = generate({K::CoSingleton, n});
    const PatternMatrix m = generate({K::Monotone, n});
    CHECK(instantiates(s, generate({K::IncreasingTemplate, n})));
    CHECK(instantiates(c, generate({K::DecreasingTemplate, n})));
    CHECK(instantiates(m, generate({K::IncreasingTemplate, n})));
    CHECK(instantiates(m, generate({K::DecreasingTemplate, n})));
    CHECK(rotate_last_row_to_front(complement(c)) == s);
    if (n >= 2) {
      CHECK(s != c);
      CHECK(s != m);
      CHECK(c != m);
    }
  }
}

TEST_CASE("spec strings round trip") {
  for (const char* spec : {"singleton:3", "cosingleton:2", "monotone:4",
                           "increasing:1", "decreasing:5"}) {
    CHECK(to_spec(parse_pattern_spec(spec)) == spec);
  }
  CHECK_THROWS_AS(parse_pattern_spec("singleton"), std::invalid_argument);
  CHECK_THROWS_AS(parse_pattern_spec("singleton:0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_pattern_spec("blob:3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_pattern_spec("singleton:x"), std::invalid_argument);
}
