#include "doctest.h"

#include <numeric>

#include "fixtures.hpp"
#include "rookgrowth/oracle.hpp"

using namespace rookgrowth;

namespace {
  std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) {
      f *= static_cast<std::uint64_t>(i);
    }
    return f;
  }

  // Full placements on a Ferrers board: choose rows column by column,
  // shortest column first.
  std::uint64_t full_count_formula(FerrersBoard const& f) {
    if (f.cols() != f.rows()) {
      return 0;
    }
    std::vector<int> heights;
    for (int c = 1; c <= f.cols(); ++c) {
      heights.push_back(f.height(c));
    }
    std::sort(heights.begin(), heights.end());
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < heights.size(); ++i) {
      int const choices = heights[i] - static_cast<int>(i);
      if (choices <= 0) {
        return 0;
      }
      count *= static_cast<std::uint64_t>(choices);
    }
    return count;
  }

  std::uint64_t count_stream(FerrersBoard const& f, bool full_only) {
    std::uint64_t n = 0;
    PlacementEnumerator e(f, full_only);
    while (e.next()) {
      ++n;
    }
    return n;
  }
}  // namespace

TEST_CASE("boards in a box") {
  auto const small = enumerate_boards(2, 2);
  std::vector<FerrersBoard> const expected{FerrersBoard{},       FerrersBoard({1}),
                                           FerrersBoard({2}),    FerrersBoard({1, 1}),
                                           FerrersBoard({2, 1}), FerrersBoard({2, 2})};
  CHECK(small == expected);
  CHECK(enumerate_boards(0, 0) == std::vector<FerrersBoard>{FerrersBoard{}});
  CHECK(enumerate_boards(1, 3)
        == std::vector<FerrersBoard>{FerrersBoard{}, FerrersBoard({1}), FerrersBoard({1, 1}),
                                     FerrersBoard({1, 1, 1})});
  for (int a = 0; a <= 5; ++a) {
    for (int b = 0; b <= 5; ++b) {
      CHECK(enumerate_boards(a, b).size() == fixtures::binomial(a + b, a));
    }
  }
  CHECK(enumerate_rectangles(2, 3).size() == 7);
}

TEST_CASE("placement streams") {
  auto const sq = FerrersBoard::rectangle(2, 2);
  CHECK(count_stream(sq, true) == 2);
  CHECK(count_stream(sq, false) == 7);
  auto const stair = enumerate_placements(FerrersBoard({2, 1}), true);
  REQUIRE(stair.size() == 1);
  CHECK(fixtures::squares(stair[0]) == std::vector<Square>{{1, 2}, {2, 1}});
  CHECK(count_stream(FerrersBoard{}, false) == 1);
  CHECK(count_stream(FerrersBoard{}, true) == 1);
  CHECK(count_stream(FerrersBoard::rectangle(3, 2), true) == 0);

  for (int n = 1; n <= 5; ++n) {
    std::uint64_t expected = 0;
    for (int k = 0; k <= n; ++k) {
      expected += fixtures::binomial(n, k) * fixtures::binomial(n, k) * factorial(k);
    }
    CHECK(count_stream(FerrersBoard::rectangle(n, n), false) == expected);
  }
  for (auto const& f : enumerate_boards(5, 5)) {
    CHECK(count_stream(f, true) == full_count_formula(f));
  }
}

TEST_CASE("placement streams have no repeats") {
  auto const all = enumerate_placements(FerrersBoard({3, 3, 2}), false);
  std::vector<std::vector<Square>> seen;
  for (auto const& p : all) {
    seen.push_back(fixtures::squares(p));
  }
  std::sort(seen.begin(), seen.end());
  CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
}

TEST_CASE("avoider counts") {
  std::vector<int> const d321{3, 2, 1};
  CHECK(count_avoiders(FerrersBoard::rectangle(4, 4), d321, true) == 14);
  CHECK(count_avoiders(FerrersBoard({2, 1}), std::vector<int>{2, 1}, true) == 1);
  CHECK(count_avoiders(FerrersBoard::rectangle(3, 3), std::vector<int>{1}, true) == 0);

  // Subset brute force over S_5
  std::vector<int> sigma{1, 2, 3, 4, 5};
  std::uint64_t brute = 0;
  do {
    auto const p = RookPlacement::from_permutation(sigma);
    brute += fixtures::brute_contains(p, {1, 3, 2}) ? 0 : 1;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  CHECK(count_avoiders(FerrersBoard::rectangle(5, 5), std::vector<int>{1, 3, 2}, true) == brute);
}

TEST_CASE("monotone sequences in bands") {
  auto const p = fixtures::knuth_example();
  CHECK(longest_monotone_in_band(p, 6, 9, Direction::decreasing) == 2);
  CHECK(longest_monotone_in_band(p, 1, 5, Direction::increasing) == 3);
  auto const all = all_longest_sequences(p, 6, 9, Direction::decreasing);
  CHECK(all == std::vector<std::vector<Square>>{{{7, 2}, {9, 1}}, {{8, 8}, {9, 1}}});
  CHECK(decreasing_from(p) == std::vector<int>{4, 3, 3, 4, 3, 2, 2, 1});
  CHECK(longest_monotone(fixtures::worked_example(), {8, 5}, Direction::decreasing) == 3);
}

TEST_CASE("every suite passes on a small box") {
  SuiteParams params;
  params.max_cols = 3;
  params.max_rows = 3;
  params.max_n = 4;
  params.k_values = {2, 3};
  for (auto const& name : suite_names()) {
    CAPTURE(name);
    auto const report = run_suite(name, params);
    CHECK(report.passed());
    CHECK(report.cases > 0);
    CHECK(report.violations.empty());
  }
  CHECK(suite_names().size() == 12);
  CHECK_THROWS_AS(run_suite("no-such-suite", params), ValidationError);
}

TEST_CASE("case counts follow the enumerators") {
  SuiteParams params;
  params.max_cols = 3;
  params.max_rows = 3;
  params.k_values = {2, 3, 4};
  std::uint64_t placements = 0;
  for (auto const& f : enumerate_boards(3, 3)) {
    placements += count_stream(f, false);
  }
  CHECK(run_suite("gda-roundtrip", params).cases == placements);
  CHECK(run_suite("main-theorem", params).cases == 3 * placements);
}

TEST_CASE("shards and threads partition the case space") {
  SuiteParams params;
  params.max_cols = 3;
  params.max_rows = 3;
  auto const whole = run_suite("lemma1-shape", params);
  std::uint64_t total = 0;
  std::uint64_t corners = 0;
  params.shards = 3;
  for (int s = 0; s < 3; ++s) {
    params.shard = s;
    auto const part = run_suite("lemma1-shape", params);
    total += part.cases;
    corners += part.counters.at("corners compared");
  }
  CHECK(total == whole.cases);
  CHECK(corners == whole.counters.at("corners compared"));

  params.shards = 1;
  params.shard = 0;
  params.threads = 3;
  auto const threaded = run_suite("lemma1-shape", params);
  CHECK(threaded.cases == whole.cases);
  CHECK(threaded.counters == whole.counters);

  params.shard = 1;
  CHECK_THROWS_AS(run_suite("lemma1-shape", params), ValidationError);
  params.shard = 0;
  params.k_values = {1};
  CHECK_THROWS_AS(run_suite("main-theorem", params), ValidationError);
}

TEST_CASE("report JSON and rechecking a case") {
  SuiteParams params;
  params.max_cols = 2;
  params.max_rows = 2;
  auto const j = to_json(run_suite("gda-roundtrip", params));
  for (auto const* key : {"suite", "params", "cases", "violations", "seconds"}) {
    CHECK(j.contains(key));
  }
  CHECK(j["suite"] == "gda-roundtrip");
  CHECK(j["violations"].empty());

  json const input = {{"stream", "placement"},
                      {"placement", to_json(fixtures::worked_example())},
                      {"k", 3}};
  CHECK(recheck_case("main-theorem", params, input).empty());
  CHECK_THROWS_AS(recheck_case("main-theorem", params, json::array()), ValidationError);
}
