#include "doctest.h"

#include "fixtures.hpp"
#include "rookgrowth/bwx.hpp"
#include "rookgrowth/growth.hpp"
#include "rookgrowth/oracle.hpp"
#include "rookgrowth/tableaux.hpp"

using namespace rookgrowth;

namespace {
  std::vector<Partition> parse_seq(std::vector<std::vector<int>> const& parts) {
    std::vector<Partition> out;
    for (auto const& p : parts) {
      out.emplace_back(p);
    }
    return out;
  }
}  // namespace

TEST_CASE("local rules") {
  Partition const empty;
  Partition const one({1});
  Partition const two({2});
  Partition const eleven({1, 1});
  // Rule 1
  CHECK(grow_corner(two, one, eleven, false) == Partition({2, 1}));
  // Rule 2: box added in row 1 on both sides moves up a row
  CHECK(grow_corner(one, empty, one, false) == eleven);
  // Rule 2_k with k = 2 turns 11 into 2
  CHECK(grow_corner(one, empty, one, false, 2) == two);
  // Rule 3
  CHECK(grow_corner(empty, empty, empty, true) == one);
  CHECK(grow_corner(one, one, one, false) == one);
  CHECK_THROWS_AS(grow_corner(two, empty, two, false), std::logic_error);
}

TEST_CASE("NE label of the worked example") {
  auto const p = fixtures::worked_example();
  CHECK(run_gda(p).label(8, 5) == Partition({2, 2, 1}));
  CHECK(run_gda_k(p, 3).label(8, 5) == Partition({3, 2}));
}

TEST_CASE("GDA_3 border of the worked example") {
  auto const p = fixtures::worked_example();
  auto const expected = parse_seq({{}, {1}, {2}, {2, 1}, {2, 2}, {3, 2}, {2, 2}, {2, 1},
                                   {3, 1}, {3}, {4}, {3}, {2}, {3}, {2}, {1}, {}});
  auto const seq_k = border_sequence(run_gda_k(p, 3));
  CHECK(seq_k.partitions == expected);
  CHECK(border_sequence(run_gda(phi_star(p, 3).placement)) == seq_k);
}

TEST_CASE("small diagrams") {
  auto const id = RookPlacement::from_permutation(std::vector<int>{1, 2});
  CHECK(run_gda(id).label(2, 2) == Partition({2}));
  auto const swap = RookPlacement::from_permutation(std::vector<int>{2, 1});
  CHECK(run_gda(swap).label(2, 2) == Partition({1, 1}));
  CHECK(run_gda_k(swap, 2).label(2, 2) == Partition({2}));
  CHECK_THROWS_AS(run_gda_k(swap, 1), DomainError);
  CHECK_THROWS_AS(run_gda(swap).label(3, 0), DomainError);
  auto const empty = run_gda(RookPlacement{});
  CHECK(border_sequence(empty).partitions == std::vector<Partition>{Partition{}});
}

TEST_CASE("border corners follow the right/up edge") {
  FerrersBoard const f({3, 1});
  CHECK(border_corners(f)
        == std::vector<Square>{{3, 0}, {3, 1}, {2, 1}, {1, 1}, {1, 2}, {0, 2}});
  CHECK(border_corners(FerrersBoard{}) == std::vector<Square>{{0, 0}});
}

TEST_CASE("labels are RS shapes of rectangle restrictions") {
  for (auto const& f : enumerate_boards(3, 4)) {
    PlacementEnumerator e(f, false);
    while (auto p = e.next()) {
      auto const g = run_gda(*p);
      for (int j = 1; j <= f.rows(); ++j) {
        for (int i = 1; i <= f.width(j); ++i) {
          auto const r = restrict_to_rectangle(*p, {i, j});
          CHECK(g.label(i, j).part(0) == longest_monotone(r, Direction::increasing));
          CHECK(static_cast<int>(g.label(i, j).length())
                == longest_monotone(r, Direction::decreasing));
        }
      }
    }
  }
}

TEST_CASE("sweep order does not matter") {
  for (auto const& f : enumerate_boards(3, 3)) {
    PlacementEnumerator e(f, false);
    while (auto p = e.next()) {
      for (int k : {0, 2, 3}) {
        CHECK(run_growth(*p, k, SweepOrder::rows_first)
              == run_growth(*p, k, SweepOrder::columns_first));
      }
    }
  }
}

TEST_CASE("GDA_k labels have at most k-1 parts") {
  for (auto const& f : enumerate_boards(4, 4)) {
    PlacementEnumerator e(f, false);
    while (auto p = e.next()) {
      for (int k : {2, 3}) {
        auto const g = run_gda_k(*p, k);
        for (int j = 0; j <= f.rows(); ++j) {
          for (int i = 0; i <= f.cols(); ++i) {
            if (g.has_corner(i, j)) {
              CHECK(g.label(i, j).length() < static_cast<std::size_t>(k));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("inverse algorithm recovers the worked example") {
  auto const p = fixtures::worked_example();
  auto const g = run_gda(p);
  auto const r = invert_gda(border_sequence(g), p.board());
  CHECK(r.placement == p);
  CHECK(r.diagram == g);
}

TEST_CASE("inverse algorithm rejects inconsistent borders") {
  FerrersBoard const f = FerrersBoard::rectangle(2, 2);
  auto seq = border_sequence(run_gda(RookPlacement::from_permutation(std::vector<int>{2, 1})));
  BorderSequence short_seq{{seq.partitions.begin(), seq.partitions.end() - 1}};
  CHECK_THROWS_AS(invert_gda(short_seq, f), ReconstructionError);

  auto bad_edge = seq;
  bad_edge.partitions.front() = Partition({1});
  CHECK_THROWS_AS(invert_gda(bad_edge, f), ReconstructionError);

  auto jump = seq;
  jump.partitions[2] = Partition({3});
  CHECK_THROWS_AS(invert_gda(jump, f), ReconstructionError);
}

TEST_CASE("roundtrip on every placement in a 4 x 4 box") {
  for (auto const& f : enumerate_boards(4, 4)) {
    PlacementEnumerator e(f, false);
    while (auto p = e.next()) {
      CHECK(invert_gda(border_sequence(run_gda(*p)), f).placement == *p);
    }
  }
}
