#include "doctest.h"

#include "fixtures.hpp"
#include "rookgrowth/oracle.hpp"
#include "rookgrowth/pivots.hpp"
#include "rookgrowth/tableaux.hpp"

using namespace rookgrowth;

TEST_CASE("pivots of the example placements") {
  auto const p = fixtures::pivot_example();
  auto const left = pivots(p, Side::left);
  CHECK(fixtures::squares(left) == std::vector<Square>{{2, 5}, {3, 2}, {4, 7}, {6, 9}});
  CHECK(pivots_by_columns(p) == left);

  auto const rev = symmetry(p, Symmetry::reverse);
  auto const right = pivots(rev, Side::right);
  CHECK(fixtures::squares(right) == std::vector<Square>{{4, 9}, {6, 7}, {7, 2}, {8, 5}});
  CHECK(symmetry(left, Symmetry::reverse) == right);
}

TEST_CASE("tableaux of the reversed example placement and its pivots") {
  auto const p = symmetry(fixtures::pivot_example(), Symmetry::reverse);
  auto const rs = rs_pair(p);
  CHECK(rs.insertion == StandardTableau({{1, 4, 8}, {2, 5}, {7}, {9}}));
  CHECK(rs.recording == StandardTableau({{1, 3, 9}, {4, 8}, {6}, {7}}));

  auto const right = rs_pair(pivots(p, Side::right));
  CHECK(right.insertion == StandardTableau({{2, 5}, {7}, {9}}));
  CHECK(right.recording == StandardTableau({{4, 8}, {6}, {7}}));

  auto const left = rs_pair(pivots(p, Side::left));
  CHECK(left.insertion == StandardTableau({{4, 8}, {5}}));
  CHECK(left.recording == StandardTableau({{1, 8}, {7}}));
}

TEST_CASE("pivot coordinates") {
  auto const p = fixtures::pivot_example();
  CHECK(pivot_coords(p, {2, 4}) == PivotCoords{5, 0});
  CHECK(pivot_coords(p, {9, 2}) == PivotCoords{std::nullopt, 3});
  CHECK_THROWS_AS(pivot_coords(p, {5, 5}), DomainError);
  CHECK(pivot_table(p).size() == p.size());
}

TEST_CASE("pivot paths") {
  auto const p = fixtures::pivot_example();
  std::vector<Square> const linked{{3, 1}, {9, 2}};
  CHECK(is_pivot_path(p, linked));
  std::vector<Square> const unlinked{{3, 1}, {4, 5}};
  CHECK_FALSE(is_pivot_path(p, unlinked));
  std::vector<Square> const single{{3, 1}};
  CHECK(is_pivot_path(p, single));
  CHECK(is_pivot_path(p, std::span<Square const>{}));
  std::vector<Square> const decreasing{{1, 8}, {2, 4}};
  CHECK_FALSE(is_pivot_path(p, decreasing));
  auto const left = pivots(p, Side::left);
  CHECK(pivot_successor(left, p, {3, 1}) == Square{9, 2});
  CHECK_FALSE(pivot_successor(left, p, {9, 2}).has_value());
}

TEST_CASE("small pivot cases") {
  auto const id = RookPlacement::from_permutation(std::vector<int>{1, 2});
  CHECK(fixtures::squares(pivots(id, Side::left)) == std::vector<Square>{{1, 2}});
  CHECK(pivots_by_columns(id) == pivots(id, Side::left));
  CHECK(pivots(id, Side::right).empty());
  auto const empty = RookPlacement(FerrersBoard::rectangle(3, 3), {});
  CHECK(pivots(empty, Side::left).empty());
  CHECK(pivots_by_columns(empty).empty());
  CHECK_THROWS_AS(pivots(fixtures::worked_example(), Side::left), DomainError);
}

TEST_CASE("pivot sets are placements and obey the slice theorems on 4 x 4") {
  for (auto const& f : enumerate_rectangles(4, 4)) {
    PlacementEnumerator e(f, false);
    while (auto p = e.next()) {
      auto const rs = rs_pair(*p);
      auto const right = pivots(*p, Side::right);
      auto const left = pivots(*p, Side::left);
      CHECK(rs_pair(right).insertion == tableau_slice(rs.insertion, Slice::strip_top_row));
      CHECK(rs_pair(left).insertion == tableau_slice(rs.insertion, Slice::strip_left_column));
      CHECK(pivots_by_columns(*p) == left);
      CHECK(symmetry(left, Symmetry::transpose)
            == pivots(symmetry(*p, Symmetry::transpose), Side::left));
    }
  }
}
