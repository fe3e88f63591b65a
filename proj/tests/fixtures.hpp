#ifndef ROOKGROWTH_TESTS_FIXTURES_HPP_
#define ROOKGROWTH_TESTS_FIXTURES_HPP_

#include <algorithm>
#include <cstdint>
#include <vector>

#include "rookgrowth/core.hpp"

namespace fixtures {

  using rookgrowth::FerrersBoard;
  using rookgrowth::RookPlacement;
  using rookgrowth::Square;

  // Worked example on the board with rows 8,8,8,8,8,6,5,3 (sigma = 45867312).
  inline RookPlacement worked_example() {
    return RookPlacement(FerrersBoard({8, 8, 8, 8, 8, 6, 5, 3}),
                         {{1, 4}, {2, 5}, {3, 8}, {4, 6},
                          {5, 7}, {6, 3}, {7, 1}, {8, 2}});
  }

  // Placement used for the pivot examples, 9 x 9 with columns 5 and 8 empty.
  inline RookPlacement pivot_example() {
    return RookPlacement(FerrersBoard::rectangle(9, 9),
                         {{1, 8}, {2, 4}, {3, 1}, {4, 5},
                          {6, 7}, {7, 9}, {9, 2}});
  }

  // 5 3 4 7 6 _ 2 8 1 on nine columns and eight rows.
  inline RookPlacement knuth_example() {
    return RookPlacement(FerrersBoard::rectangle(9, 8),
                         {{1, 5}, {2, 3}, {3, 4}, {4, 7},
                          {5, 6}, {7, 2}, {8, 8}, {9, 1}});
  }

  inline std::vector<Square> squares(RookPlacement const& p) {
    return {p.markers().begin(), p.markers().end()};
  }

  // Calls fn(subset) for every subset of `items` of size `k`, in
  // lexicographic order of index sets.
  template <class T, class Fn>
  void for_each_subset(std::vector<T> const& items, std::size_t k, Fn&& fn) {
    if (k > items.size()) {
      return;
    }
    std::vector<bool> mask(items.size(), false);
    std::fill(mask.begin(), mask.begin() + static_cast<long>(k), true);
    do {
      std::vector<T> subset;
      for (std::size_t i = 0; i < items.size(); ++i) {
        if (mask[i]) {
          subset.push_back(items[i]);
        }
      }
      fn(subset);
    } while (std::prev_permutation(mask.begin(), mask.end()));
  }

  // Relative order of `values` as a permutation of 1..n.
  inline std::vector<int> standardized(std::vector<int> const& values) {
    std::vector<int> sorted = values;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> out;
    for (int v : values) {
      out.push_back(static_cast<int>(
          std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin()) + 1);
    }
    return out;
  }

  // Brute-force containment: some subset of markers has the pattern's
  // relative order and its bounding square lies on the board.
  inline bool brute_contains(RookPlacement const& p, std::vector<int> const& pattern) {
    bool found = false;
    for_each_subset(squares(p), pattern.size(), [&](std::vector<Square> const& s) {
      if (found) {
        return;
      }
      std::vector<int> rows;
      int top = 0;
      for (auto const& q : s) {
        rows.push_back(q.row);
        top = std::max(top, q.row);
      }
      if (standardized(rows) == pattern && p.board().contains({s.back().col, top})) {
        found = true;
      }
    });
    return found;
  }

  inline std::uint64_t binomial(int n, int k) {
    std::uint64_t c = 1;
    for (int i = 1; i <= k; ++i) {
      c = c * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    }
    return c;
  }

}  // namespace fixtures

#endif  // ROOKGROWTH_TESTS_FIXTURES_HPP_
