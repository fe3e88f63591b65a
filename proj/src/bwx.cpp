#include "rookgrowth/bwx.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace rookgrowth {

  namespace {
    void check_k(int k) {
      if (k < 2) {
        throw DomainError("k must be >= 2, got " + std::to_string(k));
      }
    }

    Square bounding_of(PatternOccurrence const& occ) {
      return {occ.squares.back().col, occ.squares.front().row};
    }
  }  // namespace

  std::vector<int> decreasing_pattern(int k) {
    std::vector<int> tau;
    for (int v = k; v >= 1; --v) {
      tau.push_back(v);
    }
    return tau;
  }

  std::uint64_t phi_step_budget(std::size_t markers, int k) {
    std::uint64_t binom = 1;
    auto const    kk    = static_cast<std::size_t>(std::max(k, 0));
    if (kk > markers) {
      binom = 0;
    } else {
      for (std::size_t i = 0; i < kk; ++i) {
        binom = binom * (markers - i) / (i + 1);
      }
    }
    return std::max<std::uint64_t>(1, binom * markers);
  }

  std::optional<PatternOccurrence>
  smallest_decreasing_occurrence(RookPlacement const& p, int k) {
    check_k(k);
    // Markers by increasing row: a depth-first search that tries smaller
    // rows first meets the lexicographically smallest occurrence first.
    std::vector<Square> by_row(p.markers().begin(), p.markers().end());
    std::sort(by_row.begin(), by_row.end(), [](Square a, Square b) {
      return a.row < b.row;
    });
    FerrersBoard const&  f = p.board();
    std::vector<Square>  chosen;

    auto rec = [&](auto& self) -> bool {
      if (chosen.size() == static_cast<std::size_t>(k)) {
        return true;
      }
      for (Square const s : by_row) {
        if (!chosen.empty()) {
          Square const last = chosen.back();
          if (s.row >= last.row) {
            break;
          }
          if (s.col <= last.col
              || !f.contains({s.col, chosen.front().row})) {
            continue;
          }
        }
        chosen.push_back(s);
        if (self(self)) {
          return true;
        }
        chosen.pop_back();
      }
      return false;
    };
    if (!rec(rec)) {
      return std::nullopt;
    }
    return PatternOccurrence{std::move(chosen)};
  }

  namespace {
    RookPlacement apply_phi(RookPlacement const&     p,
                            PatternOccurrence const& occ) {
      auto const&         sq = occ.squares;
      std::vector<Square> markers;
      for (Square const s : p.markers()) {
        if (std::find(sq.begin(), sq.end(), s) == sq.end()) {
          markers.push_back(s);
        }
      }
      for (std::size_t t = 0; t + 1 < sq.size(); ++t) {
        markers.push_back({sq[t].col, sq[t + 1].row});
      }
      markers.push_back({sq.back().col, sq.front().row});
      return RookPlacement(p.board(), std::move(markers));
    }
  }  // namespace

  RookPlacement phi_step(RookPlacement const& p, int k) {
    auto occ = smallest_decreasing_occurrence(p, k);
    return occ ? apply_phi(p, *occ) : p;
  }

  PhiResult phi_star(RookPlacement const& p, int k, bool keep_trace) {
    check_k(k);
    std::uint64_t const budget = phi_step_budget(p.size(), k);
    PhiResult           result{p, {}};
    for (std::uint64_t steps = 0;; ++steps) {
      auto occ = smallest_decreasing_occurrence(result.placement, k);
      if (!occ) {
        return result;
      }
      if (steps == budget) {
        throw PhiBudgetExceeded("phi* did not terminate within "
                                    + std::to_string(budget) + " steps",
                                std::move(result.trace));
      }
      result.placement = apply_phi(result.placement, *occ);
      if (keep_trace) {
        Square const bounding = bounding_of(*occ);
        result.trace.steps.push_back(
            {std::move(*occ), result.placement, bounding});
      }
    }
  }

  std::optional<Square> phi_bounding_rectangle(RookPlacement const& p, int k) {
    auto occ = smallest_decreasing_occurrence(p, k);
    if (!occ) {
      return std::nullopt;
    }
    return bounding_of(*occ);
  }

}  // namespace rookgrowth
