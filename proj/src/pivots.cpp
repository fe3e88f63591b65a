#include "rookgrowth/pivots.hpp"

#include <string>

namespace rookgrowth {

  namespace {
    void require_rectangular(RookPlacement const& p) {
      if (!p.board().is_rectangular()) {
        throw DomainError("pivots are defined on rectangular boards only");
      }
    }
  }  // namespace

  RookPlacement pivots(RookPlacement const& p, Side side) {
    require_rectangular(p);
    int const n = p.board().cols();
    // has_pivot[c] once column c received a pivot
    std::vector<bool>   has_pivot(static_cast<std::size_t>(n) + 1, false);
    std::vector<Square> out;
    for (int r = 2; r <= p.board().rows(); ++r) {
      auto const x = p.column_in_row(r);
      if (!x) {
        continue;
      }
      auto usable = [&](int c) {
        auto const below = p.row_in_column(c);
        return below && *below < r && !has_pivot[c];
      };
      int pick = 0;
      if (side == Side::left) {
        for (int c = *x - 1; c >= 1 && pick == 0; --c) {
          if (usable(c)) {
            pick = c;
          }
        }
      } else {
        for (int c = *x + 1; c <= n && pick == 0; ++c) {
          if (usable(c)) {
            pick = c;
          }
        }
      }
      if (pick != 0) {
        has_pivot[pick] = true;
        out.push_back({pick, r});
      }
    }
    return RookPlacement(p.board(), std::move(out));
  }

  RookPlacement pivots_by_columns(RookPlacement const& p) {
    require_rectangular(p);
    int const           m = p.board().rows();
    std::vector<bool>   row_taken(static_cast<std::size_t>(m) + 1, false);
    std::vector<Square> out;
    for (int c = p.board().cols() - 1; c >= 1; --c) {
      auto const x = p.row_in_column(c);
      if (!x) {
        continue;
      }
      for (int r = *x + 1; r <= m; ++r) {
        auto const other = p.column_in_row(r);
        if (!row_taken[r] && other && *other > c) {
          row_taken[r] = true;
          out.push_back({c, r});
          break;
        }
      }
    }
    return RookPlacement(p.board(), std::move(out));
  }

  namespace {
    PivotCoords coords_from(RookPlacement const& left, Square x) {
      return {left.row_in_column(x.col), left.column_in_row(x.row).value_or(0)};
    }
  }  // namespace

  PivotCoords pivot_coords(RookPlacement const& p, Square x) {
    if (!p.contains(x)) {
      throw DomainError(to_string(x) + " is not a marker of the placement");
    }
    return coords_from(pivots(p, Side::left), x);
  }

  std::vector<PivotCoords> pivot_table(RookPlacement const& p) {
    auto const               left = pivots(p, Side::left);
    std::vector<PivotCoords> out;
    for (Square const x : p.markers()) {
      out.push_back(coords_from(left, x));
    }
    return out;
  }

  std::optional<Square> pivot_successor(RookPlacement const& left_pivots,
                                        RookPlacement const& p,
                                        Square               x) {
    auto const rho = left_pivots.row_in_column(x.col);
    if (!rho) {
      return std::nullopt;
    }
    auto const col = p.column_in_row(*rho);
    if (!col) {
      return std::nullopt;
    }
    return Square{*col, *rho};
  }

  bool is_pivot_path(RookPlacement const& p, std::span<Square const> path) {
    for (Square const s : path) {
      if (!p.contains(s)) {
        throw DomainError(to_string(s) + " is not a marker of the placement");
      }
    }
    auto const left = pivots(p, Side::left);
    for (std::size_t t = 0; t + 1 < path.size(); ++t) {
      Square const a = path[t];
      Square const b = path[t + 1];
      if (b.col <= a.col || b.row <= a.row) {
        return false;
      }
      if (left.row_in_column(a.col) != b.row) {
        return false;
      }
    }
    return true;
  }

}  // namespace rookgrowth
