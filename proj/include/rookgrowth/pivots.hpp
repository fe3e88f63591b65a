#ifndef ROOKGROWTH_PIVOTS_HPP_
#define ROOKGROWTH_PIVOTS_HPP_

#include <optional>
#include <span>
#include <vector>

#include "core.hpp"

// Left and right pivots of a placement on a rectangular board.
//
// Rows are processed bottom to top.  For the marker X in row r > 1, look at
// the columns on the chosen side of X that hold a marker below row r and no
// pivot yet; if any exist, row r receives a pivot in the one nearest to X.

namespace rookgrowth {

  enum class Side { left, right };

  //! The pivot set, as a placement on the same board.  Throws DomainError
  //! on a non-rectangular board.
  RookPlacement pivots(RookPlacement const& p, Side side);

  //! Left pivots computed column by column, right to left.  Agrees with
  //! pivots(p, Side::left); kept as an independent construction.
  RookPlacement pivots_by_columns(RookPlacement const& p);

  struct PivotCoords {
    //! Row of the left pivot in the marker's column; nullopt stands for ∞.
    std::optional<int> rho;
    //! Column of the left pivot in the marker's row, or 0.
    int kappa = 0;

    friend bool operator==(PivotCoords const&, PivotCoords const&) = default;
  };

  //! Throws DomainError if `x` is not a marker of `p`.
  PivotCoords pivot_coords(RookPlacement const& p, Square x);

  //! (rho, kappa) for every marker, in marker order.
  std::vector<PivotCoords> pivot_table(RookPlacement const& p);

  //! True iff `path` increases in both coordinates and consecutive markers
  //! are linked through a left pivot: rho(I_t) == row(I_{t+1}).
  bool is_pivot_path(RookPlacement const& p, std::span<Square const> path);

  //! The marker that follows `x` on a pivot-path, i.e. the marker in row
  //! rho(x), if any.
  std::optional<Square> pivot_successor(RookPlacement const& left_pivots,
                                        RookPlacement const& p,
                                        Square               x);

}  // namespace rookgrowth

#endif  // ROOKGROWTH_PIVOTS_HPP_
