#ifndef ROOKGROWTH_KNUTH_HPP_
#define ROOKGROWTH_KNUTH_HPP_

#include <optional>
#include <set>
#include <span>
#include <vector>

#include "core.hpp"

// Generalized Knuth transformations.
//
// In a column band (a, b) the extremal sequences d_s, D_L, i_s and I_L are
// the value-lexicographically smallest / largest among the longest
// decreasing / increasing sequences.  Shifting one of them into an empty
// anchor column preserves the insertion tableau.

namespace rookgrowth {

  enum class Direction { increasing, decreasing };
  enum class Extremum { smallest, largest };

  struct MonotoneSequence {
    std::vector<Square> squares;
    Direction           direction = Direction::decreasing;
    Extremum            extremum  = Extremum::smallest;

    friend bool operator==(MonotoneSequence const&,
                           MonotoneSequence const&) = default;
  };

  //! Bands use absolute board columns with 1 <= a < b <= cols.
  std::optional<MonotoneSequence> extremal_sequence(RookPlacement const& p,
                                                    int                  a,
                                                    int                  b,
                                                    Direction            dir,
                                                    Extremum             ext);

  enum class ShiftDirection { left, right };

  struct ShiftSpec {
    std::vector<Square> sequence;
    int                 anchor = 0;
    ShiftDirection      direction = ShiftDirection::left;
  };

  //! Left: S_1 moves to the anchor column and S_i to the column of S_{i-1}.
  //! Right: S_k moves to the anchor column and S_i to the column of S_{i+1}.
  //! Rows never change.
  RookPlacement shift(RookPlacement const& p, ShiftSpec const& spec);

  enum class GkKind { ds_left, DL_right, is_right, IL_left };

  //! P(a <- d_s), P(D_L -> b), P(i_s -> b) or P(a <- I_L) on a rectangular
  //! board.  Throws DomainError when the anchor column is occupied or the
  //! band holds no marker.
  RookPlacement gk_transform(RookPlacement const& p, GkKind kind, int a, int b);

  //! Every permutation one standard Knuth move away from `sigma`.
  std::set<std::vector<int>> knuth_neighbors(PartialPermutation const& sigma);
  std::set<std::vector<int>> knuth_neighbors(std::span<int const> sigma);

  //! Equality of insertion tableaux.
  bool knuth_equivalent(std::span<int const> sigma, std::span<int const> rho);

  // Standard moves on three adjacent entries, named by their before/after
  // shapes with x < y < z.
  enum class KnuthMove { yzx_to_yxz, yxz_to_yzx, xzy_to_zxy, zxy_to_xzy };

  //! Applies `move` to entries pos, pos+1, pos+2 (0-based) if they have the
  //! required shape.
  std::optional<std::vector<int>> apply_knuth_move(std::span<int const> sigma,
                                                   KnuthMove            move,
                                                   std::size_t          pos);

  //! The generalized transformation that generalizes `move`.
  GkKind generalization_of(KnuthMove move);

  //! Full placement of `sigma` on an (n+1) x n board with column `spacer`
  //! left empty.
  RookPlacement encode_with_spacer(std::span<int const> sigma, int spacer);

  //! Rows of the markers in column order, ranked to 1..m.
  std::vector<int> standardize(RookPlacement const& p);

}  // namespace rookgrowth

#endif  // ROOKGROWTH_KNUTH_HPP_
