#ifndef ROOKGROWTH_GROWTH_HPP_
#define ROOKGROWTH_GROWTH_HPP_

#include <optional>
#include <stdexcept>
#include <vector>

#include "core.hpp"

// Fomin growth diagrams on Ferrers boards, the capped variant GDA_k, and the
// reconstruction of a placement from the labels along the right/up border.
//
// Corner (i, j) is the north-east corner of square (i, j).  Corners with
// i == 0 or j == 0 lie on the left or bottom edge and always carry ∅.

namespace rookgrowth {

  class ReconstructionError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  class GrowthDiagram {
   public:
    GrowthDiagram(FerrersBoard board, std::optional<int> k);

    FerrersBoard const& board() const noexcept { return board_; }
    //! The cap of GDA_k, or nullopt for the plain algorithm.
    std::optional<int> k() const noexcept { return k_; }

    bool has_corner(int i, int j) const noexcept;
    //! Throws DomainError for a corner that does not exist on the board.
    Partition const& label(int i, int j) const;
    void set_label(int i, int j, Partition value);

    friend bool operator==(GrowthDiagram const&,
                           GrowthDiagram const&) = default;

   private:
    std::size_t index(int i, int j) const noexcept {
      return static_cast<std::size_t>(j) * (board_.cols() + 1) + i;
    }

    FerrersBoard           board_;
    std::optional<int>     k_;
    std::vector<Partition> labels_;
  };

  //! Corners of the right/up border, from (cols, 0) to (0, rows).
  std::vector<Square> border_corners(FerrersBoard const& f);

  struct BorderSequence {
    std::vector<Partition> partitions;

    friend bool operator==(BorderSequence const&,
                           BorderSequence const&) = default;
  };

  //! The NE label given the other three corners.  `k` == 0 selects the
  //! plain rules 1-3; otherwise rule 2 is replaced by rule 2_k.
  Partition grow_corner(Partition const& nw,
                        Partition const& sw,
                        Partition const& se,
                        bool             marker,
                        int              k = 0);

  GrowthDiagram run_gda(RookPlacement const& p);
  //! Throws DomainError when k < 2.
  GrowthDiagram run_gda_k(RookPlacement const& p, int k);

  enum class SweepOrder { rows_first, columns_first };
  //! As run_gda / run_gda_k (k == 0 for plain), visiting squares in the
  //! given order.  The labels do not depend on the order.
  GrowthDiagram run_growth(RookPlacement const& p, int k, SweepOrder order);

  BorderSequence border_sequence(GrowthDiagram const& g);

  struct Reconstruction {
    RookPlacement placement;
    GrowthDiagram diagram;
  };

  //! Rebuilds the plain growth diagram and the placement from a border
  //! sequence.  Throws ReconstructionError naming the first bad corner.
  Reconstruction invert_gda(BorderSequence const& border,
                            FerrersBoard const&   f);

}  // namespace rookgrowth

#endif  // ROOKGROWTH_GROWTH_HPP_
