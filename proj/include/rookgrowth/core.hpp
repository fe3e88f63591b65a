#ifndef ROOKGROWTH_CORE_HPP_
#define ROOKGROWTH_CORE_HPP_

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

// Rook placements on Ferrers boards.
//
// Coordinates are 1-indexed (column, row) with rows counted from the bottom
// (French notation).  All values are immutable after construction.

namespace rookgrowth {

  //! Raised when a value violates one of its structural invariants.
  class ValidationError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  //! Raised when an operation is asked to act outside its domain.
  class DomainError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
  };

  //! A weakly decreasing sequence of positive integers.  Entries past the end
  //! read as 0, so (2,1) and (2,1,0) denote the same partition.
  class Partition {
   public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    int part(std::size_t i) const noexcept {
      return i < parts_.size() ? parts_[i] : 0;
    }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    int size() const noexcept;
    std::span<int const> parts() const noexcept { return parts_; }

    //! Adds one box to the row with 0-based index `row`.
    Partition with_box(std::size_t row) const;

    //! Entrywise maximum.
    static Partition join(Partition const& a, Partition const& b);
    //! Entrywise minimum.
    static Partition meet(Partition const& a, Partition const& b);

    //! Juxtaposed parts ("221"), comma separated if any part exceeds 9,
    //! and "∅" for the empty partition.
    std::string to_string() const;

    friend bool operator==(Partition const&, Partition const&) = default;

   private:
    std::vector<int> parts_;
  };

  //! If `b` is `a` plus exactly one box, the 0-based row of that box.
  std::optional<std::size_t> added_box(Partition const& a,
                                       Partition const& b) noexcept;

  struct Square {
    int col = 0;
    int row = 0;

    friend auto operator<=>(Square const&, Square const&) = default;
  };

  std::string to_string(Square s);

  //! Row widths listed bottom to top, weakly decreasing.
  class FerrersBoard {
   public:
    FerrersBoard() = default;
    explicit FerrersBoard(std::vector<int> row_widths);

    static FerrersBoard rectangle(int cols, int rows);

    int rows() const noexcept { return static_cast<int>(widths_.size()); }
    int cols() const noexcept { return widths_.empty() ? 0 : widths_.front(); }
    //! Width of row `row` (1-indexed); 0 outside the board.
    int width(int row) const noexcept {
      return row >= 1 && row <= rows() ? widths_[row - 1] : 0;
    }
    //! Number of squares in column `col` (1-indexed).
    int height(int col) const noexcept;
    bool contains(Square s) const noexcept {
      return s.row >= 1 && s.col >= 1 && s.col <= width(s.row);
    }
    bool is_rectangular() const noexcept;
    std::size_t area() const noexcept;

    //! Reflection across the SW-NE diagonal.
    FerrersBoard conjugate() const;

    std::span<int const> row_widths() const noexcept { return widths_; }

    friend bool operator==(FerrersBoard const&, FerrersBoard const&) = default;

   private:
    std::vector<int> widths_;
  };

  //! A finite bijection between sets of positive integers, stored as
  //! (input, output) pairs sorted by input.
  class PartialPermutation {
   public:
    PartialPermutation() = default;
    explicit PartialPermutation(std::vector<std::pair<int, int>> pairs);

    //! One-line notation: position i+1 maps to values[i].
    static PartialPermutation from_one_line(std::span<int const> values);

    std::span<std::pair<int, int> const> pairs() const noexcept {
      return pairs_;
    }
    std::size_t size() const noexcept { return pairs_.size(); }
    bool empty() const noexcept { return pairs_.empty(); }
    //! Outputs in input order.
    std::vector<int> outputs() const;
    PartialPermutation inverse() const;
    //! True iff inputs and outputs are both exactly {1..n}.
    bool is_total() const noexcept;

    friend bool operator==(PartialPermutation const&,
                           PartialPermutation const&) = default;

   private:
    std::vector<std::pair<int, int>> pairs_;
  };

  //! A set of squares of a Ferrers board, at most one per row and column.
  //! Markers are kept sorted by column.
  class RookPlacement {
   public:
    RookPlacement() = default;
    RookPlacement(FerrersBoard board, std::vector<Square> markers);

    //! Square n x n board with a marker at (i, values[i-1]).
    static RookPlacement from_permutation(std::span<int const> values);

    FerrersBoard const& board() const noexcept { return board_; }
    std::span<Square const> markers() const noexcept { return markers_; }
    std::size_t size() const noexcept { return markers_.size(); }
    bool empty() const noexcept { return markers_.empty(); }
    //! Exactly one marker in every row and every column.
    bool is_full() const noexcept;

    bool contains(Square s) const noexcept;
    std::optional<int> row_in_column(int col) const noexcept;
    std::optional<int> column_in_row(int row) const noexcept;

    //! Rows of the markers in column order.
    std::vector<int> rows_in_column_order() const;

    friend bool operator==(RookPlacement const&,
                           RookPlacement const&) = default;

   private:
    FerrersBoard        board_;
    std::vector<Square> markers_;
  };

  struct PatternOccurrence {
    std::vector<Square> squares;

    friend bool operator==(PatternOccurrence const&,
                           PatternOccurrence const&) = default;
  };

  //! Throws ValidationError unless `pattern` is a permutation of 1..r, r >= 1.
  void check_pattern(std::span<int const> pattern);

  RookPlacement make_placement(std::vector<int> row_widths,
                               std::vector<Square> markers);

  enum class Symmetry { inverse, reverse, transpose, complement };

  //! inverse works on every board; the others need a rectangular one.
  RookPlacement symmetry(RookPlacement const& p, Symmetry kind);

  //! P restricted to R(corner.col, corner.row).
  RookPlacement restrict_to_rectangle(RookPlacement const& p, Square corner);

  //! P restricted to columns a..b, re-indexed to 1..b-a+1; rows unchanged.
  RookPlacement restrict_to_columns(RookPlacement const& p, int a, int b);

  //! All occurrences of `pattern` in P whose bounding square lies on the
  //! board, in lexicographic order of their column sequences.
  std::vector<PatternOccurrence> occurrences(RookPlacement const& p,
                                             std::span<int const> pattern);

  bool contains_pattern(RookPlacement const& p, std::span<int const> pattern);
  inline bool avoids(RookPlacement const& p, std::span<int const> pattern) {
    return !contains_pattern(p, pattern);
  }

  PartialPermutation to_partial_permutation(RookPlacement const& p);

}  // namespace rookgrowth

#endif  // ROOKGROWTH_CORE_HPP_
