#ifndef ROOKGROWTH_TABLEAUX_HPP_
#define ROOKGROWTH_TABLEAUX_HPP_

#include <span>
#include <vector>

#include "core.hpp"

namespace rookgrowth {

  //! Rows listed top to bottom.  Entries are the original labels, so a
  //! tableau of a placement holds board coordinates rather than 1..m.
  class StandardTableau {
   public:
    StandardTableau() = default;
    //! Throws ValidationError unless rows are strictly increasing, columns
    //! strictly increasing, row lengths weakly decreasing and entries
    //! distinct and positive.
    explicit StandardTableau(std::vector<std::vector<int>> rows);

    std::span<std::vector<int> const> rows() const noexcept { return rows_; }
    std::size_t size() const noexcept;
    bool empty() const noexcept { return rows_.empty(); }

    friend bool operator==(StandardTableau const&,
                           StandardTableau const&) = default;

   private:
    std::vector<std::vector<int>> rows_;
  };

  struct RsPair {
    StandardTableau insertion;
    StandardTableau recording;

    friend bool operator==(RsPair const&, RsPair const&) = default;
  };

  //! Row insertion of the outputs in input order; the recording tableau
  //! stores each input at the cell created by its insertion.
  RsPair rs_pair(PartialPermutation const& pi);
  RsPair rs_pair(RookPlacement const& p);

  Partition shape_of(StandardTableau const& y);

  enum class Slice { strip_top_row, strip_left_column, transpose };

  StandardTableau tableau_slice(StandardTableau const& y, Slice kind);

}  // namespace rookgrowth

#endif  // ROOKGROWTH_TABLEAUX_HPP_
