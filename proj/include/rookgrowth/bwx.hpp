#ifndef ROOKGROWTH_BWX_HPP_
#define ROOKGROWTH_BWX_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "core.hpp"

// The Backelin-West-Xin transformation on rook placements.
//
// phi rewrites the smallest occurrence of k...1, where occurrences are
// compared lexicographically by their row values.  With columns
// i_1 < ... < i_k holding rows v_1 > ... > v_k, column i_t receives v_{t+1}
// and column i_k receives v_1.  phi_star iterates phi until no occurrence of
// k...1 remains.

namespace rookgrowth {

  struct PhiStep {
    PatternOccurrence occurrence;
    RookPlacement     after;
    //! R(a, b): a is the column of the last square of the occurrence, b the
    //! row of its first square.
    Square bounding;
  };

  struct PhiTrace {
    std::vector<PhiStep> steps;
  };

  struct PhiResult {
    RookPlacement placement;
    PhiTrace      trace;
  };

  //! Raised when phi_star exceeds its step budget.  Termination is expected,
  //! so this signals a bug or a false assumption, never a result.
  class PhiBudgetExceeded : public std::runtime_error {
   public:
    PhiBudgetExceeded(std::string const& what, PhiTrace trace)
        : std::runtime_error(what), trace_(std::move(trace)) {}

    PhiTrace const& trace() const noexcept { return trace_; }

   private:
    PhiTrace trace_;
  };

  //! C(markers, k) * markers, and at least 1.
  std::uint64_t phi_step_budget(std::size_t markers, int k);

  //! The value-lexicographically smallest occurrence of k...1, if any.
  std::optional<PatternOccurrence>
  smallest_decreasing_occurrence(RookPlacement const& p, int k);

  //! One application of phi; the identity on k...1 avoiders.
  RookPlacement phi_step(RookPlacement const& p, int k);

  PhiResult phi_star(RookPlacement const& p, int k, bool keep_trace = true);

  //! (a, b) of R(a, b) for the occurrence phi would act on.
  std::optional<Square> phi_bounding_rectangle(RookPlacement const& p, int k);

  //! The k...1 pattern as a one-line permutation.
  std::vector<int> decreasing_pattern(int k);

}  // namespace rookgrowth

#endif  // ROOKGROWTH_BWX_HPP_
