#ifndef ROOKGROWTH_ORACLE_HPP_
#define ROOKGROWTH_ORACLE_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "core.hpp"
#include "io.hpp"
#include "knuth.hpp"

// Exhaustive enumeration, brute-force reference computations and the named
// verification suites.  Nothing here calls Robinson-Schensted insertion or
// the growth rules except to compare them against a second computation.

namespace rookgrowth {

  //! Partitions inside a max_cols x max_rows box, including the empty one,
  //! ordered by area and then by widths, larger first.
  std::vector<FerrersBoard> enumerate_boards(int max_cols, int max_rows);

  //! Empty board plus every c x r rectangle with c <= max_cols, r <= max_rows.
  std::vector<FerrersBoard> enumerate_rectangles(int max_cols, int max_rows);

  //! Streams all (or all full) placements on a board.  Columns are filled
  //! left to right; an empty column comes before rows 1, 2, ...
  class PlacementEnumerator {
   public:
    PlacementEnumerator(FerrersBoard board, bool full_only);

    std::optional<RookPlacement> next();

   private:
    bool advance(std::size_t col);

    FerrersBoard      board_;
    bool              full_only_;
    std::vector<int>  choice_;  // 0 = empty column, -1 = untried
    std::vector<bool> used_rows_;
    bool              started_ = false;
    bool              done_    = false;
  };

  std::vector<RookPlacement> enumerate_placements(FerrersBoard const& f,
                                                  bool full_only);

  //! Dynamic programming over the markers.
  int longest_monotone(RookPlacement const& p, Direction dir);
  int longest_monotone(RookPlacement const& p, Square corner, Direction dir);
  int longest_monotone_in_band(RookPlacement const& p,
                               int                  a,
                               int                  b,
                               Direction            dir);

  //! Every maximum-length monotone sequence of P|_{a,b}, in absolute
  //! coordinates.
  std::vector<std::vector<Square>> all_longest_sequences(RookPlacement const& p,
                                                         int a,
                                                         int b,
                                                         Direction dir);

  //! Length of the longest decreasing sequence starting at each marker.
  std::vector<int> decreasing_from(RookPlacement const& p);

  std::uint64_t count_avoiders(FerrersBoard const&  f,
                               std::span<int const> pattern,
                               bool                 full_only);

  struct SuiteParams {
    int                           max_cols  = 4;
    int                           max_rows  = 4;
    std::vector<int>              k_values  = {2, 3, 4};
    bool                          full_only = false;
    int                           max_n     = 6;
    std::vector<std::vector<int>> patterns  = {{1, 2, 3}, {2, 1, 3}, {3, 2, 1}};
    int                           shards    = 1;
    int                           shard     = 0;
    int                           threads   = 1;
    //! 0 keeps every violation.
    std::size_t violation_cap = 10;
  };

  struct Violation {
    std::uint64_t case_index = 0;
    json          input;
    std::string   detail;
  };

  struct SweepReport {
    std::string                          suite;
    SuiteParams                          params;
    std::uint64_t                        cases = 0;
    std::vector<Violation>               violations;
    //! Total violations found, which may exceed violations.size().
    std::uint64_t                        violation_count = 0;
    std::map<std::string, std::uint64_t> counters;
    double                               seconds = 0;

    bool passed() const noexcept { return violation_count == 0; }
  };

  json to_json(SuiteParams const& params);
  json to_json(SweepReport const& report);

  std::vector<std::string> const& suite_names();

  //! Throws ValidationError for an unknown suite or bad parameters.
  SweepReport run_suite(std::string const& name, SuiteParams const& params);

  //! Re-evaluates one serialized case; returns the violation details.
  std::vector<std::string> recheck_case(std::string const& name,
                                        SuiteParams const& params,
                                        json const&        input);

}  // namespace rookgrowth

#endif  // ROOKGROWTH_ORACLE_HPP_
