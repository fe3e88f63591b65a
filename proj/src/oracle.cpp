#include "rookgrowth/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <set>
#include <thread>

#include "rookgrowth/bwx.hpp"
#include "rookgrowth/growth.hpp"
#include "rookgrowth/pivots.hpp"
#include "rookgrowth/tableaux.hpp"

namespace rookgrowth {

  // ---------------------------------------------------------------------
  // Enumeration

  namespace {
    void partitions_in_box(int                max_cols,
                           int                max_rows,
                           std::vector<int>&  prefix,
                           std::vector<FerrersBoard>& out) {
      out.emplace_back(prefix);
      if (static_cast<int>(prefix.size()) == max_rows) {
        return;
      }
      int const cap = prefix.empty() ? max_cols : prefix.back();
      for (int w = 1; w <= cap; ++w) {
        prefix.push_back(w);
        partitions_in_box(max_cols, max_rows, prefix, out);
        prefix.pop_back();
      }
    }
  }  // namespace

  std::vector<FerrersBoard> enumerate_boards(int max_cols, int max_rows) {
    std::vector<FerrersBoard> out;
    std::vector<int>          prefix;
    partitions_in_box(std::max(max_cols, 0), std::max(max_rows, 0), prefix, out);
    std::stable_sort(out.begin(),
                     out.end(),
                     [](FerrersBoard const& x, FerrersBoard const& y) {
                       if (x.area() != y.area()) {
                         return x.area() < y.area();
                       }
                       auto const xs = x.row_widths();
                       auto const ys = y.row_widths();
                       return std::lexicographical_compare(
                           ys.begin(), ys.end(), xs.begin(), xs.end());
                     });
    return out;
  }

  std::vector<FerrersBoard> enumerate_rectangles(int max_cols, int max_rows) {
    std::vector<FerrersBoard> out{FerrersBoard{}};
    for (int r = 1; r <= max_rows; ++r) {
      for (int c = 1; c <= max_cols; ++c) {
        out.push_back(FerrersBoard::rectangle(c, r));
      }
    }
    return out;
  }

  PlacementEnumerator::PlacementEnumerator(FerrersBoard board, bool full_only)
      : board_(std::move(board)),
        full_only_(full_only),
        choice_(static_cast<std::size_t>(board_.cols()), -1),
        used_rows_(static_cast<std::size_t>(board_.rows()) + 1, false) {
    if (full_only_ && board_.cols() != board_.rows()) {
      done_ = true;
    }
  }

  bool PlacementEnumerator::advance(std::size_t col) {
    int const height = board_.height(static_cast<int>(col) + 1);
    int&      c      = choice_[col];
    if (c > 0) {
      used_rows_[c] = false;
    }
    for (int next = c + 1; next <= height; ++next) {
      if (next == 0 ? !full_only_ : !used_rows_[next]) {
        c = next;
        if (c > 0) {
          used_rows_[c] = true;
        }
        return true;
      }
    }
    c = -1;
    return false;
  }

  std::optional<RookPlacement> PlacementEnumerator::next() {
    if (done_) {
      return std::nullopt;
    }
    std::size_t const n = choice_.size();
    if (n == 0) {
      done_ = true;
      return RookPlacement(board_, {});
    }
    std::size_t col = started_ ? n - 1 : 0;
    started_        = true;
    while (true) {
      if (advance(col)) {
        if (col + 1 == n) {
          break;
        }
        ++col;
      } else if (col == 0) {
        done_ = true;
        return std::nullopt;
      } else {
        --col;
      }
    }
    std::vector<Square> markers;
    for (std::size_t i = 0; i < n; ++i) {
      if (choice_[i] > 0) {
        markers.push_back({static_cast<int>(i) + 1, choice_[i]});
      }
    }
    return RookPlacement(board_, std::move(markers));
  }

  std::vector<RookPlacement> enumerate_placements(FerrersBoard const& f,
                                                  bool full_only) {
    std::vector<RookPlacement> out;
    PlacementEnumerator        e(f, full_only);
    while (auto p = e.next()) {
      out.push_back(std::move(*p));
    }
    return out;
  }

  // ---------------------------------------------------------------------
  // Reference computations

  namespace {
    bool follows(Square prev, Square next, Direction dir) {
      return next.col > prev.col
             && (dir == Direction::increasing ? next.row > prev.row
                                              : next.row < prev.row);
    }

    // longest[i]: longest monotone sequence starting at squares[i]
    std::vector<int> longest_starting(std::span<Square const> squares,
                                      Direction               dir) {
      std::vector<int> longest(squares.size(), 1);
      for (std::size_t i = squares.size(); i-- > 0;) {
        for (std::size_t j = i + 1; j < squares.size(); ++j) {
          if (follows(squares[i], squares[j], dir)) {
            longest[i] = std::max(longest[i], longest[j] + 1);
          }
        }
      }
      return longest;
    }

    std::vector<Square> band_markers(RookPlacement const& p, int a, int b) {
      std::vector<Square> out;
      for (Square const s : p.markers()) {
        if (s.col >= a && s.col <= b) {
          out.push_back(s);
        }
      }
      return out;
    }
  }  // namespace

  int longest_monotone(RookPlacement const& p, Direction dir) {
    auto const longest = longest_starting(p.markers(), dir);
    return longest.empty() ? 0 : *std::max_element(longest.begin(), longest.end());
  }

  int longest_monotone(RookPlacement const& p, Square corner, Direction dir) {
    return longest_monotone(restrict_to_rectangle(p, corner), dir);
  }

  int longest_monotone_in_band(RookPlacement const& p,
                               int                  a,
                               int                  b,
                               Direction            dir) {
    auto const squares = band_markers(p, a, b);
    auto const longest = longest_starting(squares, dir);
    return longest.empty() ? 0 : *std::max_element(longest.begin(), longest.end());
  }

  std::vector<std::vector<Square>> all_longest_sequences(RookPlacement const& p,
                                                         int a,
                                                         int b,
                                                         Direction dir) {
    auto const squares = band_markers(p, a, b);
    auto const longest = longest_starting(squares, dir);
    std::vector<std::vector<Square>> out;
    if (squares.empty()) {
      return out;
    }
    int const length = *std::max_element(longest.begin(), longest.end());
    std::vector<Square> current;
    std::function<void(std::size_t)> extend = [&](std::size_t from) {
      if (static_cast<int>(current.size()) == length) {
        out.push_back(current);
        return;
      }
      int const need = length - static_cast<int>(current.size());
      for (std::size_t j = from; j < squares.size(); ++j) {
        if (longest[j] >= need
            && (current.empty() || follows(current.back(), squares[j], dir))) {
          current.push_back(squares[j]);
          extend(j + 1);
          current.pop_back();
        }
      }
    };
    extend(0);
    return out;
  }

  std::vector<int> decreasing_from(RookPlacement const& p) {
    return longest_starting(p.markers(), Direction::decreasing);
  }

  std::uint64_t count_avoiders(FerrersBoard const&  f,
                               std::span<int const> pattern,
                               bool                 full_only) {
    check_pattern(pattern);
    std::uint64_t       count = 0;
    PlacementEnumerator e(f, full_only);
    while (auto p = e.next()) {
      if (avoids(*p, pattern)) {
        ++count;
      }
    }
    return count;
  }

  // ---------------------------------------------------------------------
  // Suites

  namespace {
    struct SuiteCase {
      std::string                  stream;
      std::optional<RookPlacement> placement;
      int                          k = 0;
      int                          n = 0;
    };

    json case_to_json(SuiteCase const& c) {
      json j{{"stream", c.stream}};
      if (c.placement) {
        j["placement"] = to_json(*c.placement);
      }
      if (c.k != 0) {
        j["k"] = c.k;
      }
      if (c.n != 0) {
        j["n"] = c.n;
      }
      return j;
    }

    SuiteCase case_from_json(json const& j) {
      if (!j.is_object() || !j.contains("stream") || !j["stream"].is_string()) {
        throw ValidationError("case must be an object with a \"stream\" name");
      }
      SuiteCase c;
      c.stream = j["stream"].get<std::string>();
      if (j.contains("placement")) {
        c.placement = placement_from_json(j["placement"]);
      }
      if (j.contains("k")) {
        c.k = j["k"].get<int>();
      }
      if (j.contains("n")) {
        c.n = j["n"].get<int>();
      }
      return c;
    }

    class CaseContext {
     public:
      void fail(std::string detail) { failures.push_back(std::move(detail)); }
      void count(std::string const& key, std::uint64_t by = 1) {
        counters[key] += by;
      }

      std::vector<std::string>             failures;
      std::map<std::string, std::uint64_t> counters;
    };

    using Emit = std::function<void(SuiteCase const&)>;

    struct SuiteDef {
      std::string name;
      void (*generate)(SuiteParams const&, Emit const&);
      void (*check)(SuiteCase const&, SuiteParams const&, CaseContext&);
    };

    void emit_placements(std::vector<FerrersBoard> const& boards,
                         bool                             full_only,
                         Emit const&                      emit,
                         std::string const&               stream,
                         std::span<int const>             k_values = {}) {
      for (auto const& f : boards) {
        PlacementEnumerator e(f, full_only);
        while (auto p = e.next()) {
          if (k_values.empty()) {
            emit({stream, std::move(*p), 0, 0});
            continue;
          }
          for (int const k : k_values) {
            emit({stream, *p, k, 0});
          }
        }
      }
    }

    template <class Fn>
    void for_each_permutation(int n, Fn&& fn) {
      std::vector<int> sigma(static_cast<std::size_t>(n));
      std::iota(sigma.begin(), sigma.end(), 1);
      do {
        fn(sigma);
      } while (std::next_permutation(sigma.begin(), sigma.end()));
    }

    void emit_permutations(int first_n, int max_n, Emit const& emit) {
      for (int n = first_n; n <= max_n; ++n) {
        for_each_permutation(n, [&](std::vector<int> const& sigma) {
          emit({"perm", RookPlacement::from_permutation(sigma), 0, n});
        });
      }
    }

    std::string corner_name(int i, int j) {
      return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
    }

    std::string seq_string(BorderSequence const& s) {
      std::string out;
      for (auto const& lambda : s.partitions) {
        out += (out.empty() ? "" : " ") + lambda.to_string();
      }
      return out;
    }

    // main-theorem -------------------------------------------------------

    void gen_box_with_k(SuiteParams const& params, Emit const& emit) {
      emit_placements(enumerate_boards(params.max_cols, params.max_rows),
                      params.full_only,
                      emit,
                      "placement",
                      params.k_values);
    }

    void check_phi_step(RookPlacement const& before,
                        PhiStep const&       step,
                        int                  k,
                        CaseContext&         ctx) {
      int const  a       = step.bounding.col;
      int const  b       = step.bounding.row;
      auto const pattern = decreasing_pattern(k);
      auto const q_r     = restrict_to_rectangle(before, step.bounding);
      auto const t_r     = restrict_to_rectangle(step.after, step.bounding);
      std::string const where = " for the step acting on R" + corner_name(a, b);

      for (auto const& occ : occurrences(q_r, pattern)) {
        if (occ.squares.front().row < b || occ.squares.back().col < a) {
          ctx.fail("restriction has an occurrence starting at "
                   + to_string(occ.squares.front()) + " and ending at "
                   + to_string(occ.squares.back()) + where);
          break;
        }
      }
      if (contains_pattern(t_r, pattern)) {
        ctx.fail("phi(P) restricted to the rectangle contains k...1" + where);
      }

      auto const seq_q = border_sequence(run_gda(q_r)).partitions;
      auto const seq_t = border_sequence(run_gda(t_r)).partitions;
      for (std::size_t i = 0; i < seq_q.size(); ++i) {
        if (i != static_cast<std::size_t>(b) && seq_q[i] != seq_t[i]) {
          ctx.fail("rectangle borders differ at position " + std::to_string(i)
                   + " away from the NE corner" + where);
          break;
        }
      }

      auto const below = Square{a, b - 1};
      if (rs_pair(restrict_to_rectangle(before, below)).insertion
          != rs_pair(restrict_to_rectangle(step.after, below)).insertion) {
        ctx.fail("insertion tableaux differ on R" + corner_name(a, b - 1) + where);
      }
      auto const left = Square{a - 1, b};
      if (rs_pair(restrict_to_rectangle(before, left)).recording
          != rs_pair(restrict_to_rectangle(step.after, left)).recording) {
        ctx.fail("recording tableaux differ on R" + corner_name(a - 1, b) + where);
      }

      if (border_sequence(run_gda_k(before, k))
          != border_sequence(run_gda_k(step.after, k))) {
        ctx.fail("seq_k changes under one application of phi" + where);
      }
      ctx.count("phi steps");
    }

    void check_main_theorem(SuiteCase const& c,
                            SuiteParams const&,
                            CaseContext& ctx) {
      RookPlacement const& p  = *c.placement;
      int const            k  = c.k;
      auto const           gk = run_gda_k(p, k);
      FerrersBoard const&  f  = p.board();
      std::uint64_t checked = 0;
      std::uint64_t too_long = 0;
      for (int j = 0; j <= f.rows(); ++j) {
        for (int i = 0; i <= f.cols(); ++i) {
          if (!gk.has_corner(i, j)) {
            continue;
          }
          ++checked;
          if (gk.label(i, j).length() > static_cast<std::size_t>(k - 1)) {
            ++too_long;
            ctx.fail("GDA_k label " + gk.label(i, j).to_string()
                     + " at corner " + corner_name(i, j)
                     + " has more than k-1 parts");
          }
        }
      }
      ctx.count("labels checked for at most k-1 parts", checked);
      ctx.count("labels with more than k-1 parts", too_long);

      PhiResult result;
      try {
        result = phi_star(p, k);
      } catch (PhiBudgetExceeded const& e) {
        ctx.fail(e.what());
        return;
      }
      auto const lhs = border_sequence(gk);
      auto const rhs = border_sequence(run_gda(result.placement));
      if (lhs != rhs) {
        ctx.fail("seq_k(P) = " + seq_string(lhs) + " but seq(phi*(P)) = "
                 + seq_string(rhs));
      }
      if (contains_pattern(result.placement, decreasing_pattern(k))) {
        ctx.fail("phi*(P) still contains k...1");
      }
      RookPlacement before = p;
      for (auto const& step : result.trace.steps) {
        check_phi_step(before, step, k, ctx);
        before = step.after;
      }
    }

    // corollary-inverse -----------------------------------------------------

    void check_corollary_inverse(SuiteCase const& c,
                                 SuiteParams const&,
                                 CaseContext& ctx) {
      RookPlacement const& p   = *c.placement;
      auto const           inv = symmetry(p, Symmetry::inverse);
      auto const lhs = phi_star(inv, c.k, false).placement;
      auto const rhs = symmetry(phi_star(p, c.k, false).placement,
                                Symmetry::inverse);
      if (lhs != rhs) {
        ctx.fail("phi*(P') = " + serialize_placement(lhs)
                 + " but phi*(P)' = " + serialize_placement(rhs));
      }
      auto forward  = border_sequence(run_gda_k(p, c.k)).partitions;
      auto const backward = border_sequence(run_gda_k(inv, c.k)).partitions;
      std::reverse(forward.begin(), forward.end());
      if (forward != backward) {
        ctx.fail("seq_k(P') is not the reverse of seq_k(P)");
      }
    }

    // lemma1-shape --------------------------------------------------------

    void gen_box(SuiteParams const& params, Emit const& emit) {
      emit_placements(enumerate_boards(params.max_cols, params.max_rows),
                      params.full_only,
                      emit,
                      "placement");
    }

    void check_lemma1_shape(SuiteCase const& c,
                            SuiteParams const& params,
                            CaseContext&       ctx) {
      RookPlacement const& p = *c.placement;
      FerrersBoard const&  f = p.board();
      auto const           g = run_gda(p);
      for (int j = 1; j <= f.rows(); ++j) {
        for (int i = 1; i <= f.width(j); ++i) {
          auto const shape
              = shape_of(rs_pair(restrict_to_rectangle(p, {i, j})).insertion);
          if (g.label(i, j) != shape) {
            ctx.fail("label " + g.label(i, j).to_string() + " at corner "
                     + corner_name(i, j) + " but RS shape "
                     + shape.to_string());
          }
          ctx.count("corners compared");
        }
      }
      if (run_growth(p, 0, SweepOrder::columns_first) != g) {
        ctx.fail("GDA labels depend on the sweep order");
      }
      for (int const k : params.k_values) {
        if (run_growth(p, k, SweepOrder::columns_first)
            != run_growth(p, k, SweepOrder::rows_first)) {
          ctx.fail("GDA_" + std::to_string(k)
                   + " labels depend on the sweep order");
        }
      }
    }

    // schensted / schutzenberger ----------------------------------------------

    void gen_perms_and_box(SuiteParams const& params, Emit const& emit) {
      emit_permutations(0, params.max_n, emit);
      gen_box(params, emit);
    }

    void check_schensted(SuiteCase const& c, SuiteParams const&, CaseContext& ctx) {
      RookPlacement const& p     = *c.placement;
      auto const           rs    = rs_pair(p);
      auto const           shape = shape_of(rs.insertion);
      int const inc = longest_monotone(p, Direction::increasing);
      int const dec = longest_monotone(p, Direction::decreasing);
      if (shape.part(0) != inc) {
        ctx.fail("first row " + std::to_string(shape.part(0))
                 + " but longest increasing " + std::to_string(inc));
      }
      if (static_cast<int>(shape.length()) != dec) {
        ctx.fail("row count " + std::to_string(shape.length())
                 + " but longest decreasing " + std::to_string(dec));
      }
      if (shape_of(rs.recording) != shape) {
        ctx.fail("insertion and recording shapes differ");
      }
    }

    void check_schutzenberger(SuiteCase const& c,
                              SuiteParams const&,
                              CaseContext& ctx) {
      RookPlacement const& p   = *c.placement;
      auto const           rs  = rs_pair(p);
      auto const           inv = rs_pair(symmetry(p, Symmetry::inverse));
      if (inv.insertion != rs.recording || inv.recording != rs.insertion) {
        ctx.fail("RS pair of the inverse is not the swapped pair");
      }
    }

    // pivot-theorems --------------------------------------------------------

    void gen_rectangles(SuiteParams const& params, Emit const& emit) {
      emit_placements(enumerate_rectangles(params.max_cols, params.max_rows),
                      params.full_only,
                      emit,
                      "placement");
    }

    void check_pivot_theorems(SuiteCase const& c,
                              SuiteParams const&,
                              CaseContext& ctx) {
      RookPlacement const& p     = *c.placement;
      auto const           rs    = rs_pair(p);
      auto const           right = pivots(p, Side::right);
      auto const           left  = pivots(p, Side::left);
      auto const           rs_r  = rs_pair(right);
      if (rs_r.insertion != tableau_slice(rs.insertion, Slice::strip_top_row)
          || rs_r.recording
                 != tableau_slice(rs.recording, Slice::strip_top_row)) {
        ctx.fail("RS pair of the right pivots is not the pair minus top rows");
      }
      if (rs_pair(left).insertion
          != tableau_slice(rs.insertion, Slice::strip_left_column)) {
        ctx.fail("insertion tableau of the left pivots is not ins(P) minus "
                 "its first column");
      }
      if (symmetry(left, Symmetry::reverse)
          != pivots(symmetry(p, Symmetry::reverse), Side::right)) {
        ctx.fail("rev(left pivots of P) != right pivots of rev(P)");
      }
      if (symmetry(left, Symmetry::transpose)
          != pivots(symmetry(p, Symmetry::transpose), Side::left)) {
        ctx.fail("transpose of the left pivots != left pivots of the transpose");
      }
      if (pivots_by_columns(p) != left) {
        ctx.fail("column construction disagrees with the left pivots");
      }
      if (rs_pair(symmetry(p, Symmetry::reverse)).insertion
          != tableau_slice(rs.insertion, Slice::transpose)) {
        ctx.fail("ins(rev P) is not the transpose of ins(P)");
      }
      for (auto const& pv : {left, right}) {
        for (Square const s : pv.markers()) {
          if (!p.board().contains(s)) {
            ctx.fail("pivot " + to_string(s) + " is off the board");
          }
        }
      }
    }

    // pivot-lemmas -------------------------------------------------------------

    void check_pivot_lemmas(SuiteCase const& c,
                            SuiteParams const&,
                            CaseContext& ctx) {
      RookPlacement const& p      = *c.placement;
      auto const           left   = pivots(p, Side::left);
      auto const           coords = pivot_table(p);
      auto const           dec    = decreasing_from(p);
      auto const           ms     = p.markers();
      std::size_t const    n      = ms.size();

      // chain[w]: markers reached from ms[w] by following pivot successors
      std::vector<std::vector<std::size_t>> chain(n);
      auto index_of = [&](Square s) {
        return static_cast<std::size_t>(
            std::lower_bound(ms.begin(), ms.end(), s) - ms.begin());
      };
      for (std::size_t w = 0; w < n; ++w) {
        std::optional<Square> cur = ms[w];
        while (cur) {
          chain[w].push_back(index_of(*cur));
          cur = pivot_successor(left, p, *cur);
        }
      }
      auto reaches = [&](std::size_t from, std::size_t to) {
        return std::find(chain[from].begin(), chain[from].end(), to)
               != chain[from].end();
      };
      // Some pivot-path ends at ms[z] and starts SE of ms[x].
      auto path_below_right = [&](std::size_t x, std::size_t z) {
        for (std::size_t w = 0; w < n; ++w) {
          if (ms[w].col > ms[x].col && ms[w].row < ms[x].row && reaches(w, z)) {
            return true;
          }
        }
        return false;
      };
      auto rho_above = [&](std::size_t x, int row) {
        return !coords[x].rho || *coords[x].rho > row;
      };

      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = x + 1; y < n; ++y) {
          if (ms[y].row <= ms[x].row) {
            continue;
          }
          // XY is a 12-pattern.
          if (rho_above(x, ms[y].row) && coords[y].kappa < ms[x].col) {
            ctx.fail("pivot coordinates cross for " + to_string(ms[x]) + " and "
                     + to_string(ms[y]));
          }
          if (rho_above(x, ms[y].row)) {
            ctx.count("12-pattern lemma instances");
            if (!path_below_right(x, y)) {
              ctx.fail("no pivot-path ends at " + to_string(ms[y])
                       + " starting below and right of " + to_string(ms[x]));
            }
            ctx.count("decreasing-extension instances (rho case)");
            if (dec[x] < dec[y] + 1) {
              ctx.fail("no decreasing sequence of length "
                       + std::to_string(dec[y] + 1) + " starts at "
                       + to_string(ms[x]));
            }
          }
          if (reaches(x, y)) {
            ctx.count("decreasing-extension instances (path case)");
            if (dec[x] < dec[y]) {
              ctx.fail("no decreasing sequence of length "
                       + std::to_string(dec[y]) + " starts at "
                       + to_string(ms[x]) + " although a pivot-path joins it to "
                       + to_string(ms[y]));
            }
            for (std::size_t z = y + 1; z < n; ++z) {
              if (ms[z].row > ms[x].row && ms[z].row < ms[y].row) {
                ctx.count("132-pattern lemma instances");
                if (!path_below_right(x, z)) {
                  ctx.fail("no pivot-path ends at " + to_string(ms[z])
                           + " starting below and right of "
                           + to_string(ms[x]));
                }
              }
            }
          }
        }
      }
    }

    // gke -----------------------------------------------------------------------

    void gen_gke(SuiteParams const& params, Emit const& emit) {
      gen_rectangles(params, [&](SuiteCase const& c) {
        emit({"band", c.placement, 0, 0});
      });
      emit_permutations(1, params.max_n, emit);
    }

    constexpr GkKind kAllKinds[] = {
        GkKind::ds_left, GkKind::DL_right, GkKind::is_right, GkKind::IL_left};

    constexpr KnuthMove kAllMoves[] = {KnuthMove::yzx_to_yxz,
                                       KnuthMove::yxz_to_yzx,
                                       KnuthMove::xzy_to_zxy,
                                       KnuthMove::zxy_to_xzy};

    char const* kind_name(GkKind kind) {
      switch (kind) {
        case GkKind::ds_left:
          return "ds-left";
        case GkKind::DL_right:
          return "DL-right";
        case GkKind::is_right:
          return "is-right";
        case GkKind::IL_left:
          return "IL-left";
      }
      return "?";
    }

    bool left_kind(GkKind kind) {
      return kind == GkKind::ds_left || kind == GkKind::IL_left;
    }

    std::string band_name(GkKind kind, int a, int b) {
      return std::string(kind_name(kind)) + " on band " + corner_name(a, b);
    }

    void check_gke_bands(RookPlacement const& p, CaseContext& ctx) {
      int const  cols = p.board().cols();
      auto const ins  = rs_pair(p).insertion;
      for (int a = 1; a <= cols; ++a) {
        for (int b = a + 1; b <= cols; ++b) {
          if (band_markers(p, a, b).empty()) {
            continue;
          }
          for (GkKind const kind : kAllKinds) {
            int const anchor = left_kind(kind) ? a : b;
            if (p.row_in_column(anchor)) {
              continue;
            }
            auto const q = gk_transform(p, kind, a, b);
            ctx.count(std::string(kind_name(kind)) + " transformations");
            if (rs_pair(q).insertion != ins) {
              ctx.fail(band_name(kind, a, b) + " changes the insertion tableau");
            }
            if (kind == GkKind::is_right || kind == GkKind::IL_left) {
              bool const left = kind == GkKind::IL_left;
              auto const seq  = extremal_sequence(
                  p, a, b, Direction::increasing,
                  left ? Extremum::largest : Extremum::smallest);
              auto const direct = shift(p,
                                        {seq->squares,
                                         anchor,
                                         left ? ShiftDirection::left
                                              : ShiftDirection::right});
              if (direct != q) {
                ctx.fail(band_name(kind, a, b)
                         + ": complement route and direct shift disagree");
              }
            }
          }
        }
      }
    }

    std::set<std::vector<int>> knuth_class(std::vector<int> const& sigma) {
      std::set<std::vector<int>>    seen{sigma};
      std::vector<std::vector<int>> frontier{sigma};
      while (!frontier.empty()) {
        auto const cur = std::move(frontier.back());
        frontier.pop_back();
        for (auto const& next : knuth_neighbors(std::span<int const>(cur))) {
          if (seen.insert(next).second) {
            frontier.push_back(next);
          }
        }
      }
      return seen;
    }

    void check_gke_table(SuiteCase const& c, CaseContext& ctx) {
      auto const sigma = c.placement->rows_in_column_order();
      int const  n     = c.n;
      for (std::size_t pos = 0; pos + 2 < sigma.size(); ++pos) {
        for (KnuthMove const move : kAllMoves) {
          auto const target = apply_knuth_move(sigma, move, pos);
          if (!target) {
            continue;
          }
          GkKind const kind   = generalization_of(move);
          int const    a      = static_cast<int>(pos) + 1;
          int const    b      = a + 3;
          int const    spacer = left_kind(kind) ? a : b;
          auto const   q = gk_transform(encode_with_spacer(sigma, spacer), kind, a, b);
          ctx.count(std::string(kind_name(kind)) + " standard moves");
          if (standardize(q) != *target) {
            ctx.fail(band_name(kind, a, b)
                     + " does not reproduce the standard move at position "
                     + std::to_string(pos + 1));
          }
        }
      }
      auto const cls = knuth_class(sigma);
      for_each_permutation(n, [&](std::vector<int> const& rho) {
        if (knuth_equivalent(sigma, rho) != (cls.count(rho) == 1)) {
          ctx.fail("insertion-tableau test and Knuth-move closure disagree");
        }
      });
    }

    void check_gke(SuiteCase const& c, SuiteParams const&, CaseContext& ctx) {
      if (c.stream == "band") {
        check_gke_bands(*c.placement, ctx);
      } else {
        check_gke_table(c, ctx);
      }
    }

    // shift-lemmas ---------------------------------------------------------

    std::vector<Square> shifted(std::vector<Square> const& seq,
                                int                        anchor,
                                ShiftDirection             dir) {
      std::vector<Square> out;
      std::size_t const   k = seq.size();
      for (std::size_t i = 0; i < k; ++i) {
        int col = 0;
        if (dir == ShiftDirection::left) {
          col = i == 0 ? anchor : seq[i - 1].col;
        } else {
          col = i + 1 == k ? anchor : seq[i + 1].col;
        }
        out.push_back({col, seq[i].row});
      }
      return out;
    }

    // One side of the shift lemmas: `ext` is the extremal sequence shifted
    // toward `anchor`, `back` is the extremum expected after shifting.
    void check_shift_side(RookPlacement const& p,
                          int                  a,
                          int                  b,
                          Direction            dir,
                          Extremum             ext,
                          ShiftDirection       sdir,
                          std::string const&   label,
                          CaseContext&         ctx) {
      int const  anchor = sdir == ShiftDirection::left ? a : b;
      int const  length = longest_monotone_in_band(p, a, b, dir);
      auto const seq    = extremal_sequence(p, a, b, dir, ext)->squares;
      auto const moved  = shift(p, {seq, anchor, sdir});
      std::string const where = label + " on band " + corner_name(a, b);
      ctx.count(label + " shifts");

      if (rs_pair(moved).insertion != rs_pair(p).insertion) {
        ctx.fail(where + " changes the insertion tableau");
      }
      if (longest_monotone_in_band(moved, a, b, dir) != length) {
        ctx.fail(where + ": shifted sequence is no longer longest");
      }
      int const far = sdir == ShiftDirection::left ? b : a;
      int const end = sdir == ShiftDirection::left ? seq.back().col
                                                   : seq.front().col;
      if (end == far) {
        ctx.count(label + " reversibility instances");
        auto const opposite
            = ext == Extremum::smallest ? Extremum::largest : Extremum::smallest;
        auto const back = extremal_sequence(moved, a, b, dir, opposite);
        if (!back || back->squares != shifted(seq, anchor, sdir)) {
          ctx.fail(where + ": shifted sequence is not the opposite extremum "
                           "of the result");
        }
      }
      for (auto const& other : all_longest_sequences(p, a, b, dir)) {
        if (other == seq) {
          continue;
        }
        ctx.count(label + " non-extremal instances");
        auto const q = shift(p, {other, anchor, sdir});
        if (longest_monotone_in_band(q, a, b, dir) < length + 1) {
          ctx.fail(where + ": shifting a non-extremal longest sequence did "
                           "not lengthen the longest one");
        }
      }
    }

    void check_shift_lemmas(SuiteCase const& c,
                            SuiteParams const&,
                            CaseContext& ctx) {
      RookPlacement const& p    = *c.placement;
      int const            cols = p.board().cols();
      for (int a = 1; a <= cols; ++a) {
        for (int b = a + 1; b <= cols; ++b) {
          if (band_markers(p, a, b).empty()) {
            continue;
          }
          if (!p.row_in_column(a)) {
            check_shift_side(p, a, b, Direction::decreasing, Extremum::smallest,
                             ShiftDirection::left, "a<-d_s", ctx);
            check_shift_side(p, a, b, Direction::increasing, Extremum::largest,
                             ShiftDirection::left, "a<-I_L", ctx);
          }
          if (!p.row_in_column(b)) {
            check_shift_side(p, a, b, Direction::decreasing, Extremum::largest,
                             ShiftDirection::right, "D_L->b", ctx);
            check_shift_side(p, a, b, Direction::increasing, Extremum::smallest,
                             ShiftDirection::right, "i_s->b", ctx);
          }
        }
      }
    }

    // wilf-counts -----------------------------------------------------------

    // Pairs 1...k rho / k...1 rho compared on full placements of boards.
    std::vector<std::pair<std::vector<int>, std::vector<int>>> const
        kBoardPairs = {{{1, 2, 3}, {2, 1, 3}},
                       {{1, 2, 3, 4}, {2, 1, 3, 4}},
                       {{1, 2, 3, 4}, {3, 2, 1, 4}},
                       {{1, 2, 4, 3}, {2, 1, 4, 3}}};

    std::string pattern_name(std::span<int const> pattern) {
      std::string out;
      for (int const v : pattern) {
        out += std::to_string(v);
      }
      return out;
    }

    std::string board_name(FerrersBoard const& f) {
      std::string out = "(";
      for (int const w : f.row_widths()) {
        out += (out.size() > 1 ? "," : "") + std::to_string(w);
      }
      return out + ")";
    }

    void gen_wilf(SuiteParams const& params, Emit const& emit) {
      for (int n = 1; n <= params.max_n; ++n) {
        emit({"perm-count", std::nullopt, 0, n});
      }
      for (auto const& f : enumerate_boards(params.max_cols, params.max_rows)) {
        if (f.rows() > 0 && f.rows() == f.cols()) {
          emit({"board-count", RookPlacement(f, {}), 0, 0});
        }
      }
    }

    std::uint64_t catalan(int n) {
      std::uint64_t c = 1;
      for (int i = 0; i < n; ++i) {
        c = c * 2 * (2 * i + 1) / (i + 2);
      }
      return c;
    }

    void check_wilf(SuiteCase const& c, SuiteParams const& params, CaseContext& ctx) {
      if (c.stream == "perm-count") {
        auto const f = FerrersBoard::rectangle(c.n, c.n);
        std::optional<std::uint64_t> first;
        for (auto const& pattern : params.patterns) {
          auto const count = count_avoiders(f, pattern, true);
          ctx.count("|S_" + std::to_string(c.n) + "(" + pattern_name(pattern)
                        + ")|",
                    count);
          if (first && *first != count) {
            ctx.fail("|S_" + std::to_string(c.n) + "(" + pattern_name(pattern)
                     + ")| = " + std::to_string(count) + " differs from "
                     + std::to_string(*first));
          }
          first = first.value_or(count);
          if (pattern.size() == 3 && count != catalan(c.n)) {
            ctx.fail("|S_" + std::to_string(c.n) + "(" + pattern_name(pattern)
                     + ")| = " + std::to_string(count)
                     + " is not the Catalan number "
                     + std::to_string(catalan(c.n)));
          }
        }
        return;
      }
      FerrersBoard const& f = c.placement->board();
      for (auto const& [inc, dec] : kBoardPairs) {
        auto const x = count_avoiders(f, inc, true);
        auto const y = count_avoiders(f, dec, true);
        ctx.count("board pairs compared");
        if (x != y) {
          ctx.fail("on board " + board_name(f) + " " + pattern_name(inc)
                   + " has " + std::to_string(x) + " avoiders but "
                   + pattern_name(dec) + " has " + std::to_string(y));
        }
      }
    }

    // phi-bijection ----------------------------------------------------------

    void gen_phi_bijection(SuiteParams const& params, Emit const& emit) {
      for (int const k : params.k_values) {
        for (int n = 1; n <= params.max_n; ++n) {
          emit({"perm-class", std::nullopt, k, n});
        }
      }
    }

    void check_phi_bijection(SuiteCase const& c,
                             SuiteParams const&,
                             CaseContext& ctx) {
      int const  k      = c.k;
      auto const target = decreasing_pattern(k);
      // k-1 ... 1 k
      std::vector<int> source = decreasing_pattern(k - 1);
      source.push_back(k);

      std::set<std::vector<int>> image;
      std::uint64_t              domain = 0;
      std::uint64_t              range  = 0;
      for_each_permutation(c.n, [&](std::vector<int> const& sigma) {
        auto const p = RookPlacement::from_permutation(sigma);
        if (avoids(p, target)) {
          ++range;
        }
        if (!avoids(p, source)) {
          return;
        }
        ++domain;
        auto const q = phi_star(p, k, false).placement;
        if (!avoids(q, target)) {
          ctx.fail("phi* of " + pattern_name(sigma) + " contains "
                   + pattern_name(target));
        }
        image.insert(q.rows_in_column_order());
      });
      std::string const tag = "n=" + std::to_string(c.n)
                              + " k=" + std::to_string(k);
      ctx.count(tag + " domain", domain);
      if (image.size() != domain) {
        ctx.fail(tag + ": phi* is not injective on the domain");
      }
      if (image.size() != range) {
        ctx.fail(tag + ": image has " + std::to_string(image.size())
                 + " elements but the target class has "
                 + std::to_string(range));
      }
    }

    // gda-roundtrip ----------------------------------------------------------

    void check_gda_roundtrip(SuiteCase const& c,
                             SuiteParams const&,
                             CaseContext& ctx) {
      RookPlacement const& p = *c.placement;
      auto const           g = run_gda(p);
      auto const           r = invert_gda(border_sequence(g), p.board());
      if (r.placement != p) {
        ctx.fail("reconstructed " + serialize_placement(r.placement));
      }
      if (r.diagram != g) {
        ctx.fail("reconstructed diagram differs from the forward one");
      }
    }

    std::vector<SuiteDef> const& suites() {
      static std::vector<SuiteDef> const defs = {
          {"main-theorem", gen_box_with_k, check_main_theorem},
          {"corollary-inverse", gen_box_with_k, check_corollary_inverse},
          {"lemma1-shape", gen_box, check_lemma1_shape},
          {"schensted", gen_perms_and_box, check_schensted},
          {"schutzenberger", gen_perms_and_box, check_schutzenberger},
          {"pivot-theorems", gen_rectangles, check_pivot_theorems},
          {"pivot-lemmas", gen_rectangles, check_pivot_lemmas},
          {"gke", gen_gke, check_gke},
          {"shift-lemmas", gen_rectangles, check_shift_lemmas},
          {"wilf-counts", gen_wilf, check_wilf},
          {"phi-bijection", gen_phi_bijection, check_phi_bijection},
          {"gda-roundtrip", gen_box, check_gda_roundtrip},
      };
      return defs;
    }

    SuiteDef const& find_suite(std::string const& name) {
      for (auto const& def : suites()) {
        if (def.name == name) {
          return def;
        }
      }
      throw ValidationError("unknown suite: " + name);
    }

    void validate(SuiteParams const& params) {
      if (params.max_cols < 0 || params.max_rows < 0) {
        throw ValidationError("box bounds must be non-negative");
      }
      if (params.max_n < 0 || params.max_n > 10) {
        throw ValidationError("max_n must lie in 0..10");
      }
      if (params.shards < 1 || params.shard < 0
          || params.shard >= params.shards) {
        throw ValidationError("shard must lie in 0..shards-1");
      }
      if (params.threads < 1) {
        throw ValidationError("threads must be at least 1");
      }
      for (int const k : params.k_values) {
        if (k < 2) {
          throw ValidationError("k must be at least 2");
        }
      }
      for (auto const& pattern : params.patterns) {
        check_pattern(pattern);
      }
    }

    struct WorkerResult {
      std::uint64_t                        cases = 0;
      std::uint64_t                        violation_count = 0;
      std::vector<Violation>               violations;
      std::map<std::string, std::uint64_t> counters;
    };

    void evaluate(SuiteDef const&    def,
                  SuiteCase const&   c,
                  SuiteParams const& params,
                  CaseContext&       ctx) {
      try {
        def.check(c, params, ctx);
      } catch (std::exception const& e) {
        ctx.fail(std::string("exception: ") + e.what());
      }
    }
  }  // namespace

  std::vector<std::string> const& suite_names() {
    static std::vector<std::string> const names = [] {
      std::vector<std::string> out;
      for (auto const& def : suites()) {
        out.push_back(def.name);
      }
      return out;
    }();
    return names;
  }

  SweepReport run_suite(std::string const& name, SuiteParams const& params) {
    SuiteDef const& def = find_suite(name);
    validate(params);
    auto const start = std::chrono::steady_clock::now();

    auto const shards  = static_cast<std::uint64_t>(params.shards);
    auto const shard   = static_cast<std::uint64_t>(params.shard);
    auto const threads = static_cast<std::uint64_t>(params.threads);
    std::vector<WorkerResult> results(threads);

    auto work = [&](std::uint64_t worker) {
      WorkerResult& out   = results[worker];
      std::uint64_t index = 0;
      def.generate(params, [&](SuiteCase const& c) {
        std::uint64_t const i = index++;
        if (i % shards != shard || (i / shards) % threads != worker) {
          return;
        }
        CaseContext ctx;
        evaluate(def, c, params, ctx);
        ++out.cases;
        for (auto const& [key, value] : ctx.counters) {
          out.counters[key] += value;
        }
        for (auto& detail : ctx.failures) {
          ++out.violation_count;
          if (params.violation_cap == 0
              || out.violations.size() < params.violation_cap) {
            out.violations.push_back({i, case_to_json(c), std::move(detail)});
          }
        }
      });
    };
    if (threads == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (std::uint64_t w = 0; w < threads; ++w) {
        pool.emplace_back(work, w);
      }
      for (auto& t : pool) {
        t.join();
      }
    }

    SweepReport report;
    report.suite  = name;
    report.params = params;
    for (auto& r : results) {
      report.cases += r.cases;
      report.violation_count += r.violation_count;
      for (auto& v : r.violations) {
        report.violations.push_back(std::move(v));
      }
      for (auto const& [key, value] : r.counters) {
        report.counters[key] += value;
      }
    }
    std::stable_sort(report.violations.begin(),
                     report.violations.end(),
                     [](Violation const& x, Violation const& y) {
                       return x.case_index < y.case_index;
                     });
    if (params.violation_cap != 0
        && report.violations.size() > params.violation_cap) {
      report.violations.resize(params.violation_cap);
    }
    report.seconds = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    return report;
  }

  std::vector<std::string> recheck_case(std::string const& name,
                                        SuiteParams const& params,
                                        json const&        input) {
    SuiteDef const& def = find_suite(name);
    validate(params);
    CaseContext ctx;
    evaluate(def, case_from_json(input), params, ctx);
    return ctx.failures;
  }

  json to_json(SuiteParams const& params) {
    return {{"max_cols", params.max_cols},
            {"max_rows", params.max_rows},
            {"k", params.k_values},
            {"full_only", params.full_only},
            {"max_n", params.max_n},
            {"patterns", params.patterns},
            {"shards", params.shards},
            {"shard", params.shard},
            {"threads", params.threads},
            {"violation_cap", params.violation_cap}};
  }

  json to_json(SweepReport const& report) {
    json violations = json::array();
    for (auto const& v : report.violations) {
      violations.push_back(
          {{"case", v.case_index}, {"input", v.input}, {"detail", v.detail}});
    }
    return {{"suite", report.suite},
            {"params", to_json(report.params)},
            {"cases", report.cases},
            {"violations", std::move(violations)},
            {"violation_count", report.violation_count},
            {"counters", report.counters},
            {"seconds", report.seconds}};
  }

}  // namespace rookgrowth
