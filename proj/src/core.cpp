#include "rookgrowth/core.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace rookgrowth {

  ////////////////////////////////////////////////////////////////////////
  // Partition
  ////////////////////////////////////////////////////////////////////////

  Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) {
      parts_.pop_back();
    }
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 1) {
        throw ValidationError("partition part " + std::to_string(i + 1)
                              + " is not positive");
      }
      if (i > 0 && parts_[i] > parts_[i - 1]) {
        throw ValidationError("partition is not weakly decreasing at part "
                              + std::to_string(i + 1));
      }
    }
  }

  int Partition::size() const noexcept {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
  }

  Partition Partition::with_box(std::size_t row) const {
    std::vector<int> parts = parts_;
    if (row >= parts.size()) {
      parts.resize(row + 1, 0);
    }
    ++parts[row];
    return Partition(std::move(parts));
  }

  Partition Partition::join(Partition const& a, Partition const& b) {
    std::vector<int> parts(std::max(a.length(), b.length()));
    for (std::size_t i = 0; i < parts.size(); ++i) {
      parts[i] = std::max(a.part(i), b.part(i));
    }
    return Partition(std::move(parts));
  }

  Partition Partition::meet(Partition const& a, Partition const& b) {
    std::vector<int> parts(std::min(a.length(), b.length()));
    for (std::size_t i = 0; i < parts.size(); ++i) {
      parts[i] = std::min(a.part(i), b.part(i));
    }
    return Partition(std::move(parts));
  }

  std::string Partition::to_string() const {
    if (parts_.empty()) {
      return "∅";
    }
    bool const wide = std::any_of(
        parts_.begin(), parts_.end(), [](int x) { return x > 9; });
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (wide && i > 0) {
        out += ',';
      }
      out += std::to_string(parts_[i]);
    }
    return out;
  }

  std::optional<std::size_t> added_box(Partition const& a,
                                       Partition const& b) noexcept {
    if (b.size() != a.size() + 1) {
      return std::nullopt;
    }
    std::optional<std::size_t> row;
    for (std::size_t i = 0; i < b.length(); ++i) {
      int const d = b.part(i) - a.part(i);
      if (d == 1 && !row) {
        row = i;
      } else if (d != 0) {
        return std::nullopt;
      }
    }
    return row;
  }

  std::string to_string(Square s) {
    return "(" + std::to_string(s.col) + "," + std::to_string(s.row) + ")";
  }

  ////////////////////////////////////////////////////////////////////////
  // FerrersBoard
  ////////////////////////////////////////////////////////////////////////

  FerrersBoard::FerrersBoard(std::vector<int> row_widths)
      : widths_(std::move(row_widths)) {
    for (std::size_t i = 0; i < widths_.size(); ++i) {
      if (widths_[i] < 1) {
        throw ValidationError("board row width at index "
                              + std::to_string(i + 1) + " is not positive");
      }
      if (i > 0 && widths_[i] > widths_[i - 1]) {
        throw ValidationError(
            "board row widths are not weakly decreasing at index "
            + std::to_string(i + 1));
      }
    }
  }

  FerrersBoard FerrersBoard::rectangle(int cols, int rows) {
    if (cols < 0 || rows < 0 || (cols == 0) != (rows == 0)) {
      throw ValidationError("rectangle dimensions must both be positive");
    }
    return FerrersBoard(std::vector<int>(static_cast<std::size_t>(rows), cols));
  }

  int FerrersBoard::height(int col) const noexcept {
    if (col < 1) {
      return 0;
    }
    int h = 0;
    while (h < rows() && widths_[h] >= col) {
      ++h;
    }
    return h;
  }

  bool FerrersBoard::is_rectangular() const noexcept {
    return widths_.empty() || widths_.front() == widths_.back();
  }

  std::size_t FerrersBoard::area() const noexcept {
    return std::accumulate(widths_.begin(), widths_.end(), std::size_t{0});
  }

  FerrersBoard FerrersBoard::conjugate() const {
    std::vector<int> widths;
    for (int c = 1; c <= cols(); ++c) {
      widths.push_back(height(c));
    }
    return FerrersBoard(std::move(widths));
  }

  ////////////////////////////////////////////////////////////////////////
  // PartialPermutation
  ////////////////////////////////////////////////////////////////////////

  PartialPermutation::PartialPermutation(std::vector<std::pair<int, int>> pairs)
      : pairs_(std::move(pairs)) {
    std::sort(pairs_.begin(), pairs_.end());
    std::vector<int> outs;
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
      auto [in, out] = pairs_[i];
      if (in < 1 || out < 1) {
        throw ValidationError("partial permutation entries must be positive");
      }
      if (i > 0 && pairs_[i - 1].first == in) {
        throw ValidationError("partial permutation repeats input "
                              + std::to_string(in));
      }
      outs.push_back(out);
    }
    std::sort(outs.begin(), outs.end());
    if (std::adjacent_find(outs.begin(), outs.end()) != outs.end()) {
      throw ValidationError("partial permutation outputs are not distinct");
    }
  }

  PartialPermutation PartialPermutation::from_one_line(
      std::span<int const> values) {
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t i = 0; i < values.size(); ++i) {
      pairs.emplace_back(static_cast<int>(i) + 1, values[i]);
    }
    return PartialPermutation(std::move(pairs));
  }

  std::vector<int> PartialPermutation::outputs() const {
    std::vector<int> out;
    out.reserve(pairs_.size());
    for (auto const& pr : pairs_) {
      out.push_back(pr.second);
    }
    return out;
  }

  PartialPermutation PartialPermutation::inverse() const {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(pairs_.size());
    for (auto const& [in, out] : pairs_) {
      pairs.emplace_back(out, in);
    }
    return PartialPermutation(std::move(pairs));
  }

  bool PartialPermutation::is_total() const noexcept {
    int const n = static_cast<int>(pairs_.size());
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
      auto [in, out] = pairs_[i];
      if (in != static_cast<int>(i) + 1 || out > n || seen[out]) {
        return false;
      }
      seen[out] = true;
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // RookPlacement
  ////////////////////////////////////////////////////////////////////////

  RookPlacement::RookPlacement(FerrersBoard board, std::vector<Square> markers)
      : board_(std::move(board)), markers_(std::move(markers)) {
    std::sort(markers_.begin(), markers_.end());
    std::vector<int> rows;
    for (std::size_t i = 0; i < markers_.size(); ++i) {
      Square const s = markers_[i];
      if (s.col < 1 || s.row < 1) {
        throw ValidationError("marker coordinates must be >= 1: "
                              + to_string(s));
      }
      if (!board_.contains(s)) {
        throw ValidationError("marker off board: " + to_string(s));
      }
      if (i > 0 && markers_[i - 1].col == s.col) {
        throw ValidationError("more than one marker in column "
                              + std::to_string(s.col) + ": "
                              + to_string(markers_[i - 1]) + " and "
                              + to_string(s));
      }
      rows.push_back(s.row);
    }
    std::sort(rows.begin(), rows.end());
    auto dup = std::adjacent_find(rows.begin(), rows.end());
    if (dup != rows.end()) {
      throw ValidationError("more than one marker in row "
                            + std::to_string(*dup));
    }
  }

  RookPlacement RookPlacement::from_permutation(std::span<int const> values) {
    int const n = static_cast<int>(values.size());
    std::vector<Square> markers;
    for (int i = 0; i < n; ++i) {
      markers.push_back({i + 1, values[i]});
    }
    return RookPlacement(n == 0 ? FerrersBoard() : FerrersBoard::rectangle(n, n),
                         std::move(markers));
  }

  bool RookPlacement::is_full() const noexcept {
    return board_.rows() == board_.cols()
           && static_cast<int>(markers_.size()) == board_.cols();
  }

  bool RookPlacement::contains(Square s) const noexcept {
    return std::binary_search(markers_.begin(), markers_.end(), s);
  }

  std::optional<int> RookPlacement::row_in_column(int col) const noexcept {
    auto it = std::lower_bound(
        markers_.begin(), markers_.end(), Square{col, 0});
    if (it != markers_.end() && it->col == col) {
      return it->row;
    }
    return std::nullopt;
  }

  std::optional<int> RookPlacement::column_in_row(int row) const noexcept {
    for (Square const s : markers_) {
      if (s.row == row) {
        return s.col;
      }
    }
    return std::nullopt;
  }

  std::vector<int> RookPlacement::rows_in_column_order() const {
    std::vector<int> out;
    out.reserve(markers_.size());
    for (Square const s : markers_) {
      out.push_back(s.row);
    }
    return out;
  }

  RookPlacement make_placement(std::vector<int>   row_widths,
                               std::vector<Square> markers) {
    return RookPlacement(FerrersBoard(std::move(row_widths)),
                         std::move(markers));
  }

  void check_pattern(std::span<int const> pattern) {
    if (pattern.empty()) {
      throw ValidationError("pattern must have length >= 1");
    }
    std::vector<int> sorted(pattern.begin(), pattern.end());
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      if (sorted[i] != static_cast<int>(i) + 1) {
        throw ValidationError("pattern is not a permutation of 1.."
                              + std::to_string(pattern.size()));
      }
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Symmetries and restrictions
  ////////////////////////////////////////////////////////////////////////

  RookPlacement symmetry(RookPlacement const& p, Symmetry kind) {
    FerrersBoard const& f = p.board();
    if (kind != Symmetry::inverse && !f.is_rectangular()) {
      throw DomainError("reverse, transpose and complement need a "
                        "rectangular board");
    }
    int const n = f.cols();
    int const m = f.rows();
    std::vector<Square> markers;
    markers.reserve(p.size());
    for (Square const s : p.markers()) {
      switch (kind) {
        case Symmetry::inverse:
          markers.push_back({s.row, s.col});
          break;
        case Symmetry::reverse:
          markers.push_back({n + 1 - s.col, s.row});
          break;
        case Symmetry::transpose:
          markers.push_back({m + 1 - s.row, n + 1 - s.col});
          break;
        case Symmetry::complement:
          markers.push_back({s.col, m + 1 - s.row});
          break;
      }
    }
    FerrersBoard board = f;
    if (kind == Symmetry::inverse) {
      board = f.conjugate();
    } else if (kind == Symmetry::transpose && m > 0) {
      board = FerrersBoard::rectangle(m, n);
    }
    return RookPlacement(std::move(board), std::move(markers));
  }

  RookPlacement restrict_to_rectangle(RookPlacement const& p, Square corner) {
    if (!p.board().contains(corner)) {
      throw DomainError("rectangle corner " + to_string(corner)
                        + " is not on the board");
    }
    std::vector<Square> markers;
    for (Square const s : p.markers()) {
      if (s.col <= corner.col && s.row <= corner.row) {
        markers.push_back(s);
      }
    }
    return RookPlacement(FerrersBoard::rectangle(corner.col, corner.row),
                         std::move(markers));
  }

  RookPlacement restrict_to_columns(RookPlacement const& p, int a, int b) {
    FerrersBoard const& f = p.board();
    if (a < 1 || a > b || b > f.cols()) {
      throw DomainError("column band (" + std::to_string(a) + ","
                        + std::to_string(b) + ") is not within the board");
    }
    std::vector<int> widths;
    for (int r = 1; r <= f.rows() && f.width(r) >= a; ++r) {
      widths.push_back(std::min(f.width(r), b) - a + 1);
    }
    std::vector<Square> markers;
    for (Square const s : p.markers()) {
      if (s.col >= a && s.col <= b) {
        markers.push_back({s.col - a + 1, s.row});
      }
    }
    return RookPlacement(FerrersBoard(std::move(widths)), std::move(markers));
  }

  ////////////////////////////////////////////////////////////////////////
  // Pattern containment
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // Depth-first scan over markers in column order.  `visit` returns false
    // to stop the scan.
    template <typename Visit>
    bool scan_occurrences(RookPlacement const& p,
                          std::span<int const> pattern,
                          Visit&&              visit) {
      auto const           markers = p.markers();
      std::size_t const    r       = pattern.size();
      std::vector<std::size_t> chosen;
      chosen.reserve(r);

      auto rec = [&](auto& self, std::size_t from, int max_row) -> bool {
        std::size_t const t = chosen.size();
        if (t == r) {
          PatternOccurrence occ;
          for (std::size_t i : chosen) {
            occ.squares.push_back(markers[i]);
          }
          return visit(std::move(occ));
        }
        if (markers.size() - from < r - t) {
          return true;
        }
        for (std::size_t i = from; i < markers.size(); ++i) {
          Square const s  = markers[i];
          bool         ok = true;
          for (std::size_t u = 0; u < t && ok; ++u) {
            ok = (s.row > markers[chosen[u]].row) == (pattern[t] > pattern[u]);
          }
          int const top = std::max(max_row, s.row);
          if (!ok || !p.board().contains({s.col, top})) {
            continue;
          }
          chosen.push_back(i);
          bool const go_on = self(self, i + 1, top);
          chosen.pop_back();
          if (!go_on) {
            return false;
          }
        }
        return true;
      };
      return rec(rec, 0, 0);
    }
  }  // namespace

  std::vector<PatternOccurrence> occurrences(RookPlacement const& p,
                                             std::span<int const> pattern) {
    check_pattern(pattern);
    std::vector<PatternOccurrence> out;
    scan_occurrences(p, pattern, [&out](PatternOccurrence&& occ) {
      out.push_back(std::move(occ));
      return true;
    });
    return out;
  }

  bool contains_pattern(RookPlacement const& p, std::span<int const> pattern) {
    check_pattern(pattern);
    bool found = false;
    scan_occurrences(p, pattern, [&found](PatternOccurrence&&) {
      found = true;
      return false;
    });
    return found;
  }

  PartialPermutation to_partial_permutation(RookPlacement const& p) {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(p.size());
    for (Square const s : p.markers()) {
      pairs.emplace_back(s.col, s.row);
    }
    return PartialPermutation(std::move(pairs));
  }

}  // namespace rookgrowth
