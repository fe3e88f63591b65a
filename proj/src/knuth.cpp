#include "rookgrowth/knuth.hpp"

#include <algorithm>
#include <string>

#include "rookgrowth/tableaux.hpp"

namespace rookgrowth {

  std::optional<MonotoneSequence> extremal_sequence(RookPlacement const& p,
                                                    int                  a,
                                                    int                  b,
                                                    Direction            dir,
                                                    Extremum             ext) {
    if (a < 1 || a >= b || b > p.board().cols()) {
      throw DomainError("band (" + std::to_string(a) + ","
                        + std::to_string(b)
                        + ") needs 1 <= a < b <= number of columns");
    }
    std::vector<Square> band;
    for (Square const s : p.markers()) {
      if (s.col >= a && s.col <= b) {
        band.push_back(s);
      }
    }
    if (band.empty()) {
      return std::nullopt;
    }
    auto follows = [dir](Square prev, Square next) {
      return next.col > prev.col
             && (dir == Direction::increasing ? next.row > prev.row
                                              : next.row < prev.row);
    };
    // longest[i]: longest monotone sequence starting at band[i]
    std::size_t const        n = band.size();
    std::vector<std::size_t> longest(n, 1);
    for (std::size_t i = n; i-- > 0;) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (follows(band[i], band[j])) {
          longest[i] = std::max(longest[i], longest[j] + 1);
        }
      }
    }
    std::size_t const length = *std::max_element(longest.begin(), longest.end());

    // Greedy choice of the extreme feasible row at every position.
    MonotoneSequence out{{}, dir, ext};
    for (std::size_t t = 0; t < length; ++t) {
      std::optional<std::size_t> pick;
      for (std::size_t j = 0; j < n; ++j) {
        if (longest[j] < length - t
            || (!out.squares.empty() && !follows(out.squares.back(), band[j]))) {
          continue;
        }
        if (!pick
            || (ext == Extremum::smallest ? band[j].row < band[*pick].row
                                          : band[j].row > band[*pick].row)) {
          pick = j;
        }
      }
      out.squares.push_back(band[*pick]);
    }
    return out;
  }

  RookPlacement shift(RookPlacement const& p, ShiftSpec const& spec) {
    int const c = spec.anchor;
    if (c < 1 || c > p.board().cols()) {
      throw DomainError("anchor column " + std::to_string(c)
                        + " is not on the board");
    }
    if (p.row_in_column(c)) {
      throw DomainError("anchor column " + std::to_string(c)
                        + " already holds a marker");
    }
    if (spec.sequence.empty()) {
      throw DomainError("cannot shift an empty sequence");
    }
    std::vector<Square> seq = spec.sequence;
    std::sort(seq.begin(), seq.end());
    bool const left = spec.direction == ShiftDirection::left;
    for (Square const s : seq) {
      if (!p.contains(s)) {
        throw DomainError(to_string(s) + " is not a marker of the placement");
      }
      if (left ? s.col <= c : s.col >= c) {
        throw DomainError(to_string(s) + " is not on the "
                          + (left ? "right" : "left")
                          + " of anchor column " + std::to_string(c));
      }
    }
    std::vector<Square> markers;
    for (Square const s : p.markers()) {
      if (!std::binary_search(seq.begin(), seq.end(), s)) {
        markers.push_back(s);
      }
    }
    std::size_t const k = seq.size();
    for (std::size_t i = 0; i < k; ++i) {
      int col = 0;
      if (left) {
        col = i == 0 ? c : seq[i - 1].col;
      } else {
        col = i + 1 == k ? c : seq[i + 1].col;
      }
      markers.push_back({col, seq[i].row});
    }
    return RookPlacement(p.board(), std::move(markers));
  }

  namespace {
    RookPlacement gk_decreasing(RookPlacement const& p,
                                bool                 left,
                                int                  a,
                                int                  b) {
      int const anchor = left ? a : b;
      if (p.row_in_column(anchor)) {
        throw DomainError("anchor column " + std::to_string(anchor)
                          + " already holds a marker");
      }
      auto seq = extremal_sequence(p,
                                   a,
                                   b,
                                   Direction::decreasing,
                                   left ? Extremum::smallest
                                        : Extremum::largest);
      if (!seq) {
        throw DomainError("band (" + std::to_string(a) + ","
                          + std::to_string(b) + ") holds no marker");
      }
      return shift(p,
                   {std::move(seq->squares),
                    anchor,
                    left ? ShiftDirection::left : ShiftDirection::right});
    }
  }  // namespace

  RookPlacement gk_transform(RookPlacement const& p,
                             GkKind               kind,
                             int                  a,
                             int                  b) {
    if (!p.board().is_rectangular()) {
      throw DomainError("generalized Knuth transformations need a "
                        "rectangular board");
    }
    if (a < 1 || a >= b || b > p.board().cols()) {
      throw DomainError("band (" + std::to_string(a) + ","
                        + std::to_string(b)
                        + ") needs 1 <= a < b <= number of columns");
    }
    switch (kind) {
      case GkKind::ds_left:
        return gk_decreasing(p, true, a, b);
      case GkKind::DL_right:
        return gk_decreasing(p, false, a, b);
      // Flipping rows turns increasing sequences into decreasing ones and
      // reverses the value order, so i_s <-> D_L and I_L <-> d_s.
      case GkKind::is_right:
        return symmetry(
            gk_decreasing(symmetry(p, Symmetry::complement), false, a, b),
            Symmetry::complement);
      case GkKind::IL_left:
        return symmetry(
            gk_decreasing(symmetry(p, Symmetry::complement), true, a, b),
            Symmetry::complement);
    }
    throw std::logic_error("unknown generalized Knuth kind");
  }

  std::set<std::vector<int>> knuth_neighbors(std::span<int const> sigma) {
    std::set<std::vector<int>> out;
    std::size_t const          n = sigma.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
      int const x = std::min(sigma[i], sigma[i + 1]);
      int const z = std::max(sigma[i], sigma[i + 1]);
      auto between = [&](std::size_t j) {
        return sigma[j] > x && sigma[j] < z;
      };
      if ((i > 0 && between(i - 1)) || (i + 2 < n && between(i + 2))) {
        std::vector<int> next(sigma.begin(), sigma.end());
        std::swap(next[i], next[i + 1]);
        out.insert(std::move(next));
      }
    }
    return out;
  }

  std::set<std::vector<int>> knuth_neighbors(PartialPermutation const& sigma) {
    if (!sigma.is_total()) {
      throw DomainError("Knuth moves need a permutation of 1..n");
    }
    auto const values = sigma.outputs();
    return knuth_neighbors(std::span<int const>(values));
  }

  bool knuth_equivalent(std::span<int const> sigma, std::span<int const> rho) {
    if (sigma.size() != rho.size()) {
      throw DomainError("permutations have different lengths");
    }
    auto const s = PartialPermutation::from_one_line(sigma);
    auto const r = PartialPermutation::from_one_line(rho);
    if (!s.is_total() || !r.is_total()) {
      throw DomainError("Knuth equivalence needs permutations of 1..n");
    }
    return rs_pair(s).insertion == rs_pair(r).insertion;
  }

  std::optional<std::vector<int>> apply_knuth_move(std::span<int const> sigma,
                                                   KnuthMove            move,
                                                   std::size_t          pos) {
    if (pos + 2 >= sigma.size()) {
      return std::nullopt;
    }
    int const u = sigma[pos];
    int const v = sigma[pos + 1];
    int const w = sigma[pos + 2];
    std::vector<int> out(sigma.begin(), sigma.end());
    switch (move) {
      case KnuthMove::yzx_to_yxz:  // w < u < v
        if (!(w < u && u < v)) {
          return std::nullopt;
        }
        std::swap(out[pos + 1], out[pos + 2]);
        break;
      case KnuthMove::yxz_to_yzx:  // v < u < w
        if (!(v < u && u < w)) {
          return std::nullopt;
        }
        std::swap(out[pos + 1], out[pos + 2]);
        break;
      case KnuthMove::xzy_to_zxy:  // u < w < v
        if (!(u < w && w < v)) {
          return std::nullopt;
        }
        std::swap(out[pos], out[pos + 1]);
        break;
      case KnuthMove::zxy_to_xzy:  // v < w < u
        if (!(v < w && w < u)) {
          return std::nullopt;
        }
        std::swap(out[pos], out[pos + 1]);
        break;
    }
    return out;
  }

  GkKind generalization_of(KnuthMove move) {
    switch (move) {
      case KnuthMove::yzx_to_yxz:
        return GkKind::ds_left;
      case KnuthMove::yxz_to_yzx:
        return GkKind::DL_right;
      case KnuthMove::xzy_to_zxy:
        return GkKind::is_right;
      case KnuthMove::zxy_to_xzy:
        return GkKind::IL_left;
    }
    throw std::logic_error("unknown Knuth move");
  }

  RookPlacement encode_with_spacer(std::span<int const> sigma, int spacer) {
    int const n = static_cast<int>(sigma.size());
    if (spacer < 1 || spacer > n + 1) {
      throw DomainError("spacer column must lie in 1..n+1");
    }
    std::vector<Square> markers;
    for (int i = 0; i < n; ++i) {
      int const col = i + 1 < spacer ? i + 1 : i + 2;
      markers.push_back({col, sigma[i]});
    }
    return RookPlacement(FerrersBoard::rectangle(n + 1, n), std::move(markers));
  }

  std::vector<int> standardize(RookPlacement const& p) {
    std::vector<int> rows = p.rows_in_column_order();
    std::vector<int> sorted = rows;
    std::sort(sorted.begin(), sorted.end());
    for (int& r : rows) {
      r = static_cast<int>(
              std::lower_bound(sorted.begin(), sorted.end(), r)
              - sorted.begin())
          + 1;
    }
    return rows;
  }

}  // namespace rookgrowth
