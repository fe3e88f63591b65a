#include "rookgrowth/tableaux.hpp"

#include <algorithm>
#include <string>

namespace rookgrowth {

  StandardTableau::StandardTableau(std::vector<std::vector<int>> rows)
      : rows_(std::move(rows)) {
    while (!rows_.empty() && rows_.back().empty()) {
      rows_.pop_back();
    }
    std::vector<int> seen;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      auto const& row = rows_[r];
      if (row.empty() || (r > 0 && row.size() > rows_[r - 1].size())) {
        throw ValidationError("tableau row lengths are not weakly "
                              "decreasing at row "
                              + std::to_string(r + 1));
      }
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (row[c] < 1) {
          throw ValidationError("tableau entries must be positive");
        }
        if (c > 0 && row[c] <= row[c - 1]) {
          throw ValidationError("tableau row " + std::to_string(r + 1)
                                + " is not strictly increasing");
        }
        if (r > 0 && row[c] <= rows_[r - 1][c]) {
          throw ValidationError("tableau column " + std::to_string(c + 1)
                                + " is not strictly increasing");
        }
        seen.push_back(row[c]);
      }
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
      throw ValidationError("tableau entries are not distinct");
    }
  }

  std::size_t StandardTableau::size() const noexcept {
    std::size_t n = 0;
    for (auto const& row : rows_) {
      n += row.size();
    }
    return n;
  }

  RsPair rs_pair(PartialPermutation const& pi) {
    std::vector<std::vector<int>> ins;
    std::vector<std::vector<int>> rec;
    for (auto const& [input, output] : pi.pairs()) {
      int         x = output;
      std::size_t r = 0;
      for (;; ++r) {
        if (r == ins.size()) {
          ins.emplace_back();
          rec.emplace_back();
        }
        auto& row = ins[r];
        auto  it  = std::upper_bound(row.begin(), row.end(), x);
        if (it == row.end()) {
          row.push_back(x);
          rec[r].push_back(input);
          break;
        }
        std::swap(x, *it);
      }
    }
    return {StandardTableau(std::move(ins)), StandardTableau(std::move(rec))};
  }

  RsPair rs_pair(RookPlacement const& p) {
    return rs_pair(to_partial_permutation(p));
  }

  Partition shape_of(StandardTableau const& y) {
    std::vector<int> parts;
    for (auto const& row : y.rows()) {
      parts.push_back(static_cast<int>(row.size()));
    }
    return Partition(std::move(parts));
  }

  StandardTableau tableau_slice(StandardTableau const& y, Slice kind) {
    auto const rows = y.rows();
    std::vector<std::vector<int>> out;
    switch (kind) {
      case Slice::strip_top_row:
        if (!rows.empty()) {
          out.assign(rows.begin() + 1, rows.end());
        }
        break;
      case Slice::strip_left_column:
        for (auto const& row : rows) {
          if (row.size() > 1) {
            out.emplace_back(row.begin() + 1, row.end());
          }
        }
        break;
      case Slice::transpose:
        if (!rows.empty()) {
          out.resize(rows.front().size());
          for (auto const& row : rows) {
            for (std::size_t c = 0; c < row.size(); ++c) {
              out[c].push_back(row[c]);
            }
          }
        }
        break;
    }
    return StandardTableau(std::move(out));
  }

}  // namespace rookgrowth
