#include "rookgrowth/growth.hpp"

#include <string>

namespace rookgrowth {

  namespace {
    std::string corner_name(int i, int j) {
      return "corner (" + std::to_string(i) + "," + std::to_string(j) + ")";
    }
  }  // namespace

  GrowthDiagram::GrowthDiagram(FerrersBoard board, std::optional<int> k)
      : board_(std::move(board)),
        k_(k),
        labels_(static_cast<std::size_t>(board_.cols() + 1)
                * static_cast<std::size_t>(board_.rows() + 1)) {}

  bool GrowthDiagram::has_corner(int i, int j) const noexcept {
    if (i < 0 || j < 0) {
      return false;
    }
    if (i == 0) {
      return j <= board_.rows();
    }
    if (j == 0) {
      return i <= board_.cols();
    }
    return board_.contains({i, j});
  }

  Partition const& GrowthDiagram::label(int i, int j) const {
    if (!has_corner(i, j)) {
      throw DomainError(corner_name(i, j) + " is not on the board");
    }
    return labels_[index(i, j)];
  }

  void GrowthDiagram::set_label(int i, int j, Partition value) {
    if (!has_corner(i, j)) {
      throw DomainError(corner_name(i, j) + " is not on the board");
    }
    labels_[index(i, j)] = std::move(value);
  }

  std::vector<Square> border_corners(FerrersBoard const& f) {
    std::vector<Square> path;
    int x = f.cols();
    int y = 0;
    path.push_back({x, y});
    while (x > 0 || y < f.rows()) {
      if (y < f.rows() && f.width(y + 1) == x) {
        ++y;
      } else {
        --x;
      }
      path.push_back({x, y});
    }
    return path;
  }

  Partition grow_corner(Partition const& nw,
                        Partition const& sw,
                        Partition const& se,
                        bool             marker,
                        int              k) {
    // Rule 1.
    if (nw != se) {
      return Partition::join(nw, se);
    }
    // Rule 3.
    if (sw == nw) {
      return marker ? sw.with_box(0) : sw;
    }
    // Rule 2 (or 2_k).
    auto const row = added_box(sw, nw);
    if (!row) {
      throw std::logic_error("growth labels are not one box apart");
    }
    Partition ne = nw.with_box(*row + 1);
    if (k > 0 && ne.length() == static_cast<std::size_t>(k)) {
      std::vector<int> parts(ne.parts().begin(), ne.parts().end() - 1);
      ++parts.front();
      ne = Partition(std::move(parts));
    }
    return ne;
  }

  GrowthDiagram run_growth(RookPlacement const& p, int k, SweepOrder order) {
    FerrersBoard const& f = p.board();
    GrowthDiagram g(f, k > 0 ? std::optional<int>(k) : std::nullopt);
    auto visit = [&](int i, int j) {
      g.set_label(i,
                  j,
                  grow_corner(g.label(i - 1, j),
                              g.label(i - 1, j - 1),
                              g.label(i, j - 1),
                              p.row_in_column(i) == j,
                              k));
    };
    if (order == SweepOrder::rows_first) {
      for (int j = 1; j <= f.rows(); ++j) {
        for (int i = 1; i <= f.width(j); ++i) {
          visit(i, j);
        }
      }
    } else {
      for (int i = 1; i <= f.cols(); ++i) {
        for (int j = 1; j <= f.height(i); ++j) {
          visit(i, j);
        }
      }
    }
    return g;
  }

  GrowthDiagram run_gda(RookPlacement const& p) {
    return run_growth(p, 0, SweepOrder::rows_first);
  }

  GrowthDiagram run_gda_k(RookPlacement const& p, int k) {
    if (k < 2) {
      throw DomainError("GDA_k needs k >= 2, got " + std::to_string(k));
    }
    return run_growth(p, k, SweepOrder::rows_first);
  }

  BorderSequence border_sequence(GrowthDiagram const& g) {
    BorderSequence seq;
    for (Square const c : border_corners(g.board())) {
      seq.partitions.push_back(g.label(c.col, c.row));
    }
    return seq;
  }

  Reconstruction invert_gda(BorderSequence const& border,
                            FerrersBoard const&   f) {
    auto const path = border_corners(f);
    auto const& labels = border.partitions;
    if (labels.size() != path.size()) {
      throw ReconstructionError(
          "border has " + std::to_string(labels.size())
          + " labels but the board's border has "
          + std::to_string(path.size()) + " corners");
    }
    GrowthDiagram g(f, std::nullopt);
    for (std::size_t t = 0; t < path.size(); ++t) {
      Square const c = path[t];
      if ((c.col == 0 || c.row == 0) && !labels[t].empty()) {
        throw ReconstructionError(corner_name(c.col, c.row)
                                  + " lies on the left or bottom edge "
                                    "but is not ∅");
      }
      if (t > 0) {
        // Moving up labels grow, moving left they shrink, one box at most.
        bool const up    = c.row > path[t - 1].row;
        auto const& lo   = up ? labels[t - 1] : labels[t];
        auto const& hi   = up ? labels[t] : labels[t - 1];
        if (lo != hi && !added_box(lo, hi)) {
          throw ReconstructionError(corner_name(c.col, c.row)
                                    + " differs from its neighbour along "
                                      "the border by more than one box");
        }
      }
      g.set_label(c.col, c.row, labels[t]);
    }

    std::vector<Square> markers;
    for (int i = f.cols(); i >= 1; --i) {
      for (int j = f.height(i); j >= 1; --j) {
        Partition const& ne = g.label(i, j);
        Partition const& nw = g.label(i - 1, j);
        Partition const& se = g.label(i, j - 1);
        Partition        sw;
        bool             marker = false;
        if (nw != se) {
          // Rule A.
          sw = Partition::meet(nw, se);
        } else if (ne == nw) {
          // Rule B.
          sw = nw;
        } else {
          // Rule C.
          auto const row = added_box(nw, ne);
          if (!row) {
            throw ReconstructionError(corner_name(i, j)
                                      + " is not one box above its "
                                        "neighbours");
          }
          if (*row == 0) {
            sw     = nw;
            marker = true;
          } else {
            std::vector<int> parts(nw.parts().begin(), nw.parts().end());
            if (parts[*row - 1] - 1 < nw.part(*row)) {
              throw ReconstructionError(
                  "rule C cannot remove a box from row "
                  + std::to_string(*row) + " at "
                  + corner_name(i - 1, j - 1));
            }
            --parts[*row - 1];
            sw = Partition(std::move(parts));
          }
        }
        if ((i == 1 || j == 1) && !sw.empty()) {
          throw ReconstructionError(corner_name(i - 1, j - 1)
                                    + " on the left or bottom edge would "
                                      "not be ∅");
        }
        // The backward rules invert the forward ones only on consistent
        // input, so confirm the square grows back to its NE label.
        bool consistent = false;
        try {
          consistent = grow_corner(nw, sw, se, marker) == ne;
        } catch (std::logic_error const&) {
        }
        if (!consistent) {
          throw ReconstructionError(corner_name(i, j)
                                    + " is inconsistent with the local "
                                      "growth rules");
        }
        g.set_label(i - 1, j - 1, std::move(sw));
        if (marker) {
          markers.push_back({i, j});
        }
      }
    }
    try {
      RookPlacement p(f, std::move(markers));
      return {std::move(p), std::move(g)};
    } catch (ValidationError const& e) {
      throw ReconstructionError(std::string("reconstructed markers are not "
                                            "a rook placement: ")
                                + e.what());
    }
  }

}  // namespace rookgrowth
