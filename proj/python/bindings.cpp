#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rookgrowth/bwx.hpp"
#include "rookgrowth/growth.hpp"
#include "rookgrowth/io.hpp"
#include "rookgrowth/knuth.hpp"
#include "rookgrowth/oracle.hpp"
#include "rookgrowth/pivots.hpp"
#include "rookgrowth/tableaux.hpp"

namespace py = pybind11;
using namespace rookgrowth;

namespace {
  using Rows = std::vector<std::vector<int>>;

  std::vector<int> to_vector(std::span<int const> values) {
    return {values.begin(), values.end()};
  }

  std::vector<std::pair<int, int>> marker_pairs(RookPlacement const& p) {
    std::vector<std::pair<int, int>> out;
    for (Square const s : p.markers()) {
      out.emplace_back(s.col, s.row);
    }
    return out;
  }

  RookPlacement placement_from_lists(std::vector<int> board,
                                     std::vector<std::pair<int, int>> const& markers) {
    std::vector<Square> squares;
    for (auto const& [col, row] : markers) {
      squares.push_back({col, row});
    }
    return RookPlacement(FerrersBoard(std::move(board)), std::move(squares));
  }

  Rows tableau_rows(StandardTableau const& t) {
    return {t.rows().begin(), t.rows().end()};
  }

  Rows border(BorderSequence const& seq) {
    Rows out;
    for (auto const& p : seq.partitions) {
      out.push_back(to_vector(p.parts()));
    }
    return out;
  }

  GrowthDiagram diagram(RookPlacement const& p, std::optional<int> k) {
    return k ? run_gda_k(p, *k) : run_gda(p);
  }

  Side parse_side(std::string const& side) {
    if (side == "left") {
      return Side::left;
    }
    if (side == "right") {
      return Side::right;
    }
    throw ValidationError("side must be \"left\" or \"right\", got \"" + side + "\"");
  }

  GkKind parse_kind(std::string const& kind) {
    if (kind == "ds-left") {
      return GkKind::ds_left;
    }
    if (kind == "DL-right") {
      return GkKind::DL_right;
    }
    if (kind == "is-right") {
      return GkKind::is_right;
    }
    if (kind == "IL-left") {
      return GkKind::IL_left;
    }
    throw ValidationError("unknown transformation kind \"" + kind + "\"");
  }

  py::object to_python(json const& j) {
    return py::module_::import("json").attr("loads")(j.dump());
  }
}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Rook placements on Ferrers boards, growth diagrams and pattern transformations";

  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

  py::class_<RookPlacement>(m, "Placement")
      .def(py::init(&placement_from_lists), py::arg("board"), py::arg("markers"),
           "Placement on the board with the given row widths (bottom row first); "
           "markers are (column, row) pairs, 1-indexed")
      .def_static(
          "from_permutation",
          [](std::vector<int> const& values) { return RookPlacement::from_permutation(values); },
          py::arg("values"))
      .def_static(
          "from_json", [](std::string const& text) { return parse_placement(text); },
          py::arg("text"))
      .def("to_json", &serialize_placement)
      .def_property_readonly("board",
                             [](RookPlacement const& p) { return to_vector(p.board().row_widths()); })
      .def_property_readonly("markers", &marker_pairs)
      .def_property_readonly("is_full", &RookPlacement::is_full)
      .def("one_line", &RookPlacement::rows_in_column_order)
      .def("render", [](RookPlacement const& p) { return render(p, Style::ascii); })
      .def("__len__", &RookPlacement::size)
      .def("__eq__", [](RookPlacement const& a, RookPlacement const& b) { return a == b; })
      .def("__repr__",
           [](RookPlacement const& p) { return "Placement(" + serialize_placement(p) + ")"; });

  m.def(
      "rs",
      [](RookPlacement const& p) {
        auto const rs = rs_pair(p);
        return std::make_pair(tableau_rows(rs.insertion), tableau_rows(rs.recording));
      },
      py::arg("placement"), "(insertion, recording) tableaux as lists of rows");

  m.def(
      "border",
      [](RookPlacement const& p, std::optional<int> k) { return border(border_sequence(diagram(p, k))); },
      py::arg("placement"), py::arg("k") = py::none(),
      "Partitions along the right/up border, from (cols, 0) to (0, rows)");

  m.def(
      "label",
      [](RookPlacement const& p, int i, int j, std::optional<int> k) {
        return to_vector(diagram(p, k).label(i, j).parts());
      },
      py::arg("placement"), py::arg("col"), py::arg("row"), py::arg("k") = py::none());

  m.def(
      "invert",
      [](Rows const& partitions, std::vector<int> board) {
        BorderSequence seq;
        for (auto const& parts : partitions) {
          seq.partitions.emplace_back(parts);
        }
        return invert_gda(seq, FerrersBoard(std::move(board))).placement;
      },
      py::arg("border"), py::arg("board"));

  m.def("phi", &phi_step, py::arg("placement"), py::arg("k"));
  m.def(
      "phi_star", [](RookPlacement const& p, int k) { return phi_star(p, k, false).placement; },
      py::arg("placement"), py::arg("k"));

  m.def(
      "pivots",
      [](RookPlacement const& p, std::string const& side) { return pivots(p, parse_side(side)); },
      py::arg("placement"), py::arg("side") = "left");

  m.def(
      "gk_transform",
      [](RookPlacement const& p, std::string const& kind, int a, int b) {
        return gk_transform(p, parse_kind(kind), a, b);
      },
      py::arg("placement"), py::arg("kind"), py::arg("a"), py::arg("b"),
      "kind is one of ds-left, DL-right, is-right, IL-left");

  m.def(
      "knuth_neighbors",
      [](std::vector<int> const& values) {
        auto const set = knuth_neighbors(std::span<int const>(values));
        return Rows(set.begin(), set.end());
      },
      py::arg("values"));

  m.def(
      "contains",
      [](RookPlacement const& p, std::vector<int> const& pattern) {
        return contains_pattern(p, pattern);
      },
      py::arg("placement"), py::arg("pattern"));

  m.def(
      "count_avoiders",
      [](std::vector<int> board, std::vector<int> const& pattern, bool full_only) {
        return count_avoiders(FerrersBoard(std::move(board)), pattern, full_only);
      },
      py::arg("board"), py::arg("pattern"), py::arg("full_only") = true);

  m.def("suite_names", &suite_names);

  m.def(
      "verify",
      [](std::string const& suite, int max_cols, int max_rows, std::vector<int> k_values,
         int max_n, bool full_only, int threads) {
        SuiteParams params;
        params.max_cols = max_cols;
        params.max_rows = max_rows;
        params.k_values = std::move(k_values);
        params.max_n = max_n;
        params.full_only = full_only;
        params.threads = threads;
        SweepReport report;
        {
          py::gil_scoped_release release;
          report = run_suite(suite, params);
        }
        return to_python(to_json(report));
      },
      py::arg("suite"), py::arg("max_cols") = 4, py::arg("max_rows") = 4,
      py::arg("k_values") = std::vector<int>{2, 3, 4}, py::arg("max_n") = 6,
      py::arg("full_only") = false, py::arg("threads") = 1,
      "Run a verification suite and return its report as a dict");
}
