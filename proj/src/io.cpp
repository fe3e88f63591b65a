#include "rookgrowth/io.hpp"

#include <algorithm>
#include <sstream>

namespace rookgrowth {

  json to_json(Partition const& lambda) {
    return json(std::vector<int>(lambda.parts().begin(), lambda.parts().end()));
  }

  json to_json(RookPlacement const& p) {
    json markers = json::array();
    for (Square const s : p.markers()) {
      markers.push_back({s.col, s.row});
    }
    auto const widths = p.board().row_widths();
    return {{"board", std::vector<int>(widths.begin(), widths.end())},
            {"markers", std::move(markers)}};
  }

  json to_json(StandardTableau const& y) {
    json out = json::array();
    for (auto const& row : y.rows()) {
      out.push_back(row);
    }
    return out;
  }

  json to_json(BorderSequence const& seq) {
    json out = json::array();
    for (auto const& lambda : seq.partitions) {
      out.push_back(to_json(lambda));
    }
    return out;
  }

  json to_json(GrowthDiagram const& g) {
    FerrersBoard const& f      = g.board();
    json                labels = json::object();
    for (int j = 0; j <= f.rows(); ++j) {
      for (int i = 0; i <= f.cols(); ++i) {
        if (g.has_corner(i, j)) {
          labels[std::to_string(i) + "," + std::to_string(j)]
              = to_json(g.label(i, j));
        }
      }
    }
    auto const widths = f.row_widths();
    return {{"board", std::vector<int>(widths.begin(), widths.end())},
            {"k", g.k() ? json(*g.k()) : json(nullptr)},
            {"labels", std::move(labels)},
            {"border", to_json(border_sequence(g))}};
  }

  namespace {
    int int_field(json const& v, std::string const& what) {
      if (!v.is_number_integer()) {
        throw ValidationError(what + " must be an integer");
      }
      return v.get<int>();
    }
  }  // namespace

  RookPlacement placement_from_json(json const& j) {
    if (!j.is_object() || !j.contains("board") || !j.contains("markers")) {
      throw ValidationError(
          "placement must be an object with \"board\" and \"markers\"");
    }
    json const& board   = j.at("board");
    json const& markers = j.at("markers");
    if (!board.is_array() || !markers.is_array()) {
      throw ValidationError("\"board\" and \"markers\" must be arrays");
    }
    std::vector<int> widths;
    for (auto const& w : board) {
      widths.push_back(int_field(w, "board width"));
    }
    std::vector<Square> squares;
    for (auto const& m : markers) {
      if (!m.is_array() || m.size() != 2) {
        throw ValidationError("marker must be a [col,row] pair");
      }
      squares.push_back({int_field(m[0], "marker column"),
                         int_field(m[1], "marker row")});
    }
    return RookPlacement(FerrersBoard(std::move(widths)), std::move(squares));
  }

  RookPlacement parse_placement(std::string_view text) {
    json j;
    try {
      j = json::parse(text);
    } catch (json::parse_error const& e) {
      throw ValidationError(std::string("malformed JSON: ") + e.what());
    }
    return placement_from_json(j);
  }

  std::string serialize_placement(RookPlacement const& p) {
    return to_json(p).dump();
  }

  StandardTableau tableau_from_json(json const& j) {
    if (!j.is_array()) {
      throw ValidationError("tableau must be an array of rows");
    }
    std::vector<std::vector<int>> rows;
    for (auto const& row : j) {
      if (!row.is_array()) {
        throw ValidationError("tableau row must be an array");
      }
      rows.emplace_back();
      for (auto const& v : row) {
        rows.back().push_back(int_field(v, "tableau entry"));
      }
    }
    return StandardTableau(std::move(rows));
  }

  namespace {
    // Number of code points; labels are ASCII apart from "∅".
    std::size_t display_width(std::string const& s) {
      return static_cast<std::size_t>(std::count_if(
          s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
    }

    std::string pad(std::string s, std::size_t width) {
      s.append(width - std::min(width, display_width(s)), ' ');
      return s;
    }

    void trim_right(std::string& line) {
      while (!line.empty() && line.back() == ' ') {
        line.pop_back();
      }
    }
  }  // namespace

  std::string render(RookPlacement const& p, Style style) {
    if (style == Style::json) {
      return serialize_placement(p) + "\n";
    }
    std::ostringstream out;
    FerrersBoard const& f = p.board();
    for (int j = f.rows(); j >= 1; --j) {
      std::string line;
      for (int i = 1; i <= f.width(j); ++i) {
        line += p.row_in_column(i) == j ? "•" : ".";
        line += ' ';
      }
      trim_right(line);
      out << line << '\n';
    }
    return out.str();
  }

  std::string render(GrowthDiagram const& g,
                     Style                style,
                     RookPlacement const* markers) {
    if (style == Style::json) {
      return to_json(g).dump() + "\n";
    }
    FerrersBoard const& f     = g.board();
    std::size_t         width = 1;
    for (int j = 0; j <= f.rows(); ++j) {
      for (int i = 0; i <= f.cols(); ++i) {
        if (g.has_corner(i, j)) {
          width = std::max(width, display_width(g.label(i, j).to_string()));
        }
      }
    }
    std::ostringstream out;
    for (int j = f.rows(); j >= 0; --j) {
      int const   last = j == 0 ? f.cols() : f.width(j);
      std::string line;
      for (int i = 0; i <= last; ++i) {
        line += pad(g.label(i, j).to_string(), width);
        if (i < last) {
          line += "   ";
        }
      }
      trim_right(line);
      out << line << '\n';
      if (j >= 1 && markers != nullptr) {
        std::string squares;
        for (int i = 1; i <= f.width(j); ++i) {
          squares += std::string(width, ' ') + " "
                     + (markers->row_in_column(i) == j ? "•" : ".") + " ";
        }
        trim_right(squares);
        out << squares << '\n';
      }
    }
    return out.str();
  }

  std::string render(StandardTableau const& y, Style style) {
    if (style == Style::json) {
      return to_json(y).dump() + "\n";
    }
    std::ostringstream out;
    for (auto const& row : y.rows()) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        out << (c > 0 ? " " : "") << row[c];
      }
      out << '\n';
    }
    return out.str();
  }

}  // namespace rookgrowth
