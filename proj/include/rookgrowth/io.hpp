#ifndef ROOKGROWTH_IO_HPP_
#define ROOKGROWTH_IO_HPP_

#include <string>
#include <string_view>

#include "json.hpp"

#include "core.hpp"
#include "growth.hpp"
#include "tableaux.hpp"

// Wire formats.
//
//   placement:  {"board": [widths bottom to top], "markers": [[col,row],...]}
//               markers sorted by column
//   tableau:    [[row 1], [row 2], ...] top to bottom
//   diagram:    {"board": [...], "k": K|null,
//                "labels": {"i,j": [parts], ...}, "border": [[parts], ...]}

namespace rookgrowth {

  using json = nlohmann::json;

  json to_json(Partition const& lambda);
  json to_json(RookPlacement const& p);
  json to_json(StandardTableau const& y);
  json to_json(GrowthDiagram const& g);
  json to_json(BorderSequence const& seq);

  //! Throws ValidationError naming the violated invariant.
  RookPlacement placement_from_json(json const& j);
  //! As placement_from_json, also rejecting malformed JSON text.
  RookPlacement parse_placement(std::string_view text);
  std::string   serialize_placement(RookPlacement const& p);

  StandardTableau tableau_from_json(json const& j);

  enum class Style { ascii, json };

  //! Rows top to bottom, `•` for a marker and `.` for an empty square.
  std::string render(RookPlacement const& p, Style style);
  //! Corner labels as juxtaposed digits laid out like the board; when
  //! `markers` is given its squares are drawn between the corner rows.
  std::string render(GrowthDiagram const& g,
                     Style                style,
                     RookPlacement const* markers = nullptr);
  std::string render(StandardTableau const& y, Style style);

}  // namespace rookgrowth

#endif  // ROOKGROWTH_IO_HPP_
