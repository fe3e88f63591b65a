#include "rookgrowth/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "rookgrowth/bwx.hpp"
#include "rookgrowth/growth.hpp"
#include "rookgrowth/io.hpp"
#include "rookgrowth/knuth.hpp"
#include "rookgrowth/oracle.hpp"
#include "rookgrowth/pivots.hpp"
#include "rookgrowth/tableaux.hpp"

namespace rookgrowth {

  std::vector<int> parse_one_line(std::string const& text) {
    std::vector<int> out;
    if (text.find(',') != std::string::npos) {
      std::stringstream ss(text);
      std::string       item;
      while (std::getline(ss, item, ',')) {
        try {
          std::size_t used = 0;
          out.push_back(std::stoi(item, &used));
          if (used != item.size()) {
            throw std::invalid_argument(item);
          }
        } catch (std::exception const&) {
          throw ValidationError("not an integer: \"" + item + "\"");
        }
      }
      return out;
    }
    for (char const c : text) {
      if (c < '0' || c > '9') {
        throw ValidationError("not a digit: '" + std::string(1, c) + "'");
      }
      out.push_back(c - '0');
    }
    return out;
  }

  namespace {
    struct Options {
      bool        json = false;
      std::string input;

      int         k = 0;
      int         steps = 1;
      bool        star = false;
      bool        no_trace = false;

      std::string side = "left";
      bool        coords = false;

      std::string kind;
      int         a = 0;
      int         b = 0;
      bool        neighbors = false;
      std::string perm;

      std::string pattern;
      std::string board;
      int         n = 0;
      bool        full_only = false;

      std::string suite;
      SuiteParams params;
      bool        all_violations = false;
      std::string recheck;

      std::string what = "placement";
    };

    std::string read_input(std::string const& path, std::istream& in) {
      std::ostringstream buffer;
      if (path.empty() || path == "-") {
        buffer << in.rdbuf();
      } else {
        std::ifstream file(path);
        if (!file) {
          throw ValidationError("cannot open " + path);
        }
        buffer << file.rdbuf();
      }
      return buffer.str();
    }

    std::string one_line_string(std::vector<int> const& values) {
      bool const        wide = std::any_of(values.begin(), values.end(),
                                           [](int v) { return v > 9; });
      std::string out;
      for (std::size_t i = 0; i < values.size(); ++i) {
        out += (wide && i > 0 ? "," : "") + std::to_string(values[i]);
      }
      return out;
    }

    json squares_json(std::span<Square const> squares) {
      json out = json::array();
      for (Square const s : squares) {
        out.push_back({s.col, s.row});
      }
      return out;
    }

    std::string squares_string(std::span<Square const> squares) {
      std::string out;
      for (Square const s : squares) {
        out += (out.empty() ? "" : " ") + to_string(s);
      }
      return out;
    }

    void write_placement(RookPlacement const& p, Options const& o, std::ostream& out) {
      if (o.json) {
        out << serialize_placement(p) << '\n';
        return;
      }
      out << render(p, Style::ascii);
      if (p.is_full()) {
        out << "one-line: " << one_line_string(p.rows_in_column_order()) << '\n';
      }
    }

    int cmd_rs(Options const& o, std::istream& in, std::ostream& out) {
      auto const p  = parse_placement(read_input(o.input, in));
      auto const rs = rs_pair(p);
      if (o.json) {
        out << json{{"insertion", to_json(rs.insertion)},
                    {"recording", to_json(rs.recording)}}
                   .dump()
            << '\n';
      } else {
        out << "insertion:\n" << render(rs.insertion, Style::ascii)
            << "recording:\n" << render(rs.recording, Style::ascii);
      }
      return 0;
    }

    int cmd_gda(Options const& o, std::istream& in, std::ostream& out) {
      auto const p = parse_placement(read_input(o.input, in));
      auto const g = o.k == 0 ? run_gda(p) : run_gda_k(p, o.k);
      out << render(g, o.json ? Style::json : Style::ascii, &p);
      return 0;
    }

    int cmd_phi(Options const& o, std::istream& in, std::ostream& out) {
      auto const p = parse_placement(read_input(o.input, in));
      PhiResult  result;
      if (o.star) {
        result = phi_star(p, o.k, !o.no_trace);
      } else {
        result.placement = p;
        for (int s = 0; s < o.steps; ++s) {
          auto const occ = smallest_decreasing_occurrence(result.placement, o.k);
          if (!occ) {
            break;
          }
          auto const bounding = *phi_bounding_rectangle(result.placement, o.k);
          result.placement = phi_step(result.placement, o.k);
          if (!o.no_trace) {
            result.trace.steps.push_back({*occ, result.placement, bounding});
          }
        }
      }
      if (o.json) {
        json trace = json::array();
        for (auto const& step : result.trace.steps) {
          trace.push_back({{"occurrence", squares_json(step.occurrence.squares)},
                           {"bounding", {step.bounding.col, step.bounding.row}},
                           {"after", to_json(step.after)}});
        }
        json j{{"placement", to_json(result.placement)}};
        if (result.placement.is_full()) {
          j["one_line"] = result.placement.rows_in_column_order();
        }
        if (!o.no_trace) {
          j["trace"] = std::move(trace);
        }
        out << j.dump() << '\n';
        return 0;
      }
      for (auto const& step : result.trace.steps) {
        out << "step on " << squares_string(step.occurrence.squares) << " in R"
            << to_string(step.bounding) << '\n';
      }
      write_placement(result.placement, o, out);
      return 0;
    }

    int cmd_pivots(Options const& o, std::istream& in, std::ostream& out) {
      auto const p    = parse_placement(read_input(o.input, in));
      auto const side = o.side == "left" ? Side::left : Side::right;
      auto const piv  = pivots(p, side);
      if (o.json) {
        json j{{"pivots", squares_json(piv.markers())}};
        if (o.coords) {
          json table = json::array();
          auto const coords = pivot_table(p);
          for (std::size_t i = 0; i < coords.size(); ++i) {
            Square const x = p.markers()[i];
            table.push_back({{"marker", {x.col, x.row}},
                             {"rho", coords[i].rho ? json(*coords[i].rho)
                                                   : json(nullptr)},
                             {"kappa", coords[i].kappa}});
          }
          j["coords"] = std::move(table);
        }
        out << j.dump() << '\n';
        return 0;
      }
      out << "pivots: " << squares_string(piv.markers()) << '\n';
      if (o.coords) {
        auto const coords = pivot_table(p);
        for (std::size_t i = 0; i < coords.size(); ++i) {
          out << to_string(p.markers()[i]) << " rho="
              << (coords[i].rho ? std::to_string(*coords[i].rho) : "∞")
              << " kappa=" << coords[i].kappa << '\n';
        }
      }
      return 0;
    }

    GkKind parse_kind(std::string const& name) {
      if (name == "ds-left") {
        return GkKind::ds_left;
      }
      if (name == "DL-right") {
        return GkKind::DL_right;
      }
      if (name == "is-right") {
        return GkKind::is_right;
      }
      return GkKind::IL_left;
    }

    int cmd_knuth(Options const& o, std::istream& in, std::ostream& out) {
      if (o.neighbors) {
        std::vector<int> sigma;
        if (!o.perm.empty()) {
          sigma = parse_one_line(o.perm);
        } else {
          auto const p = parse_placement(read_input(o.input, in));
          if (!p.is_full()) {
            throw DomainError("Knuth moves need a full placement");
          }
          sigma = p.rows_in_column_order();
        }
        auto const result = knuth_neighbors(PartialPermutation::from_one_line(sigma));
        if (o.json) {
          out << json(result).dump() << '\n';
        } else {
          for (auto const& rho : result) {
            out << one_line_string(rho) << '\n';
          }
        }
        return 0;
      }
      if (o.kind.empty() || o.a == 0 || o.b == 0) {
        throw ValidationError("knuth needs --kind, --a and --b, or --neighbors");
      }
      auto const p = parse_placement(read_input(o.input, in));
      write_placement(gk_transform(p, parse_kind(o.kind), o.a, o.b), o, out);
      return 0;
    }

    FerrersBoard parse_board(std::string const& text) {
      std::vector<int>  widths;
      std::stringstream ss(text);
      std::string       item;
      while (std::getline(ss, item, ',')) {
        try {
          widths.push_back(std::stoi(item));
        } catch (std::exception const&) {
          throw ValidationError("board width is not an integer: \"" + item + "\"");
        }
      }
      return FerrersBoard(std::move(widths));
    }

    int cmd_count(Options const& o, std::ostream& out) {
      auto const pattern = parse_one_line(o.pattern);
      check_pattern(pattern);
      FerrersBoard board;
      if (!o.board.empty()) {
        board = parse_board(o.board);
      } else {
        board = FerrersBoard::rectangle(o.n, o.n);
      }
      auto const count = count_avoiders(board, pattern, o.full_only);
      if (o.json) {
        out << json{{"board", std::vector<int>(board.row_widths().begin(),
                                               board.row_widths().end())},
                    {"pattern", pattern},
                    {"full_only", o.full_only},
                    {"count", count}}
                   .dump()
            << '\n';
      } else {
        out << count << '\n';
      }
      return 0;
    }

    int cmd_verify(Options const& o, std::ostream& out) {
      SuiteParams params = o.params;
      if (o.all_violations) {
        params.violation_cap = 0;
      }
      if (!o.recheck.empty()) {
        json input;
        try {
          input = json::parse(o.recheck);
        } catch (json::parse_error const& e) {
          throw ValidationError(std::string("malformed JSON: ") + e.what());
        }
        auto const failures = recheck_case(o.suite, params, input);
        if (o.json) {
          out << json{{"suite", o.suite}, {"violations", failures}}.dump() << '\n';
        } else {
          for (auto const& f : failures) {
            out << f << '\n';
          }
          out << (failures.empty() ? "case passes" : "case fails") << '\n';
        }
        return failures.empty() ? 0 : 1;
      }
      auto const report = run_suite(o.suite, params);
      if (o.json) {
        out << to_json(report).dump() << '\n';
      } else {
        out << "suite " << report.suite << ": " << report.cases << " cases, "
            << report.violation_count << " violations, " << std::fixed
            << std::setprecision(3) << report.seconds << " s\n";
        for (auto const& [key, value] : report.counters) {
          out << "  " << key << ": " << value << '\n';
        }
        for (auto const& v : report.violations) {
          out << "  case " << v.case_index << ": " << v.detail << "\n    "
              << v.input.dump() << '\n';
        }
      }
      return report.passed() ? 0 : 1;
    }

    int cmd_render(Options const& o, std::istream& in, std::ostream& out) {
      Style const style = o.json ? Style::json : Style::ascii;
      auto const  text  = read_input(o.input, in);
      if (o.what == "tableau") {
        json j;
        try {
          j = json::parse(text);
        } catch (json::parse_error const& e) {
          throw ValidationError(std::string("malformed JSON: ") + e.what());
        }
        out << render(tableau_from_json(j), style);
        return 0;
      }
      auto const p = parse_placement(text);
      if (o.what == "gda") {
        auto const g = o.k == 0 ? run_gda(p) : run_gda_k(p, o.k);
        out << render(g, style, &p);
      } else {
        out << render(p, style);
      }
      return 0;
    }
  }  // namespace

  int run_cli(int argc, char const* const* argv,
              std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Rook placements, growth diagrams and the BWX transformation",
                 "rookgrowth"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_flag("--json", o.json, "Machine-readable output");

    auto add_input = [&o](CLI::App* cmd) {
      cmd->add_option("input", o.input, "Placement JSON file (default: stdin)");
    };

    auto* rs = app.add_subcommand("rs", "Robinson-Schensted tableaux");
    add_input(rs);

    auto* gda = app.add_subcommand("gda", "Growth diagram (GDA or GDA_k)");
    add_input(gda);
    gda->add_option("--k", o.k, "Cap for GDA_k")->check(CLI::Range(2, 1 << 20));

    auto* phi = app.add_subcommand("phi", "Apply phi or phi*");
    add_input(phi);
    phi->add_option("--k", o.k, "Length of the decreasing pattern")
        ->required()
        ->check(CLI::Range(2, 1 << 20));
    auto* steps = phi->add_option("--steps", o.steps, "Number of phi steps")
                      ->check(CLI::NonNegativeNumber);
    phi->add_flag("--star", o.star, "Iterate to a fixed point")->excludes(steps);
    phi->add_flag("--no-trace", o.no_trace, "Omit the step trace");

    auto* piv = app.add_subcommand("pivots", "Left or right pivots");
    add_input(piv);
    piv->add_option("--side", o.side, "left or right")
        ->check(CLI::IsMember({"left", "right"}));
    piv->add_flag("--coords", o.coords, "Print (rho, kappa) for every marker");

    auto* knuth = app.add_subcommand("knuth", "Generalized Knuth transformations");
    add_input(knuth);
    knuth->add_option("--kind", o.kind, "ds-left, DL-right, is-right or IL-left")
        ->check(CLI::IsMember({"ds-left", "DL-right", "is-right", "IL-left"}));
    knuth->add_option("--a", o.a, "Left column of the band")->check(CLI::PositiveNumber);
    knuth->add_option("--b", o.b, "Right column of the band")->check(CLI::PositiveNumber);
    knuth->add_flag("--neighbors", o.neighbors, "List standard Knuth neighbours");
    knuth->add_option("--perm", o.perm, "Permutation in one-line notation");

    auto* count = app.add_subcommand("count", "Count pattern avoiders");
    count->add_option("--pattern", o.pattern, "Pattern, e.g. 321")->required();
    auto* board = count->add_option("--board", o.board, "Row widths, e.g. 3,3,2");
    count->add_option("--n", o.n, "Use the n x n board")
        ->check(CLI::Range(0, 10))
        ->excludes(board);
    count->add_flag("--full-only", o.full_only, "Count full placements only");

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("--suite", o.suite, "Suite name")
        ->required()
        ->check(CLI::IsMember(suite_names()));
    verify->add_option("--max-cols", o.params.max_cols, "Box width")
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--max-rows", o.params.max_rows, "Box height")
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--k", o.params.k_values, "Values of k")
        ->delimiter(',')
        ->check(CLI::Range(2, 1 << 20));
    verify->add_flag("--full-only", o.params.full_only, "Full placements only");
    verify->add_option("--max-n", o.params.max_n, "Largest permutation length")
        ->check(CLI::Range(0, 10));
    std::vector<std::string> patterns;
    auto* pattern_opt = verify->add_option("--patterns", patterns,
                                           "Patterns for wilf-counts")
                            ->delimiter(',');
    verify->add_option("--shards", o.params.shards, "Number of shards")
        ->check(CLI::PositiveNumber);
    verify->add_option("--shard", o.params.shard, "Shard index")
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--threads", o.params.threads, "Worker threads")
        ->check(CLI::PositiveNumber);
    verify->add_flag("--all-violations", o.all_violations,
                     "Report every violation");
    verify->add_option("--recheck", o.recheck,
                       "Re-evaluate one serialized case");

    auto* rnd = app.add_subcommand("render", "Render a placement, diagram or tableau");
    add_input(rnd);
    rnd->add_option("--what", o.what, "placement, gda or tableau")
        ->check(CLI::IsMember({"placement", "gda", "tableau"}));
    rnd->add_option("--k", o.k, "Cap for GDA_k")->check(CLI::Range(2, 1 << 20));

    try {
      app.parse(argc, argv);
    } catch (CLI::CallForHelp const& e) {
      app.exit(e, out, err);
      return 0;
    } catch (CLI::CallForAllHelp const& e) {
      app.exit(e, out, err);
      return 0;
    } catch (CLI::ParseError const& e) {
      err << "error: " << e.what() << '\n';
      return 2;
    }

    try {
      if (pattern_opt->count() > 0) {
        o.params.patterns.clear();
        for (auto const& text : patterns) {
          o.params.patterns.push_back(parse_one_line(text));
        }
      }
      if (rs->parsed()) {
        return cmd_rs(o, in, out);
      }
      if (gda->parsed()) {
        return cmd_gda(o, in, out);
      }
      if (phi->parsed()) {
        return cmd_phi(o, in, out);
      }
      if (piv->parsed()) {
        return cmd_pivots(o, in, out);
      }
      if (knuth->parsed()) {
        return cmd_knuth(o, in, out);
      }
      if (count->parsed()) {
        return cmd_count(o, out);
      }
      if (verify->parsed()) {
        return cmd_verify(o, out);
      }
      return cmd_render(o, in, out);
    } catch (ValidationError const& e) {
      err << "error: " << e.what() << '\n';
      return 2;
    } catch (DomainError const& e) {
      err << "error: " << e.what() << '\n';
      return 2;
    } catch (std::exception const& e) {
      err << "internal error: " << e.what() << '\n';
      return 1;
    }
  }

  int run_cli(std::vector<std::string> const& args,
              std::istream& in, std::ostream& out, std::ostream& err) {
    std::vector<char const*> argv{"rookgrowth"};
    for (auto const& a : args) {
      argv.push_back(a.c_str());
    }
    return run_cli(static_cast<int>(argv.size()), argv.data(), in, out, err);
  }

}  // namespace rookgrowth
