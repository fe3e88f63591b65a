#include "doctest.h"

#include <sstream>

#include "fixtures.hpp"
#include "rookgrowth/cli.hpp"
#include "rookgrowth/growth.hpp"
#include "rookgrowth/io.hpp"
#include "rookgrowth/oracle.hpp"

using namespace rookgrowth;

namespace {
  char const* const kWorkedExample =
      R"({"board":[8,8,8,8,8,6,5,3],"markers":[[1,4],[2,5],[3,8],[4,6],[5,7],[6,3],[7,1],[8,2]]})";

  struct Run {
    int         code;
    std::string out;
    std::string err;
  };

  Run run(std::vector<std::string> const& args, std::string const& input = "") {
    std::istringstream in(input);
    std::ostringstream out;
    std::ostringstream err;
    int const code = run_cli(args, in, out, err);
    return {code, out.str(), err.str()};
  }

  std::vector<std::string> lines(std::string const& text) {
    std::vector<std::string> out;
    std::istringstream ss(text);
    for (std::string line; std::getline(ss, line);) {
      out.push_back(line);
    }
    return out;
  }

  std::vector<std::string> tokens(std::string const& line) {
    std::vector<std::string> out;
    std::istringstream ss(line);
    for (std::string t; ss >> t;) {
      out.push_back(t);
    }
    return out;
  }
}  // namespace

TEST_CASE("parsing placements") {
  CHECK(parse_placement(kWorkedExample) == fixtures::worked_example());
  CHECK(parse_placement(R"({"board":[],"markers":[]})").empty());
  try {
    parse_placement(R"({"board":[2,1],"markers":[[2,2]]})");
    FAIL("expected a validation error");
  } catch (ValidationError const& e) {
    CHECK(std::string(e.what()).find("marker off board") != std::string::npos);
    CHECK(std::string(e.what()).find("(2,2)") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_placement("{"), ValidationError);
  CHECK_THROWS_AS(parse_placement(R"({"board":[2]})"), ValidationError);
  CHECK_THROWS_AS(parse_placement(R"({"board":[2],"markers":[[1]]})"), ValidationError);
  CHECK_THROWS_AS(parse_placement(R"({"board":[2],"markers":[[1,"a"]]})"), ValidationError);
}

TEST_CASE("serialization roundtrip is canonical") {
  auto const p = parse_placement(R"({"board":[2,2],"markers":[[2,1],[1,2]]})");
  CHECK(serialize_placement(p) == R"({"board":[2,2],"markers":[[1,2],[2,1]]})");
  for (auto const& f : enumerate_boards(3, 3)) {
    PlacementEnumerator e(f, false);
    while (auto q = e.next()) {
      auto const text = serialize_placement(*q);
      CHECK(parse_placement(text) == *q);
      CHECK(serialize_placement(parse_placement(text)) == text);
    }
  }
}

TEST_CASE("rendering") {
  auto const p = fixtures::worked_example();
  auto const g = run_gda_k(p, 3);
  auto const plain = lines(render(g, Style::ascii));
  REQUIRE(plain.size() == 9);
  CHECK(tokens(plain[8 - 5]).at(8) == "32");
  CHECK(tokens(plain[8 - 4]).at(8) == "22");
  // With markers, corner lines alternate with square lines, top row first.
  auto const rows = lines(render(g, Style::ascii, &p));
  REQUIRE(rows.size() == 17);
  auto const corner_row_5 = tokens(rows[2 * (8 - 5)]);
  REQUIRE(corner_row_5.size() == 9);
  CHECK(corner_row_5[8] == "32");
  CHECK(tokens(rows[1]) == std::vector<std::string>{".", ".", "•"});
  CHECK(lines(render(p, Style::ascii)).front() == ". . •");

  CHECK(render(RookPlacement(FerrersBoard::rectangle(2, 2), {}), Style::ascii) == ". .\n. .\n");
  CHECK(render(RookPlacement::from_permutation(std::vector<int>{2, 1}), Style::ascii)
        == "• .\n. •\n");
  CHECK(render(RookPlacement{}, Style::ascii).empty());

  StandardTableau const y({{1, 4, 8}, {2, 5}, {7}, {9}});
  CHECK(render(y, Style::json) == "[[1,4,8],[2,5],[7],[9]]\n");
  CHECK(tableau_from_json(json::parse("[[1,4,8],[2,5],[7],[9]]")) == y);
  CHECK(render(y, Style::ascii) == "1 4 8\n2 5\n7\n9\n");
}

TEST_CASE("wide labels are comma separated") {
  std::vector<int> id(10);
  std::iota(id.begin(), id.end(), 1);
  auto const g = run_gda(RookPlacement::from_permutation(id));
  auto const rows = lines(render(g, Style::ascii));
  CHECK(tokens(rows.front()).back() == "10");
  CHECK(to_json(g)["labels"]["10,10"] == json::array({10}));
}

TEST_CASE("phi verb") {
  auto const star = run({"phi", "--k", "3", "--star"}, kWorkedExample);
  CHECK(star.code == 0);
  CHECK(star.out.find("one-line: 34867125") != std::string::npos);
  auto const step = run({"phi", "--k", "3", "--json"}, kWorkedExample);
  CHECK(step.code == 0);
  CHECK(json::parse(step.out)["one_line"] == json::array({3, 5, 8, 6, 7, 1, 4, 2}));
  CHECK(run({"phi", "--k", "3", "--star", "--steps", "2"}, kWorkedExample).code == 2);
}

TEST_CASE("gda verb") {
  auto const ok = run({"gda", "--k", "3", "--json"}, kWorkedExample);
  REQUIRE(ok.code == 0);
  auto const j = json::parse(ok.out);
  CHECK(j["labels"]["8,5"] == json::array({3, 2}));
  CHECK(j["border"].size() == 17);
  auto const bad = run({"gda", "--k", "1"}, kWorkedExample);
  CHECK(bad.code == 2);
  CHECK_FALSE(bad.err.empty());
}

TEST_CASE("rs, pivots, knuth and count verbs") {
  auto const rs = run({"--json", "rs"}, kWorkedExample);
  REQUIRE(rs.code == 0);
  CHECK(json::parse(rs.out)["insertion"].size() == 4);

  std::string const example = serialize_placement(fixtures::pivot_example());
  auto const piv = run({"pivots", "--side", "left", "--coords"}, example);
  CHECK(piv.code == 0);
  CHECK(piv.out.find("pivots: (2,5) (3,2) (4,7) (6,9)") != std::string::npos);
  CHECK(piv.out.find("(9,2) rho=∞ kappa=3") != std::string::npos);
  CHECK(run({"pivots"}, kWorkedExample).code == 2);

  auto const nb = run({"knuth", "--neighbors", "--perm", "213"});
  CHECK(nb.code == 0);
  CHECK(nb.out == "231\n");
  std::string const shifted = serialize_placement(fixtures::knuth_example());
  auto const gk = run({"knuth", "--kind", "ds-left", "--a", "6", "--b", "9"}, shifted);
  CHECK(gk.code == 0);
  CHECK(run({"knuth", "--kind", "ds-left", "--a", "7", "--b", "9"}, shifted).code == 2);
  CHECK(run({"knuth", "--kind", "sideways", "--a", "6", "--b", "9"}, shifted).code == 2);

  auto const count = run({"count", "--pattern", "321", "--n", "4", "--full-only"});
  CHECK(count.code == 0);
  CHECK(count.out == "14\n");
  CHECK(run({"count", "--pattern", "13"}).code == 2);
}

TEST_CASE("verify and render verbs") {
  auto const ok = run({"verify", "--suite", "gda-roundtrip", "--max-cols", "3", "--max-rows", "3"});
  CHECK(ok.code == 0);
  auto const j = run({"verify", "--suite", "schensted", "--max-n", "4", "--max-cols", "2",
                      "--max-rows", "2", "--json"});
  REQUIRE(j.code == 0);
  CHECK(json::parse(j.out)["violations"].empty());
  CHECK(run({"verify", "--suite", "nope"}).code == 2);
  CHECK(run({"verify", "--suite", "gke", "--shards", "2", "--shard", "2"}).code == 2);

  auto const rendered = run({"render", "--what", "tableau", "--json"}, "[[1,4,8],[2,5],[7],[9]]");
  CHECK(rendered.out == "[[1,4,8],[2,5],[7],[9]]\n");
  CHECK(run({"render"}, R"({"board":[],"markers":[]})").out.empty());
}

TEST_CASE("malformed input never escapes as an exception") {
  for (std::string const input : {"", "{", "[]", R"({"board":[1,2],"markers":[]})",
                                  R"({"board":[2],"markers":[[3,1]]})"}) {
    for (std::string const verb : {"rs", "gda", "pivots", "render"}) {
      CHECK(run({verb}, input).code == 2);
    }
  }
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("one-line parsing") {
  CHECK(parse_one_line("53476281") == std::vector<int>{5, 3, 4, 7, 6, 2, 8, 1});
  CHECK(parse_one_line("10,2,1") == std::vector<int>{10, 2, 1});
  CHECK_THROWS_AS(parse_one_line("12a"), ValidationError);
  CHECK_THROWS_AS(parse_one_line("1,x"), ValidationError);
}
