#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "qsem/cli.hpp"

using namespace qsem;
using namespace qsem::cli;

namespace {

/// Writes the coin scenario to a temp file once and hands out its path.
const std::string& coin_path() {
  static const std::string path = [] {
    const auto p =
        std::filesystem::temp_directory_path() / "qsem_test_coin.json";
    std::ofstream out(p);
    out << R"({
      "dimension": 2,
      "atoms": [
        {"name": "H", "vector": [[1.0, 0.0], [0.0, 0.0]]},
        {"name": "T", "vector": [[0.0, 0.0], [1.0, 0.0]]},
        {"name": "R", "vector": [[0.7071067811865476, 0.0],
                                 [0.7071067811865476, 0.0]]}
      ],
      "states": [
        {"name": "heads_up", "amplitudes": [[1.0, 0.0], [0.0, 0.0]]},
        {"name": "tails_up", "amplitudes": [[0.0, 0.0], [1.0, 0.0]]},
        {"name": "superposed", "amplitudes": [[0.7071067811865476, 0.0],
                                              [0.7071067811865476, 0.0]]}
      ]
    })";
    return p.string();
  }();
  return path;
}

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::vector<const char*> argv;
  argv.push_back("qsem");
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code =
      run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("assignment parsing") {
  const Assignment a = parse_assignment("H=1, T=0,R=0.5,S=u");
  CHECK(a.at("H") == TruthValue::bit(1));
  CHECK(a.at("T") == TruthValue::bit(0));
  CHECK(a.at("R") == TruthValue::scalar(0.5));
  CHECK(a.at("S") == TruthValue::undefined());
  CHECK(parse_assignment("").empty());
  CHECK_THROWS_AS(parse_assignment("H=2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_assignment("H"), std::invalid_argument);
  CHECK_THROWS_AS(parse_assignment("H=1,H=0"), std::invalid_argument);
}

TEST_CASE("grid parsing") {
  CHECK(parse_grid("0:1:0.5") == std::vector<double>{0.0, 0.5, 1.0});
  CHECK(parse_grid("0:0:1") == std::vector<double>{0.0});
  CHECK(parse_grid("0:0.3:0.1").size() == 4);  // inclusive endpoint
  CHECK_THROWS_AS(parse_grid("0:1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_grid("0:1:0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_grid("1:0:0.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_grid("a:b:c"), std::invalid_argument);
}

TEST_CASE("truth values round-trip through JSON") {
  const std::vector<TruthValue> values = {
      TruthValue::bit(0), TruthValue::bit(1), TruthValue::scalar(0.5),
      TruthValue::scalar(0.123456789), TruthValue::undefined(),
      TruthValue::null()};
  for (const TruthValue& v : values) {
    const nlohmann::json j = truth_value_to_json(v);
    const nlohmann::json reparsed = nlohmann::json::parse(j.dump());
    CHECK(truth_value_from_json(reparsed) == v);
  }
  CHECK(truth_value_to_json(TruthValue::bit(1))["type"] == "bit");
  CHECK(truth_value_to_json(TruthValue::scalar(0.5))["type"] == "scalar");
  CHECK(truth_value_to_json(TruthValue::undefined())["type"] == "undefined");
  CHECK(truth_value_to_json(TruthValue::null())["type"] == "null");
}

TEST_CASE("eval prints the paper values") {
  Run r = run({"eval", "--scenario", coin_path(), "--semantics", "amr-prob",
               "--state", "superposed", "--formula", "H"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "0.500000000000\n");

  r = run({"eval", "--semantics", "classical", "--assign", "H=1,T=0",
           "--formula", "H & T"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "0\n");

  r = run({"eval", "--scenario", coin_path(), "--semantics", "amr",
           "--state", "superposed", "--formula", "R & H"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "null\n");

  r = run({"eval", "--scenario", coin_path(), "--semantics", "mvp",
           "--state", "superposed", "--formula", "R & H", "--format",
           "json"});
  CHECK(r.code == kExitOk);
  CHECK(nlohmann::json::parse(r.out)["type"] == "undefined");
}

TEST_CASE("eval exit codes are exhaustive and mutually exclusive") {
  // Formula syntax error.
  Run r = run({"eval", "--semantics", "classical", "--assign", "H=1",
               "--formula", "H &"});
  CHECK(r.code == kExitSyntaxError);
  CHECK(r.out.empty());
  CHECK(r.err.find("offset 3") != std::string::npos);

  // Scenario syntax error.
  r = run({"eval", "--scenario", "/nonexistent/coin.json", "--semantics",
           "amr", "--state", "superposed", "--formula", "H"});
  CHECK(r.code == kExitSyntaxError);

  // Unbound atom.
  r = run({"eval", "--semantics", "classical", "--assign", "H=1",
           "--formula", "H & X"});
  CHECK(r.code == kExitEvalError);

  // Input kind mismatch: state-driven semantics without a state.
  r = run({"eval", "--scenario", coin_path(), "--semantics", "amr",
           "--formula", "H"});
  CHECK(r.code == kExitEvalError);

  // l3 rejects plain-bit-only violations.
  r = run({"eval", "--semantics", "l3", "--assign", "H=u", "--formula",
           "H"});
  CHECK(r.code == kExitEvalError);

  // Unknown flag is a config error.
  r = run({"eval", "--bogus"});
  CHECK(r.code == kExitEvalError);

  // Unknown semantics name.
  r = run({"eval", "--semantics", "fuzzy", "--formula", "H"});
  CHECK(r.code == kExitEvalError);
}

TEST_CASE("compare emits the pinned CSV header and the paper columns") {
  const Run r = run({"compare", "--scenario", coin_path(), "--state",
                     "superposed", "--assign", "H=0.5,T=0.5", "--formula",
                     "H & T", "--formula", "H | T", "--format", "csv"});
  CHECK(r.code == kExitOk);
  std::istringstream lines(r.out);
  std::string header, row1, row2;
  std::getline(lines, header);
  std::getline(lines, row1);
  std::getline(lines, row2);
  CHECK(header == "formula,classical,quantum-nd,partial,l3,mvp,amr,amr-prob");
  // classical cannot digest the half/half assignment: per-cell error.
  CHECK(row1 == "H & T,error,error,error,0,0,0,0");
  CHECK(row2 == "H | T,error,error,error,1,1,1,1");
}

TEST_CASE("compare with bits fills the assignment-driven columns") {
  const Run r = run({"compare", "--scenario", coin_path(), "--state",
                     "heads_up", "--assign", "H=1,T=0,R=1", "--formula",
                     "H & T", "--format", "csv"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("H & T,0,0,0,0,0,0,0") != std::string::npos);
}

TEST_CASE("compare requires at least one formula") {
  const Run r = run({"compare", "--scenario", coin_path()});
  CHECK(r.code == kExitEvalError);
}

TEST_CASE("compare json output is parseable") {
  const Run r = run({"compare", "--scenario", coin_path(), "--state",
                     "superposed", "--formula", "H", "--format", "json"});
  CHECK(r.code == kExitOk);
  const nlohmann::json doc = nlohmann::json::parse(r.out);
  CHECK(doc["semantics"].size() == 7);
  CHECK(doc["rows"][0]["formula"] == "H");
  CHECK(doc["rows"][0]["values"].size() == 7);
  CHECK(doc["rows"][0]["values"][5]["type"] == "null");  // amr column
}

TEST_CASE("timeline marks the classical jump") {
  const Run r = run({"timeline", "--semantics", "classical",
                     "--assign-before", "H=1,T=1", "--assign-after",
                     "H=1,T=0", "--formula", "H & T", "--t-r", "0", "--t-o",
                     "1", "--grid", "0:2:0.5"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "0  1\n"
                 "0.5  1\n"
                 "1  0  <-- jump\n"
                 "1.5  0\n"
                 "2  0\n");
}

TEST_CASE("amr timeline has no jump marker") {
  const Run r = run({"timeline", "--scenario", coin_path(), "--semantics",
                     "amr", "--state-before", "superposed", "--state-after",
                     "heads_up", "--formula", "H & T", "--t-r", "0", "--t-o",
                     "1", "--grid", "0:2:0.01"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("jump") == std::string::npos);
  CHECK(r.out.find("1") != std::string::npos);  // time column
}

TEST_CASE("timeline csv and json forms") {
  Run r = run({"timeline", "--semantics", "classical", "--assign-before",
               "H=1", "--assign-after", "H=0", "--formula", "H", "--t-r",
               "0", "--t-o", "1", "--grid", "0:2:1", "--format", "csv"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "t,value\n0,1\n1,0\n2,0\n");

  r = run({"timeline", "--semantics", "classical", "--assign-before", "H=1",
           "--assign-after", "H=0", "--formula", "H", "--t-r", "0", "--t-o",
           "1", "--grid", "0:2:1", "--format", "json"});
  CHECK(r.code == kExitOk);
  const nlohmann::json doc = nlohmann::json::parse(r.out);
  CHECK(doc["series"].size() == 3);
  CHECK(doc["series"][0]["value"]["value"] == 1);
}

TEST_CASE("timeline validates its configuration") {
  Run r = run({"timeline", "--semantics", "classical", "--assign-before",
               "H=1", "--assign-after", "H=0", "--formula", "H", "--t-r",
               "1", "--t-o", "1", "--grid", "1:2:1"});
  CHECK(r.code == kExitEvalError);

  r = run({"timeline", "--semantics", "amr", "--scenario", coin_path(),
           "--formula", "H", "--t-r", "0", "--t-o", "1", "--grid",
           "0:2:1"});
  CHECK(r.code == kExitEvalError);  // missing before/after states
}

TEST_CASE("census renders counts and undefined sums") {
  Run r = run({"census", "--scenario", coin_path(), "--semantics", "amr",
               "--state", "superposed", "--formula", "H", "--formula",
               "T"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "H: null\nT: null\nsum undefined\n");

  r = run({"census", "--scenario", coin_path(), "--semantics", "amr",
           "--state", "heads_up", "--formula", "H", "--formula", "T"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "H: 1\nT: 0\ncount=1\n");

  r = run({"census", "--semantics", "classical", "--assign", "H=1,T=1",
           "--formula", "H", "--formula", "T"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "H: 1\nT: 1\ncount=2\n");

  r = run({"census", "--scenario", coin_path(), "--semantics", "amr",
           "--state", "heads_up", "--formula", "H", "--format", "json"});
  const nlohmann::json doc = nlohmann::json::parse(r.out);
  CHECK(doc["total"]["type"] == "count");
  CHECK(doc["total"]["n"] == 1);
}

TEST_CASE("demo-coin reproduces every pinned line") {
  std::ostringstream out, err;
  const int code = cmd_demo_coin(out, err);
  CHECK(code == kExitOk);
  const std::string text = out.str();
  CHECK(text.find("Born check: 0.5 PASS") != std::string::npos);
  CHECK(text.find("distributivity: LHS=0 RHS=1 FAIL(distributive law) "
                  "PASS(expected)") != std::string::npos);
  CHECK(text.find("FAIL\n") == std::string::npos);
  CHECK(err.str().empty());
}

TEST_CASE("identical invocations produce byte-identical output") {
  const std::vector<std::string> args = {
      "compare", "--scenario", coin_path(), "--state",   "superposed",
      "--assign", "H=1,T=0",   "--formula", "H | T",     "--formula",
      "R -> H",   "--format",  "csv"};
  const Run first = run(args);
  const Run second = run(args);
  CHECK(first.code == kExitOk);
  CHECK(first.out == second.out);

  const std::vector<std::string> eval_args = {
      "eval", "--scenario", coin_path(), "--semantics", "mvp",
      "--state", "superposed", "--formula", "!H"};
  CHECK(run(eval_args).out == run(eval_args).out);
}
