#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "spinwreath/json_io.hpp"

using spinwreath::Json;
using spinwreath::cli::run_cli;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

spinwreath::CycScalar value(const Json& d, size_t row, size_t col) {
  return spinwreath::cyc_from_json(d["rows"][row]["values"][col]);
}

std::string temp_path(const std::string& name) { return "/tmp/spinwreath_test_" + name; }

}  // namespace

TEST_CASE("classes with the oracle for trivial n=3") {
  const Run r = run({"classes", "--gamma", "trivial", "--n", "3", "--oracle"});
  REQUIRE(r.code == 0);
  const Json d = Json::parse(r.out);
  CHECK(d["summary"]["even_split_pairs"] == 2);
  CHECK(d["summary"]["odd_split_pairs"] == 1);
  CHECK(d["oracle"]["status"] == "OK");
  CHECK(d["status"] == "OK");
}

TEST_CASE("classes for cyclic(2) n=2 has three even split pairs") {
  const Run r = run({"classes", "--gamma", "cyclic:2", "--n", "2"});
  REQUIRE(r.code == 0);
  CHECK(Json::parse(r.out)["summary"]["even_split_pairs"] == 3);
}

TEST_CASE("a malformed group file is a configuration error") {
  const std::string path = temp_path("bad_group.json");
  std::ofstream(path) << R"({"name": "broken", "order": 2})";
  const Run r = run({"classes", "--gamma", path});
  CHECK(r.code == 2);
  CHECK(r.err.find("classes") != std::string::npos);
  CHECK(run({"classes", "--gamma", temp_path("missing.json")}).code == 2);
  std::remove(path.c_str());
}

TEST_CASE("chartable documents") {
  Run r = run({"chartable", "--gamma", "trivial", "--n", "3", "--check"});
  REQUIRE(r.code == 0);
  Json d = Json::parse(r.out);
  REQUIRE(d["rows"].size() == 2);
  CHECK(d["check"] == "pass");
  CHECK(value(d, 0, 0) == 8);
  CHECK(value(d, 0, 1) == 2);
  CHECK(value(d, 1, 0) == 4);
  CHECK(value(d, 1, 1) == -2);

  r = run({"chartable", "--gamma", "cyclic:2", "--n", "2", "--format", "csv"});
  REQUIRE(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) ++count;
  CHECK(count == 4);  // header and three rows

  r = run({"chartable", "--gamma", "trivial", "--n", "0"});
  REQUIRE(r.code == 0);
  d = Json::parse(r.out);
  REQUIRE(d["rows"].size() == 1);
  CHECK(value(d, 0, 0) == 1);

  CHECK(run({"chartable", "--xi", "mckay", "--gamma", "cyclic:3"}).code == 2);
}

TEST_CASE("verify guards and outcomes") {
  CHECK(run({"verify", "clifford", "--gamma", "cyclic:2", "--xi", "mckay"}).code == 2);
  CHECK(run({"verify", "affine", "--gamma", "cyclic:3", "--xi", "standard"}).code == 2);
  CHECK(run({"verify", "heisenberg", "--gamma", "cyclic:3", "--xi", "[1,2]"}).code == 2);
  CHECK(run({"verify", "nonsense"}).code == 2);

  Run r = run({"verify", "oracle", "--gamma", "trivial", "--n", "3"});
  REQUIRE(r.code == 0);
  Json d = Json::parse(r.out);
  CHECK(d["classes"]["status"] == "OK");
  CHECK(d["traces"]["status"] == "OK");

  r = run({"verify", "clifford", "--gamma", "cyclic:2", "--degree", "3", "--window", "2"});
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["reports"].size() == 3);

  r = run({"verify", "heisenberg", "--gamma", "cyclic:3", "--xi", "mckay", "--degree", "4", "--max-index", "5"});
  CHECK(r.code == 0);
  r = run({"verify", "isometry", "--gamma", "trivial", "--n", "4"});
  CHECK(r.code == 0);
  r = run({"verify", "hopf", "--gamma", "trivial", "--n", "4", "--trials", "5"});
  CHECK(r.code == 0);
  r = run({"verify", "ope", "--gamma", "cyclic:2", "--degree", "3", "--window", "1"});
  CHECK(r.code == 0);
}

TEST_CASE("verify affine reports the factor-8 family as failing") {
  const Run r = run({"verify", "affine", "--gamma", "cyclic:2", "--degree", "3", "--window", "1"});
  CHECK(r.code == 3);
  const Json d = Json::parse(r.out);
  CHECK(d["status"] == "fail");
  for (const auto& rep : d["reports"])
    CHECK((rep["status"] == "pass") == (rep["relation"] != "affine_x_x"));
}

TEST_CASE("mckay") {
  Run r = run({"mckay", "--gamma", "cyclic:4"});
  REQUIRE(r.code == 0);
  CHECK(Json::parse(r.out)["affine_type"] == "A3^(1)");
  r = run({"mckay", "--gamma", "quaternion8"});
  REQUIRE(r.code == 0);
  CHECK(Json::parse(r.out)["affine_type"] == "D4^(1)");
  CHECK(run({"mckay", "--gamma", "trivial"}).code == 2);
  r = run({"mckay", "--gamma", "cyclic:3", "--format", "csv"});
  CHECK(r.out.rfind("character,", 0) == 0);
}

TEST_CASE("configuration precedence and output file") {
  const std::string cfg = temp_path("config.toml");
  const std::string out = temp_path("table.json");
  std::ofstream(cfg) << "gamma = \"cyclic:2\"\nn = 3\n";
  Run r = run({"chartable", "--config", cfg, "--n", "2", "--output", out});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(out);
  const Json d = Json::parse(in);
  CHECK(d["gamma"] == "cyclic:2");
  CHECK(d["n"] == 2);
  CHECK(run({"chartable", "--config", temp_path("absent.toml")}).code == 2);
  std::remove(cfg.c_str());
  std::remove(out.c_str());
}

TEST_CASE("identical configurations give identical documents") {
  const std::vector<std::string> args{"chartable", "--gamma", "cyclic:3", "--n", "2", "--format", "csv"};
  CHECK(run(args).out == run(args).out);
}

TEST_CASE("usage errors and help") {
  CHECK(run({}).code == 2);
  CHECK(run({"classes", "--n", "99"}).code == 2);
  CHECK(run({"classes", "--format", "xml"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}
