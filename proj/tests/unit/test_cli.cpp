#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "electsys/cli.hpp"

using namespace electsys;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(ELECTSYS_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("winners lists Borda scores") {
  const auto r = cli({"winners", "--rule", "borda", data("borda.elect")});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("score a: 16\nscore b: 15\nscore c: 2\n") != std::string::npos);
  CHECK(r.out.find("winners: a\n") != std::string::npos);
}

TEST_CASE("classify reports NP-completeness for Borda") {
  const auto r = cli({"classify", "--problem", "manipulation", "--alpha", "2,1,0"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("complexity: NP-complete") != std::string::npos);
}

TEST_CASE("decision commands exit 1 on no") {
  const auto yes = cli({"bribe", data("figure2.elect"), "--target", "c", "--budget", "2", "--variant", "weighted"});
  CHECK(yes.code == kExitOk);
  CHECK(yes.out.find("witness:") != std::string::npos);
  const auto no = cli({"bribe", data("figure2.elect"), "--target", "c", "--budget", "1", "--variant", "weighted"});
  CHECK(no.code == kExitNo);
  CHECK(no.out.find("witness:") == std::string::npos);
}

TEST_CASE("witness replays through winners") {
  const auto path = (std::filesystem::temp_directory_path() / "electsys_unit_bribe.elect").string();
  const auto r = cli({"bribe", data("figure2.elect"), "--target", "c", "--budget", "2", "--variant", "weighted",
                      "--write-result", path});
  REQUIRE(r.code == kExitOk);
  const auto w = cli({"winners", path});
  CHECK(w.out.find("winners: b c") != std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("control witness replays through winners") {
  const auto path = (std::filesystem::temp_directory_path() / "electsys_unit_control.elect").string();
  const auto r = cli({"control", data("control.elect"), "--type", "delete-candidates", "--target", "b", "--limit", "1",
                      "--write-result", path});
  REQUIRE(r.code == kExitOk);
  const auto w = cli({"winners", path});
  CHECK(w.out.find("winners: b\n") != std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("input errors exit 2") {
  CHECK(cli({}).code == kExitInput);
  CHECK(cli({"frobnicate"}).code == kExitInput);
  CHECK(cli({"winners", "--bogus", data("borda.elect")}).code == kExitInput);
  CHECK(cli({"winners", data("missing.elect")}).code == kExitInput);
  CHECK(cli({"winners", "--rule", "nonsense", data("borda.elect")}).code == kExitInput);
  CHECK(cli({"bribe", data("figure2.elect"), "--target", "z", "--budget", "1"}).code == kExitInput);
}

TEST_CASE("oracle-check on a small bound") {
  const auto r = cli({"oracle-check", "--module", "bribery", "--bound", "small", "--instances", "200"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("bribery: PASS") != std::string::npos);
}

TEST_CASE("merge prints the merged election") {
  const auto r = cli({"merge", data("merge_c.elect"), data("merge_d.elect"), "--c", "c", "--d", "d"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("voters: 8") != std::string::npos);
  CHECK(r.out.find("  ballot: 1 1 : c > d > e > f > a > b") != std::string::npos);
}
