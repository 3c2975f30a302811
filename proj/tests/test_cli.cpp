#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "recomp/cli.hpp"
#include "recomp/serialize.hpp"

using namespace recomp;

namespace {

const std::string kFixture = std::string(RECOMP_FIXTURE_DIR) + "/cube_family.json";

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string write_temp(const std::string& name, const std::string& body) {
  const std::string path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") + "/" + name;
  std::ofstream(path) << body;
  return path;
}

}  // namespace

TEST_CASE("golden JSON outputs on the fixture") {
  const std::string g = RECOMP_GOLDEN_DIR;
  CHECK(call({"gn", "--n", "2", "--input", kFixture}).out == slurp(g + "/gn_n2.json"));
  CHECK(call({"m0", "--m", "3", "--input", kFixture}).out == slurp(g + "/m0_m3.json"));
  CHECK(call({"bound", "--m", "3", "--input", kFixture}).out == slurp(g + "/bound_m3.json"));
  CHECK(call({"decompose", "--m", "3", "--n", "5", "--input", kFixture}).out == slurp(g + "/decompose_m3_n5.json"));
  CHECK(call({"variety", "--m", "3", "--pruned", "--outer", R"(["0","0","0","1"])", "--input", kFixture}).out ==
        slurp(g + "/variety_outer_cube.json"));
}

TEST_CASE("text output") {
  const Outcome gn = call({"gn", "--n", "2", "--input", kFixture, "--text"});
  CHECK(gn.code == cli::kExitOk);
  CHECK(gn.out.find("x^6 + 12*x^4 + 48*x^2 + 64") != std::string::npos);
  const Outcome m0 = call({"m0", "--m", "3", "--input", kFixture, "--text"});
  CHECK(m0.out.find("m0 = 1") != std::string::npos);
}

TEST_CASE("verify reports fits (1, 2^n) for n = 1..8") {
  const Outcome o = call({"verify", "--m", "3", "--n-range", "1..8", "--input", kFixture});
  REQUIRE(o.code == cli::kExitOk);
  const Json j = Json::parse(o.out);
  const Json& reports = j.at("reports");
  REQUIRE(reports.size() == 8);
  for (std::size_t i = 0; i < 8; ++i) {
    const Json& r = reports[i];
    CHECK(r.at("n") == static_cast<long>(i) + 1);
    REQUIRE(r.at("decompositions").size() == 1);
    const Json& d = r.at("decompositions")[0];
    CHECK(d.at("status") == "fitted");
    const Json& c = d.at("coefficients");
    REQUIRE(c.size() == 2);
    CHECK(c[0] == "1");
    CHECK(c[1] == format_rat(rat_pow(Rat(2), static_cast<long>(i) + 1)));
  }
}

TEST_CASE("outputs are deterministic") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"candidates", "--m", "3", "--j", "1", "--input", kFixture},
           {"variety", "--m", "3", "--input", kFixture, "--pruned"},
           {"verify", "--m", "3", "--n-range", "1..6", "--input", kFixture}}) {
    const Outcome a = call(args);
    const Outcome b = call(args);
    CHECK(a.code == cli::kExitOk);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("JSON outputs round-trip through their parsers") {
  const Outcome v = call({"variety", "--m", "3", "--input", kFixture, "--pruned"});
  const Json j = Json::parse(v.out);
  CHECK(to_json(variety_from_json(j)) == j);
  const Outcome g = call({"gn", "--n", "3", "--input", kFixture});
  const Json gj = Json::parse(g.out);
  CHECK(to_json(poly_from_json(gj.at("gn"))) == gj.at("gn"));
  const Json file = Json::parse(slurp(kFixture));
  CHECK(to_json(sequence_from_json(file)) == file);
  for (const auto& cmd : {"info", "bound", "candidates", "decompose"}) {
    const Outcome o = call({cmd, "--m", "3", "--n", "4", "--input", kFixture});
    REQUIRE(o.code == cli::kExitOk);
    const Json parsed = Json::parse(o.out);
    CHECK(Json::parse(parsed.dump(2)) == parsed);
    CHECK(o.out == parsed.dump(2) + "\n");
  }
}

TEST_CASE("exit codes") {
  CHECK(call({"info", "--input", "/nonexistent/seq.json"}).code == cli::kExitInvalid);
  const std::string degenerate =
      write_temp("recomp_degenerate.json", R"({"v":1,"coeffs":["1","1"],"roots":[["0","1"],["0","2"]]})");
  const Outcome d = call({"info", "--input", degenerate});
  CHECK(d.code == cli::kExitInvalid);
  CHECK(d.err.find("DegeneratePair") != std::string::npos);
  const std::string wrong_version = write_temp("recomp_v2.json", R"({"v":2,"coeffs":["1"],"roots":[["1"]]})");
  CHECK(call({"info", "--input", wrong_version}).code == cli::kExitInvalid);
  const std::string garbage = write_temp("recomp_garbage.json", "{not json");
  CHECK(call({"info", "--input", garbage}).code == cli::kExitInvalid);
  const std::string bad_rat = write_temp("recomp_badrat.json", R"({"v":1,"coeffs":["1","x"],"roots":[["0","1"],["1"]]})");
  CHECK(call({"info", "--input", bad_rat}).code == cli::kExitInvalid);
  CHECK(call({"frobnicate", "--input", kFixture}).code == cli::kExitUsage);
  CHECK(call({"gn", "--input", kFixture}).code == cli::kExitUsage);
  CHECK(call({"verify", "--m", "3", "--n-range", "8..1", "--input", kFixture}).code == cli::kExitUsage);
  std::remove(degenerate.c_str());
  std::remove(wrong_version.c_str());
  std::remove(garbage.c_str());
  std::remove(bad_rat.c_str());
}

TEST_CASE("RECOMP_JMAX overrides the scan limit") {
  ::setenv("RECOMP_JMAX", "3", 1);
  const Json j = Json::parse(call({"bound", "--m", "3", "--input", kFixture}).out);
  ::unsetenv("RECOMP_JMAX");
  CHECK(j.at("j_max") == 3);
  const Json k = Json::parse(call({"bound", "--m", "3", "--jmax", "5", "--input", kFixture}).out);
  CHECK(k.at("j_max") == 5);
}
