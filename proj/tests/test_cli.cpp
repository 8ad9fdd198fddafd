#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  fs::create_directories(TAMED_SCRATCH);
  std::string out = std::string(TAMED_SCRATCH) + "/out.txt";
  std::string cmd = std::string("\"") + TAMED_CLI + "\" " + args + " > \"" + out + "\" 2>&1";
  int status = std::system(cmd.c_str());
  std::ifstream in(out);
  std::stringstream ss;
  ss << in.rdbuf();
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, ss.str()};
}

std::string scratch(const std::string& name) { return std::string(TAMED_SCRATCH) + "/" + name; }

std::string emit(const std::string& id, const std::string& params, const std::string& file) {
  Run r = run("catalog emit " + id + " " + params);
  REQUIRE(r.code == 0);
  std::ofstream(scratch(file)) << r.out;
  return scratch(file);
}

}  // namespace

TEST_CASE("catalog list and emit") {
  Run r = run("catalog list");
  CHECK(r.code == 0);
  CHECK(r.out.find("ot") != std::string::npos);
  CHECK(r.out.find("--param s=<int>") != std::string::npos);
  CHECK(run("catalog emit nope").code == 3);
  CHECK(run("catalog emit ot --param s=x").code == 3);
  CHECK(run("catalog emit ot --param t=2 --param b=1,1").code == 3);
}

TEST_CASE("decide exit codes") {
  std::string ot = emit("ot", "", "ot11.json");
  CHECK(run("decide \"" + ot + "\" --taming").code == 1);
  CHECK(run("decide \"" + ot + "\" --skt").code == 0);
  std::string torus = emit("torus", "--param n=4", "torus.json");
  Run t = run("decide \"" + torus + "\" --json");
  CHECK(t.code == 0);
  CHECK(t.out.find("\"Exists\"") != std::string::npos);
  std::string nonint = emit("heis-r-nonint", "", "nonint.json");
  CHECK(run("decide \"" + nonint + "\" --skt").code == 3);
  CHECK(run("decide \"" + scratch("missing.json") + "\"").code == 3);
  CHECK(run("decide").code == 4);
  CHECK(run("bogus").code == 4);
  CHECK(run("decide x --json --text").code == 4);
}

TEST_CASE("check reads stdin") {
  std::string h = emit("heisenberg", "", "heis.json");
  Run r = run("check - --json < \"" + h + "\"");
  CHECK(r.code == 0);
  CHECK(r.out.find("\"nilpotent\": true") != std::string::npos);
  std::ofstream(scratch("broken.json")) << "{\"schema\": 1,\n oops";
  CHECK(run("check \"" + scratch("broken.json") + "\"").code == 3);
  std::string no_j = emit("heisenberg", "", "heis2.json");
  CHECK(run("decide \"" + no_j + "\"").code == 3);
}

TEST_CASE("verify-report") {
  std::string ot = emit("ot", "--param s=2", "ot21.json");
  Run rep = run("decide \"" + ot + "\" --json");
  CHECK(rep.code == 1);
  std::ofstream(scratch("report.json")) << rep.out;
  Run ok = run("verify-report \"" + scratch("report.json") + "\"");
  CHECK(ok.code == 0);
  CHECK(ok.out.find("OK") != std::string::npos);
  std::string bad = rep.out;
  auto pos = bad.find("\"digest\": \"");
  REQUIRE(pos != std::string::npos);
  bad[pos + 11] = bad[pos + 11] == '0' ? '1' : '0';
  std::ofstream(scratch("bad.json")) << bad;
  CHECK(run("verify-report \"" + scratch("bad.json") + "\"").code == 1);
}

TEST_CASE("paper-table") {
  Run only = run("paper-table --only OT");
  CHECK(only.code == 0);
  CHECK(only.out.find("aa6") == std::string::npos);
  CHECK(only.out.find("MATCH") != std::string::npos);
  Run corrupt = run("paper-table --only aff --corrupt-fixture");
  CHECK(corrupt.code == 1);
  CHECK(corrupt.out.find("MISMATCH") != std::string::npos);
}
