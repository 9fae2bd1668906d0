#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "orbitstar/report.hpp"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

using orbitstar::Report;

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(ORBITSTAR_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  int st = pclose(pipe);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

std::string strip_newline(std::string s) {
  if (!s.empty() && s.back() == '\n') s.pop_back();
  return s;
}

}  // namespace

TEST_CASE("report json round trip and exit code") {
  Report r;
  r.command = "probe";
  r.check("b.second", "second check", true);
  r.check_zero("a.first", "first check", orbitstar::Poly::h());
  r.value("k", "2/5*h^2");
  r.list("weights", {"(1)", "(2)"});
  CHECK(r.exit_code() == 1);
  std::string text = r.to_json();
  CHECK(Report::from_json(text).to_json() == text);
  CHECK(text.find("\"a.first\"") < text.find("\"b.second\""));
  CHECK(text.find("\"witness\": \"h\"") != std::string::npos);
}

TEST_CASE("solve so(6) reports k") {
  Run r = run("solve --family so --n 6 --json");
  CHECK(r.status == 0);
  CHECK(r.out.find("\"k\": \"2/5*h^2\"") != std::string::npos);
  std::string text = strip_newline(r.out);
  CHECK(Report::from_json(text).to_json() == text);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run("solve --family sl").status == 2);
  CHECK(run("solve --family nope --n 3").status == 2);
  CHECK(run("so3 --l 1/3").status == 2);
  CHECK(run("frobnicate").status == 2);
  CHECK(run("joseph repcheck --n 3").status == 2);
}

TEST_CASE("subcommands pass") {
  for (const char* args : {"solve --family E7", "solve --family G2 --D 14", "so3 --l 3/2",
                           "joseph generators --family so --n 6", "joseph hw --family sl --n 4",
                           "joseph repcheck --n 3 --N 2", "orbit relations --family sl --n 4",
                           "orbit chains --family so --n 5 --p 3 --json", "bgs table --n 4 --json"}) {
    CAPTURE(args);
    CHECK(run(args).status == 0);
  }
}

TEST_CASE("bgs table lists permutation coefficients") {
  Run r = run("bgs table --n 2 --json");
  CHECK(r.status == 0);
  CHECK(r.out.find("\"e_2(1)\"") != std::string::npos);
  CHECK(r.out.find("\"21: 1/2\"") != std::string::npos);
}

TEST_CASE("verify-all is deterministic and passes") {
  Run full = run("verify-all --max-rank 4 --seed 7 --json");
  CHECK(full.status == 0);
  std::string text = strip_newline(full.out);
  CHECK(Report::from_json(text).to_json() == text);
  Run a = run("orbit chains --family sl --n 3 --p 2 --seed 3 --json"),
      b = run("orbit chains --family sl --n 3 --p 2 --seed 3 --json");
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
}
