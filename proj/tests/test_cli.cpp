// SPDX-License-Identifier: Apache-2.0
// End-to-end checks that spawn the installed command-line binary.
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(ORBITKIT_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("period-count: exact counts straddling the tangency") {
  auto r = run_cli("period-count --family quadratic-normal --n 3 --param 2");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "6\n");
  CHECK(run_cli("period-count --family quadratic-normal --n 3 --param 7/4").out == "3\n");
  CHECK(run_cli("period-count --family quadratic-normal --n 3 --param 1.5").out == "0\n");
}

TEST_CASE("tangent: reports the certified parameter") {
  auto r = run_cli("tangent --family quadratic-normal --n 3");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("1.75") != std::string::npos);
}

TEST_CASE("detect: closed-form point report for a = sqrt7 parses as JSON") {
  auto r = run_cli("detect --family T-fixed-a --a sqrt7 --n 3");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["kind"] == "point");
  CHECK(j["certified"] == true);
  CHECK(j.contains("tool_version"));
  double v = j["interval_lo"].get<double>();
  CHECK(v == doctest::Approx(1.3228756555322954).epsilon(1e-12));
}

TEST_CASE("scan: CSV grid of exact counts") {
  auto r = run_cli(
      "scan --family quadratic-normal --n 3 --range 3/2..2 --grid 5");
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("param,count,lower_period\n", 0) == 0);
  CHECK(r.out.find("\n2,6,0\n") != std::string::npos);
}

TEST_CASE("diagram: SVG bytes on stdout") {
  auto r = run_cli(
      "diagram --family logistic --range 2.9..3.1 --params 20 --transient 50 "
      "--keep 4 --format svg");
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("<svg", 0) == 0);
}

TEST_CASE("spec mini-format is accepted") {
  auto r = run_cli("period-count --spec \"family=S-fixed-a;a=2\" --n 3 --param 7/8");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "3\n");
}

TEST_CASE("errors: usage mistakes exit 2 without partial results") {
  CHECK(run_cli("period-count --family quadratic-normal --n 3").exit_code == 2);
  auto bad_flag = run_cli("period-count --no-such-flag");
  CHECK(bad_flag.exit_code == 2);
  CHECK(bad_flag.out.empty());
  CHECK(run_cli("period-count --family bogus --n 3 --param 1").exit_code != 0);
  CHECK(run_cli("scan --family quadratic-normal --range 2..1 --grid 3").exit_code == 2);
  CHECK(run_cli("period-count --family quadratic-normal --n 3 --param 1/0").exit_code == 2);
}

TEST_CASE("verify-paper: single claim runs and the break hook trips it") {
  auto ok = run_cli("verify-paper --only C2 --golden-dir " ORBITKIT_GOLDEN_DIR);
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.find("[PASS] C2") != std::string::npos);
  auto broken =
      run_cli("verify-paper --only C2 --selftest-break --golden-dir " ORBITKIT_GOLDEN_DIR);
  CHECK(broken.exit_code == 1);
  CHECK(broken.out.find("[FAIL] C2") != std::string::npos);
}
