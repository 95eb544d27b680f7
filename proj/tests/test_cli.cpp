#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

namespace {

struct RunResult {
  int exit_code;
  std::string output;  // stdout + stderr
};

RunResult run_with_env(const std::string& env, const std::string& args) {
  const std::string cmd = (env.empty() ? "" : env + " ") +
                          std::string(GENTRIG_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe))
    out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

RunResult run(const std::string& args) { return run_with_env("", args); }

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
      if (c == ',') {
        fields.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    fields.push_back(cur);
    rows.push_back(std::move(fields));
  }
  return rows;
}

double field_num(const std::string& s) {
  return std::strtod(s.c_str(), nullptr);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("eval prints one record and exits cleanly") {
  const RunResult r = run("eval sin --p 2 --q 2 --x 0.5235987756");
  CHECK(r.exit_code == 0);
  const auto rows = parse_csv(r.output);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0][0] == "suite");
  CHECK(rows[1][0] == "sin");
  CHECK(field_num(rows[1][5]) == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("eval covers the hyperbolic closed form") {
  const RunResult r = run("eval sinh --p 1 --q 2 --x 0.5");
  CHECK(r.exit_code == 0);
  const auto rows = parse_csv(r.output);
  CHECK(field_num(rows[1][5]) == doctest::Approx(0.5463024898).epsilon(1e-9));
}

TEST_CASE("eval domain failures exit with code 2 and a diagnostic") {
  const RunResult r = run("eval sin --p 0.5 --q 2 --x 0.1");
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("q/(q+1)") != std::string::npos);

  const RunResult beyond = run("eval sin --p 2 --q 2 --x 3.0");
  CHECK(beyond.exit_code == 2);

  const RunResult usage = run("eval noesuch --p 2 --q 2 --x 1");
  CHECK(usage.exit_code == 2);
}

TEST_CASE("const reports the half period and dual index") {
  const RunResult r = run("const --p 2 --q 2");
  CHECK(r.exit_code == 0);
  const auto rows = parse_csv(r.output);
  CHECK(field_num(rows[1][5]) ==
        doctest::Approx(1.5707963268).epsilon(1e-9));
  CHECK(field_num(rows[1][3]) == doctest::Approx(1.0));

  const RunResult inf = run("const --p 1 --q 2");
  CHECK(inf.exit_code == 0);
  const auto irows = parse_csv(inf.output);
  CHECK(irows[1][5] == "inf");
  CHECK(field_num(irows[1][3]) == doctest::Approx(2.0));

  const RunResult quartic = run("const --p 4 --q 4");
  const auto qrows = parse_csv(quartic.output);
  CHECK(field_num(qrows[1][5]) ==
        doctest::Approx(1.1107207345).epsilon(1e-9));
}

TEST_CASE("verify writes a report file and exits 0 on success") {
  const RunResult r = run(
      "verify wilker --p-values 2 --q-values 2,3 --n-x 7 "
      "--out cli_wilker.csv");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("PASS") != std::string::npos);
  const auto rows = parse_csv(read_file("cli_wilker.csv"));
  REQUIRE(rows.size() > 1);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(field_num(rows[i][6]) > 0.0);  // margin column
    CHECK(rows[i][8] == "true");
  }
  std::remove("cli_wilker.csv");
}

TEST_CASE("verify rejects bad grids with exit code 2") {
  CHECK(run("verify wilker --q-values -1").exit_code == 2);
  CHECK(run("verify nosuite").exit_code == 2);
}

TEST_CASE("csv and json emissions carry identical values") {
  const std::string args =
      "verify pythagorean --p-values 2,3 --q-values 2 --n-x 5";
  CHECK(run(args + " --format csv --out cli_eq.csv").exit_code == 0);
  CHECK(run(args + " --format json --out cli_eq.json").exit_code == 0);
  const auto rows = parse_csv(read_file("cli_eq.csv"));
  const auto json = nlohmann::json::parse(read_file("cli_eq.json"));
  REQUIRE(json.size() == rows.size() - 1);
  for (std::size_t i = 0; i < json.size(); ++i) {
    const auto& row = rows[i + 1];
    CHECK(json[i]["suite"].get<std::string>() == row[0]);
    CHECK(json[i]["p"].get<double>() == field_num(row[1]));
    CHECK(json[i]["x"].get<double>() == field_num(row[4]));
    CHECK(json[i]["margin"].get<double>() == field_num(row[6]));
    CHECK(json[i]["err_est"].get<double>() == field_num(row[7]));
  }
  std::remove("cli_eq.csv");
  std::remove("cli_eq.json");
}

TEST_CASE("GENTRIG_TOL loosens the quadrature layer") {
  // asin reports the quadrature error estimate; a loose global tolerance
  // must show up there.
  const RunResult tight = run("eval asin --p 2 --q 3 --x 0.9");
  const RunResult loose = run_with_env("GENTRIG_TOL=1e-4",
                                       "eval asin --p 2 --q 3 --x 0.9");
  REQUIRE(tight.exit_code == 0);
  REQUIRE(loose.exit_code == 0);
  const auto tight_rows = parse_csv(tight.output);
  const auto loose_rows = parse_csv(loose.output);
  CHECK(field_num(tight_rows[1][7]) < 1e-12);
  // Refinement stops earlier, so the reported estimate grows by orders of
  // magnitude (the double-exponential rule often lands far below the ask).
  CHECK(field_num(loose_rows[1][7]) > 1e-12);
  CHECK(field_num(loose_rows[1][7]) > 10.0 * field_num(tight_rows[1][7]));
  // Values still agree to the loose tolerance.
  CHECK(std::fabs(field_num(tight_rows[1][5]) - field_num(loose_rows[1][5])) <=
        1e-4);
}

TEST_CASE("verify exits 1 when a suite fails, still writing the file") {
  // A deliberately loose quadrature tolerance drives the integral-level
  // identity residuals above their threshold.
  const RunResult r = run_with_env(
      "GENTRIG_TOL=1e-3", "verify doubleangle --n-x 5 --out cli_fail.csv");
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("FAIL") != std::string::npos);
  CHECK(read_file("cli_fail.csv").find("false") != std::string::npos);
  std::remove("cli_fail.csv");
}

TEST_CASE("table emits monotone samples of the requested shape") {
  const RunResult r = run("table sin --p 1 --q 2 --n 50");
  CHECK(r.exit_code == 0);
  const auto rows = parse_csv(r.output);
  REQUIRE(rows.size() == 51);
  double prev = -1.0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double v = field_num(rows[i][5]);
    CHECK(v > prev);
    CHECK(v < 1.0);
    prev = v;
  }
  CHECK(prev > 0.99);  // tanh-like saturation

  const RunResult classical = run("table sin --p 2 --q 2 --n 10");
  const auto crows = parse_csv(classical.output);
  for (std::size_t i = 1; i < crows.size(); ++i) {
    const double x = field_num(crows[i][4]);
    CHECK(field_num(crows[i][5]) ==
          doctest::Approx(std::sin(x)).epsilon(1e-9));
  }

  const RunResult divergent = run("table sinh --p 1.2 --q 3 --n 20");
  const auto drows = parse_csv(divergent.output);
  CHECK(field_num(drows.back()[5]) > 5.0);  // tan-like blow-up past 1
}
