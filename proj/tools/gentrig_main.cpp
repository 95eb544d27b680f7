// Command-line front end: point evaluation, constants, verification sweeps
// and plot tables for the generalized trigonometric/hyperbolic functions.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or domain error.

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gentrig/duality.hpp"
#include "gentrig/errors.hpp"
#include "gentrig/ghf.hpp"
#include "gentrig/gtf.hpp"
#include "gentrig/identities.hpp"
#include "gentrig/params.hpp"
#include "gentrig/quad.hpp"
#include "gentrig/report.hpp"

namespace {

using gentrig::FnValue;
using gentrig::OutputRecord;
using gentrig::ParamPair;

using EvalFn = std::function<FnValue(const ParamPair&, double)>;

const std::map<std::string, EvalFn>& eval_functions() {
  static const std::map<std::string, EvalFn> fns = {
      {"sin", gentrig::sin_pq},     {"cos", gentrig::cos_pq},
      {"tam", gentrig::tam_pq},     {"tan", gentrig::tan_pq},
      {"sinh", gentrig::sinh_pq},   {"cosh", gentrig::cosh_pq},
      {"tamh", gentrig::tamh_pq},   {"tanh", gentrig::tanh_pq},
      {"asin", gentrig::asin_pq},   {"asinh", gentrig::asinh_pq},
  };
  return fns;
}

void emit(const std::vector<OutputRecord>& records, const std::string& format,
          const std::string& out_path) {
  const std::string text =
      format == "json" ? gentrig::to_json_text(records) : gentrig::to_csv(records);
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw gentrig::DomainError("cannot open output file " + out_path);
  out << text;
}

// Sampling endpoint for a table; bounded branches use 0.98 of the endpoint,
// unbounded ones a fixed window.
double table_span(const std::string& func, const ParamPair& pair) {
  if (func == "asin") return 0.98;
  if (func == "asinh") return 5.0;
  const bool hyp = func == "sinh" || func == "cosh" || func == "tamh" ||
                   func == "tanh";
  const gentrig::HalfPeriod hp =
      hyp ? gentrig::half_period(
                ParamPair(gentrig::dual_index(pair), pair.q()))
          : gentrig::half_period(pair);
  return hp.is_finite() ? 0.98 * hp.value() : 4.0;
}

int run_verify(const std::string& suite, const gentrig::GridSpec& grid,
               const std::string& format, std::string out_path) {
  const auto reports = gentrig::sweep(suite, grid);
  if (out_path.empty()) out_path = "verify-" + suite + "." + format;
  emit(gentrig::to_records(reports), format, out_path);

  std::map<std::string, std::pair<int, int>> tally;  // variant -> {passed, total}
  for (const auto& rep : reports) {
    auto& t = tally[rep.suite];
    t.second += 1;
    if (rep.passed) t.first += 1;
  }
  int passed = 0;
  for (const auto& [name, t] : tally) {
    std::cout << name << ": " << t.first << "/" << t.second
              << " reports passed\n";
    passed += t.first;
  }
  const int total = static_cast<int>(reports.size());
  std::cout << "verify " << suite << ": " << (passed == total ? "PASS" : "FAIL")
            << " (" << passed << "/" << total << " reports); wrote " << out_path
            << "\n";
  return passed == total ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "gentrig: two-parameter trigonometric/hyperbolic functions with "
      "machine-verified identities"};
  app.require_subcommand(1);

  std::string format = "csv";
  std::string out_path;
  double p = 2.0, q = 2.0, x = 0.0;
  int n = 100;

  std::string eval_func;
  auto* eval = app.add_subcommand("eval", "evaluate one function at one point");
  eval->add_option("func", eval_func, "function name")
      ->required()
      ->check(CLI::IsMember({"sin", "cos", "tam", "tan", "sinh", "cosh",
                             "tamh", "tanh", "asin", "asinh"}));
  eval->add_option("--p", p, "exponent p")->required();
  eval->add_option("--q", q, "exponent q")->required();
  eval->add_option("--x", x, "argument")->required();
  eval->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  eval->add_option("--out", out_path, "output file (default stdout)");

  auto* cst = app.add_subcommand("const", "print pi_{p,q}/2 and the dual index r");
  cst->add_option("--p", p, "exponent p")->required();
  cst->add_option("--q", q, "exponent q")->required();
  cst->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  cst->add_option("--out", out_path, "output file (default stdout)");

  std::string suite;
  gentrig::GridSpec grid = gentrig::default_grid();
  std::vector<double> p_values, q_values;
  auto* verify = app.add_subcommand("verify", "run a verification suite over a grid");
  verify->add_option("suite", suite, "suite name")
      ->required()
      ->check(CLI::IsMember(gentrig::suite_names()));
  verify->add_option("--p-values", p_values, "grid p values")->delimiter(',');
  verify->add_option("--q-values", q_values, "grid q values")->delimiter(',');
  verify->add_option("--n-x", grid.n_x, "points per branch");
  verify->add_option("--clip", grid.domain_clip,
                     "fraction clipped at each end of the branch");
  verify->add_flag("--near-boundary", grid.add_near_boundary_p,
                   "also include p = q/(q+1) + 0.05 for each q");
  verify->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  verify->add_option("--out", out_path,
                     "output file (default verify-<suite>.<format>)");

  std::string table_func;
  auto* table = app.add_subcommand("table", "emit equally spaced samples for plotting");
  table->add_option("func", table_func, "function name")
      ->required()
      ->check(CLI::IsMember({"sin", "cos", "tam", "tan", "sinh", "cosh",
                             "tamh", "tanh", "asin", "asinh"}));
  table->add_option("--p", p, "exponent p")->required();
  table->add_option("--q", q, "exponent q")->required();
  table->add_option("--n", n, "number of samples")->check(CLI::PositiveNumber);
  table->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  table->add_option("--out", out_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (eval->parsed()) {
      const ParamPair pair(p, q);
      const FnValue v = eval_functions().at(eval_func)(pair, x);
      OutputRecord rec;
      rec.suite = eval_func;
      rec.p = p;
      rec.q = q;
      rec.r = gentrig::dual_index(pair);
      rec.x = x;
      rec.value = v.value;
      rec.err_est = v.err_est;
      emit({rec}, format, out_path);
      return 0;
    }
    if (cst->parsed()) {
      const ParamPair pair(p, q);
      OutputRecord rec;
      rec.suite = "const";
      rec.p = p;
      rec.q = q;
      rec.r = gentrig::dual_index(pair);
      rec.value = gentrig::half_period(pair).upper_bound();
      emit({rec}, format, out_path);
      return 0;
    }
    if (verify->parsed()) {
      if (!p_values.empty()) {
        grid.p_values = p_values;
        // A custom p list stands on its own unless the flag asks otherwise.
        if (verify->count("--near-boundary") == 0)
          grid.add_near_boundary_p = false;
      }
      if (!q_values.empty()) grid.q_values = q_values;
      for (double qv : grid.q_values)
        if (!(qv > 0.0))
          throw gentrig::DomainError("q grid values must be positive");
      return run_verify(suite, grid, format, out_path);
    }
    if (table->parsed()) {
      if (n < 2) throw gentrig::DomainError("table needs n >= 2");
      const ParamPair pair(p, q);
      const double span = table_span(table_func, pair);
      const EvalFn& fn = eval_functions().at(table_func);
      std::vector<OutputRecord> records;
      for (int i = 0; i < n; ++i) {
        const double xi = span * i / (n - 1);
        const FnValue v = fn(pair, xi);
        OutputRecord rec;
        rec.suite = table_func;
        rec.p = p;
        rec.q = q;
        rec.r = gentrig::dual_index(pair);
        rec.x = xi;
        rec.value = v.value;
        rec.err_est = v.err_est;
        records.push_back(std::move(rec));
      }
      emit(records, format, out_path);
      return 0;
    }
  } catch (const gentrig::DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 2;
  } catch (const gentrig::ConvergenceError& e) {
    std::cerr << "convergence error: " << e.what() << "\n";
    return 2;
  } catch (const gentrig::OverflowSignal& e) {
    std::cerr << "overflow: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
