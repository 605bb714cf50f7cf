#include "agmpi/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <map>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>

#include "agmpi/agm.hpp"
#include "agmpi/elemfn.hpp"
#include "agmpi/piseries.hpp"
#include "agmpi/tables.hpp"
#include "agmpi/theta.hpp"
#include "agmpi/verify.hpp"

namespace agmpi {

namespace {

constexpr const char* kOutputNote =
    "pi and fn truncate at the last printed digit; table rounds each value "
    "to the figures shown, as in the published tables.";

const std::map<std::string, PiAlgo, std::less<>>& algo_names() {
  static const std::map<std::string, PiAlgo, std::less<>> names = {
      {"gl", PiAlgo::gl},
      {"gl1", PiAlgo::gl1},
      {"bb1", PiAlgo::bb1},
      {"bb2", PiAlgo::bb2},
      {"bb4", PiAlgo::bb4},
      {"madhava", PiAlgo::madhava},
      {"ramanujan", PiAlgo::ramanujan},
      {"chudnovsky", PiAlgo::chudnovsky},
  };
  return names;
}

int series_terms(double digits_per_term, const Precision& p) {
  return static_cast<int>(
             std::ceil(static_cast<double>(p.decimal_digits) / digits_per_term)) +
         2;
}

Real final_value(const PiIterate& it) {
  if (it.point) return *it.point;
  return *it.lower;
}

struct FnSpec {
  std::string name;
  std::string x;
  std::string y = "1";
  std::string method = "auto";
  long digits = 30;
};

LogMethod parse_log_method(const std::string& name) {
  if (name == "auto") return LogMethod::automatic;
  if (name == "salamin") return LogMethod::salamin;
  if (name == "sasaki_kanada") return LogMethod::sasaki_kanada;
  if (name == "taylor") return LogMethod::taylor_near_one;
  throw DomainError("unknown log method '" + name +
                    "' (expected auto, salamin, sasaki_kanada or taylor)");
}

Real evaluate_fn(const FnSpec& spec, const Precision& p) {
  const Real x = from_decimal(spec.x, p);
  const std::string& f = spec.name;
  if (f == "log") return log(x, parse_log_method(spec.method));
  if (f == "exp") return exp(x);
  if (f == "atan") return arctan(x);
  if (f == "acos") return arccos(x);
  if (f == "K") return elliptic_k(x);
  if (f == "E") return elliptic_e(x);
  if (f == "agm") return agm(x, from_decimal(spec.y, p)).limit;
  if (f == "nome") return nome(x);
  if (f == "theta2") return theta2(x);
  if (f == "theta3") return theta3(x);
  if (f == "theta4") return theta4(x);
  throw DomainError("unknown function '" + f + "'");
}

void print_iterates(const PiComputation& run, long digits, std::ostream& out) {
  for (const PiIterate& it : run.iterates) {
    out << it.n;
    if (it.lower) out << "  " << to_decimal(*it.lower, digits);
    if (it.upper) out << "  " << to_decimal(*it.upper, digits);
    if (it.point) out << "  " << to_decimal(*it.point, digits);
    out << '\n';
  }
}

struct BenchRow {
  std::string algo;
  long digits;
  int repeat;
  double median_seconds;
  int iterations;
  OpCounts ops;
};

BenchRow bench_one(PiAlgo algo, long digits, int repeat) {
  const Precision p = cli_precision(digits);
  std::vector<double> times;
  int iterations = 0;
  OpCounts ops;
  for (int r = 0; r < repeat; ++r) {
    reset_op_counts();
    const auto start = std::chrono::steady_clock::now();
    const PiComputation run = compute_pi(algo, p);
    times.push_back(std::chrono::duration<double>(
                        std::chrono::steady_clock::now() - start)
                        .count());
    iterations = run.iterations;
    ops = op_counts();
  }
  std::sort(times.begin(), times.end());
  return BenchRow{std::string(pi_algo_name(algo)), digits, repeat,
                  times[times.size() / 2], iterations, ops};
}

}  // namespace

std::optional<PiAlgo> parse_pi_algo(std::string_view name) {
  const auto& names = algo_names();
  if (auto it = names.find(name); it != names.end()) return it->second;
  return std::nullopt;
}

std::string_view pi_algo_name(PiAlgo algo) {
  for (const auto& [name, value] : algo_names()) {
    if (value == algo) return name;
  }
  return "";
}

int default_iterations(PiAlgo algo, const Precision& p) {
  switch (algo) {
    case PiAlgo::gl:
    case PiAlgo::gl1:
    case PiAlgo::bb1:
    case PiAlgo::bb2:
      return quadratic_iterations(p);
    case PiAlgo::bb4:
      return quartic_iterations(p);
    case PiAlgo::madhava:
      return series_terms(std::log10(3.0), p);
    case PiAlgo::ramanujan:
      return series_terms(8.0 - 0.1, p);
    case PiAlgo::chudnovsky:
      return chudnovsky_terms(p.decimal_digits);
  }
  return 1;
}

PiComputation compute_pi(PiAlgo algo, const Precision& p,
                         std::optional<int> iterations, bool keep_iterates) {
  const int n = iterations.value_or(default_iterations(algo, p));
  if (n < 1) throw DomainError("iterations must be at least 1");
  std::vector<PiIterate> its;
  switch (algo) {
    case PiAlgo::gl:
    case PiAlgo::gl1: {
      its = gl_run(n, p, keep_iterates ? OutputMode::all : OutputMode::final_only)
                .outputs;
      if (algo == PiAlgo::gl1) {
        // GL1 reports only the lower bound.
        for (PiIterate& it : its) {
          it.point = std::move(it.lower);
          it.lower.reset();
          it.upper.reset();
        }
      }
      break;
    }
    case PiAlgo::bb1:
      its = bb1_iterate(n, p);
      break;
    case PiAlgo::bb2:
      its = bb2_iterate(n, p);
      break;
    case PiAlgo::bb4:
      its = bb4_iterate(n, p);
      break;
    case PiAlgo::madhava:
      return PiComputation{madhava_pi(n, p), n, {}};
    case PiAlgo::ramanujan:
      return PiComputation{ramanujan_pi(n, p), n, {}};
    case PiAlgo::chudnovsky:
      return PiComputation{chudnovsky_pi_terms(n, p), n, {}};
  }
  Real value = final_value(its.back());
  if (!keep_iterates) its.clear();
  return PiComputation{std::move(value), n, std::move(its)};
}

Precision cli_precision(long digits) {
  if (digits < 1) throw DomainError("digits must be at least 1");
  if (const char* env = std::getenv("AGMPI_GUARD_BITS"); env && *env) {
    char* end = nullptr;
    const long guard = std::strtol(env, &end, 10);
    if (*end != '\0' || guard < 0) {
      throw std::invalid_argument(
          "AGMPI_GUARD_BITS must be a non-negative integer");
    }
    return Precision::from_digits(digits, guard);
  }
  return Precision::from_digits(digits);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"High-precision pi and elementary functions via the AGM",
               "agm-pi"};
  app.footer(kOutputNote);
  app.require_subcommand(1);

  std::string algo_name = "gl";
  long digits = 50;
  std::optional<int> iters;
  bool bounds = false;
  CLI::App* pi_cmd = app.add_subcommand("pi", "Compute pi");
  pi_cmd->add_option("--algo", algo_name,
                     "gl, gl1, bb1, bb2, bb4, madhava, ramanujan or chudnovsky")
      ->capture_default_str();
  pi_cmd->add_option("--digits", digits, "Significant digits")
      ->capture_default_str();
  pi_cmd->add_option("--iters", iters, "Iterations, or terms for a series");
  pi_cmd->add_flag("--bounds", bounds, "Print every iteration's output");

  FnSpec fn;
  CLI::App* fn_cmd = app.add_subcommand("fn", "Evaluate a function");
  fn_cmd->add_option("name", fn.name,
                     "log, exp, atan, acos, K, E, agm, nome, theta2, theta3 "
                     "or theta4")
      ->required();
  fn_cmd->add_option("--x", fn.x, "Argument (modulus for K, E, nome; nome "
                                  "q for theta)")
      ->required();
  fn_cmd->add_option("--y", fn.y, "Second AGM argument")->capture_default_str();
  fn_cmd->add_option("--digits", fn.digits, "Significant digits")
      ->capture_default_str();
  fn_cmd->add_option("--method", fn.method,
                     "log method: auto, salamin, sasaki_kanada or taylor")
      ->capture_default_str();

  std::string table_id;
  std::optional<int> rows;
  std::optional<long> table_digits;
  std::string format = "text";
  CLI::App* table_cmd = app.add_subcommand("table", "Reproduce a table");
  table_cmd->add_option("id", table_id,
                        "gl, gl_bounds, bb1, bb1_bounds, bb4 or equiv")
      ->required();
  table_cmd->add_option("--rows", rows, "Number of rows");
  table_cmd->add_option("--digits", table_digits,
                        "Minimum working digits (raised when a row needs more)");
  table_cmd->add_option("--format", format, "text or csv")
      ->capture_default_str();

  std::string suite = "all";
  long verify_digits = 100;
  CLI::App* verify_cmd = app.add_subcommand("verify", "Run an invariant suite");
  verify_cmd->add_option("--suite", suite,
                         "equivalence, bounds, legendre, theta, minpoly, "
                         "roundtrip or all")
      ->capture_default_str();
  verify_cmd->add_option("--digits", verify_digits, "Working digits")
      ->capture_default_str();

  std::vector<std::string> bench_algos = {"gl"};
  long bench_digits = 1000;
  int repeat = 3;
  bool csv = false;
  CLI::App* bench_cmd = app.add_subcommand("bench", "Time pi algorithms");
  bench_cmd->add_option("--algo", bench_algos, "Algorithm, repeatable or 'all'")
      ->capture_default_str();
  bench_cmd->add_option("--digits", bench_digits, "Significant digits")
      ->capture_default_str();
  bench_cmd->add_option("--repeat", repeat, "Runs per algorithm")
      ->capture_default_str();
  bench_cmd->add_flag("--csv", csv, "Machine-readable output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*pi_cmd) {
      const auto algo = parse_pi_algo(algo_name);
      if (!algo) {
        err << "error: unknown algorithm '" << algo_name << "'\n";
        return kExitUsage;
      }
      const Precision p = cli_precision(digits);
      const PiComputation run = compute_pi(*algo, p, iters, bounds);
      if (bounds) print_iterates(run, digits, out);
      out << to_decimal(run.value, digits) << '\n';
      return kExitOk;
    }

    if (*fn_cmd) {
      const Precision p = cli_precision(fn.digits);
      out << to_decimal(evaluate_fn(fn, p), fn.digits) << '\n';
      return kExitOk;
    }

    if (*table_cmd) {
      const auto id = parse_table_id(table_id);
      if (!id) {
        err << "error: unknown table '" << table_id << "'\n";
        return kExitUsage;
      }
      if (format != "text" && format != "csv") {
        err << "error: unknown format '" << format << "'\n";
        return kExitUsage;
      }
      const TableSpec spec{*id, rows.value_or(default_rows(*id)),
                           table_digits.value_or(default_digits(*id)),
                           format == "csv" ? TableFormat::csv
                                           : TableFormat::text};
      const Table table = build_table(spec);
      if (table.working_digits > spec.digits) {
        err << "note: working precision raised to " << table.working_digits
            << " digits\n";
      }
      out << render_table(table, spec.format);
      return kExitOk;
    }

    if (*verify_cmd) {
      const auto which = parse_suite(suite);
      if (!which) {
        err << "error: unknown suite '" << suite << "'\n";
        return kExitUsage;
      }
      const VerifyReport report = run_suite(*which, verify_digits);
      size_t passed = 0;
      for (const CheckResult& c : report.checks) {
        out << (c.passed ? "PASS  " : "FAIL  ") << c.name << "  "
            << c.residual << "  " << c.tolerance << '\n';
        passed += c.passed ? 1 : 0;
      }
      out << suite << ": " << passed << "/" << report.checks.size()
          << " checks passed at " << verify_digits << " digits\n";
      return report.passed() ? kExitOk : kExitVerifyFailed;
    }

    if (*bench_cmd) {
      if (repeat < 1) {
        err << "error: --repeat must be at least 1\n";
        return kExitUsage;
      }
      std::vector<PiAlgo> algos;
      for (const std::string& name : bench_algos) {
        if (name == "all") {
          for (const auto& entry : algo_names()) algos.push_back(entry.second);
          continue;
        }
        const auto algo = parse_pi_algo(name);
        if (!algo) {
          err << "error: unknown algorithm '" << name << "'\n";
          return kExitUsage;
        }
        algos.push_back(*algo);
      }
      if (csv) {
        out << "algo,digits,repeat,median_seconds,iterations,reciprocals,"
               "divisions,sqrts,inv_sqrts\n";
      }
      for (PiAlgo algo : algos) {
        const BenchRow row = bench_one(algo, bench_digits, repeat);
        if (csv) {
          out << row.algo << ',' << row.digits << ',' << row.repeat << ','
              << row.median_seconds << ',' << row.iterations << ','
              << row.ops.reciprocals << ',' << row.ops.divisions << ','
              << row.ops.sqrts << ',' << row.ops.inv_sqrts << '\n';
        } else {
          out << row.algo << ": " << row.digits << " digits, median "
              << row.median_seconds << " s over " << row.repeat
              << " runs, iterations " << row.iterations << ", reciprocals "
              << row.ops.reciprocals << ", divisions " << row.ops.divisions
              << ", sqrts " << row.ops.sqrts << ", inv_sqrts "
              << row.ops.inv_sqrts << '\n';
        }
      }
      return kExitOk;
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::range_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PrecisionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace agmpi
