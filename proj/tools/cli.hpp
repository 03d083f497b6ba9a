// Copyright 2026 The robustcut Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ROBUSTCUT_TOOLS_CLI_HPP
#define ROBUSTCUT_TOOLS_CLI_HPP

// Command-line front end: solve, check, gen, bench.
//
// Exit codes: 0 success (ConicOptimal / Optimal / all rows feasible),
// 2 usage, parse or validation error, 3 infeasible, 4 any other
// non-optimal status (Stalled, IterLimit, Unbounded).

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "robustcut/robustcut.hpp"

namespace robustcut::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInfeasible = 3;
inline constexpr int kExitOther = 4;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Writes `content` to `path` via a temporary file and rename.
inline void write_atomic(const std::filesystem::path& path, const std::string& content) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("cannot write " + tmp.string());
    os << content;
    if (!os) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

inline std::filesystem::path sibling(const std::string& input, const std::string& suffix) {
  std::filesystem::path p(input);
  auto out = p.parent_path() / p.stem();
  out += suffix;
  return out;
}

inline Json number_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

inline Json reliability_json(const ReliabilityReport& rep) {
  Json rows = Json::array();
  for (const auto& e : rep) {
    Json r;
    r["row"] = e.row;
    r["conic_lhs"] = e.conic_lhs;
    r["margin"] = e.margin;
    r["beta_true"] = number_or_null(e.beta_true);
    r["p_exact"] = e.p_exact;
    r["p_bound"] = e.p_bound;
    r["feasible"] = e.feasible;
    rows.push_back(std::move(r));
  }
  Json doc;
  doc["rows"] = std::move(rows);
  return doc;
}

inline void print_reliability(std::ostream& out, const ReliabilityReport& rep) {
  out << "row  conic_lhs      margin         beta_true      Phi(-beta)     exp(-beta^2/2)  feasible\n";
  for (const auto& e : rep) {
    out << std::setw(3) << e.row << "  " << std::setw(13) << std::setprecision(6) << e.conic_lhs
        << "  " << std::setw(13) << e.margin << "  " << std::setw(13) << e.beta_true << "  "
        << std::setw(13) << e.p_exact << "  " << std::setw(13) << e.p_bound << "   "
        << (e.feasible ? "yes" : "NO") << '\n';
  }
}

inline std::vector<double> parse_vector(const std::string& text) {
  std::vector<double> x;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      x.push_back(std::stod(tok, &used));
      if (tok.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw UsageError("cannot parse design vector entry '" + tok + "'");
    }
  }
  return x;
}

template <class P>
void require_valid(const P& problem) {
  const auto report = validate(problem);
  if (report.empty()) return;
  std::string msg = "validation failed:";
  for (const auto& v : report) msg += "\n  " + describe(v);
  throw UsageError(msg);
}

struct SolveArgs {
  std::string input;
  std::string method = "cuts";
  std::string cut_policy = "all";
  std::string out, trace, report;
  SolverConfig config;
};

inline int exit_for(SolveStatus s) {
  switch (s) {
    case SolveStatus::ConicOptimal: return kExitOk;
    case SolveStatus::MasterInfeasible: return kExitInfeasible;
    default: return kExitOther;
  }
}

inline int exit_for(MilpStatus s) {
  switch (s) {
    case MilpStatus::Optimal: return kExitOk;
    case MilpStatus::Infeasible: return kExitInfeasible;
    default: return kExitOther;
  }
}

inline int cmd_solve(const SolveArgs& args, std::ostream& out) {
  const auto doc = load_problem(args.input);
  const auto out_path = args.out.empty() ? sibling(args.input, ".solution.json")
                                         : std::filesystem::path(args.out);
  const auto trace_path = args.trace.empty() ? sibling(args.input, ".trace.csv")
                                             : std::filesystem::path(args.trace);
  SolverConfig cfg = args.config;
  if (args.cut_policy == "all") cfg.cut_policy = CutPolicy::AllRows;
  else if (args.cut_policy == "violated") cfg.cut_policy = CutPolicy::ViolatedOnly;
  else throw UsageError("--cut-policy must be 'all' or 'violated'");
  if (!(cfg.eps_stall > 0) || !(cfg.feas_tol > 0) || cfg.max_iter < 1)
    throw UsageError("tolerances must be > 0 and --max-iter >= 1");

  Json sol;
  std::string status;
  int code;
  if (args.method == "cuts") {
    const auto* problem = std::get_if<RobustProblem>(&doc);
    if (!problem) throw UsageError("--method cuts needs ellipsoidal rows (cov/beta)");
    require_valid(*problem);
    const auto rep = solve(*problem, cfg);
    status = std::string(to_string(rep.final_status));
    code = exit_for(rep.final_status);
    sol["status"] = status;
    sol["objective"] = rep.final_x.empty() ? Json(nullptr) : Json(rep.final_objective);
    sol["x"] = rep.final_x;
    sol["iterations"] = rep.iterations.size();
    sol["method"] = "cuts";
    std::ostringstream csv;
    write_trace_csv(csv, rep);
    write_atomic(trace_path, csv.str());
    if (!rep.final_x.empty()) {
      const auto rel_path = args.report.empty() ? sibling(args.input, ".reliability.json")
                                                : std::filesystem::path(args.report);
      write_atomic(rel_path, reliability_json(rep.reliability).dump(1) + "\n");
    }
  } else if (args.method == "budget") {
    const auto* problem = std::get_if<BudgetProblem>(&doc);
    if (!problem) throw UsageError("--method budget needs budget rows (delta/gamma)");
    require_valid(*problem);
    const auto res = solve_budget(*problem, cfg);
    status = std::string(to_string(res.status));
    code = exit_for(res.status);
    sol["status"] = status;
    sol["objective"] = res.x.empty() ? Json(nullptr) : Json(res.objective);
    sol["x"] = res.x;
    sol["iterations"] = 1;
    sol["method"] = "budget";
    SolveReport rep;
    if (!res.x.empty()) {
      IterationRecord rec;
      rec.iter = 1;
      rec.x = res.x;
      rec.objective = res.objective;
      for (std::size_t i = 0; i < problem->rows.size(); ++i) {
        const auto& r = problem->rows[i];
        const double lhs = r.nominal_lhs(res.x) + protection_value(r, res.x);
        if (lhs > r.b + cfg.feas_tol * (1.0 + std::abs(r.b))) rec.violated.push_back({i, lhs - r.b});
      }
      rep.iterations.push_back(std::move(rec));
    }
    std::ostringstream csv;
    write_trace_csv(csv, rep);
    write_atomic(trace_path, csv.str());
  } else {
    throw UsageError("--method must be 'cuts' or 'budget'");
  }
  write_atomic(out_path, sol.dump(1) + "\n");
  out << status << " objective=" << (sol["objective"].is_null() ? std::string("n/a") : format_double(sol["objective"].get<double>()))
      << " iterations=" << sol["iterations"].get<std::size_t>() << " -> " << out_path.string() << '\n';
  return code;
}

inline int cmd_check(const std::string& input, const std::string& design, const std::string& out_path,
                     double feas_tol, std::ostream& out) {
  const auto doc = load_problem(input);
  const auto* problem = std::get_if<RobustProblem>(&doc);
  if (!problem) throw UsageError("check needs ellipsoidal rows (cov/beta)");
  require_valid(*problem);
  const auto x = parse_vector(design);
  if (x.size() != problem->num_vars())
    throw UsageError("design vector has " + std::to_string(x.size()) + " entries, problem has " +
                     std::to_string(problem->num_vars()) + " variables");
  const auto rep = report(*problem, x, feas_tol);
  print_reliability(out, rep);
  if (!out_path.empty()) write_atomic(out_path, reliability_json(rep).dump(1) + "\n");
  const bool all = std::all_of(rep.begin(), rep.end(), [](const auto& e) { return e.feasible; });
  return all ? kExitOk : kExitInfeasible;
}

inline std::string gen_document(const std::string& family, long blocks, const std::string& variant) {
  if (variant != "ellipsoid" && variant != "budget")
    throw UsageError("--variant must be 'ellipsoid' or 'budget'");
  if (family == "illustrative") {
    if (variant == "budget") throw UsageError("the illustrative family has no budget variant");
    return dump_problem(gen_illustrative());
  }
  if (family == "truss") {
    if (blocks < 1) throw UsageError("--blocks must be >= 1");
    TrussSpec spec;
    spec.n_blocks = static_cast<std::size_t>(blocks);
    if (variant == "budget") return dump_problem(gen_truss_budget(spec));
    return dump_problem(gen_truss(spec));
  }
  throw UsageError("unknown family '" + family + "' (expected illustrative or truss)");
}

struct BenchRow {
  std::string method;
  std::size_t n_blocks;
  double seconds;
  double objective;
  std::string status;
};

inline std::vector<BenchRow> run_bench(const std::vector<long>& blocks,
                                       const std::vector<std::string>& methods, int repeat) {
  if (methods.empty()) throw UsageError("--methods must not be empty");
  if (blocks.empty()) throw UsageError("--blocks must not be empty");
  if (repeat < 1) throw UsageError("--repeat must be >= 1");
  for (const auto& m : methods)
    if (m != "cuts" && m != "budget") throw UsageError("unknown method '" + m + "'");
  for (long b : blocks)
    if (b < 1) throw UsageError("--blocks entries must be >= 1");

  std::vector<BenchRow> rows;
  for (long b : blocks) {
    TrussSpec spec;
    spec.n_blocks = static_cast<std::size_t>(b);
    for (const auto& m : methods) {
      BenchRow row{m, spec.n_blocks, kInf, 0.0, ""};
      for (int r = 0; r < repeat; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        if (m == "cuts") {
          const auto rep = solve(gen_truss(spec));
          row.objective = rep.final_objective;
          row.status = std::string(to_string(rep.final_status));
        } else {
          const auto res = solve_budget(gen_truss_budget(spec));
          row.objective = res.objective;
          row.status = std::string(to_string(res.status));
        }
        const double dt =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        row.seconds = std::min(row.seconds, dt);
      }
      rows.push_back(row);
    }
  }
  return rows;
}

inline std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream os;
  os << "method,n_b,wall_seconds,objective,status\n";
  for (const auto& r : rows)
    os << r.method << ',' << r.n_blocks << ',' << format_double(r.seconds) << ','
       << format_double(r.objective) << ',' << r.status << '\n';
  return os.str();
}

/// Entry point shared by the executable and the tests.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
  CLI::App app{"Robust MILP with ellipsoidal uncertainty: cutting-plane solver and tools"};
  app.require_subcommand(1);

  SolveArgs sa;
  auto* solve_cmd = app.add_subcommand("solve", "Solve a problem document");
  solve_cmd->add_option("input", sa.input, "Problem JSON")->required();
  solve_cmd->add_option("--method", sa.method, "cuts | budget");
  solve_cmd->add_option("--eps", sa.config.eps_stall, "Stall tolerance on ||x_k - x_{k-1}||");
  solve_cmd->add_option("--feas-tol", sa.config.feas_tol, "Conic feasibility tolerance");
  solve_cmd->add_option("--max-iter", sa.config.max_iter, "Cut-loop iteration cap");
  solve_cmd->add_option("--cut-policy", sa.cut_policy, "all | violated");
  solve_cmd->add_option("--trace", sa.trace, "Iteration trace CSV path");
  solve_cmd->add_option("--out", sa.out, "Solution JSON path");
  solve_cmd->add_option("--report", sa.report, "Reliability report JSON path");

  std::string check_input, check_x, check_out;
  double check_tol = SolverConfig{}.feas_tol;
  auto* check_cmd = app.add_subcommand("check", "Reliability report for a design vector");
  check_cmd->add_option("input", check_input, "Problem JSON")->required();
  check_cmd->add_option("--x", check_x, "Comma-separated design vector")->required();
  check_cmd->add_option("--out", check_out, "Report JSON path");
  check_cmd->add_option("--feas-tol", check_tol, "Conic feasibility tolerance");

  std::string family, variant = "ellipsoid", gen_out;
  long gen_blocks = 1;
  auto* gen_cmd = app.add_subcommand("gen", "Write a benchmark problem document");
  gen_cmd->add_option("family", family, "illustrative | truss")->required();
  gen_cmd->add_option("--blocks", gen_blocks, "Number of truss blocks");
  gen_cmd->add_option("--variant", variant, "ellipsoid | budget");
  gen_cmd->add_option("--out", gen_out, "Output path (stdout if omitted)");

  std::vector<long> bench_blocks{1, 10};
  std::vector<std::string> bench_methods{"cuts", "budget"};
  int bench_repeat = 1;
  std::string bench_out;
  bool methods_given = false;
  auto* bench_cmd = app.add_subcommand("bench", "Time both methods on truss instances");
  bench_cmd->add_option("--blocks", bench_blocks, "Block counts")->delimiter(',');
  auto* mopt = bench_cmd->add_option("--methods", bench_methods, "cuts,budget")->delimiter(',')
                   ->expected(0, -1);
  bench_cmd->add_option("--repeat", bench_repeat, "Repetitions per configuration");
  bench_cmd->add_option("--out", bench_out, "CSV path (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
  methods_given = mopt->count() > 0;
  if (methods_given) {
    bench_methods.erase(std::remove(bench_methods.begin(), bench_methods.end(), std::string{}),
                        bench_methods.end());
  }

  try {
    if (solve_cmd->parsed()) return cmd_solve(sa, out);
    if (check_cmd->parsed()) return cmd_check(check_input, check_x, check_out, check_tol, out);
    if (gen_cmd->parsed()) {
      const auto text = gen_document(family, gen_blocks, variant);
      if (gen_out.empty()) out << text;
      else write_atomic(gen_out, text);
      return kExitOk;
    }
    if (bench_cmd->parsed()) {
      const auto csv = bench_csv(run_bench(bench_blocks, bench_methods, bench_repeat));
      if (bench_out.empty()) out << csv;
      else write_atomic(bench_out, csv);
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitOther;
  }
  return kExitUsage;
}

}  // namespace robustcut::cli

#endif  // ROBUSTCUT_TOOLS_CLI_HPP
