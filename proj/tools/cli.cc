/// @file cli.cc
/// Subcommands: solve, check, export-wcnf, generate, bench.
#include "cli.h"

#include <chrono>
#include <cmath>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "mpmcs/encoding.h"
#include "mpmcs/fault_tree.h"
#include "mpmcs/generator.h"
#include "mpmcs/oracle.h"
#include "mpmcs/report.h"
#include "mpmcs/solver.h"

namespace mpmcs::cli {
namespace {

struct SolveOptions {
  std::string file;
  int workers = 0;  // 0: one thread per configuration
  double timeout = 60;
  bool all_optima = false;
  std::string strategy = "portfolio";
};

std::vector<SolverConfig> Configs(const SolveOptions& opts) {
  Seconds budget(opts.timeout);
  std::vector<SolverConfig> configs = DefaultPortfolio(budget);
  if (opts.strategy == "bnb") {
    configs.resize(1);
  } else if (opts.strategy == "bestfirst") {
    configs.erase(configs.begin());
  }
  if (opts.workers > 0 && configs.size() > static_cast<std::size_t>(opts.workers)) {
    configs.resize(opts.workers);
  }
  return configs;
}

bool SameWeight(double a, double b) {
  return std::abs(a - b) <= 1e-9 * std::max({1.0, std::abs(a), std::abs(b)});
}

std::string ResultLine(const std::string& who, const std::vector<std::string>& set,
                       double log_weight, double probability) {
  std::ostringstream line;
  line << who << ": {";
  for (std::size_t i = 0; i < set.size(); ++i) {
    line << (i ? ", " : "") << set[i];
  }
  line.precision(17);
  line << "} log_weight=" << log_weight << " probability=" << probability;
  return line.str();
}

int RunSolve(const SolveOptions& opts, std::ostream& out) {
  FaultTree tree = LoadFaultTree(opts.file);
  WcnfInstance instance = BuildWcnf(tree);
  WeightMap weights = BuildWeightMap(tree);

  RunReport report;
  report.stats = ComputeStats(tree, instance);
  std::vector<SolverConfig> configs = Configs(opts);
  PortfolioResult run;
  try {
    run = SolvePortfolio(instance, configs);
  } catch (const UnsatisfiableError&) {
    throw;
  } catch (const Error&) {
    // Every worker ran out of budget without a model.
    out << ToJson(report) << '\n';
    return kNotProven;
  }
  report.workers = run.workers;
  report.proven = run.solution.proven_optimal;
  report.mpmcs = ExtractMpmcs(run.solution, instance, weights);

  if (opts.all_optima) {
    std::vector<MpmcsResult> optima = {*report.mpmcs};
    WcnfInstance blocked = instance;
    while (report.proven) {
      std::vector<Var> vars;
      for (const std::string& id : optima.back().cut_set) {
        vars.push_back(instance.var_map.event_var(id));
      }
      blocked = WithBlockingClause(blocked, vars);
      PortfolioResult next;
      try {
        next = SolvePortfolio(blocked, configs);
      } catch (const UnsatisfiableError&) {
        break;
      }
      if (!next.solution.proven_optimal) {
        report.proven = false;
        break;
      }
      MpmcsResult tied = ExtractMpmcs(next.solution, blocked, weights);
      if (!SameWeight(tied.log_weight, optima.front().log_weight)) break;
      optima.push_back(std::move(tied));
    }
    report.optima = std::move(optima);
  }
  out << ToJson(report) << '\n';
  return report.proven ? kOk : kNotProven;
}

int RunCheck(const std::string& file, double timeout, std::ostream& out) {
  FaultTree tree = LoadFaultTree(file);
  std::vector<oracle::CutSet> optima = oracle::OracleOptima(tree);
  MpmcsResult expected = oracle::OracleMpmcs(tree);

  WcnfInstance instance = BuildWcnf(tree);
  PortfolioResult run =
      SolvePortfolio(instance, DefaultPortfolio(Seconds(timeout)));
  if (!run.solution.proven_optimal) {
    out << "pipeline did not prove optimality within budget\n";
    return kNotProven;
  }
  MpmcsResult actual = ExtractMpmcs(run.solution, instance, BuildWeightMap(tree));

  bool weight_ok = SameWeight(actual.log_weight, expected.log_weight);
  bool set_ok = std::any_of(optima.begin(), optima.end(), [&](const auto& c) {
    return c.events == actual.cut_set;
  });
  std::string pipeline = ResultLine(actual.solver_id, actual.cut_set,
                                    actual.log_weight, actual.probability);
  std::string reference = ResultLine("oracle", expected.cut_set,
                                     expected.log_weight, expected.probability);
  if (weight_ok && set_ok) {
    out << "OK " << pipeline << '\n';
    return kOk;
  }
  out << "MISMATCH\n  " << pipeline << "\n  " << reference << '\n';
  return kOracleMismatch;
}

int RunExport(const std::string& file, const std::string& output) {
  WcnfInstance instance = BuildWcnf(LoadFaultTree(file));
  std::ofstream stream(output, std::ios::binary | std::ios::trunc);
  if (!stream) throw Error(output + ": cannot open for writing.");
  WriteWcnf(instance, stream);
  stream.flush();
  if (!stream) throw Error(output + ": write failed.");
  return kOk;
}

int RunGenerate(const GeneratorParams& params, const std::string& output,
                std::ostream& out) {
  std::string json = SerializeFaultTree(RandomFaultTree(params), 2) + "\n";
  if (output.empty() || output == "-") {
    out << json;
    return kOk;
  }
  std::ofstream stream(output, std::ios::binary | std::ios::trunc);
  if (!stream) throw Error(output + ": cannot open for writing.");
  stream << json;
  if (!stream) throw Error(output + ": write failed.");
  return kOk;
}

int RunBench(const std::vector<int>& sizes, std::uint64_t seed, double timeout,
             int workers, std::ostream& out) {
  out << "size,events,gates,clauses,wall_ms,proven\n";
  for (int size : sizes) {
    GeneratorParams params;
    params.nodes = size;
    params.seed = seed;
    auto start = std::chrono::steady_clock::now();
    FaultTree tree = RandomFaultTree(params);
    WcnfInstance instance = BuildWcnf(tree);
    SolveOptions opts;
    opts.timeout = timeout;
    opts.workers = workers;
    bool proven = false;
    try {
      PortfolioResult run = SolvePortfolio(instance, Configs(opts));
      ExtractMpmcs(run.solution, instance, BuildWeightMap(tree));
      proven = run.solution.proven_optimal;
    } catch (const Error&) {
      proven = false;
    }
    double wall_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    out << size << ',' << tree.num_basic_events() << ',' << tree.num_gates()
        << ',' << instance.hard.clauses().size() << ',' << wall_ms << ','
        << (proven ? "true" : "false") << '\n';
  }
  return kOk;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Maximum probability minimal cut sets of fault trees"};
  app.name("mpmcs");
  app.require_subcommand(1);

  SolveOptions solve_opts;
  CLI::App* solve = app.add_subcommand("solve", "Compute the MPMCS of a tree");
  solve->add_option("file", solve_opts.file, "Fault-tree JSON")->required();
  solve->add_option("--workers", solve_opts.workers, "Maximum solver threads")
      ->check(CLI::PositiveNumber);
  solve->add_option("--timeout", solve_opts.timeout, "Budget in seconds")
      ->check(CLI::PositiveNumber);
  solve->add_flag("--all-optima", solve_opts.all_optima,
                  "Enumerate every cut set tied for the optimum");
  solve->add_option("--strategy", solve_opts.strategy)
      ->check(CLI::IsMember({"bnb", "bestfirst", "portfolio"}));

  std::string check_file;
  double check_timeout = 60;
  CLI::App* check =
      app.add_subcommand("check", "Compare the pipeline with brute force");
  check->add_option("file", check_file, "Fault-tree JSON")->required();
  check->add_option("--timeout", check_timeout, "Budget in seconds")
      ->check(CLI::PositiveNumber);

  std::string export_file, export_out;
  CLI::App* export_wcnf =
      app.add_subcommand("export-wcnf", "Write the DIMACS WCNF instance");
  export_wcnf->add_option("file", export_file, "Fault-tree JSON")->required();
  export_wcnf->add_option("-o,--output", export_out, "WCNF file")->required();

  GeneratorParams gen;
  std::string gen_out;
  CLI::App* generate =
      app.add_subcommand("generate", "Write a random fault tree");
  generate->add_option("--nodes", gen.nodes, "Node count")
      ->required()
      ->check(CLI::PositiveNumber);
  generate->add_option("--seed", gen.seed, "Random seed")->required();
  generate->add_option("--max-fan-in", gen.max_fan_in);
  generate->add_option("--and-fraction", gen.and_fraction);
  generate->add_option("--prob-low", gen.prob_low);
  generate->add_option("--prob-high", gen.prob_high);
  generate->add_option("-o,--output", gen_out, "Output file (default stdout)");

  std::vector<int> bench_sizes;
  std::uint64_t bench_seed = 0;
  double bench_timeout = 60;
  int bench_workers = 0;
  CLI::App* bench = app.add_subcommand("bench", "Solve generated trees, CSV");
  bench->add_option("--sizes", bench_sizes, "Comma-separated node counts")
      ->required()
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  bench->add_option("--seed", bench_seed)->required();
  bench->add_option("--timeout", bench_timeout, "Per-tree budget in seconds")
      ->check(CLI::PositiveNumber);
  bench->add_option("--workers", bench_workers)->check(CLI::PositiveNumber);

  std::vector<std::string> argv_storage = {"mpmcs"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const std::string& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidInput;
  }

  try {
    if (*solve) return RunSolve(solve_opts, out);
    if (*check) return RunCheck(check_file, check_timeout, out);
    if (*export_wcnf) return RunExport(export_file, export_out);
    if (*generate) return RunGenerate(gen, gen_out, out);
    if (*bench) {
      return RunBench(bench_sizes, bench_seed, bench_timeout, bench_workers,
                      out);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
  return kInvalidInput;
}

}  // namespace mpmcs::cli
