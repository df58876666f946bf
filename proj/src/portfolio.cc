/// @file portfolio.cc
/// First-finisher-wins parallel portfolio.
#include <algorithm>
#include <exception>
#include <mutex>
#include <thread>
#include <typeinfo>

#include "search.h"

namespace mpmcs {

std::string ConfigName(const SolverConfig& config) {
  std::string name =
      config.strategy == Strategy::kBranchAndBound ? "bnb" : "bestfirst";
  switch (config.order) {
    case VariableOrder::kDescendingWeight:
      return name + "-desc";
    case VariableOrder::kAscendingWeight:
      return name + "-asc";
    case VariableOrder::kInputOrder:
      return name + "-input";
  }
  return name;
}

Solution Solve(const WcnfInstance& instance, const SolverConfig& config,
               std::stop_token stop) {
  switch (config.strategy) {
    case Strategy::kBranchAndBound:
      return SolveBranchAndBound(instance, config, std::move(stop));
    case Strategy::kBestFirst:
      return SolveBestFirst(instance, config, std::move(stop));
  }
  throw DomainError("Unknown solver strategy.");
}

std::vector<SolverConfig> DefaultPortfolio(Seconds time_budget) {
  SolverConfig bnb;
  bnb.strategy = Strategy::kBranchAndBound;
  bnb.order = VariableOrder::kDescendingWeight;
  bnb.time_budget = time_budget;
  SolverConfig best_first;
  best_first.strategy = Strategy::kBestFirst;
  best_first.order = VariableOrder::kAscendingWeight;
  best_first.time_budget = time_budget;
  return {bnb, best_first};
}

bool PortfolioResult::stopped_within_grace() const {
  return std::all_of(workers.begin(), workers.end(), [&](const auto& w) {
    return w.stop_latency <= grace_period;
  });
}

PortfolioResult SolvePortfolio(const WcnfInstance& instance,
                               const std::vector<SolverConfig>& configs,
                               const PortfolioOptions& options) {
  if (configs.empty()) {
    throw DomainError("Portfolio needs at least one solver configuration.");
  }
  for (const SolverConfig& config : configs) internal::CheckConfig(config);

  using Clock = std::chrono::steady_clock;
  struct Slot {
    std::optional<Solution> solution;
    std::exception_ptr error;
    bool unsatisfiable = false;
    bool cancelled = false;
    Clock::time_point exit_time;
  };
  std::vector<Slot> slots(configs.size());
  std::stop_source stop;
  std::mutex mutex;
  std::optional<std::size_t> winner;
  Clock::time_point stop_time;

  {
    std::vector<std::jthread> workers;
    workers.reserve(configs.size());
    for (std::size_t i = 0; i < configs.size(); ++i) {
      workers.emplace_back([&, i] {
        Slot result;
        try {
          result.solution = Solve(instance, configs[i], stop.get_token());
        } catch (const UnsatisfiableError&) {
          result.error = std::current_exception();
          result.unsatisfiable = true;
        } catch (const CancelledError&) {
          result.error = std::current_exception();
          result.cancelled = true;
        } catch (...) {
          result.error = std::current_exception();
        }
        std::lock_guard lock(mutex);
        result.exit_time = Clock::now();
        if (!winner && result.solution && result.solution->proven_optimal) {
          winner = i;
          stop_time = result.exit_time;
          stop.request_stop();
        }
        slots[i] = std::move(result);
      });
    }
  }

  PortfolioResult result;
  result.grace_period = options.grace_period;
  std::vector<std::string> errors;
  bool all_unsatisfiable = true;
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < configs.size(); ++i) {
    Slot& slot = slots[i];
    WorkerReport report;
    report.solver_id = ConfigName(configs[i]);
    if (winner && slot.exit_time > stop_time) {
      report.stop_latency = slot.exit_time - stop_time;
    }
    if (slot.solution) {
      all_unsatisfiable = false;
      report.outcome = slot.solution->proven_optimal
                           ? WorkerReport::Outcome::kOptimal
                           : WorkerReport::Outcome::kIncumbent;
      report.weight = slot.solution->weight;
      report.stats = slot.solution->stats;
      if (!best || slot.solution->weight < slots[*best].solution->weight) {
        best = i;
      }
    } else {
      all_unsatisfiable = all_unsatisfiable && slot.unsatisfiable;
      if (slot.cancelled) report.outcome = WorkerReport::Outcome::kCancelled;
      try {
        std::rethrow_exception(slot.error);
      } catch (const std::exception& e) {
        report.error = e.what();
      }
      errors.push_back(report.solver_id + ": " + report.error);
    }
    result.workers.push_back(std::move(report));
  }

  if (winner) {
    result.solution = std::move(*slots[*winner].solution);
  } else if (best) {
    result.solution = std::move(*slots[*best].solution);
  } else {
    std::string msg = "All portfolio workers failed.";
    for (const std::string& e : errors) msg += "\n  " + e;
    if (all_unsatisfiable) throw UnsatisfiableError(msg);
    throw Error(msg);
  }
  return result;
}

}  // namespace mpmcs
