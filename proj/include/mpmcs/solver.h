/// @file solver.h
/// Exact weighted partial MaxSAT search over fault-tree instances and the
/// parallel portfolio that races several configurations.
///
/// Both strategies branch only on basic-event variables, trying the
/// soft-preferred value (event absent) first, and rely on unit propagation
/// to fix the Tseitin auxiliaries. When the instance carries gate
/// definitions, the cost still to be paid is bounded from below by a
/// min/sum pass over the circuit; without them the bound is zero.
#ifndef MPMCS_SOLVER_H_
#define MPMCS_SOLVER_H_

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <stop_token>
#include <string>
#include <vector>

#include "mpmcs/encoding.h"

namespace mpmcs {

enum class Strategy { kBranchAndBound, kBestFirst };

enum class VariableOrder { kDescendingWeight, kAscendingWeight, kInputOrder };

using Seconds = std::chrono::duration<double>;

struct SolverConfig {
  Strategy strategy = Strategy::kBranchAndBound;
  VariableOrder order = VariableOrder::kDescendingWeight;
  Seconds time_budget = Seconds(60);
  /// Shuffles events of equal weight inside the ordering. Unset means the
  /// ordering is fully deterministic.
  std::optional<std::uint64_t> seed;
  /// Best-first only: maximum number of open states.
  std::size_t max_frontier = std::size_t{1} << 22;
  /// Test hook, called for every search node with the falsified weight of
  /// its parent and of the node itself.
  std::function<void(double parent_weight, double weight)> on_node;
};

/// Short identifier such as "bnb-desc" or "bestfirst-asc".
std::string ConfigName(const SolverConfig& config);

struct SolverStats {
  std::uint64_t decisions = 0;
  std::uint64_t propagations = 0;
  std::uint64_t nodes = 0;
  Seconds elapsed{0};
};

struct Solution {
  /// Indexed by CNF variable; entry 0 is unused. Satisfies every hard clause.
  std::vector<bool> model;
  /// Weight of falsified soft clauses, summed in ascending event-id order.
  double weight = 0;
  bool proven_optimal = false;
  SolverStats stats;
  std::string solver_id;
};

/// Depth-first branch and bound with an incumbent. Throws DomainError for a
/// non-positive budget, UnsatisfiableError if the hard clauses have no
/// model, BudgetExceededError or CancelledError if stopped before the first
/// model. Stopped after a model was found, it returns the incumbent with
/// `proven_optimal` unset.
Solution SolveBranchAndBound(const WcnfInstance& instance,
                             const SolverConfig& config,
                             std::stop_token stop = {});

/// Best-first search over partial event assignments ordered by falsified
/// weight plus lower bound; the first complete state popped is optimal.
/// Errors as SolveBranchAndBound, plus MemoryLimitError once the frontier
/// exceeds `config.max_frontier`.
Solution SolveBestFirst(const WcnfInstance& instance,
                        const SolverConfig& config,
                        std::stop_token stop = {});

/// Dispatches on `config.strategy`.
Solution Solve(const WcnfInstance& instance, const SolverConfig& config,
               std::stop_token stop = {});

struct PortfolioOptions {
  /// Time allowed for losing workers to exit after a winner is known.
  std::chrono::milliseconds grace_period{100};
};

struct WorkerReport {
  enum class Outcome { kOptimal, kIncumbent, kCancelled, kFailed };

  std::string solver_id;
  Outcome outcome = Outcome::kFailed;
  std::optional<double> weight;
  std::string error;
  SolverStats stats;
  /// Time from the winner's stop request to this worker's exit; zero for
  /// workers that finished before it.
  std::chrono::nanoseconds stop_latency{0};
};

struct PortfolioResult {
  Solution solution;
  std::vector<WorkerReport> workers;
  std::chrono::milliseconds grace_period{100};

  /// True when every worker left within the grace period.
  bool stopped_within_grace() const;
};

/// The default two-member portfolio: branch and bound over descending
/// weights and best-first over ascending weights.
std::vector<SolverConfig> DefaultPortfolio(Seconds time_budget);

/// Runs every config on its own thread. The first proven-optimal solution
/// wins and the others are asked to stop. Without any proof, the lowest-
/// weight incumbent is returned unproven. Throws only if every worker
/// fails (UnsatisfiableError when all agree the instance is unsatisfiable).
PortfolioResult SolvePortfolio(const WcnfInstance& instance,
                               const std::vector<SolverConfig>& configs,
                               const PortfolioOptions& options = {});

/// A maximum-probability minimal cut set.
struct MpmcsResult {
  std::vector<std::string> cut_set;  ///< Sorted event ids.
  double log_weight = 0;             ///< Sum of -ln p over the cut set.
  double probability = 1;            ///< exp(-log_weight).
  std::string solver_id;
  Seconds elapsed{0};
};

/// Reads the cut set off a solution, drops any event whose removal keeps
/// the hard clauses satisfiable (heaviest first), and reverses the log-space
/// transform. Throws InternalError if the result is not a satisfying,
/// set-minimal cut set.
MpmcsResult ExtractMpmcs(const Solution& solution,
                         const WcnfInstance& instance,
                         const WeightMap& weights);

}  // namespace mpmcs

#endif  // MPMCS_SOLVER_H_
