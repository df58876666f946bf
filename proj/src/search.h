/// @file search.h
/// Machinery shared by the branch-and-bound and best-first strategies.
#ifndef MPMCS_SRC_SEARCH_H_
#define MPMCS_SRC_SEARCH_H_

#include <chrono>
#include <limits>
#include <optional>
#include <stop_token>
#include <vector>

#include "mpmcs/propagator.h"
#include "mpmcs/solver.h"

namespace mpmcs::internal {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();
/// Slack on pruning comparisons so rounding never discards the optimum.
inline constexpr double kPruneSlack = 1e-12;

/// Deadline plus cooperative cancellation.
class Budget {
 public:
  Budget(Seconds limit, std::stop_token stop);

  /// Polled at every decision.
  bool Exhausted();
  bool cancelled() const { return cancelled_; }
  bool timed_out() const { return timed_out_; }
  Seconds elapsed() const;

 private:
  using Clock = std::chrono::steady_clock;
  Clock::time_point start_;
  Clock::time_point deadline_;
  std::stop_token stop_;
  bool cancelled_ = false;
  bool timed_out_ = false;
};

void CheckConfig(const SolverConfig& config);

/// Event variables in branching order.
std::vector<Var> EventOrder(const WcnfInstance& instance,
                            const SolverConfig& config);

/// Per-variable soft weight (zero for auxiliaries).
std::vector<double> WeightsByVar(const WcnfInstance& instance);

/// Lower bound on the extra soft weight needed to satisfy the circuit under
/// a partial assignment. OR takes the cheapest input, AND sums its inputs,
/// and an unassigned event is charged its weight divided by the number of
/// root-to-event paths through it, so shared events are never charged more
/// than once in total. Exact on trees.
class CircuitBound {
 public:
  explicit CircuitBound(const WcnfInstance& instance);

  bool available() const { return available_; }
  /// Infinity when the circuit cannot be satisfied; zero when the events
  /// already true satisfy it.
  double Evaluate(const Propagator& propagator);

 private:
  bool available_ = false;
  Var root_ = 0;
  const std::vector<GateDefinition>* gates_ = nullptr;
  std::vector<Var> event_vars_;
  std::vector<double> charge_;
  std::vector<double> cost_;
};

/// Falsified weight of the events currently assigned true.
double PaidWeight(const Propagator& propagator, const std::vector<Var>& events,
                  const std::vector<double>& weights);

/// Tries to finish the current assignment by setting every unassigned event
/// false. On success returns the model, leaving the propagator at the level
/// it was called with; otherwise std::nullopt.
std::optional<std::vector<bool>> CompleteWithEventsFalse(
    Propagator* propagator, const std::vector<Var>& events,
    const CnfFormula& hard);

/// First position >= `from` in `order` whose variable is unassigned.
std::size_t NextUnassigned(const Propagator& propagator,
                           const std::vector<Var>& order, std::size_t from);

}  // namespace mpmcs::internal

#endif  // MPMCS_SRC_SEARCH_H_
