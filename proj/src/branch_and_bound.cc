/// @file branch_and_bound.cc
/// Depth-first branch and bound over basic-event variables.
#include <optional>

#include "search.h"

namespace mpmcs {
namespace {

using internal::kInfinity;
using internal::kPruneSlack;

class BranchAndBound {
 public:
  BranchAndBound(const WcnfInstance& instance, const SolverConfig& config,
                 std::stop_token stop)
      : instance_(instance),
        config_(config),
        budget_(config.time_budget, std::move(stop)),
        propagator_(instance.hard),
        bound_(instance),
        order_(internal::EventOrder(instance, config)),
        weights_(internal::WeightsByVar(instance)) {}

  Solution Run() {
    if (!propagator_.consistent()) {
      throw UnsatisfiableError("Hard clauses are refuted by propagation.");
    }
    Search(0, 0.0);

    bool aborted = budget_.cancelled() || budget_.timed_out();
    if (!incumbent_) {
      if (budget_.cancelled()) throw CancelledError("Search cancelled.");
      if (budget_.timed_out()) {
        throw BudgetExceededError("Time budget exhausted before any model.");
      }
      throw UnsatisfiableError("Hard clauses have no model.");
    }
    Solution solution;
    solution.model = std::move(*incumbent_);
    solution.weight = FalsifiedWeight(instance_, solution.model);
    solution.proven_optimal = !aborted;
    solution.stats = stats_;
    solution.stats.propagations = propagator_.propagations();
    solution.stats.elapsed = budget_.elapsed();
    solution.solver_id = ConfigName(config_);
    return solution;
  }

 private:
  void Search(std::size_t position, double parent_weight) {
    if (budget_.Exhausted()) return;
    ++stats_.nodes;
    double weight = internal::PaidWeight(propagator_, order_, weights_);
    if (config_.on_node) config_.on_node(parent_weight, weight);

    double bound = bound_.available() ? bound_.Evaluate(propagator_) : 0.0;
    if (bound == kInfinity) return;
    if (incumbent_ && weight + bound >= incumbent_weight_ - kPruneSlack) {
      return;
    }
    if (bound == 0) {
      // Nothing else needs paying: the cheapest completion in this subtree
      // sets the remaining events false.
      if (auto model = internal::CompleteWithEventsFalse(
              &propagator_, order_, instance_.hard)) {
        incumbent_ = std::move(model);
        incumbent_weight_ = weight;
        return;
      }
    }

    position = internal::NextUnassigned(propagator_, order_, position);
    if (position == order_.size()) return;
    Var var = order_[position];
    ++stats_.decisions;
    for (bool negative : {true, false}) {
      int level = propagator_.level();
      propagator_.NewLevel();
      if (propagator_.Assign(Literal(var, negative)) &&
          propagator_.Propagate()) {
        Search(position + 1, weight);
      }
      propagator_.Backtrack(level);
      if (budget_.cancelled() || budget_.timed_out()) return;
    }
  }

  const WcnfInstance& instance_;
  const SolverConfig& config_;
  internal::Budget budget_;
  Propagator propagator_;
  internal::CircuitBound bound_;
  std::vector<Var> order_;
  std::vector<double> weights_;
  std::optional<std::vector<bool>> incumbent_;
  double incumbent_weight_ = kInfinity;
  SolverStats stats_;
};

}  // namespace

Solution SolveBranchAndBound(const WcnfInstance& instance,
                             const SolverConfig& config,
                             std::stop_token stop) {
  internal::CheckConfig(config);
  return BranchAndBound(instance, config, std::move(stop)).Run();
}

}  // namespace mpmcs
