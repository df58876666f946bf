/// @file best_first.cc
/// Best-first search over partial event assignments.
#include <memory>
#include <optional>
#include <queue>

#include "search.h"

namespace mpmcs {
namespace {

using internal::kInfinity;

/// Persistent list of decisions; children share their parent's prefix.
struct DecisionPath {
  Literal decision;
  std::shared_ptr<const DecisionPath> parent;
};

struct OpenState {
  double priority;  // falsified weight + lower bound
  double weight;
  std::size_t depth;
  std::uint64_t sequence;
  std::size_t position;
  bool complete;
  std::shared_ptr<const DecisionPath> path;
};

struct LaterFirst {
  bool operator()(const OpenState& a, const OpenState& b) const {
    if (a.priority != b.priority) return a.priority > b.priority;
    if (a.depth != b.depth) return a.depth < b.depth;
    return a.sequence > b.sequence;
  }
};

class BestFirst {
 public:
  BestFirst(const WcnfInstance& instance, const SolverConfig& config,
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
    propagator_.NewLevel();
    Push(nullptr, 0, 0, 0.0);

    while (!open_.empty()) {
      if (budget_.Exhausted()) return Abort();
      OpenState state = open_.top();
      open_.pop();
      ++stats_.nodes;
      Replay(state.path.get());
      if (state.complete) {
        auto model = internal::CompleteWithEventsFalse(&propagator_, order_,
                                                       instance_.hard);
        if (!model) throw InternalError("Complete state failed to replay.");
        return Finish(std::move(*model), true);
      }
      std::size_t position =
          internal::NextUnassigned(propagator_, order_, state.position);
      if (position == order_.size()) continue;
      Var var = order_[position];
      ++stats_.decisions;
      for (bool negative : {true, false}) {
        auto path = std::make_shared<const DecisionPath>(
            DecisionPath{Literal(var, negative), state.path});
        propagator_.NewLevel();
        if (propagator_.Assign(path->decision) && propagator_.Propagate()) {
          Push(std::move(path), state.depth + 1, position + 1, state.weight);
        }
        propagator_.Backtrack(1);
      }
      if (open_.size() > config_.max_frontier) {
        throw MemoryLimitError("Best-first frontier exceeded " +
                               std::to_string(config_.max_frontier) +
                               " states.");
      }
    }
    if (incumbent_) return Finish(std::move(*incumbent_), true);
    throw UnsatisfiableError("Hard clauses have no model.");
  }

 private:
  /// Scores the state currently held by the propagator and queues it.
  void Push(std::shared_ptr<const DecisionPath> path, std::size_t depth,
            std::size_t position, double parent_weight) {
    double weight = internal::PaidWeight(propagator_, order_, weights_);
    if (config_.on_node) config_.on_node(parent_weight, weight);
    double bound = bound_.available() ? bound_.Evaluate(propagator_) : 0.0;
    if (bound == kInfinity) return;
    bool complete = false;
    if (bound == 0) {
      if (auto model = internal::CompleteWithEventsFalse(&propagator_, order_,
                                                         instance_.hard)) {
        complete = true;
        if (weight < incumbent_weight_) {
          incumbent_ = std::move(model);
          incumbent_weight_ = weight;
        }
      }
    }
    open_.push(OpenState{weight + bound, weight, depth, sequence_++, position,
                         complete, std::move(path)});
  }

  void Replay(const DecisionPath* path) {
    propagator_.Backtrack(0);
    propagator_.NewLevel();
    decisions_.clear();
    for (; path != nullptr; path = path->parent.get()) {
      decisions_.push_back(path->decision);
    }
    for (auto it = decisions_.rbegin(); it != decisions_.rend(); ++it) {
      propagator_.Assign(*it);
    }
    if (!propagator_.Propagate()) {
      throw InternalError("Queued state became inconsistent on replay.");
    }
  }

  Solution Abort() {
    if (!incumbent_) {
      if (budget_.cancelled()) throw CancelledError("Search cancelled.");
      throw BudgetExceededError("Time budget exhausted before any model.");
    }
    return Finish(std::move(*incumbent_), false);
  }

  Solution Finish(std::vector<bool> model, bool proven) {
    Solution solution;
    solution.model = std::move(model);
    solution.weight = FalsifiedWeight(instance_, solution.model);
    solution.proven_optimal = proven;
    solution.stats = stats_;
    solution.stats.propagations = propagator_.propagations();
    solution.stats.elapsed = budget_.elapsed();
    solution.solver_id = ConfigName(config_);
    return solution;
  }

  const WcnfInstance& instance_;
  const SolverConfig& config_;
  internal::Budget budget_;
  Propagator propagator_;
  internal::CircuitBound bound_;
  std::vector<Var> order_;
  std::vector<double> weights_;
  std::priority_queue<OpenState, std::vector<OpenState>, LaterFirst> open_;
  std::vector<Literal> decisions_;
  std::optional<std::vector<bool>> incumbent_;
  double incumbent_weight_ = kInfinity;
  std::uint64_t sequence_ = 0;
  SolverStats stats_;
};

}  // namespace

Solution SolveBestFirst(const WcnfInstance& instance,
                        const SolverConfig& config, std::stop_token stop) {
  internal::CheckConfig(config);
  return BestFirst(instance, config, std::move(stop)).Run();
}

}  // namespace mpmcs
