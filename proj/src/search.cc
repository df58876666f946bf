/// @file search.cc
#include "search.h"

#include <algorithm>
#include <random>

namespace mpmcs::internal {

Budget::Budget(Seconds limit, std::stop_token stop)
    : start_(Clock::now()),
      deadline_(start_ + std::chrono::duration_cast<Clock::duration>(limit)),
      stop_(std::move(stop)) {}

bool Budget::Exhausted() {
  if (stop_.stop_requested()) cancelled_ = true;
  if (!cancelled_ && Clock::now() >= deadline_) timed_out_ = true;
  return cancelled_ || timed_out_;
}

Seconds Budget::elapsed() const { return Clock::now() - start_; }

void CheckConfig(const SolverConfig& config) {
  if (!(config.time_budget.count() > 0)) {
    throw DomainError("Solver time budget must be positive.");
  }
  if (config.max_frontier == 0) {
    throw DomainError("Best-first frontier cap must be positive.");
  }
}

std::vector<Var> EventOrder(const WcnfInstance& instance,
                            const SolverConfig& config) {
  std::vector<SoftClause> soft = instance.soft;
  switch (config.order) {
    case VariableOrder::kDescendingWeight:
      std::stable_sort(soft.begin(), soft.end(),
                       [](const SoftClause& a, const SoftClause& b) {
                         return a.weight > b.weight;
                       });
      break;
    case VariableOrder::kAscendingWeight:
      std::stable_sort(soft.begin(), soft.end(),
                       [](const SoftClause& a, const SoftClause& b) {
                         return a.weight < b.weight;
                       });
      break;
    case VariableOrder::kInputOrder:
      break;
  }
  if (config.seed && config.order != VariableOrder::kInputOrder) {
    std::mt19937_64 rng(*config.seed);
    auto begin = soft.begin();
    while (begin != soft.end()) {
      auto end = std::find_if(begin, soft.end(), [&](const SoftClause& s) {
        return s.weight != begin->weight;
      });
      std::shuffle(begin, end, rng);
      begin = end;
    }
  }
  std::vector<Var> order;
  order.reserve(soft.size());
  for (const SoftClause& s : soft) order.push_back(s.var);
  return order;
}

std::vector<double> WeightsByVar(const WcnfInstance& instance) {
  std::vector<double> weights(instance.hard.num_vars() + 1, 0.0);
  for (const SoftClause& s : instance.soft) weights[s.var] += s.weight;
  return weights;
}

CircuitBound::CircuitBound(const WcnfInstance& instance)
    : root_(instance.var_map.root()),
      gates_(&instance.var_map.gates()),
      event_vars_(instance.var_map.event_vars()),
      charge_(instance.hard.num_vars() + 1, 0.0),
      cost_(instance.hard.num_vars() + 1, 0.0) {
  if (root_ == 0) return;
  available_ = true;
  // Number of root-to-node paths, accumulated parents-first.
  std::vector<double> paths(instance.hard.num_vars() + 1, 0.0);
  paths[root_] = 1;
  for (auto it = gates_->rbegin(); it != gates_->rend(); ++it) {
    for (Var in : it->inputs) paths[in] += paths[it->output];
  }
  std::vector<double> weights = WeightsByVar(instance);
  for (Var var : event_vars_) {
    charge_[var] = paths[var] > 0 ? weights[var] / paths[var] : 0.0;
  }
}

double CircuitBound::Evaluate(const Propagator& propagator) {
  for (Var var : event_vars_) {
    switch (propagator.value(var)) {
      case Value::kTrue:
        cost_[var] = 0;
        break;
      case Value::kFalse:
        cost_[var] = kInfinity;
        break;
      case Value::kUnassigned:
        cost_[var] = charge_[var];
        break;
    }
  }
  for (const GateDefinition& gate : *gates_) {
    double cost;
    if (propagator.value(gate.output) == Value::kFalse) {
      cost = kInfinity;
    } else if (gate.type == GateType::kAnd) {
      cost = 0;
      for (Var in : gate.inputs) cost += cost_[in];
    } else {
      cost = kInfinity;
      for (Var in : gate.inputs) cost = std::min(cost, cost_[in]);
    }
    cost_[gate.output] = cost;
  }
  return cost_[root_];
}

double PaidWeight(const Propagator& propagator, const std::vector<Var>& events,
                  const std::vector<double>& weights) {
  double paid = 0;
  for (Var var : events) {
    if (propagator.value(var) == Value::kTrue) paid += weights[var];
  }
  return paid;
}

std::optional<std::vector<bool>> CompleteWithEventsFalse(
    Propagator* propagator, const std::vector<Var>& events,
    const CnfFormula& hard) {
  int level = propagator->level();
  propagator->NewLevel();
  for (Var var : events) {
    if (propagator->value(var) == Value::kUnassigned) {
      propagator->Assign(Literal::Neg(var));
    }
  }
  std::optional<std::vector<bool>> model;
  if (propagator->Propagate()) {
    model = propagator->Model();
    if (!hard.IsSatisfiedBy(*model)) model.reset();
  }
  propagator->Backtrack(level);
  return model;
}

std::size_t NextUnassigned(const Propagator& propagator,
                           const std::vector<Var>& order, std::size_t from) {
  while (from < order.size() &&
         propagator.value(order[from]) != Value::kUnassigned) {
    ++from;
  }
  return from;
}

}  // namespace mpmcs::internal
