/// @file extract.cc
/// Reading the minimal cut set back out of a MaxSAT model.
#include <algorithm>

#include "search.h"

namespace mpmcs {
namespace {

/// Hard clauses satisfied with exactly `present` events true.
bool SatisfiedWith(Propagator* propagator, const std::vector<Var>& events,
                   const std::vector<bool>& present) {
  int level = propagator->level();
  propagator->NewLevel();
  bool ok = true;
  for (Var var : events) {
    if (!propagator->Assign(Literal(var, !present[var]))) {
      ok = false;
      break;
    }
  }
  ok = ok && propagator->Propagate();
  propagator->Backtrack(level);
  return ok;
}

}  // namespace

MpmcsResult ExtractMpmcs(const Solution& solution,
                         const WcnfInstance& instance,
                         const WeightMap& weights) {
  const VarMap& var_map = instance.var_map;
  const std::vector<Var>& events = var_map.event_vars();
  Propagator propagator(instance.hard);
  if (!propagator.consistent()) {
    throw InternalError("Hard clauses are refuted; no cut set exists.");
  }

  std::vector<bool> present(instance.hard.num_vars() + 1, false);
  std::vector<Var> members;
  for (Var var : events) {
    if (solution.model.at(var)) {
      present[var] = true;
      members.push_back(var);
    }
  }
  if (!SatisfiedWith(&propagator, events, present)) {
    throw InternalError("Solver model does not make the top event occur.");
  }

  auto weight_of = [&](Var var) { return weights.at(var_map.event_id(var)); };
  std::stable_sort(members.begin(), members.end(), [&](Var a, Var b) {
    if (weight_of(a) != weight_of(b)) return weight_of(a) > weight_of(b);
    return var_map.event_id(a) < var_map.event_id(b);
  });
  for (Var var : members) {
    present[var] = false;
    if (!SatisfiedWith(&propagator, events, present)) present[var] = true;
  }

  MpmcsResult result;
  for (Var var : events) {
    if (!present[var]) continue;
    present[var] = false;
    if (SatisfiedWith(&propagator, events, present)) {
      throw InternalError("Cut set is not minimal: '" + var_map.event_id(var) +
                          "' is redundant.");
    }
    present[var] = true;
    result.cut_set.push_back(var_map.event_id(var));
  }
  std::sort(result.cut_set.begin(), result.cut_set.end());
  std::vector<double> cut_weights;
  for (const std::string& id : result.cut_set) {
    cut_weights.push_back(weights.at(id));
    result.log_weight += cut_weights.back();
  }
  result.probability = JointProbability(cut_weights);
  result.solver_id = solution.solver_id;
  result.elapsed = solution.stats.elapsed;
  return result;
}

}  // namespace mpmcs
