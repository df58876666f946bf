/// @file oracle.cc
/// Exhaustive 2^n enumeration. Deliberately shares no code with the
/// encoder or the solvers: the tree is evaluated directly on bit masks.
#include "mpmcs/oracle.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <unordered_map>

namespace mpmcs::oracle {
namespace {

/// Tree flattened into children-first order for mask evaluation.
class MaskEvaluator {
 public:
  MaskEvaluator(const FaultTree& tree, const std::vector<std::string>& events) {
    std::unordered_map<std::string, int> event_bit;
    for (std::size_t i = 0; i < events.size(); ++i) {
      event_bit[events[i]] = static_cast<int>(i);
    }
    std::unordered_map<std::string, int> slot;
    Flatten(tree, tree.top(), event_bit, &slot);
    values_.resize(steps_.size());
  }

  bool operator()(std::uint32_t mask) {
    for (std::size_t i = 0; i < steps_.size(); ++i) {
      const Step& step = steps_[i];
      if (step.bit >= 0) {
        values_[i] = (mask >> step.bit) & 1u;
        continue;
      }
      bool value = step.is_and;
      for (int child : step.children) {
        if (values_[child] != step.is_and) {
          value = !step.is_and;
          break;
        }
      }
      values_[i] = value;
    }
    return values_.back();
  }

 private:
  struct Step {
    int bit = -1;
    bool is_and = false;
    std::vector<int> children;
  };

  int Flatten(const FaultTree& tree, const std::string& id,
              const std::unordered_map<std::string, int>& event_bit,
              std::unordered_map<std::string, int>* slot) {
    if (auto it = slot->find(id); it != slot->end()) return it->second;
    const Node& node = tree.node(id);
    Step step;
    if (node.is_basic()) {
      step.bit = event_bit.at(id);
    } else {
      step.is_and = node.gate().type == GateType::kAnd;
      for (const std::string& child : node.gate().children) {
        step.children.push_back(Flatten(tree, child, event_bit, slot));
      }
    }
    steps_.push_back(std::move(step));
    int index = static_cast<int>(steps_.size()) - 1;
    slot->emplace(id, index);
    return index;
  }

  std::vector<Step> steps_;
  std::vector<char> values_;
};

}  // namespace

std::vector<CutSet> EnumerateMinimalCutSets(const FaultTree& tree) {
  std::vector<std::string> events = tree.basic_event_ids();
  if (events.size() > kMaxEvents) {
    throw TooManyEventsError("Brute-force enumeration is capped at " +
                             std::to_string(kMaxEvents) + " basic events; " +
                             "tree has " + std::to_string(events.size()) +
                             ".");
  }
  const std::uint32_t subsets = std::uint32_t{1} << events.size();
  MaskEvaluator evaluate(tree, events);
  std::vector<char> satisfies(subsets);
  for (std::uint32_t mask = 0; mask < subsets; ++mask) {
    satisfies[mask] = evaluate(mask);
  }

  std::vector<double> probability(events.size());
  for (std::size_t i = 0; i < events.size(); ++i) {
    probability[i] = tree.probability(events[i]);
  }
  std::vector<CutSet> result;
  for (std::uint32_t mask = 0; mask < subsets; ++mask) {
    if (!satisfies[mask]) continue;
    // Monotone: minimal iff no single removal still satisfies.
    bool minimal = true;
    for (std::size_t i = 0; i < events.size() && minimal; ++i) {
      if ((mask >> i) & 1u) minimal = !satisfies[mask & ~(1u << i)];
    }
    if (!minimal) continue;
    CutSet cut{{}, 1.0, 0.0};
    for (std::size_t i = 0; i < events.size(); ++i) {
      if ((mask >> i) & 1u) {
        cut.events.push_back(events[i]);
        cut.probability *= probability[i];
        cut.log_weight += -std::log(probability[i]);
      }
    }
    result.push_back(std::move(cut));
  }
  std::sort(result.begin(), result.end(),
            [](const CutSet& a, const CutSet& b) {
              if (a.probability != b.probability) {
                return a.probability > b.probability;
              }
              return a.events < b.events;
            });
  return result;
}

MpmcsResult OracleMpmcs(const FaultTree& tree) {
  std::vector<CutSet> all = EnumerateMinimalCutSets(tree);
  const CutSet& best = all.front();
  MpmcsResult result;
  result.cut_set = best.events;
  result.log_weight = best.log_weight;
  result.probability = std::exp(-best.log_weight);
  result.solver_id = "oracle";
  return result;
}

std::vector<CutSet> OracleOptima(const FaultTree& tree,
                                 double relative_tolerance) {
  std::vector<CutSet> all = EnumerateMinimalCutSets(tree);
  double best = all.front().log_weight;
  for (const CutSet& cut : all) best = std::min(best, cut.log_weight);
  std::vector<CutSet> optima;
  for (CutSet& cut : all) {
    if (std::abs(cut.log_weight - best) <=
        relative_tolerance * std::max(1.0, std::abs(best))) {
      optima.push_back(std::move(cut));
    }
  }
  return optima;
}

}  // namespace mpmcs::oracle
