/// @file generator.cc
#include "mpmcs/generator.h"

#include <algorithm>
#include <deque>
#include <random>
#include <string>

namespace mpmcs {

void ValidateParams(const GeneratorParams& params) {
  if (params.nodes < 1) throw DomainError("Node target must be at least 1.");
  if (params.max_fan_in < 2) throw DomainError("Max fan-in must be >= 2.");
  if (!(params.and_fraction >= 0 && params.and_fraction <= 1)) {
    throw DomainError("AND fraction must lie in [0, 1].");
  }
  if (!(params.prob_low > 0 && params.prob_high < 1 &&
        params.prob_low < params.prob_high)) {
    throw DomainError("Probability range must satisfy 0 < low < high < 1.");
  }
}

FaultTree RandomFaultTree(const GeneratorParams& params) {
  ValidateParams(params);
  std::mt19937_64 rng(params.seed);
  std::uniform_real_distribution<double> prob(params.prob_low,
                                              params.prob_high);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> fan_in(2, params.max_fan_in);

  int gate_count = 0;
  int event_count = 0;
  std::vector<Node> nodes;
  auto make_event = [&] {
    std::string id = "e" + std::to_string(event_count++);
    nodes.push_back(Node{id, BasicEvent{prob(rng)}});
    return id;
  };
  auto make_gate = [&] {
    std::string id = "g" + std::to_string(gate_count++);
    GateType type =
        unit(rng) < params.and_fraction ? GateType::kAnd : GateType::kOr;
    nodes.push_back(Node{id, Gate{type, {}}});
    return nodes.size() - 1;
  };

  if (params.nodes == 1) {
    std::string id = make_event();
    return FaultTree("random-" + std::to_string(params.seed), id,
                     std::move(nodes));
  }

  // Every open gate still needs at least one child, so `remaining` never
  // drops below the number of open gates.
  int remaining = params.nodes - 1;
  std::deque<std::size_t> open = {make_gate()};
  const std::string top = nodes.front().id;
  while (!open.empty()) {
    std::size_t gate = open.front();
    open.pop_front();
    int available = remaining - static_cast<int>(open.size());
    int children = std::min(fan_in(rng), available);
    // Room left for grandchildren once these children exist.
    int spare = available - children;
    std::vector<std::string> ids;
    for (int c = 0; c < children; ++c) {
      bool last_chance = open.empty() && c == children - 1 && spare > 0;
      bool want_gate = unit(rng) < 0.5 || last_chance;
      if (want_gate && spare >= 2) {
        spare -= 2;
        std::size_t child = make_gate();
        ids.push_back(nodes[child].id);
        open.push_back(child);
      } else if (last_chance) {
        spare -= 1;
        std::size_t child = make_gate();
        ids.push_back(nodes[child].id);
        open.push_back(child);
      } else {
        ids.push_back(make_event());
      }
    }
    remaining -= children;
    std::get<Gate>(nodes[gate].kind).children = std::move(ids);
  }
  return FaultTree("random-" + std::to_string(params.seed), top,
                   std::move(nodes));
}

}  // namespace mpmcs
