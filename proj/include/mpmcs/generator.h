/// @file generator.h
/// Seeded random fault trees for fuzzing and benchmarks.
#ifndef MPMCS_GENERATOR_H_
#define MPMCS_GENERATOR_H_

#include <cstdint>

#include "mpmcs/fault_tree.h"

namespace mpmcs {

struct GeneratorParams {
  int nodes = 100;         ///< Total node count (gates plus basic events).
  int max_fan_in = 4;      ///< At least 2.
  double and_fraction = 0.5;
  double prob_low = 0.001;
  double prob_high = 0.2;
  std::uint64_t seed = 0;
};

/// Throws DomainError on invalid parameters.
void ValidateParams(const GeneratorParams& params);

/// Builds a tree top-down, breadth first, until the node budget is spent.
/// Gates get between 2 and `max_fan_in` children while budget allows;
/// leftover open slots are filled with basic events. The result has exactly
/// `params.nodes` nodes, contains no shared nodes, and depends only on
/// `params`.
FaultTree RandomFaultTree(const GeneratorParams& params);

}  // namespace mpmcs

#endif  // MPMCS_GENERATOR_H_
