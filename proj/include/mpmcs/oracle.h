/// @file oracle.h
/// Brute-force minimal cut set enumeration for small fault trees. Used as
/// an independent reference for the MaxSAT pipeline.
#ifndef MPMCS_ORACLE_H_
#define MPMCS_ORACLE_H_

#include <cstddef>
#include <string>
#include <vector>

#include "mpmcs/fault_tree.h"
#include "mpmcs/solver.h"

namespace mpmcs::oracle {

inline constexpr std::size_t kMaxEvents = 20;

struct CutSet {
  std::vector<std::string> events;  ///< Sorted ids.
  double probability;               ///< Product of member probabilities.
  double log_weight;                ///< Sum of -ln p, in id order.
};

/// All minimal cut sets, by descending probability and then lexicographic
/// event ids. Throws TooManyEventsError above kMaxEvents basic events.
std::vector<CutSet> EnumerateMinimalCutSets(const FaultTree& tree);

/// The first minimal cut set of the enumeration, with solver id "oracle".
MpmcsResult OracleMpmcs(const FaultTree& tree);

/// Every minimal cut set whose log weight is within `relative_tolerance` of
/// the best one.
std::vector<CutSet> OracleOptima(const FaultTree& tree,
                                 double relative_tolerance = 1e-9);

}  // namespace mpmcs::oracle

#endif  // MPMCS_ORACLE_H_
