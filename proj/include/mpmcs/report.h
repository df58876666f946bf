/// @file report.h
/// JSON run report emitted by the command-line tool.
#ifndef MPMCS_REPORT_H_
#define MPMCS_REPORT_H_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mpmcs/encoding.h"
#include "mpmcs/fault_tree.h"
#include "mpmcs/solver.h"

namespace mpmcs {

struct InstanceStats {
  std::size_t events = 0;
  std::size_t gates = 0;
  int vars = 0;
  std::size_t hard_clauses = 0;
};

InstanceStats ComputeStats(const FaultTree& tree, const WcnfInstance& instance);

struct RunReport {
  /// Absent when no worker found any model within budget.
  std::optional<MpmcsResult> mpmcs;
  bool proven = false;
  InstanceStats stats;
  std::vector<WorkerReport> workers;
  /// Filled only when every tied optimum was requested.
  std::optional<std::vector<MpmcsResult>> optima;
};

/// Serializes the report. Keys: cut_set, log_weight, probability, proven,
/// solver_id, elapsed_ms, stats, workers, and optima when requested.
std::string ToJson(const RunReport& report, int indent = 2);

}  // namespace mpmcs

#endif  // MPMCS_REPORT_H_
