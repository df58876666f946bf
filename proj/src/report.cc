/// @file report.cc
#include "mpmcs/report.h"

#include <json.hpp>

namespace mpmcs {
namespace {

using nlohmann::json;

double Milliseconds(std::chrono::duration<double> d) {
  return std::chrono::duration<double, std::milli>(d).count();
}

const char* OutcomeName(WorkerReport::Outcome outcome) {
  switch (outcome) {
    case WorkerReport::Outcome::kOptimal:
      return "optimal";
    case WorkerReport::Outcome::kIncumbent:
      return "incumbent";
    case WorkerReport::Outcome::kCancelled:
      return "cancelled";
    case WorkerReport::Outcome::kFailed:
      return "failed";
  }
  return "failed";
}

json CutSetJson(const MpmcsResult& result) {
  return {{"cut_set", result.cut_set},
          {"log_weight", result.log_weight},
          {"probability", result.probability}};
}

}  // namespace

InstanceStats ComputeStats(const FaultTree& tree,
                           const WcnfInstance& instance) {
  return {tree.num_basic_events(), tree.num_gates(), instance.hard.num_vars(),
          instance.hard.clauses().size()};
}

std::string ToJson(const RunReport& report, int indent) {
  json doc;
  if (report.mpmcs) {
    doc = CutSetJson(*report.mpmcs);
    doc["solver_id"] = report.mpmcs->solver_id;
    doc["elapsed_ms"] = Milliseconds(report.mpmcs->elapsed);
  } else {
    doc = {{"cut_set", json::array()},
           {"log_weight", nullptr},
           {"probability", nullptr},
           {"solver_id", nullptr},
           {"elapsed_ms", nullptr}};
  }
  doc["proven"] = report.proven;
  doc["stats"] = {{"events", report.stats.events},
                  {"gates", report.stats.gates},
                  {"vars", report.stats.vars},
                  {"hard_clauses", report.stats.hard_clauses}};
  json workers = json::array();
  for (const WorkerReport& w : report.workers) {
    json entry = {{"solver_id", w.solver_id},
                  {"outcome", OutcomeName(w.outcome)},
                  {"decisions", w.stats.decisions},
                  {"propagations", w.stats.propagations},
                  {"nodes", w.stats.nodes},
                  {"elapsed_ms", Milliseconds(w.stats.elapsed)},
                  {"stop_latency_ms", Milliseconds(w.stop_latency)}};
    if (w.weight) entry["weight"] = *w.weight;
    if (!w.error.empty()) entry["error"] = w.error;
    workers.push_back(std::move(entry));
  }
  doc["workers"] = std::move(workers);
  if (report.optima) {
    json optima = json::array();
    for (const MpmcsResult& r : *report.optima) optima.push_back(CutSetJson(r));
    doc["optima"] = std::move(optima);
  }
  return doc.dump(indent);
}

}  // namespace mpmcs
