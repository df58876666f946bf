/// @file propagator.cc
#include "mpmcs/propagator.h"

#include <algorithm>

namespace mpmcs {

Propagator::Propagator(const CnfFormula& cnf)
    : watches_(2 * (cnf.num_vars() + 1)),
      values_(cnf.num_vars() + 1, Value::kUnassigned) {
  for (const Clause& clause : cnf.clauses()) {
    std::vector<int> codes;
    codes.reserve(clause.size());
    for (const Literal& lit : clause) codes.push_back(Code(lit));
    std::sort(codes.begin(), codes.end());
    codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
    bool tautology = false;
    for (std::size_t i = 1; i < codes.size(); ++i) {
      if ((codes[i] ^ 1) == codes[i - 1]) tautology = true;
    }
    if (tautology) continue;
    if (codes.size() == 1) {
      units_.push_back(codes.front());
      continue;
    }
    int index = static_cast<int>(clauses_.size());
    watches_[codes[0]].push_back(index);
    watches_[codes[1]].push_back(index);
    clauses_.push_back(std::move(codes));
  }
  for (int code : units_) {
    Value v = LitValue(code);
    if (v == Value::kFalse) {
      consistent_ = false;
      return;
    }
    if (v == Value::kUnassigned) Enqueue(code);
  }
  consistent_ = Propagate();
}

bool Propagator::is_true(Literal lit) const {
  return LitValue(Code(lit)) == Value::kTrue;
}

bool Propagator::is_false(Literal lit) const {
  return LitValue(Code(lit)) == Value::kFalse;
}

void Propagator::Backtrack(int target_level) {
  if (target_level >= level()) return;
  std::size_t keep = level_starts_[target_level];
  for (std::size_t i = keep; i < trail_.size(); ++i) {
    values_[trail_[i]] = Value::kUnassigned;
  }
  trail_.resize(keep);
  level_starts_.resize(target_level);
  queue_head_ = std::min(queue_head_, keep);
}

bool Propagator::Assign(Literal lit) {
  int code = Code(lit);
  Value v = LitValue(code);
  if (v == Value::kFalse) return false;
  if (v == Value::kUnassigned) Enqueue(code);
  return true;
}

bool Propagator::Propagate() {
  while (queue_head_ < trail_.size()) {
    Var var = trail_[queue_head_++];
    ++propagations_;
    // The literal of `var` that just became false.
    int false_code = 2 * var + (values_[var] == Value::kTrue ? 1 : 0);
    std::vector<int>& watchers = watches_[false_code];
    std::size_t keep = 0;
    for (std::size_t i = 0; i < watchers.size(); ++i) {
      int index = watchers[i];
      std::vector<int>& clause = clauses_[index];
      if (clause[0] == false_code) std::swap(clause[0], clause[1]);
      if (LitValue(clause[0]) == Value::kTrue) {
        watchers[keep++] = index;
        continue;
      }
      bool moved = false;
      for (std::size_t k = 2; k < clause.size(); ++k) {
        if (LitValue(clause[k]) != Value::kFalse) {
          std::swap(clause[1], clause[k]);
          watches_[clause[1]].push_back(index);
          moved = true;
          break;
        }
      }
      if (moved) continue;
      watchers[keep++] = index;
      if (LitValue(clause[0]) == Value::kFalse) {
        for (++i; i < watchers.size(); ++i) watchers[keep++] = watchers[i];
        watchers.resize(keep);
        queue_head_ = trail_.size();
        return false;
      }
      Enqueue(clause[0]);
    }
    watchers.resize(keep);
  }
  return true;
}

std::vector<bool> Propagator::Model() const {
  std::vector<bool> model(values_.size(), false);
  for (std::size_t v = 1; v < values_.size(); ++v) {
    model[v] = values_[v] == Value::kTrue;
  }
  return model;
}

}  // namespace mpmcs
