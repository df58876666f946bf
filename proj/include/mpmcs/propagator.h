/// @file propagator.h
/// Unit propagation over a CNF with two watched literals per clause.
#ifndef MPMCS_PROPAGATOR_H_
#define MPMCS_PROPAGATOR_H_

#include <cstdint>
#include <vector>

#include "mpmcs/encoding.h"

namespace mpmcs {

enum class Value : std::int8_t { kFalse = 0, kTrue = 1, kUnassigned = 2 };

/// Owns a private copy of the clauses; one instance per search thread.
class Propagator {
 public:
  explicit Propagator(const CnfFormula& cnf);

  /// False when the clauses are refuted at level 0.
  bool consistent() const { return consistent_; }

  Value value(Var var) const { return values_[var]; }
  bool is_true(Literal lit) const;
  bool is_false(Literal lit) const;
  int num_vars() const { return static_cast<int>(values_.size()) - 1; }

  int level() const { return static_cast<int>(level_starts_.size()); }
  void NewLevel() { level_starts_.push_back(trail_.size()); }
  /// Undoes every assignment made above `target_level`.
  void Backtrack(int target_level);

  /// Enqueues `lit`; returns false iff it is already false.
  bool Assign(Literal lit);
  /// Propagates pending assignments; returns false on conflict.
  bool Propagate();

  /// Variables assigned at any level, in assignment order.
  const std::vector<Var>& trail() const { return trail_; }
  std::uint64_t propagations() const { return propagations_; }

  /// Current values as a model vector (unassigned reads false).
  std::vector<bool> Model() const;

 private:
  static int Code(Literal lit) { return 2 * lit.var() + lit.negative(); }
  Value LitValue(int code) const {
    Value v = values_[code >> 1];
    if (v == Value::kUnassigned) return v;
    return (code & 1) ? (v == Value::kTrue ? Value::kFalse : Value::kTrue) : v;
  }
  void Enqueue(int code) {
    values_[code >> 1] = (code & 1) ? Value::kFalse : Value::kTrue;
    trail_.push_back(code >> 1);
  }

  std::vector<std::vector<int>> clauses_;  // literal codes
  std::vector<std::vector<int>> watches_;  // per literal code
  std::vector<Value> values_;
  std::vector<Var> trail_;
  std::vector<std::size_t> level_starts_;
  std::vector<int> units_;
  std::size_t queue_head_ = 0;
  std::uint64_t propagations_ = 0;
  bool consistent_ = true;
};

}  // namespace mpmcs

#endif  // MPMCS_PROPAGATOR_H_
