/// @file formula.h
/// Positive AND/OR Boolean formulas built from fault trees.
#ifndef MPMCS_FORMULA_H_
#define MPMCS_FORMULA_H_

#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "mpmcs/fault_tree.h"

namespace mpmcs {

enum class Connective { kVar, kAnd, kOr };

/// Immutable expression node. Every leaf is a positive variable named after
/// a basic event; complementation is expressed only by flipping connectives.
/// Subformulas may be shared, which mirrors node sharing in the source tree.
class Formula {
 public:
  static Formula Var(std::string event_id);
  /// `label` is an optional gate id carried along for diagnostics and for
  /// structural comparison. Throws Error if `children` is empty.
  static Formula And(std::vector<Formula> children, std::string label = "");
  static Formula Or(std::vector<Formula> children, std::string label = "");

  Connective connective() const { return node_->connective; }
  bool is_var() const { return node_->connective == Connective::kVar; }
  /// Event id for variables, gate label (possibly empty) otherwise.
  const std::string& name() const { return node_->name; }
  const std::vector<Formula>& children() const { return node_->children; }

  /// Identity of the shared node; equal for copies of the same subformula.
  const void* identity() const { return node_.get(); }

  /// Deep structural equality: same connectives, names and child order.
  friend bool operator==(const Formula& lhs, const Formula& rhs);

 private:
  struct NodeData {
    Connective connective;
    std::string name;
    std::vector<Formula> children;
  };

  explicit Formula(std::shared_ptr<const NodeData> node)
      : node_(std::move(node)) {}

  std::shared_ptr<const NodeData> node_;
};

/// Truth values of basic events; identifiers not set read as false.
class Assignment {
 public:
  Assignment() = default;
  Assignment(std::initializer_list<std::string> true_events);

  void Set(std::string event_id, bool value);
  bool Get(std::string_view event_id) const;

 private:
  std::unordered_map<std::string, bool> values_;
};

/// f(t): AND gates become And, OR gates Or, basic events Var. Shared tree
/// nodes map to shared subformulas.
Formula ToFormula(const FaultTree& tree);

/// Flips every And into Or and vice versa, keeping leaves. Applied to f(t)
/// this yields the success-tree formula over complemented events.
Formula Dualize(const Formula& formula);

bool Evaluate(const Formula& formula, const Assignment& assignment);

/// Infix rendering, e.g. "(x1 & x2) | x3".
std::string ToString(const Formula& formula);

/// Distinct variable names, sorted.
std::vector<std::string> Variables(const Formula& formula);

}  // namespace mpmcs

#endif  // MPMCS_FORMULA_H_
