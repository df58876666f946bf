/// @file formula.cc
#include "mpmcs/formula.h"

#include <algorithm>
#include <set>
#include <unordered_set>
#include <utility>

namespace mpmcs {

Formula Formula::Var(std::string event_id) {
  return Formula(std::make_shared<const NodeData>(
      NodeData{Connective::kVar, std::move(event_id), {}}));
}

Formula Formula::And(std::vector<Formula> children, std::string label) {
  if (children.empty()) throw Error("And requires at least one operand.");
  return Formula(std::make_shared<const NodeData>(
      NodeData{Connective::kAnd, std::move(label), std::move(children)}));
}

Formula Formula::Or(std::vector<Formula> children, std::string label) {
  if (children.empty()) throw Error("Or requires at least one operand.");
  return Formula(std::make_shared<const NodeData>(
      NodeData{Connective::kOr, std::move(label), std::move(children)}));
}

bool operator==(const Formula& lhs, const Formula& rhs) {
  if (lhs.node_ == rhs.node_) return true;
  if (lhs.connective() != rhs.connective() || lhs.name() != rhs.name() ||
      lhs.children().size() != rhs.children().size()) {
    return false;
  }
  return std::equal(lhs.children().begin(), lhs.children().end(),
                    rhs.children().begin());
}

Assignment::Assignment(std::initializer_list<std::string> true_events) {
  for (const std::string& id : true_events) values_[id] = true;
}

void Assignment::Set(std::string event_id, bool value) {
  values_[std::move(event_id)] = value;
}

bool Assignment::Get(std::string_view event_id) const {
  auto it = values_.find(std::string(event_id));
  return it != values_.end() && it->second;
}

namespace {

Formula Translate(const FaultTree& tree, const std::string& id,
                  std::unordered_map<std::string, Formula>* memo) {
  if (auto it = memo->find(id); it != memo->end()) return it->second;
  const Node& node = tree.node(id);
  Formula result = [&] {
    if (node.is_basic()) return Formula::Var(id);
    std::vector<Formula> children;
    children.reserve(node.gate().children.size());
    for (const std::string& child : node.gate().children) {
      children.push_back(Translate(tree, child, memo));
    }
    return node.gate().type == GateType::kAnd
               ? Formula::And(std::move(children), id)
               : Formula::Or(std::move(children), id);
  }();
  memo->emplace(id, result);
  return result;
}

Formula Flip(const Formula& formula,
             std::unordered_map<const void*, Formula>* memo) {
  if (formula.is_var()) return formula;
  if (auto it = memo->find(formula.identity()); it != memo->end()) {
    return it->second;
  }
  std::vector<Formula> children;
  children.reserve(formula.children().size());
  for (const Formula& child : formula.children()) {
    children.push_back(Flip(child, memo));
  }
  Formula result = formula.connective() == Connective::kAnd
                       ? Formula::Or(std::move(children), formula.name())
                       : Formula::And(std::move(children), formula.name());
  memo->emplace(formula.identity(), result);
  return result;
}

bool Eval(const Formula& formula, const Assignment& assignment,
          std::unordered_map<const void*, bool>* memo) {
  switch (formula.connective()) {
    case Connective::kVar:
      return assignment.Get(formula.name());
    case Connective::kAnd:
    case Connective::kOr:
      break;
  }
  if (auto it = memo->find(formula.identity()); it != memo->end()) {
    return it->second;
  }
  bool is_and = formula.connective() == Connective::kAnd;
  bool value = is_and;
  for (const Formula& child : formula.children()) {
    if (Eval(child, assignment, memo) != is_and) {
      value = !is_and;
      break;
    }
  }
  memo->emplace(formula.identity(), value);
  return value;
}

void Render(const Formula& formula, bool nested, std::string* out) {
  if (formula.is_var()) {
    *out += formula.name();
    return;
  }
  if (formula.children().size() == 1) {
    Render(formula.children().front(), nested, out);
    return;
  }
  const char* op = formula.connective() == Connective::kAnd ? " & " : " | ";
  if (nested) *out += '(';
  bool first = true;
  for (const Formula& child : formula.children()) {
    if (!first) *out += op;
    first = false;
    Render(child, true, out);
  }
  if (nested) *out += ')';
}

}  // namespace

Formula ToFormula(const FaultTree& tree) {
  std::unordered_map<std::string, Formula> memo;
  return Translate(tree, tree.top(), &memo);
}

Formula Dualize(const Formula& formula) {
  std::unordered_map<const void*, Formula> memo;
  return Flip(formula, &memo);
}

bool Evaluate(const Formula& formula, const Assignment& assignment) {
  std::unordered_map<const void*, bool> memo;
  return Eval(formula, assignment, &memo);
}

std::string ToString(const Formula& formula) {
  std::string out;
  Render(formula, false, &out);
  return out;
}

std::vector<std::string> Variables(const Formula& formula) {
  std::set<std::string> names;
  std::unordered_set<const void*> visited;
  std::vector<const Formula*> todo = {&formula};
  while (!todo.empty()) {
    const Formula* f = todo.back();
    todo.pop_back();
    if (f->is_var()) {
      names.insert(f->name());
      continue;
    }
    if (!visited.insert(f->identity()).second) continue;
    for (const Formula& child : f->children()) todo.push_back(&child);
  }
  return {names.begin(), names.end()};
}

}  // namespace mpmcs
