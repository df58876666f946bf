/// @file fault_tree.h
/// Fault-tree data model, validation, and JSON (de)serialization.
#ifndef MPMCS_FAULT_TREE_H_
#define MPMCS_FAULT_TREE_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "mpmcs/error.h"

namespace mpmcs {

enum class GateType { kAnd, kOr };

struct Gate {
  GateType type;
  std::vector<std::string> children;

  bool operator==(const Gate&) const = default;
};

struct BasicEvent {
  double probability;

  bool operator==(const BasicEvent&) const = default;
};

struct Node {
  std::string id;
  std::variant<Gate, BasicEvent> kind;

  bool is_gate() const { return std::holds_alternative<Gate>(kind); }
  bool is_basic() const { return std::holds_alternative<BasicEvent>(kind); }
  const Gate& gate() const { return std::get<Gate>(kind); }
  const BasicEvent& basic() const { return std::get<BasicEvent>(kind); }

  bool operator==(const Node&) const = default;
};

/// A validated, immutable fault tree.
///
/// Children are referenced by id, so gates and basic events may be shared
/// by several parents as long as the child graph stays acyclic. Every node
/// must be reachable from the top event and every basic-event probability
/// lies strictly inside (0, 1).
class FaultTree {
 public:
  /// Validates and builds a tree. Throws ValidationError.
  FaultTree(std::string name, std::string top, std::vector<Node> nodes);

  const std::string& name() const { return name_; }
  const std::string& top() const { return top_; }
  /// Nodes in input order.
  const std::vector<Node>& nodes() const { return nodes_; }

  const Node& node(std::string_view id) const;
  bool contains(std::string_view id) const;

  /// Ids of the basic events, sorted lexicographically.
  std::vector<std::string> basic_event_ids() const;
  double probability(std::string_view event_id) const;

  std::size_t num_basic_events() const { return num_basic_; }
  std::size_t num_gates() const { return nodes_.size() - num_basic_; }

  bool operator==(const FaultTree& other) const {
    return name_ == other.name_ && top_ == other.top_ &&
           nodes_ == other.nodes_;
  }

 private:
  void Validate() const;

  std::string name_;
  std::string top_;
  std::vector<Node> nodes_;
  std::unordered_map<std::string, std::size_t> index_;
  std::size_t num_basic_ = 0;
};

/// Parses the JSON fault-tree format:
///
///     {"name": "...", "top": "<id>",
///      "nodes": [{"id": "...", "type": "and"|"or", "children": [...]},
///                {"id": "...", "type": "basic", "prob": 0.1}]}
///
/// Unknown fields are rejected. Throws ValidationError.
FaultTree ParseFaultTree(std::string_view json_text);

/// Reads and parses a fault-tree file. Throws Error on I/O failure.
FaultTree LoadFaultTree(const std::string& path);

/// Inverse of ParseFaultTree; node order is preserved.
std::string SerializeFaultTree(const FaultTree& tree, int indent = -1);

}  // namespace mpmcs

#endif  // MPMCS_FAULT_TREE_H_
