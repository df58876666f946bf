/// @file fault_tree.cc
/// Fault-tree validation and the JSON input format.
#include "mpmcs/fault_tree.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_set>
#include <utility>

#include <json.hpp>

namespace mpmcs {

using Kind = ValidationError::Kind;

FaultTree::FaultTree(std::string name, std::string top, std::vector<Node> nodes)
    : name_(std::move(name)), top_(std::move(top)), nodes_(std::move(nodes)) {
  index_.reserve(nodes_.size());
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const std::string& id = nodes_[i].id;
    if (!index_.emplace(id, i).second) {
      throw ValidationError(Kind::kDuplicateId, id,
                            "Duplicate node id '" + id + "'.");
    }
    if (nodes_[i].is_basic()) ++num_basic_;
  }
  Validate();
}

void FaultTree::Validate() const {
  if (top_.empty() || !index_.count(top_)) {
    throw ValidationError(Kind::kMissingTop, top_,
                          "Top event '" + top_ + "' is not a defined node.");
  }
  for (const Node& node : nodes_) {
    if (node.is_basic()) {
      double p = node.basic().probability;
      if (!(p > 0 && p < 1)) {  // Also rejects NaN.
        std::ostringstream msg;
        msg << "Basic event '" << node.id << "' has probability " << p
            << " outside the open interval (0, 1).";
        throw ValidationError(Kind::kProbabilityOutOfRange, node.id,
                              msg.str());
      }
      continue;
    }
    const Gate& gate = node.gate();
    if (gate.children.empty()) {
      throw ValidationError(Kind::kEmptyGate, node.id,
                            "Gate '" + node.id + "' has no children.");
    }
    std::unordered_set<std::string_view> seen;
    for (const std::string& child : gate.children) {
      if (!seen.insert(child).second) {
        throw ValidationError(
            Kind::kDuplicateChild, node.id,
            "Gate '" + node.id + "' lists child '" + child + "' twice.");
      }
      if (!index_.count(child)) {
        throw ValidationError(Kind::kDanglingReference, node.id,
                              "Gate '" + node.id +
                                  "' references undefined node '" + child +
                                  "'.");
      }
    }
  }

  // Iterative three-color DFS over every node.
  enum Color : char { kWhite, kGrey, kBlack };
  std::vector<Color> color(nodes_.size(), kWhite);
  std::vector<std::pair<std::size_t, std::size_t>> stack;  // (node, next child)
  for (std::size_t start = 0; start < nodes_.size(); ++start) {
    if (color[start] != kWhite) continue;
    stack.emplace_back(start, 0);
    color[start] = kGrey;
    while (!stack.empty()) {
      auto& [current, next] = stack.back();
      const Node& node = nodes_[current];
      if (node.is_basic() || next == node.gate().children.size()) {
        color[current] = kBlack;
        stack.pop_back();
        continue;
      }
      std::size_t child = index_.at(node.gate().children[next++]);
      if (color[child] == kGrey) {
        throw ValidationError(Kind::kCycle, nodes_[child].id,
                              "Cycle detected through node '" +
                                  nodes_[child].id + "'.");
      }
      if (color[child] == kWhite) {
        color[child] = kGrey;
        stack.emplace_back(child, 0);
      }
    }
  }

  std::vector<bool> reached(nodes_.size(), false);
  std::vector<std::size_t> todo = {index_.at(top_)};
  reached[todo.front()] = true;
  while (!todo.empty()) {
    const Node& node = nodes_[todo.back()];
    todo.pop_back();
    if (node.is_basic()) continue;
    for (const std::string& child : node.gate().children) {
      std::size_t i = index_.at(child);
      if (!reached[i]) {
        reached[i] = true;
        todo.push_back(i);
      }
    }
  }
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (!reached[i]) {
      throw ValidationError(Kind::kUnreachableNode, nodes_[i].id,
                            "Node '" + nodes_[i].id +
                                "' is not reachable from the top event.");
    }
  }
}

const Node& FaultTree::node(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) {
    throw Error("Unknown node id '" + std::string(id) + "'.");
  }
  return nodes_[it->second];
}

bool FaultTree::contains(std::string_view id) const {
  return index_.count(std::string(id)) != 0;
}

std::vector<std::string> FaultTree::basic_event_ids() const {
  std::vector<std::string> ids;
  ids.reserve(num_basic_);
  for (const Node& node : nodes_) {
    if (node.is_basic()) ids.push_back(node.id);
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

double FaultTree::probability(std::string_view event_id) const {
  const Node& n = node(event_id);
  if (!n.is_basic()) {
    throw Error("Node '" + n.id + "' is a gate, not a basic event.");
  }
  return n.basic().probability;
}

namespace {

using nlohmann::json;

void RequireOnlyFields(const json& obj, std::initializer_list<const char*> allowed,
                       const std::string& where, const std::string& id) {
  for (const auto& item : obj.items()) {
    if (std::none_of(allowed.begin(), allowed.end(),
                     [&](const char* name) { return item.key() == name; })) {
      throw ValidationError(Kind::kSchema, id,
                            "Unknown field '" + item.key() + "' in " + where +
                                ".");
    }
  }
}

const json& RequireField(const json& obj, const char* field,
                         const std::string& where, const std::string& id) {
  auto it = obj.find(field);
  if (it == obj.end()) {
    throw ValidationError(Kind::kSchema, id,
                          std::string("Missing field '") + field + "' in " +
                              where + ".");
  }
  return *it;
}

std::string RequireString(const json& obj, const char* field,
                          const std::string& where, const std::string& id) {
  const json& value = RequireField(obj, field, where, id);
  if (!value.is_string()) {
    throw ValidationError(Kind::kSchema, id,
                          std::string("Field '") + field + "' in " + where +
                              " must be a string.");
  }
  return value.get<std::string>();
}

Node ParseNode(const json& obj) {
  if (!obj.is_object()) {
    throw ValidationError(Kind::kSchema, "", "Node entries must be objects.");
  }
  std::string id = RequireString(obj, "id", "node", "");
  std::string where = "node '" + id + "'";
  std::string type = RequireString(obj, "type", where, id);
  if (type == "basic") {
    RequireOnlyFields(obj, {"id", "type", "prob"}, where, id);
    const json& prob = RequireField(obj, "prob", where, id);
    if (!prob.is_number()) {
      throw ValidationError(Kind::kSchema, id,
                            "Probability of " + where + " must be a number.");
    }
    return Node{std::move(id), BasicEvent{prob.get<double>()}};
  }
  if (type != "and" && type != "or") {
    throw ValidationError(Kind::kUnknownNodeKind, id,
                          "Unknown node type '" + type + "' for " + where +
                              ".");
  }
  RequireOnlyFields(obj, {"id", "type", "children"}, where, id);
  const json& children = RequireField(obj, "children", where, id);
  if (!children.is_array()) {
    throw ValidationError(Kind::kSchema, id,
                          "Children of " + where + " must be an array.");
  }
  Gate gate{type == "and" ? GateType::kAnd : GateType::kOr, {}};
  for (const json& child : children) {
    if (!child.is_string()) {
      throw ValidationError(Kind::kSchema, id,
                            "Children of " + where + " must be strings.");
    }
    gate.children.push_back(child.get<std::string>());
  }
  return Node{std::move(id), std::move(gate)};
}

}  // namespace

FaultTree ParseFaultTree(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text.begin(), json_text.end());
  } catch (const json::parse_error& e) {
    throw ValidationError(Kind::kMalformedJson, "",
                          std::string("Malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) {
    throw ValidationError(Kind::kSchema, "",
                          "Fault tree document must be a JSON object.");
  }
  RequireOnlyFields(doc, {"name", "top", "nodes"}, "fault tree", "");
  std::string name = RequireString(doc, "name", "fault tree", "");
  if (!doc.contains("top")) {
    throw ValidationError(Kind::kMissingTop, "",
                          "Fault tree has no 'top' field.");
  }
  std::string top = RequireString(doc, "top", "fault tree", "");
  const json& nodes_json = RequireField(doc, "nodes", "fault tree", "");
  if (!nodes_json.is_array()) {
    throw ValidationError(Kind::kSchema, "", "'nodes' must be an array.");
  }
  std::vector<Node> nodes;
  nodes.reserve(nodes_json.size());
  for (const json& entry : nodes_json) nodes.push_back(ParseNode(entry));
  return FaultTree(std::move(name), std::move(top), std::move(nodes));
}

FaultTree LoadFaultTree(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(path + ": cannot open fault-tree file.");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseFaultTree(buffer.str());
}

std::string SerializeFaultTree(const FaultTree& tree, int indent) {
  json nodes = json::array();
  for (const Node& node : tree.nodes()) {
    if (node.is_basic()) {
      nodes.push_back({{"id", node.id},
                       {"type", "basic"},
                       {"prob", node.basic().probability}});
    } else {
      nodes.push_back(
          {{"id", node.id},
           {"type", node.gate().type == GateType::kAnd ? "and" : "or"},
           {"children", node.gate().children}});
    }
  }
  json doc = {{"name", tree.name()}, {"top", tree.top()}, {"nodes", nodes}};
  return doc.dump(indent);
}

}  // namespace mpmcs
