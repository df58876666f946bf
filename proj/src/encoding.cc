/// @file encoding.cc
/// Tseitin encoding, log-space weights and WCNF assembly.
#include "mpmcs/encoding.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_set>

namespace mpmcs {

Literal::Literal(Var var, bool negative) : var_(var), negative_(negative) {
  if (var < 1) {
    throw DomainError("Literal variable index must be >= 1, got " +
                      std::to_string(var) + ".");
  }
}

void CnfFormula::AddClause(Clause clause) {
  if (clause.empty()) throw DomainError("Refusing to add an empty clause.");
  for (const Literal& lit : clause) {
    if (lit.var() > num_vars_) {
      throw DomainError("Clause literal " + std::to_string(lit.dimacs()) +
                        " exceeds variable count " +
                        std::to_string(num_vars_) + ".");
    }
  }
  clauses_.push_back(std::move(clause));
}

bool CnfFormula::IsSatisfiedBy(const std::vector<bool>& model) const {
  return std::all_of(clauses_.begin(), clauses_.end(), [&](const Clause& c) {
    return std::any_of(c.begin(), c.end(), [&](const Literal& lit) {
      return model[lit.var()] != lit.negative();
    });
  });
}

Var VarMap::AddEvent(const std::string& event_id) {
  Var var = ++max_var_;
  event_to_var_.emplace(event_id, var);
  var_to_event_.emplace(var, event_id);
  event_vars_.push_back(var);
  return var;
}

void VarMap::AddGate(GateDefinition definition, std::string label) {
  max_var_ = std::max(max_var_, definition.output);
  gate_index_.emplace(definition.output, gates_.size());
  gates_.push_back(std::move(definition));
  gate_labels_.push_back(std::move(label));
}

Var VarMap::event_var(const std::string& event_id) const {
  auto it = event_to_var_.find(event_id);
  if (it == event_to_var_.end()) {
    throw Error("No variable for basic event '" + event_id + "'.");
  }
  return it->second;
}

const std::string& VarMap::event_id(Var var) const {
  auto it = var_to_event_.find(var);
  if (it == var_to_event_.end()) {
    throw Error("Variable " + std::to_string(var) + " is not an event.");
  }
  return it->second;
}

const std::string& VarMap::gate_label(Var var) const {
  auto it = gate_index_.find(var);
  if (it == gate_index_.end()) {
    throw Error("Variable " + std::to_string(var) + " is not auxiliary.");
  }
  return gate_labels_[it->second];
}

double ToLogSpace(double probability) {
  if (!(probability > 0 && probability < 1)) {
    throw DomainError("Probability " + std::to_string(probability) +
                      " is outside the open interval (0, 1).");
  }
  return -std::log(probability);
}

double JointProbability(std::span<const double> weights) {
  return std::exp(-std::accumulate(weights.begin(), weights.end(), 0.0));
}

namespace {

class TseitinEncoder {
 public:
  std::pair<CnfFormula, VarMap> Run(const Formula& root) {
    CollectEvents(root);
    next_var_ = static_cast<Var>(map_.event_vars().size());
    Var root_var = Encode(root);
    CnfFormula cnf(next_var_);
    for (Clause& clause : clauses_) cnf.AddClause(std::move(clause));
    cnf.AddClause({Literal::Pos(root_var)});
    map_.set_root(root_var);
    return {std::move(cnf), std::move(map_)};
  }

 private:
  void CollectEvents(const Formula& f) {
    if (f.is_var()) {
      if (seen_events_.insert(f.name()).second) map_.AddEvent(f.name());
      return;
    }
    if (!visited_.insert(f.identity()).second) return;
    for (const Formula& child : f.children()) CollectEvents(child);
  }

  Var Encode(const Formula& f) {
    if (f.is_var()) return map_.event_var(f.name());
    if (auto it = gate_vars_.find(f.identity()); it != gate_vars_.end()) {
      return it->second;
    }
    std::vector<Var> inputs;
    inputs.reserve(f.children().size());
    for (const Formula& child : f.children()) inputs.push_back(Encode(child));
    Var out = ++next_var_;
    gate_vars_.emplace(f.identity(), out);

    bool is_and = f.connective() == Connective::kAnd;
    // AND: out -> each input, all inputs -> out.
    // OR:  each input -> out, out -> some input.
    Clause wide;
    wide.reserve(inputs.size() + 1);
    for (Var in : inputs) {
      if (is_and) {
        clauses_.push_back({Literal::Neg(out), Literal::Pos(in)});
        wide.push_back(Literal::Neg(in));
      } else {
        clauses_.push_back({Literal::Neg(in), Literal::Pos(out)});
        wide.push_back(Literal::Pos(in));
      }
    }
    if (is_and) {
      wide.push_back(Literal::Pos(out));
    } else {
      wide.insert(wide.begin(), Literal::Neg(out));
    }
    clauses_.push_back(std::move(wide));

    map_.AddGate({out, is_and ? GateType::kAnd : GateType::kOr,
                  std::move(inputs)},
                 f.name());
    return out;
  }

  VarMap map_;
  std::vector<Clause> clauses_;
  std::unordered_set<std::string> seen_events_;
  std::unordered_set<const void*> visited_;
  std::unordered_map<const void*, Var> gate_vars_;
  Var next_var_ = 0;
};

}  // namespace

std::pair<CnfFormula, VarMap> Tseitin(const Formula& formula) {
  return TseitinEncoder().Run(formula);
}

WeightMap BuildWeightMap(const FaultTree& tree) {
  WeightMap weights;
  for (const Node& node : tree.nodes()) {
    if (node.is_basic()) {
      weights.emplace(node.id, ToLogSpace(node.basic().probability));
    }
  }
  return weights;
}

WcnfInstance BuildWcnf(const FaultTree& tree) {
  Formula failure = ToFormula(tree);
  // The success tree over y_i = -x_i is Dualize(f); its complement, written
  // back over the x_i, is the dual of the dual. The hard part asserts it.
  Formula success = Dualize(failure);
  Formula top_occurs = Dualize(success);

  auto [cnf, var_map] = Tseitin(top_occurs);
  WcnfInstance instance{std::move(cnf), {}, std::move(var_map)};
  WeightMap weights = BuildWeightMap(tree);
  instance.soft.reserve(instance.var_map.event_vars().size());
  for (Var var : instance.var_map.event_vars()) {
    instance.soft.push_back({var, weights.at(instance.var_map.event_id(var))});
  }
  return instance;
}

WcnfInstance WithBlockingClause(const WcnfInstance& instance,
                                std::span<const Var> event_vars) {
  WcnfInstance copy = instance;
  Clause block;
  for (Var var : event_vars) block.push_back(Literal::Neg(var));
  copy.hard.AddClause(std::move(block));
  return copy;
}

double FalsifiedWeight(const WcnfInstance& instance,
                       const std::vector<bool>& model) {
  std::vector<std::pair<const std::string*, double>> paid;
  for (const SoftClause& soft : instance.soft) {
    if (model[soft.var]) {
      paid.emplace_back(&instance.var_map.event_id(soft.var), soft.weight);
    }
  }
  std::sort(paid.begin(), paid.end(),
            [](const auto& a, const auto& b) { return *a.first < *b.first; });
  double total = 0;
  for (const auto& entry : paid) total += entry.second;
  return total;
}

void WriteWcnf(const WcnfInstance& instance, std::ostream& out) {
  std::vector<long long> scaled;
  scaled.reserve(instance.soft.size());
  long long top = 1;
  for (const SoftClause& soft : instance.soft) {
    scaled.push_back(std::llround(soft.weight * kWcnfWeightScale));
    top += scaled.back();
  }
  out << "p wcnf " << instance.hard.num_vars() << ' '
      << instance.hard.clauses().size() + instance.soft.size() << ' ' << top
      << '\n';
  for (const Clause& clause : instance.hard.clauses()) {
    out << top;
    for (const Literal& lit : clause) out << ' ' << lit.dimacs();
    out << " 0\n";
  }
  for (std::size_t i = 0; i < instance.soft.size(); ++i) {
    out << scaled[i] << ' ' << -instance.soft[i].var << " 0\n";
  }
}

}  // namespace mpmcs
