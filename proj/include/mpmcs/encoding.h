/// @file encoding.h
/// CNF encoding of fault-tree formulas and the weighted partial MaxSAT
/// instance whose optimum is the maximum-probability minimal cut set.
#ifndef MPMCS_ENCODING_H_
#define MPMCS_ENCODING_H_

#include <cstdint>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mpmcs/fault_tree.h"
#include "mpmcs/formula.h"

namespace mpmcs {

/// CNF variable index; valid indices start at 1.
using Var = int;

class Literal {
 public:
  /// Throws DomainError if `var` < 1.
  Literal(Var var, bool negative);
  static Literal Pos(Var var) { return Literal(var, false); }
  static Literal Neg(Var var) { return Literal(var, true); }

  Var var() const { return var_; }
  bool negative() const { return negative_; }
  Literal operator~() const { return Literal(var_, !negative_); }
  /// DIMACS form: +var or -var.
  int dimacs() const { return negative_ ? -var_ : var_; }

  bool operator==(const Literal&) const = default;

 private:
  Var var_;
  bool negative_;
};

using Clause = std::vector<Literal>;

class CnfFormula {
 public:
  explicit CnfFormula(int num_vars = 0) : num_vars_(num_vars) {}

  int num_vars() const { return num_vars_; }
  const std::vector<Clause>& clauses() const { return clauses_; }

  /// Throws DomainError on an empty clause or an out-of-range variable.
  void AddClause(Clause clause);
  Var NewVar() { return ++num_vars_; }

  /// True iff every clause has a literal made true by `model` (indexed by
  /// variable; entry 0 unused).
  bool IsSatisfiedBy(const std::vector<bool>& model) const;

 private:
  int num_vars_;
  std::vector<Clause> clauses_;
};

/// Definition of a Tseitin auxiliary variable: output <-> op(inputs).
struct GateDefinition {
  Var output;
  GateType type;
  std::vector<Var> inputs;
};

/// Links CNF variables back to the formula they encode.
class VarMap {
 public:
  Var AddEvent(const std::string& event_id);
  void AddGate(GateDefinition definition, std::string label);
  void set_root(Var root) { root_ = root; }

  Var root() const { return root_; }
  bool is_event(Var var) const { return var_to_event_.count(var) != 0; }
  bool is_auxiliary(Var var) const { return gate_index_.count(var) != 0; }
  /// Throws Error for unknown ids or variables.
  Var event_var(const std::string& event_id) const;
  const std::string& event_id(Var var) const;

  /// Event variables in allocation order.
  const std::vector<Var>& event_vars() const { return event_vars_; }
  /// Gate definitions ordered so that inputs precede outputs.
  const std::vector<GateDefinition>& gates() const { return gates_; }
  const std::string& gate_label(Var var) const;

 private:
  std::unordered_map<std::string, Var> event_to_var_;
  std::unordered_map<Var, std::string> var_to_event_;
  std::vector<Var> event_vars_;
  std::vector<GateDefinition> gates_;
  std::vector<std::string> gate_labels_;
  std::unordered_map<Var, std::size_t> gate_index_;
  Var root_ = 0;
  Var max_var_ = 0;
};

/// Basic-event id to log-space weight -ln p.
using WeightMap = std::map<std::string, double>;

struct SoftClause {
  Var var;        ///< Event variable; the clause is the unit literal -var.
  double weight;  ///< Paid when the event variable is true.
};

/// Hard clauses assert that the top event occurs; one unit soft clause per
/// basic event prefers that event absent, at a cost equal to its weight.
struct WcnfInstance {
  CnfFormula hard;
  std::vector<SoftClause> soft;
  VarMap var_map;
};

/// -ln p. Throws DomainError unless 0 < p < 1.
double ToLogSpace(double probability);

/// exp(-sum of weights); the empty sum gives 1.
double JointProbability(std::span<const double> weights);

/// Tseitin transformation. Each distinct event gets one variable, each
/// distinct gate node one auxiliary variable defined by full equivalence
/// clauses, and a unit clause asserts the root. Events are numbered first
/// (order of first appearance), auxiliaries after them in post-order.
std::pair<CnfFormula, VarMap> Tseitin(const Formula& formula);

WeightMap BuildWeightMap(const FaultTree& tree);

WcnfInstance BuildWcnf(const FaultTree& tree);

/// Copy of `instance` with an extra hard clause forbidding all of
/// `event_vars` from being true together.
WcnfInstance WithBlockingClause(const WcnfInstance& instance,
                                std::span<const Var> event_vars);

/// Total weight of soft clauses falsified by `model`, summed in ascending
/// event-id order so that equal sets give bit-identical totals.
double FalsifiedWeight(const WcnfInstance& instance,
                       const std::vector<bool>& model);

/// Soft weights scaled to integers for DIMACS WCNF.
inline constexpr double kWcnfWeightScale = 1e6;

/// Writes DIMACS WCNF: `p wcnf <vars> <clauses> <top>`, hard clauses first
/// (weighted `top`), then soft clauses with weight round(w * 10^6).
void WriteWcnf(const WcnfInstance& instance, std::ostream& out);

}  // namespace mpmcs

#endif  // MPMCS_ENCODING_H_
