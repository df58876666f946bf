#include "mpmcs/solver.h"

#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "mpmcs/generator.h"
#include "mpmcs/oracle.h"
#include "mpmcs/propagator.h"
#include "test_support.h"

namespace mpmcs {
namespace {

using testing::Event;
using testing::MakeGate;

SolverConfig Config(Strategy strategy, VariableOrder order) {
  SolverConfig config;
  config.strategy = strategy;
  config.order = order;
  config.time_budget = Seconds(30);
  return config;
}

const SolverConfig kBnb =
    Config(Strategy::kBranchAndBound, VariableOrder::kDescendingWeight);
const SolverConfig kBestFirst =
    Config(Strategy::kBestFirst, VariableOrder::kAscendingWeight);

std::vector<SolverConfig> AllConfigs() {
  std::vector<SolverConfig> configs;
  for (Strategy s : {Strategy::kBranchAndBound, Strategy::kBestFirst}) {
    for (VariableOrder o :
         {VariableOrder::kDescendingWeight, VariableOrder::kAscendingWeight,
          VariableOrder::kInputOrder}) {
      configs.push_back(Config(s, o));
    }
  }
  return configs;
}

FaultTree TwoEventTree(GateType type) {
  return FaultTree("t", "g",
                   {MakeGate("g", type, {"a", "b"}), Event("a", 0.1),
                    Event("b", 0.2)});
}

/// The same instance with gate definitions dropped, so the solvers see a
/// plain WCNF and cannot use the circuit bound.
WcnfInstance WithoutCircuit(const WcnfInstance& instance) {
  WcnfInstance plain = instance;
  VarMap events_only;
  for (Var var : instance.var_map.event_vars()) {
    EXPECT_EQ(events_only.AddEvent(instance.var_map.event_id(var)), var);
  }
  plain.var_map = std::move(events_only);
  return plain;
}

std::vector<std::string> TrueEvents(const Solution& s,
                                    const WcnfInstance& instance) {
  std::vector<std::string> ids;
  for (Var var : instance.var_map.event_vars()) {
    if (s.model[var]) ids.push_back(instance.var_map.event_id(var));
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

TEST(SolverTest, FireProtectionOptimum) {
  WcnfInstance instance = BuildWcnf(testing::FireProtectionTree());
  for (const SolverConfig& config : AllConfigs()) {
    Solution s = Solve(instance, config);
    EXPECT_TRUE(s.proven_optimal) << ConfigName(config);
    EXPECT_NEAR(s.weight, 3.91203, 1e-4) << ConfigName(config);
    EXPECT_EQ(TrueEvents(s, instance), (std::vector<std::string>{"x1", "x2"}));
    EXPECT_TRUE(instance.hard.IsSatisfiedBy(s.model));
    EXPECT_EQ(s.solver_id, ConfigName(config));
  }
}

TEST(SolverTest, SingleEvent) {
  WcnfInstance instance = BuildWcnf(FaultTree("t", "e", {Event("e", 0.5)}));
  for (const SolverConfig& config : {kBnb, kBestFirst}) {
    Solution s = Solve(instance, config);
    EXPECT_TRUE(s.proven_optimal);
    EXPECT_DOUBLE_EQ(s.weight, std::log(2.0));
    EXPECT_TRUE(s.model[1]);
  }
}

TEST(SolverTest, OrOfTwoPaysLikelierEvent) {
  WcnfInstance instance = BuildWcnf(TwoEventTree(GateType::kOr));
  for (const SolverConfig& config : {kBnb, kBestFirst}) {
    Solution s = Solve(instance, config);
    EXPECT_DOUBLE_EQ(s.weight, -std::log(0.2));
    EXPECT_EQ(TrueEvents(s, instance), std::vector<std::string>{"b"});
  }
}

TEST(SolverTest, AndOfTwoPaysBoth) {
  WcnfInstance instance = BuildWcnf(TwoEventTree(GateType::kAnd));
  for (const SolverConfig& config : {kBnb, kBestFirst}) {
    EXPECT_DOUBLE_EQ(Solve(instance, config).weight,
                     -std::log(0.2) + -std::log(0.1));
  }
}

TEST(SolverTest, BranchAndBoundMatchesOracleWeightExactly) {
  std::mt19937_64 rng(101);
  for (int i = 0; i < 10; ++i) {
    FaultTree tree = testing::RandomSmallTree(rng, 12);
    Solution s = SolveBranchAndBound(BuildWcnf(tree), kBnb);
    EXPECT_EQ(s.weight, oracle::OracleMpmcs(tree).log_weight)
        << SerializeFaultTree(tree);
  }
}

void ExpectMatchesOracle(const FaultTree& tree, const WcnfInstance& instance,
                         const SolverConfig& config) {
  Solution s = Solve(instance, config);
  ASSERT_TRUE(s.proven_optimal);
  MpmcsResult expected = oracle::OracleMpmcs(tree);
  EXPECT_NEAR(s.weight, expected.log_weight,
              1e-9 * std::max(1.0, expected.log_weight))
      << ConfigName(config) << "\n"
      << SerializeFaultTree(tree);
  MpmcsResult result = ExtractMpmcs(s, instance, BuildWeightMap(tree));
  std::vector<oracle::CutSet> optima = oracle::OracleOptima(tree);
  EXPECT_TRUE(std::any_of(optima.begin(), optima.end(), [&](const auto& c) {
    return c.events == result.cut_set;
  })) << ConfigName(config);
  // Cut-set validity and minimality, by direct evaluation.
  Formula f = ToFormula(tree);
  Assignment all;
  for (const std::string& id : result.cut_set) all.Set(id, true);
  EXPECT_TRUE(Evaluate(f, all));
  for (const std::string& drop : result.cut_set) {
    Assignment less;
    for (const std::string& id : result.cut_set) {
      if (id != drop) less.Set(id, true);
    }
    EXPECT_FALSE(Evaluate(f, less));
  }
}

TEST(SolverTest, EveryConfigMatchesOracleOnRandomTrees) {
  std::mt19937_64 rng(202);
  for (int i = 0; i < 200; ++i) {
    FaultTree tree = testing::RandomSmallTree(rng, 12);
    WcnfInstance instance = BuildWcnf(tree);
    for (const SolverConfig& config : AllConfigs()) {
      ExpectMatchesOracle(tree, instance, config);
    }
  }
}

TEST(SolverTest, PlainWcnfWithoutCircuitStillOptimal) {
  std::mt19937_64 rng(303);
  for (int i = 0; i < 60; ++i) {
    FaultTree tree = testing::RandomSmallTree(rng, 10);
    WcnfInstance plain = WithoutCircuit(BuildWcnf(tree));
    ExpectMatchesOracle(tree, plain, kBnb);
    ExpectMatchesOracle(tree, plain, kBestFirst);
  }
}

TEST(SolverTest, SeededOrderingKeepsOptimalValue) {
  // Many equal weights so the seed actually permutes the order.
  std::mt19937_64 rng(404);
  for (int i = 0; i < 30; ++i) {
    GeneratorParams params{.nodes = 40, .prob_low = 0.1, .prob_high = 0.1001,
                           .seed = rng()};
    FaultTree tree = RandomFaultTree(params);
    WcnfInstance instance = BuildWcnf(tree);
    double reference = Solve(instance, kBnb).weight;
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      SolverConfig config = kBnb;
      config.seed = seed;
      EXPECT_NEAR(Solve(instance, config).weight, reference, 1e-9);
      config = kBestFirst;
      config.seed = seed;
      EXPECT_NEAR(Solve(instance, config).weight, reference, 1e-9);
    }
  }
}

TEST(SolverTest, FalsifiedWeightNeverDecreasesTowardsLeaves) {
  std::mt19937_64 rng(505);
  for (int i = 0; i < 50; ++i) {
    FaultTree tree = testing::RandomSmallTree(rng, 12);
    WcnfInstance instance = WithoutCircuit(BuildWcnf(tree));
    for (SolverConfig config : {kBnb, kBestFirst}) {
      int nodes = 0;
      config.on_node = [&](double parent, double child) {
        ++nodes;
        EXPECT_GE(child, parent);
      };
      Solve(instance, config);
      EXPECT_GT(nodes, 0);
    }
  }
}

TEST(SolverTest, UnsatisfiableHardClausesAreReported) {
  WcnfInstance instance = BuildWcnf(TwoEventTree(GateType::kOr));
  std::vector<Var> a = {instance.var_map.event_var("a")};
  std::vector<Var> b = {instance.var_map.event_var("b")};
  WcnfInstance blocked =
      WithBlockingClause(WithBlockingClause(instance, a), b);
  EXPECT_THROW(Solve(blocked, kBnb), UnsatisfiableError);
  EXPECT_THROW(Solve(blocked, kBestFirst), UnsatisfiableError);

  // Refuted at level zero.
  WcnfInstance single = BuildWcnf(FaultTree("t", "e", {Event("e", 0.5)}));
  WcnfInstance refuted = WithBlockingClause(single, std::vector<Var>{1});
  EXPECT_THROW(Solve(refuted, kBnb), UnsatisfiableError);
  EXPECT_THROW(Solve(refuted, kBestFirst), UnsatisfiableError);
}

TEST(SolverTest, BlockingClauseYieldsNextBestCutSet) {
  WcnfInstance instance = BuildWcnf(testing::FireProtectionTree());
  std::vector<Var> first = {instance.var_map.event_var("x1"),
                            instance.var_map.event_var("x2")};
  WcnfInstance blocked = WithBlockingClause(instance, first);
  for (const SolverConfig& config : {kBnb, kBestFirst}) {
    Solution s = Solve(blocked, config);
    // Next MCS by probability: {x5, x6} at 0.005.
    EXPECT_EQ(TrueEvents(s, blocked), (std::vector<std::string>{"x5", "x6"}));
    EXPECT_NEAR(std::exp(-s.weight), 0.005, 1e-12);
  }
}

TEST(SolverTest, RejectsNonPositiveBudget) {
  WcnfInstance instance = BuildWcnf(testing::FireProtectionTree());
  SolverConfig config = kBnb;
  config.time_budget = Seconds(0);
  EXPECT_THROW(Solve(instance, config), DomainError);
  config.strategy = Strategy::kBestFirst;
  EXPECT_THROW(Solve(instance, config), DomainError);
}

TEST(SolverTest, TinyBudgetReturnsUnprovenIncumbentOrThrows) {
  FaultTree tree = RandomFaultTree({.nodes = 20000, .seed = 3});
  WcnfInstance plain = WithoutCircuit(BuildWcnf(tree));
  for (SolverConfig config : {kBnb, kBestFirst}) {
    config.time_budget = std::chrono::microseconds(200);
    try {
      Solution s = Solve(plain, config);
      EXPECT_FALSE(s.proven_optimal);
      EXPECT_TRUE(plain.hard.IsSatisfiedBy(s.model));
    } catch (const BudgetExceededError&) {
    }
  }
}

TEST(SolverTest, BestFirstFrontierCap) {
  FaultTree tree = RandomFaultTree({.nodes = 200, .seed = 9});
  SolverConfig config = kBestFirst;
  config.max_frontier = 1;
  EXPECT_THROW(Solve(WithoutCircuit(BuildWcnf(tree)), config),
               MemoryLimitError);
}

TEST(SolverTest, CancelledBeforeStartThrows) {
  std::stop_source stop;
  stop.request_stop();
  WcnfInstance instance = BuildWcnf(testing::FireProtectionTree());
  EXPECT_THROW(SolveBranchAndBound(instance, kBnb, stop.get_token()),
               CancelledError);
  EXPECT_THROW(SolveBestFirst(instance, kBestFirst, stop.get_token()),
               CancelledError);
}

TEST(SolverTest, StatisticsAreFilled) {
  WcnfInstance instance = BuildWcnf(RandomFaultTree({.nodes = 300, .seed = 1}));
  for (const SolverConfig& config : {kBnb, kBestFirst}) {
    Solution s = Solve(instance, config);
    EXPECT_GT(s.stats.decisions, 0u);
    EXPECT_GT(s.stats.propagations, 0u);
    EXPECT_GT(s.stats.nodes, 0u);
    EXPECT_GT(s.stats.elapsed.count(), 0);
    EXPECT_NEAR(s.weight, FalsifiedWeight(instance, s.model), 1e-12);
  }
}

TEST(ExtractTest, FireProtection) {
  FaultTree tree = testing::FireProtectionTree();
  WcnfInstance instance = BuildWcnf(tree);
  MpmcsResult r =
      ExtractMpmcs(Solve(instance, kBnb), instance, BuildWeightMap(tree));
  EXPECT_EQ(r.cut_set, (std::vector<std::string>{"x1", "x2"}));
  EXPECT_NEAR(r.probability, 0.02, 1e-6);
  EXPECT_NEAR(r.log_weight, 3.91203, 1e-4);
  EXPECT_EQ(r.probability, std::exp(-r.log_weight));
  EXPECT_EQ(r.solver_id, "bnb-desc");
}

TEST(ExtractTest, SingleEvent) {
  FaultTree tree("t", "e", {Event("e", 0.3)});
  WcnfInstance instance = BuildWcnf(tree);
  MpmcsResult r =
      ExtractMpmcs(Solve(instance, kBnb), instance, BuildWeightMap(tree));
  EXPECT_EQ(r.cut_set, std::vector<std::string>{"e"});
  EXPECT_NEAR(r.probability, 0.3, 1e-15);
}

TEST(ExtractTest, SweepDropsRedundantEvents) {
  FaultTree tree = TwoEventTree(GateType::kOr);
  WcnfInstance instance = BuildWcnf(tree);
  // A non-minimal model: both events present.
  Solution s;
  Propagator p(instance.hard);
  p.NewLevel();
  p.Assign(Literal::Pos(instance.var_map.event_var("a")));
  p.Assign(Literal::Pos(instance.var_map.event_var("b")));
  ASSERT_TRUE(p.Propagate());
  s.model = p.Model();
  MpmcsResult r = ExtractMpmcs(s, instance, BuildWeightMap(tree));
  ASSERT_EQ(r.cut_set.size(), 1u);
  EXPECT_EQ(r.cut_set[0], "b");  // heavier "a" is tried first
}

TEST(ExtractTest, RejectsModelThatMissesTopEvent) {
  FaultTree tree = TwoEventTree(GateType::kOr);
  WcnfInstance instance = BuildWcnf(tree);
  Solution s;
  s.model.assign(instance.hard.num_vars() + 1, false);
  EXPECT_THROW(ExtractMpmcs(s, instance, BuildWeightMap(tree)), InternalError);
}

}  // namespace
}  // namespace mpmcs
