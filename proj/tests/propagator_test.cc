#include "mpmcs/propagator.h"

#include "gtest/gtest.h"
#include "test_support.h"

namespace mpmcs {
namespace {

CnfFormula Cnf(int vars, std::vector<std::vector<int>> clauses) {
  CnfFormula cnf(vars);
  for (const auto& c : clauses) {
    Clause clause;
    for (int lit : c) clause.push_back(Literal(std::abs(lit), lit < 0));
    cnf.AddClause(std::move(clause));
  }
  return cnf;
}

TEST(PropagatorTest, UnitClausesPropagateAtLevelZero) {
  Propagator p(Cnf(3, {{1}, {-1, 2}, {-2, -3}}));
  ASSERT_TRUE(p.consistent());
  EXPECT_EQ(p.value(1), Value::kTrue);
  EXPECT_EQ(p.value(2), Value::kTrue);
  EXPECT_EQ(p.value(3), Value::kFalse);
}

TEST(PropagatorTest, DetectsLevelZeroRefutation) {
  EXPECT_FALSE(Propagator(Cnf(1, {{1}, {-1}})).consistent());
  EXPECT_FALSE(Propagator(Cnf(2, {{1}, {-1, 2}, {-2}})).consistent());
}

TEST(PropagatorTest, ConflictAndBacktrack) {
  // x1 -> x2, x1 -> x3, -x2 | -x3
  Propagator p(Cnf(3, {{-1, 2}, {-1, 3}, {-2, -3}}));
  ASSERT_TRUE(p.consistent());
  p.NewLevel();
  ASSERT_TRUE(p.Assign(Literal::Pos(1)));
  EXPECT_FALSE(p.Propagate());
  p.Backtrack(0);
  EXPECT_EQ(p.value(1), Value::kUnassigned);
  EXPECT_EQ(p.value(2), Value::kUnassigned);
  EXPECT_EQ(p.value(3), Value::kUnassigned);

  p.NewLevel();
  ASSERT_TRUE(p.Assign(Literal::Neg(1)));
  EXPECT_TRUE(p.Propagate());
  p.NewLevel();
  ASSERT_TRUE(p.Assign(Literal::Pos(2)));
  EXPECT_TRUE(p.Propagate());
  EXPECT_EQ(p.value(3), Value::kFalse);
  p.Backtrack(1);
  EXPECT_EQ(p.value(1), Value::kFalse);
  EXPECT_EQ(p.value(2), Value::kUnassigned);
  EXPECT_FALSE(p.Assign(Literal::Pos(1)));
}

TEST(PropagatorTest, IgnoresTautologiesAndDuplicateLiterals) {
  Propagator p(Cnf(2, {{1, -1, 2}, {2, 2, -1}}));
  ASSERT_TRUE(p.consistent());
  p.NewLevel();
  p.Assign(Literal::Pos(1));
  EXPECT_TRUE(p.Propagate());
  EXPECT_EQ(p.value(2), Value::kTrue);
}

// Setting every event decides every Tseitin auxiliary, and the root unit
// clause conflicts exactly when the formula is false.
TEST(PropagatorTest, DecidesTseitinCircuitsFromEvents) {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 50; ++i) {
    FaultTree tree = testing::RandomSmallTree(rng, 8);
    WcnfInstance instance = BuildWcnf(tree);
    Formula f = ToFormula(tree);
    std::vector<std::string> events = tree.basic_event_ids();
    Propagator p(instance.hard);
    ASSERT_TRUE(p.consistent());
    for (std::uint32_t mask = 0; mask < (1u << events.size()); ++mask) {
      Assignment a;
      p.NewLevel();
      bool ok = true;
      for (std::size_t k = 0; k < events.size(); ++k) {
        bool on = (mask >> k) & 1u;
        if (on) a.Set(events[k], true);
        ok = p.Assign(Literal(instance.var_map.event_var(events[k]), !on)) &&
             ok;
      }
      ok = ok && p.Propagate();
      EXPECT_EQ(ok, Evaluate(f, a));
      if (ok) {
        for (Var v = 1; v <= p.num_vars(); ++v) {
          EXPECT_NE(p.value(v), Value::kUnassigned);
        }
      }
      p.Backtrack(0);
    }
  }
}

}  // namespace
}  // namespace mpmcs
