#include "mpmcs/fault_tree.h"

#include <random>

#include "gtest/gtest.h"
#include "mpmcs/generator.h"
#include "test_support.h"

namespace mpmcs {
namespace {

using Kind = ValidationError::Kind;
using testing::Event;
using testing::MakeGate;

Kind ParseErrorKind(const std::string& json) {
  try {
    ParseFaultTree(json);
  } catch (const ValidationError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no ValidationError for " << json;
  return Kind::kSchema;
}

TEST(FaultTreeTest, ParsesFireProtectionFixture) {
  FaultTree tree = testing::FireProtectionTree();
  EXPECT_EQ(tree.num_basic_events(), 7u);
  EXPECT_EQ(tree.num_gates(), 5u);
  EXPECT_EQ(tree.top(), "fps_failure");
  EXPECT_EQ(tree.basic_event_ids(),
            (std::vector<std::string>{"x1", "x2", "x3", "x4", "x5", "x6",
                                      "x7"}));
  EXPECT_DOUBLE_EQ(tree.probability("x3"), 0.001);
}

TEST(FaultTreeTest, ParsesSingleEventTree) {
  FaultTree tree = ParseFaultTree(
      R"({"name":"t","top":"e","nodes":[{"id":"e","type":"basic","prob":0.5}]})");
  EXPECT_EQ(tree.num_basic_events(), 1u);
  EXPECT_EQ(tree.num_gates(), 0u);
  EXPECT_EQ(tree.top(), "e");
}

TEST(FaultTreeTest, RejectsDanglingChild) {
  EXPECT_EQ(ParseErrorKind(R"({"name":"t","top":"g","nodes":[
      {"id":"g","type":"or","children":["a","missing"]},
      {"id":"a","type":"basic","prob":0.1}]})"),
            Kind::kDanglingReference);
}

TEST(FaultTreeTest, RejectsMalformedJson) {
  EXPECT_EQ(ParseErrorKind(R"({"name": "t", "top": )"), Kind::kMalformedJson);
}

TEST(FaultTreeTest, RejectsUnknownNodeKind) {
  EXPECT_EQ(ParseErrorKind(R"({"name":"t","top":"g","nodes":[
      {"id":"g","type":"vote","children":["a"]},
      {"id":"a","type":"basic","prob":0.1}]})"),
            Kind::kUnknownNodeKind);
}

TEST(FaultTreeTest, RejectsCycle) {
  EXPECT_EQ(ParseErrorKind(R"({"name":"t","top":"g","nodes":[
      {"id":"g","type":"or","children":["h","a"]},
      {"id":"h","type":"and","children":["g"]},
      {"id":"a","type":"basic","prob":0.1}]})"),
            Kind::kCycle);
}

TEST(FaultTreeTest, RejectsDuplicateId) {
  EXPECT_EQ(ParseErrorKind(R"({"name":"t","top":"a","nodes":[
      {"id":"a","type":"basic","prob":0.1},
      {"id":"a","type":"basic","prob":0.2}]})"),
            Kind::kDuplicateId);
}

TEST(FaultTreeTest, RejectsProbabilitiesOutsideOpenInterval) {
  for (const char* p : {"0", "1", "1.5", "-0.1"}) {
    std::string json = std::string(R"({"name":"t","top":"a","nodes":[
        {"id":"a","type":"basic","prob":)") + p + "}]}";
    EXPECT_EQ(ParseErrorKind(json), Kind::kProbabilityOutOfRange) << p;
  }
}

TEST(FaultTreeTest, ProbabilityErrorNamesNode) {
  try {
    LoadFaultTree(testing::Fixture("bad_probability.json"));
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.node_id(), "pump");
    EXPECT_NE(std::string(e.what()).find("pump"), std::string::npos);
  }
}

TEST(FaultTreeTest, RejectsMissingTop) {
  EXPECT_EQ(ParseErrorKind(R"({"name":"t","nodes":[
      {"id":"a","type":"basic","prob":0.1}]})"),
            Kind::kMissingTop);
  EXPECT_EQ(ParseErrorKind(R"({"name":"t","top":"zz","nodes":[
      {"id":"a","type":"basic","prob":0.1}]})"),
            Kind::kMissingTop);
}

TEST(FaultTreeTest, RejectsUnknownFields) {
  EXPECT_EQ(ParseErrorKind(R"({"name":"t","top":"a","nodes":[
      {"id":"a","type":"basic","prob":0.1,"label":"x"}]})"),
            Kind::kSchema);
  EXPECT_EQ(ParseErrorKind(R"({"name":"t","top":"a","extra":1,"nodes":[
      {"id":"a","type":"basic","prob":0.1}]})"),
            Kind::kSchema);
  EXPECT_EQ(ParseErrorKind(R"({"name":"t","top":"a","nodes":[
      {"id":"a","type":"basic","prob":"0.1"}]})"),
            Kind::kSchema);
}

TEST(FaultTreeTest, RejectsUnreachableEmptyAndDuplicateChildren) {
  EXPECT_EQ(ParseErrorKind(R"({"name":"t","top":"a","nodes":[
      {"id":"a","type":"basic","prob":0.1},
      {"id":"b","type":"basic","prob":0.1}]})"),
            Kind::kUnreachableNode);
  EXPECT_EQ(ParseErrorKind(R"({"name":"t","top":"g","nodes":[
      {"id":"g","type":"and","children":[]}]})"),
            Kind::kEmptyGate);
  EXPECT_EQ(ParseErrorKind(R"({"name":"t","top":"g","nodes":[
      {"id":"g","type":"and","children":["a","a"]},
      {"id":"a","type":"basic","prob":0.1}]})"),
            Kind::kDuplicateChild);
}

TEST(FaultTreeTest, AcceptsSharedNodesAndPassThroughGates) {
  FaultTree tree("shared", "top",
                 {MakeGate("top", GateType::kAnd, {"left", "right"}),
                  MakeGate("left", GateType::kOr, {"common", "a"}),
                  MakeGate("right", GateType::kOr, {"common"}),
                  MakeGate("common", GateType::kAnd, {"b"}),
                  Event("a", 0.1), Event("b", 0.2)});
  EXPECT_EQ(tree.num_gates(), 4u);
}

TEST(FaultTreeTest, SerializeParseRoundTrip) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    FaultTree tree = i % 2 ? testing::RandomSmallTree(rng, 12)
                           : RandomFaultTree({.nodes = 1 + i * 7,
                                              .seed = rng()});
    EXPECT_EQ(ParseFaultTree(SerializeFaultTree(tree)), tree);
  }
}

}  // namespace
}  // namespace mpmcs
