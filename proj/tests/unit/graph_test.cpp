#include <gtest/gtest.h>

#include <vector>

#include "singraph/graph.hpp"
#include "singraph/graph_io.hpp"
#include "support.hpp"

using namespace singraph;

namespace {

WeightedDualGraph single(Int w) { return make_chain({w}); }

WeightedDualGraph d4() { return testing_support::make_star(-2, {{-2}, {-2}, {-2}}); }

WeightedDualGraph x37() { return make_chain({-4, -2, -3, -2, -2}); }

// ~E8: a chain of eight with a ninth vertex on the third from the end.
WeightedDualGraph affine_e8() {
  std::vector<VertexSpec> vs;
  std::vector<EdgeSpec> es;
  for (int i = 1; i <= 9; ++i) vs.push_back({"v" + std::to_string(i), -2});
  for (int i = 1; i < 8; ++i) es.push_back({"v" + std::to_string(i), "v" + std::to_string(i + 1)});
  es.push_back({"v3", "v9"});
  return WeightedDualGraph(vs, es);
}

}  // namespace

TEST(Graph, DotOnBasicCycles) {
  const auto g = single(-5);
  EXPECT_EQ(dot(g, Cycle::unit(1, 0), Cycle::unit(1, 0)), -5);
  const auto two = make_chain({-2, -3});
  EXPECT_EQ(dot(two, Cycle::unit(2, 0), Cycle::unit(2, 1)), 1);
  const auto d = d4();
  const auto z = Cycle(std::vector<Int>(4, 1)).with(d.index_of("c"), 2);
  EXPECT_EQ(dot(d, z, z), -2);
}

TEST(Graph, CanonicalDotByAdjunction) {
  EXPECT_EQ(canonical_dot(single(-2), Cycle::unit(1, 0)), 0);
  EXPECT_EQ(canonical_dot(single(-3), Cycle::unit(1, 0)), 1);
  EXPECT_EQ(canonical_dot(x37(), Cycle({1, 1, 1, 1, 1})), 3);
}

TEST(Graph, ArithmeticGenus) {
  for (Int w : {-1, -2, -7}) EXPECT_EQ(arithmetic_genus(single(w), Cycle::unit(1, 0)), 0);
  const auto d = d4();
  EXPECT_EQ(arithmetic_genus(d, Cycle(std::vector<Int>(4, 1)).with(d.index_of("c"), 2)), 0);
  // coefficients along the chain, then the extra vertex
  EXPECT_EQ(arithmetic_genus(affine_e8(), Cycle({2, 4, 6, 5, 4, 3, 2, 1, 3})), 1);
}

TEST(Graph, NegativeDefinite) {
  EXPECT_TRUE(is_negative_definite(single(-2)));
  EXPECT_FALSE(is_negative_definite(affine_e8()));
  EXPECT_TRUE(is_negative_definite(x37()));
  EXPECT_FALSE(is_negative_definite(make_chain({-1, -1})));
}

TEST(Graph, NegativeDefiniteLargeEntries) {
  // forces the multiprecision path
  std::vector<Int> w(12, -3'000'000'000LL);
  EXPECT_TRUE(is_negative_definite(make_chain(std::span<const Int>(w))));
}

TEST(Graph, CheckedArithmeticThrows) {
  EXPECT_THROW(checked_mul(Int{1} << 40, Int{1} << 40), GuardExceeded);
  EXPECT_THROW(checked_add(INT64_MAX, 1), GuardExceeded);
  EXPECT_EQ(checked_add(2, 3), 5);
}

TEST(Graph, BlowUpAndContract) {
  const auto g = single(-2);
  const auto up = blow_up_smooth_point(g, 0);
  ASSERT_EQ(up.size(), 2u);
  EXPECT_EQ(up.weight(0), -3);
  EXPECT_EQ(up.weight(1), -1);
  EXPECT_EQ(up.mult(0, 1), 1);
  EXPECT_EQ(contract(up, 1), g);

  const auto mid = make_chain({-2, -1, -2});
  const auto c = contract(mid, 1);
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c.weight(0), -1);
  EXPECT_EQ(c.weight(1), -1);
  EXPECT_EQ(c.mult(0, 1), 1);
}

TEST(Graph, MergeChain) {
  const std::vector<std::size_t> two{0, 1}, three{0, 1, 2};
  EXPECT_EQ(merge_chain(make_chain({-4, -3}), two).weights(), std::vector<Int>{-5});
  EXPECT_EQ(merge_chain(make_chain({-2, -2}), two).weights(), std::vector<Int>{-2});
  EXPECT_EQ(merge_chain(make_chain({-2, -3, -2}), three).weights(), std::vector<Int>{-3});
}

TEST(Graph, StructureQueries) {
  const auto d = d4();
  EXPECT_TRUE(d.is_tree());
  EXPECT_TRUE(d.is_connected());
  EXPECT_EQ(ends(d), 3u);
  EXPECT_EQ(d.valency(d.index_of("c")), 3u);
  EXPECT_TRUE(x37().is_minimal());
  EXPECT_FALSE(make_chain({-2, -1}).is_minimal());
  const std::vector<std::size_t> leaves{1, 2};
  EXPECT_EQ(connected_components(subgraph(d, leaves)).size(), 2u);
}

TEST(Graph, RejectsBadConstruction) {
  EXPECT_THROW(WeightedDualGraph({{"a", -2}, {"a", -2}}, {}), GraphError);
  EXPECT_THROW(WeightedDualGraph({{"a", -2}}, {{"a", "b"}}), GraphError);
  EXPECT_THROW(WeightedDualGraph({{"a", -2}}, {{"a", "a"}}), GraphError);
  EXPECT_THROW(WeightedDualGraph({{"a", 0}}, {}), GraphError);
}

TEST(GraphIo, JsonRoundTrip) {
  const auto g = read_graph_file(testing_support::corpus_path("graphs/e8.json"));
  EXPECT_EQ(parse_graph(graph_to_json(g)), g);
  EXPECT_EQ(parse_graph(graph_to_json(g, 2)), g);
}

TEST(GraphIo, ParseErrorsNameTheProblem) {
  try {
    parse_graph("{\n  \"vertices\": [\n  {\"id\": \"a\", \"weight\": -2},,\n]}");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
  try {
    parse_graph(R"({"vertices": [{"id": "a", "weight": "x"}], "edges": []})");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("weight"), std::string::npos) << e.what();
  }
  EXPECT_THROW(parse_graph(R"({"edges": []})"), ParseError);
  EXPECT_THROW(read_graph_file("/nonexistent/graph.json"), Error);
}

TEST(GraphIo, Dot) {
  const auto text = graph_to_dot(make_chain({-3, -2}));
  EXPECT_NE(text.find("graph G"), std::string::npos);
  EXPECT_NE(text.find("\"v1\" -- \"v2\""), std::string::npos);
  EXPECT_NE(text.find("-3"), std::string::npos);
}

TEST(GraphIo, CycleRoundTrip) {
  const auto d = d4();
  const auto z = Cycle(std::vector<Int>(4, 1)).with(d.index_of("c"), 2);
  EXPECT_EQ(parse_cycle(d, cycle_to_json(d, z)), z);
}
