#include <gtest/gtest.h>

#include "singraph/classify.hpp"
#include "singraph/cycle_algebra.hpp"
#include "singraph/graph_io.hpp"
#include "singraph/universe.hpp"
#include "support.hpp"

using namespace singraph;
using testing_support::make_star;

namespace {

WeightedDualGraph corpus(const std::string& name) {
  return read_graph_file(testing_support::corpus_path("graphs/" + name + ".json"));
}

}  // namespace

TEST(Laufer, ChainsAreCyclicQuotients) {
  EXPECT_EQ(laufer_type(make_chain({-4, -2, -3, -2, -2})).tag, LauferTag::I_II);
  EXPECT_EQ(laufer_type(make_chain({-7})).tag, LauferTag::I_II);
  EXPECT_EQ(laufer_type(make_chain({-2, -2, -2})).tag, LauferTag::I_II);
}

TEST(Laufer, MinusThreeCentreStarIsIii1) {
  EXPECT_EQ(laufer_type(make_star(-3, {{-2}, {-4, -2}, {-2, -5, -3}})).tag, LauferTag::III_1);
  EXPECT_EQ(laufer_type(make_star(-3, {{-2}, {-2}, {-2}})).tag, LauferTag::III_1);
}

TEST(Laufer, AffineE6ShapeMatchesNothing) {
  const auto g = make_star(-2, {{-2, -2, -3}, {-2, -2, -2}, {-2, -2, -2}});
  EXPECT_EQ(laufer_type(g).tag, LauferTag::None);
}

TEST(Laufer, CorpusInstances) {
  const std::pair<const char*, LauferTag> cases[] = {
      {"iii1_min", LauferTag::III_1}, {"iii2_min", LauferTag::III_2}, {"iii3_min", LauferTag::III_3},
      {"iii4_min", LauferTag::III_4}, {"iii5_min", LauferTag::III_5}, {"iii6_min", LauferTag::III_6},
      {"iii7_min", LauferTag::III_7}, {"iii8_min", LauferTag::III_8}, {"iii9_min", LauferTag::III_9},
  };
  for (const auto& [name, tag] : cases) EXPECT_EQ(laufer_type(corpus(name)).tag, tag) << name;
}

TEST(Laufer, TemplatesAreExclusiveOnSmallUniverse) {
  for (const auto& g : rational_tree_universe(6, -4)) EXPECT_LE(matching_laufer_tags(g).size(), 1u) << graph_to_json(g);
}

TEST(Laufer, RejectsNonMinimal) { EXPECT_THROW(laufer_type(make_chain({-2, -1})), GraphError); }

TEST(BasePoints, RdpAndRtp) {
  EXPECT_TRUE(is_rdp(corpus("e7")));
  EXPECT_FALSE(is_rdp(make_chain({-2, -3})));
  EXPECT_TRUE(is_rtp(make_chain({-2, -3, -2, -2})));
  const auto d4c = make_star(-3, {{-2}, {-2}, {-2}});
  EXPECT_EQ(is_rtp(d4c), multiplicity(d4c) == 3);
}

TEST(Obtainable, Examples) {
  const auto e8 = corpus("e8");
  const auto v = obtainable_from_base(e8);
  EXPECT_EQ(v.kind, BaseKind::RDP);
  EXPECT_EQ(v.base_weights, e8.weights());
  EXPECT_EQ(obtainable_from_base(make_chain({-4, -2, -3, -2, -2})).kind, BaseKind::RDP);
  const auto w = obtainable_from_base(corpus("forbidden"));
  if (w.kind != BaseKind::None) {
    ASSERT_EQ(w.base_weights.size(), 6u);
    for (std::size_t i = 0; i < 6; ++i) EXPECT_GE(w.base_weights[i], corpus("forbidden").weight(i));
  }
}

TEST(Simple, Examples) {
  EXPECT_TRUE(is_conjecturally_simple(corpus("e8")));
  for (const char* n : {"star2", "star3", "star4", "te6", "te7", "te8"}) EXPECT_FALSE(is_conjecturally_simple(corpus(n))) << n;
}

TEST(Witness, HighValencyStar) {
  const auto g = corpus("star2");
  const auto w = nonsimple_witness(g);
  EXPECT_EQ(w.kind, NonsimpleWitness::Kind::HighValencyStar);
  EXPECT_EQ(g.valency(w.vertex), 4u);
}

TEST(Witness, TwoTriplePointsMerge) {
  // two -2 centred branch points joined by a -3, not obtainable from a double or triple point
  const WeightedDualGraph g({{"a", -2}, {"b", -3}, {"c", -2}, {"x1", -3}, {"x2", -3}, {"y1", -3}, {"y2", -3}},
                            {{"a", "b"}, {"b", "c"}, {"a", "x1"}, {"a", "x2"}, {"c", "y1"}, {"c", "y2"}});
  if (!is_rational(g) || obtainable_from_base(g).kind != BaseKind::None) GTEST_SKIP() << "not a witness instance";
  const auto w = nonsimple_witness(g);
  ASSERT_EQ(w.kind, NonsimpleWitness::Kind::TwoTripleMerge);
  const auto merged = merge_chain(g, w.path);
  std::size_t top = 0;
  for (std::size_t v = 0; v < merged.size(); ++v) top = std::max(top, merged.valency(v));
  EXPECT_GE(top, 4u);
}

TEST(Witness, ConfiningE6) {
  const auto g = corpus("te6");
  ASSERT_EQ(obtainable_from_base(g).kind, BaseKind::None);
  const auto w = nonsimple_witness(g);
  ASSERT_EQ(w.kind, NonsimpleWitness::Kind::ConfiningSubgraph);
  ASSERT_TRUE(w.confining);
  EXPECT_EQ(w.confining->type, ConfiningType::E6);
}

TEST(Witness, RefusesObtainable) { EXPECT_THROW(nonsimple_witness(corpus("e8")), GraphError); }

TEST(Confining, Table2Instances) {
  EXPECT_EQ(find_confining_subgraph(corpus("te6"))->type, ConfiningType::E6);
  EXPECT_EQ(find_confining_subgraph(corpus("te7"))->type, ConfiningType::E7);
  EXPECT_EQ(find_confining_subgraph(corpus("te8"))->type, ConfiningType::E8);
  EXPECT_FALSE(find_confining_subgraph(corpus("e8")));
}

TEST(SandwichObstruction, Examples) {
  EXPECT_TRUE(sandwich_obstruction(corpus("d4")));
  EXPECT_TRUE(sandwich_obstruction(corpus("forbidden")));
  for (const char* n : {"iii5_min", "iii6_min", "iii7_min", "iii8_min", "iii9_min"})
    EXPECT_TRUE(sandwich_obstruction(corpus(n))) << n;
  EXPECT_FALSE(sandwich_obstruction(make_chain({-4, -2, -3, -2, -2})));
  EXPECT_FALSE(sandwich_obstruction(make_chain({-2, -2, -2, -2})));
  EXPECT_FALSE(sandwich_obstruction(corpus("iii1_min")));
}
