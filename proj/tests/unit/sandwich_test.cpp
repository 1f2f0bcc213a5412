#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>

#include "singraph/canonical.hpp"
#include "singraph/cluster.hpp"
#include "singraph/cycle_algebra.hpp"
#include "singraph/delta_const.hpp"
#include "singraph/graph_io.hpp"
#include "singraph/sandwich.hpp"
#include "support.hpp"

using namespace singraph;

namespace {

WeightedDualGraph x37() { return make_chain({-4, -2, -3, -2, -2}); }

std::vector<Int> decorations(const DecoratedCurve& c) {
  std::vector<Int> out;
  for (std::size_t i = 0; i < c.branch_count(); ++i) out.push_back(c.l(i));
  std::sort(out.rbegin(), out.rend());
  return out;
}

}  // namespace

TEST(Arrows, X37Example) {
  const auto g = x37();
  const auto a = attach_arrows(g, 0);
  std::vector<std::size_t> per(5, 0);
  for (std::size_t v : a.attached_to) ++per[g.index_of(a.graph.id(v))];
  EXPECT_EQ(per, (std::vector<std::size_t>{2, 0, 1, 0, 1}));
}

TEST(Arrows, SingleVertex) {
  for (Int n = 2; n <= 6; ++n) EXPECT_EQ(attach_arrows(make_chain({-n})).arrows.size(), static_cast<std::size_t>(n - 1));
}

TEST(Proximity, Examples) {
  const auto single = proximity_factorize(make_chain({-1}));
  EXPECT_EQ(single.matrix(), (Matrix{{1}}));
  EXPECT_THROW(proximity_factorize(testing_support::make_star(-2, {{-2}, {-2}, {-2}})), NotBlowdownable);
}

TEST(DecoratedCurveOf, X37) {
  const auto a = attach_arrows(x37(), 0);
  const auto c = decorated_curve_of(a, proximity_factorize(a));
  ASSERT_EQ(c.branch_count(), 4u);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_TRUE(c.is_smooth_branch(i));
  EXPECT_EQ(decorations(c), (std::vector<Int>{6, 4, 2, 2}));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) EXPECT_EQ(std::min(c.l(i), c.l(j)), c.intersection(i, j) + 1);
  const auto back = graph_of(c);
  ASSERT_EQ(back.size(), 1u);
  EXPECT_TRUE(is_isomorphic(back[0], x37()));
}

TEST(GraphOf, SmoothCurve) {
  const auto c = read_decorated_curve_file(testing_support::corpus_path("curves/smooth.json"));
  EXPECT_TRUE(graph_of(c).empty());
}

TEST(GraphOf, CuspWithLongDecoration) {
  const auto c = read_decorated_curve_file(testing_support::corpus_path("curves/cusp_a2_l4.json"));
  std::multiset<Int> weights;
  for (const auto& g : graph_of(c))
    for (Int w : g.weights()) weights.insert(w);
  EXPECT_EQ(weights, (std::multiset<Int>{-3, -2}));
}

TEST(GraphOf, RejectsDecorationBelowMultiplicity) {
  EXPECT_THROW(cusp_germ(2, 1), GraphError);
}

TEST(Recipes, Iii3GivesIii3Graphs) {
  for (int k = 1; k <= 3; ++k)
    for (int s = 0; s <= 2; ++s) {
      const auto c = recipe_iii3(k, s);
      EXPECT_EQ(c.branch_count(), 1u);
      EXPECT_EQ(c.l(0), 2 * k + 4 + s);
      EXPECT_EQ(germ_type(c), "A" + std::to_string(2 * k));
      EXPECT_EQ(graph_of(c).size(), 1u);
    }
  EXPECT_THROW(recipe_iii3(0, 0), GraphError);
}

TEST(Recipes, Iii4Variants) {
  for (int k = 2; k <= 4; ++k) {
    EXPECT_EQ(recipe_iii4(Iii4Variant::E6, k).l(0), k + 7);
    EXPECT_EQ(recipe_iii4(Iii4Variant::E8, k).l(0), k + 8);
    EXPECT_EQ(graph_of(recipe_iii4(Iii4Variant::E8, k)).size(), 1u);
  }
  EXPECT_THROW(recipe_iii4(Iii4Variant::E6, 1), GraphError);
  EXPECT_THROW(recipe_iii4(Iii4Variant::Cusp, 2), GraphError);
}

TEST(EndsBound, Examples) {
  const auto a = attach_arrows(x37(), 0);
  const auto c = decorated_curve_of(a, proximity_factorize(a));
  EXPECT_EQ(ends_bound(c, {{0, 1, 2, 3}}), 2u);
  EXPECT_EQ(ends_bound(c, {{0}, {1}, {2}, {3}}), 5u);
}

TEST(E8Profiles, Admissible) {
  EXPECT_TRUE(is_admissible_e8_profile({3, 2, 1, 1, 1, 1}, 1));
  EXPECT_TRUE(is_admissible_e8_profile({2, 2, 2, 2, 1}, 1));
  EXPECT_FALSE(is_admissible_e8_profile({4, 1}, 1));
}

TEST(IsSandwiched, Examples) {
  EXPECT_EQ(is_sandwiched(x37()).answer, SandwichAnswer::Yes);
  EXPECT_EQ(is_sandwiched(make_chain({-2, -2, -2})).answer, SandwichAnswer::Yes);
  EXPECT_EQ(is_sandwiched(testing_support::make_star(-2, {{-2}, {-2}, {-2}}), 12).answer, SandwichAnswer::No);
  const auto iii9 = read_graph_file(testing_support::corpus_path("graphs/iii9_min.json"));
  EXPECT_EQ(is_sandwiched(iii9).answer, SandwichAnswer::No);
}

TEST(DeltaConst, SingleSmoothBranchSplits) {
  const auto c = smooth_branch_germ({{0}}, {3});
  std::set<std::vector<std::string>> types;
  for (const auto& cand : delta_const_candidates(c)) types.insert(cand.singularity_types());
  EXPECT_FALSE(types.empty());
  for (const auto& t : types)
    for (const auto& name : t) EXPECT_EQ(name, "A0");
}

TEST(DeltaConst, A2SplitsIntoA0OrA1) {
  std::set<std::vector<std::string>> types;
  for (const auto& cand : delta_const_candidates(cusp_germ(1, 2))) types.insert(cand.singularity_types());
  EXPECT_TRUE(types.count({"A2"}));
}

TEST(DeltaConst, FibresAreDecoratedCurves) {
  const auto a = attach_arrows(x37(), 0);
  const auto c = decorated_curve_of(a, proximity_factorize(a));
  for (const auto& cand : delta_const_candidates(c))
    for (const auto& germ : cand.germs)
      for (std::size_t i = 0; i < germ.branch_count(); ++i) EXPECT_GE(germ.l(i), germ.m(i));
}

TEST(CurveIo, RoundTripAndErrors) {
  const auto c = read_decorated_curve_file(testing_support::corpus_path("curves/x37_11.json"));
  EXPECT_EQ(parse_decorated_curve(decorated_curve_to_json(c)), c);
  EXPECT_THROW(parse_decorated_curve(R"({"points": []})"), ParseError);
  EXPECT_THROW(parse_decorated_curve(R"({"points": [{"id": 1, "parent": null}], "branches": [{"attach": 7, "l": 1}]})"),
               Error);
}

// the number of ends cannot increase under deformation
TEST(DeltaConst, EndsDoNotIncreaseOnCorpus) {
  std::size_t checked = 0;
  for (const auto& e : std::filesystem::directory_iterator(testing_support::corpus_path("graphs"))) {
    const auto g = read_graph_file(e.path().string());
    if (!is_rational(g) || !fundamental_cycle(g).z.is_reduced()) continue;
    DecoratedCurve c;
    try {
      const auto a = attach_arrows(g);
      c = decorated_curve_of(a, proximity_factorize(a));
    } catch (const NotBlowdownable&) {
      continue;
    }
    bool smooth = c.branch_count() <= 4;
    for (std::size_t i = 0; i < c.branch_count(); ++i) smooth = smooth && c.is_smooth_branch(i);
    if (!smooth) continue;
    for (const auto& cand : delta_const_candidates(c))
      for (const auto& germ : cand.germs)
        for (const auto& h : graph_of(germ)) EXPECT_LE(ends(h), ends(g)) << e.path();
    ++checked;
  }
  EXPECT_GT(checked, 0u);
}
