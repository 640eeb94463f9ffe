#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace g2bundle;

namespace {

GroupWord word(std::initializer_list<int> letters) {
  GroupWord w;
  for (int x : letters) w.push_back(Letter(std::abs(x) - 1, x > 0 ? 1 : -1));
  return w;
}

}  // namespace

TEST(Tietze, SingleOccurrenceRelator) {
  const Presentation p({"x", "y"}, {word({2})});
  const auto trace = tietze_eliminate(p);
  ASSERT_EQ(trace.steps.size(), 1U);
  EXPECT_EQ(trace.steps[0].eliminated, 1);
  EXPECT_TRUE(trace.steps[0].substitution.empty());
  EXPECT_EQ(trace.final, Presentation({"x"}, {}));
  EXPECT_FALSE(trace.truncated);
}

TEST(Tietze, NothingToEliminate) {
  const Presentation p({"x", "y"}, {word({1, 1, 2, 2, 2})});
  const auto trace = tietze_eliminate(p);
  EXPECT_TRUE(trace.steps.empty());
  EXPECT_EQ(trace.final, p);
}

TEST(Tietze, OneGeneratorFreeGroup) {
  EXPECT_EQ(rank_upper_bound(Presentation({"x"}, {})), 1);
}

TEST(Tietze, SolvesForNegativeOccurrence) {
  // x y^-1 x = 1 gives y = x x.
  const Presentation p({"x", "y", "z"}, {word({1, -2, 1}), word({2, 3, 2, 3})});
  const auto trace = tietze_eliminate(p);
  ASSERT_FALSE(trace.steps.empty());
  EXPECT_EQ(trace.steps[0].eliminated, 1);
  EXPECT_EQ(trace.steps[0].substitution, word({1, 1}));
}

TEST(Tietze, FamilyReducesToA1AndT) {
  for (int mask = 0; mask < 16; ++mask)
    for (long long n = -10; n <= 10; ++n) {
      const Presentation p = bundle_presentation(family_word(testing_support::eps_from_mask(mask), n), FiberType::closed);
      const auto trace = tietze_eliminate(p);
      EXPECT_EQ(trace.final.generators(), (std::vector<std::string>{"a1", "t"})) << mask << " " << n;
      ASSERT_EQ(trace.steps.size(), 3U);
      EXPECT_EQ(trace.steps[0].eliminated, a4);
      EXPECT_EQ(trace.steps[1].eliminated, a3);
      EXPECT_EQ(trace.steps[2].eliminated, a2);
    }
}

TEST(Tietze, TrivialMonodromyKeepsFiveGenerators) {
  const Presentation p = bundle_presentation(TwistWord{}, FiberType::closed);
  // Every relator mentions each of its generators twice.
  for (const auto& r : p.relators())
    for (int g = 0; g < 5; ++g) EXPECT_NE(occurrences(r, g), 1U);
  EXPECT_EQ(tietze_eliminate(p).final.generator_count(), 5);
  EXPECT_EQ(rank_upper_bound(p), 5);
}

TEST(Tietze, ReplayReproducesFinal) {
  std::mt19937_64 rng(8);
  for (int k = 0; k < 200; ++k) {
    const TwistWord w = testing_support::random_twist_word(rng, 20);
    for (FiberType f : {FiberType::closed, FiberType::once_punctured}) {
      const Presentation p = bundle_presentation(w, f);
      const auto trace = tietze_eliminate(p);
      const auto replayed = replay(p, trace.steps);
      ASSERT_TRUE(replayed.has_value()) << to_string(w);
      EXPECT_EQ(*replayed, trace.final);
      for (const auto& step : trace.steps) EXPECT_FALSE(contains_generator(step.substitution, step.eliminated));
    }
  }
}

TEST(Tietze, ReplayRejectsIllegalSteps) {
  const Presentation p({"x", "y"}, {word({1, 1, 2, 2})});
  EXPECT_FALSE(replay(p, {TietzeStep{0, 0, {}}}).has_value());
  EXPECT_FALSE(replay(p, {TietzeStep{0, 4, {}}}).has_value());
}

TEST(Tietze, Deterministic) {
  std::mt19937_64 rng(9);
  for (int k = 0; k < 50; ++k) {
    const Presentation p = bundle_presentation(testing_support::random_twist_word(rng, 20), FiberType::closed);
    const auto a = tietze_eliminate(p), b = tietze_eliminate(p);
    EXPECT_EQ(a.steps, b.steps);
    EXPECT_EQ(a.final, b.final);
  }
}

TEST(Tietze, PreservesHomology) {
  std::mt19937_64 rng(10);
  for (int k = 0; k < 200; ++k) {
    const Presentation p = bundle_presentation(testing_support::random_twist_word(rng, 20), FiberType::closed);
    EXPECT_EQ(homology_of(p), homology_of(tietze_eliminate(p).final));
  }
}

TEST(Tietze, BudgetTruncates) {
  const Presentation p = bundle_presentation(family_word({1, 1, 1, 1}, 4), FiberType::closed);
  TietzeBudget steps_only;
  steps_only.max_steps = 1;
  const auto a = tietze_eliminate(p, steps_only);
  EXPECT_TRUE(a.truncated);
  EXPECT_EQ(a.steps.size(), 1U);
  EXPECT_EQ(a.final.generator_count(), 4);
  TietzeBudget tiny;
  tiny.max_total_length = 5;
  const auto b = tietze_eliminate(p, tiny);
  EXPECT_TRUE(b.truncated);
  EXPECT_EQ(b.final.generator_count(), 5);
}

TEST(Tietze, TraceJson) {
  const Presentation p = bundle_presentation(family_word({1, 1, 1, 1}, 1), FiberType::closed);
  const auto j = to_json(tietze_eliminate(p), p);
  ASSERT_EQ(j["steps"].size(), 3U);
  EXPECT_EQ(j["steps"][0]["eliminated"], "a4");
  EXPECT_EQ(j["final"]["generators"], nlohmann::json({"a1", "t"}));
  EXPECT_EQ(j["truncated"], false);
}
