#include <gtest/gtest.h>

#include <random>

#include "g2bundle/errors.hpp"
#include "g2bundle/mcg_action.hpp"
#include "g2bundle/twist_word.hpp"
#include "test_support.hpp"

using namespace g2bundle;

using testing_support::gw;
using testing_support::random_twist_word;

// ---- TwistWord ---------------------------------------------------------------

TEST(TwistWord, ParsesAndPrintsGrammar) {
  const TwistWord w = parse_twist_word("D1^2 D2^-1 D3");
  ASSERT_EQ(w.syllables().size(), 3U);
  EXPECT_EQ(w.syllables()[0], (Syllable{1, 2}));
  EXPECT_EQ(w.syllables()[1], (Syllable{2, -1}));
  EXPECT_EQ(to_string(w), "D1^2 D2^-1 D3");
  EXPECT_EQ(w.length(), 4);
  EXPECT_TRUE(parse_twist_word("   ").empty());
}

TEST(TwistWord, NormalizesRuns) {
  EXPECT_EQ(to_string(parse_twist_word("D1 D1 D2")), "D1^2 D2");
  EXPECT_TRUE(parse_twist_word("D1 D1^-1").empty());
  EXPECT_EQ(to_string(parse_twist_word("D3 D1 D1^-1 D3^2")), "D3^3");
}

TEST(TwistWord, RejectsBadTokens) {
  for (const char* bad : {"D9", "D0", "D1^0", "X1", "D", "D1^", "D1^x", "D-1", "D1^2^3"}) {
    try {
      parse_twist_word(std::string("D2 ") + bad);
      ADD_FAILURE() << bad << " parsed";
    } catch (const ParseError& e) {
      EXPECT_EQ(e.token(), bad);
    }
  }
}

TEST(TwistWord, InverseAndLetters) {
  const TwistWord w = parse_twist_word("D1^2 D2^-1 D5");
  EXPECT_EQ(to_string(w.inverse()), "D5^-1 D2 D1^-2");
  EXPECT_EQ(w.letters(), (std::vector<int>{1, 1, -2, 5}));
  EXPECT_EQ(TwistWord::from_letters(w.letters()), w);
  EXPECT_TRUE((w * w.inverse()).empty());
}

// ---- action table ------------------------------------------------------------

TEST(ApplyTwist, TableEntries) {
  EXPECT_EQ(apply_twist(1, 1, a2), gw("a2 a1"));
  EXPECT_EQ(apply_twist(1, -1, a2), gw("a2 a1^-1"));
  EXPECT_EQ(apply_twist(2, 1, a1), gw("a1 a2^-1"));
  EXPECT_EQ(apply_twist(2, -1, a1), gw("a1 a2"));
  EXPECT_EQ(apply_twist(3, 1, a2), gw("a3^-1 a1 a2"));
  EXPECT_EQ(apply_twist(3, 1, a4), gw("a3^-1 a1 a4"));
  EXPECT_EQ(apply_twist(3, -1, a4), gw("a1^-1 a3 a4"));
  EXPECT_EQ(apply_twist(4, 1, a3), gw("a3 a4"));
  EXPECT_EQ(apply_twist(5, 1, a4), gw("a4 a3^-1"));
  EXPECT_EQ(apply_twist(5, -1, a4), gw("a4 a3"));
}

TEST(ApplyTwist, UnlistedGeneratorsAreFixed) {
  EXPECT_EQ(apply_twist(1, 1, a1), gw("a1"));
  for (int g : {a1, a3, a4}) EXPECT_EQ(apply_twist(1, 1, g).size(), 1U);
  for (int g : {a1, a3}) EXPECT_EQ(apply_twist(3, -1, g), GroupWord{Letter(g, 1)});
  EXPECT_EQ(apply_twist(5, 1, a1), gw("a1"));
}

TEST(ApplyTwist, RejectsBadArguments) {
  EXPECT_THROW(apply_twist(0, 1, a1), InputError);
  EXPECT_THROW(apply_twist(6, 1, a1), InputError);
  EXPECT_THROW(apply_twist(1, 2, a1), InputError);
  EXPECT_THROW(apply_twist(1, 1, t_gen), InputError);
}

TEST(ApplyTwist, PositiveThenNegativeIsIdentity) {
  for (int i = 1; i <= 5; ++i) {
    const SurfaceAutomorphism composed = compose(single_twist(i, -1), single_twist(i, 1));
    EXPECT_EQ(composed, SurfaceAutomorphism::identity()) << "D" << i;
  }
}

TEST(ApplyAutomorphism, TwistOnProduct) {
  EXPECT_EQ(apply_automorphism(single_twist(2, 1), gw("a1 a3")), gw("a1 a2^-1 a3"));
}

TEST(ApplyAutomorphism, IdentityReduces) {
  EXPECT_EQ(apply_automorphism(SurfaceAutomorphism::identity(), gw("a1 a2 a2^-1 a3")), gw("a1 a3"));
}

TEST(ApplyAutomorphism, IteratedFifthTwist) {
  EXPECT_EQ(automorphism_of(parse_twist_word("D5^3")).images[a4], gw("a4 a3^-1 a3^-1 a3^-1"));
}

TEST(ApplyAutomorphism, RejectsStableLetter) {
  EXPECT_THROW(apply_automorphism(SurfaceAutomorphism::identity(), gw("a1 t")), InputError);
}

TEST(ApplyAutomorphism, IsHomomorphism) {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 200; ++k) {
    const SurfaceAutomorphism phi = automorphism_of(random_twist_word(rng, 8));
    GroupWord u, v;
    for (std::size_t i = rng() % 8; i > 0; --i) u.push_back(Letter(static_cast<int>(rng() % 4), rng() % 2 ? 1 : -1));
    for (std::size_t i = rng() % 8; i > 0; --i) v.push_back(Letter(static_cast<int>(rng() % 4), rng() % 2 ? 1 : -1));
    GroupWord uv = u;
    uv.append(v);
    EXPECT_EQ(apply_automorphism(phi, uv),
              free_reduce(multiply(apply_automorphism(phi, u), apply_automorphism(phi, v))));
  }
}

// ---- composites ------------------------------------------------------------------

TEST(AutomorphismOf, EmptyWordIsIdentity) {
  EXPECT_EQ(automorphism_of(TwistWord{}), SurfaceAutomorphism::identity());
  EXPECT_EQ(automorphism_of(TwistWord({{1, 1}, {1, -1}})), SurfaceAutomorphism::identity());
}

TEST(AutomorphismOf, LeftmostSyllableAppliedLast) {
  // D1 D2: apply D2 first, then D1. a1 -> a1 a2^-1 -> a1 (a2 a1)^-1 = a1 a1^-1 a2^-1.
  EXPECT_EQ(automorphism_of(parse_twist_word("D1 D2")).images[a1], gw("a2^-1"));
  // D2 D1: a1 is fixed by D1, then D2 sends it to a1 a2^-1.
  EXPECT_EQ(automorphism_of(parse_twist_word("D2 D1")).images[a1], gw("a1 a2^-1"));
}

TEST(AutomorphismOf, FamilyImageOfA1) {
  for (int mask = 0; mask < 16; ++mask) {
    const auto eps = testing_support::eps_from_mask(mask);
    for (long long n = -6; n <= 6; ++n) {
      const GroupWord expected{Letter(a1, 1), Letter(a2, -eps[1])};
      EXPECT_EQ(automorphism_of(family_word(eps, n)).images[a1], expected);
    }
  }
}

TEST(FamilyWord, Examples) {
  EXPECT_EQ(to_string(family_word({1, 1, 1, 1}, 0)), "D2 D1 D3 D4");
  EXPECT_EQ(to_string(family_word({-1, 1, -1, -1}, 2)), "D2 D1^-1 D3^-1 D4^-1 D5^2");
  for (long long n = -7; n <= 7; ++n) EXPECT_EQ(family_word({1, 1, 1, 1}, n).length(), 4 + std::abs(n));
  EXPECT_THROW(family_word({1, 0, 1, 1}, 1), InputError);
}

TEST(SurfaceRelator, Orientation) {
  EXPECT_EQ(surface_relator(), gw("a1 a2 a1^-1 a2^-1 a4 a3 a4^-1 a3^-1"));
}

TEST(SurfaceRelator, PreservedBySingleTwists) {
  for (int i = 1; i <= 5; ++i)
    for (int e : {1, -1}) EXPECT_TRUE(preserves_surface_relator(single_twist(i, e))) << i << " " << e;
}

TEST(SurfaceRelator, PreservedByRandomWords) {
  std::mt19937_64 rng(20);
  for (int k = 0; k < 1000; ++k) {
    const TwistWord w = random_twist_word(rng, 20);
    const SurfaceAutomorphism phi = automorphism_of(w);
    EXPECT_TRUE(preserves_surface_relator(phi)) << to_string(w);
    EXPECT_EQ(compose(automorphism_of(w.inverse()), phi), SurfaceAutomorphism::identity()) << to_string(w);
    EXPECT_EQ(automorphism_of(w * w.inverse()), SurfaceAutomorphism::identity());
  }
}
