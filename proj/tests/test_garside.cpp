#include <gtest/gtest.h>

#include "cbkap/garside.hpp"
#include "test_support.hpp"

namespace cbkap {
namespace {

BraidWord W(int n, std::vector<int> letters) { return BraidWord(n, std::move(letters)); }

TEST(NormalForm, Identity) {
  auto nf = normal_form(W(3, {1, -1}));
  EXPECT_EQ(nf.inf, 0);
  EXPECT_TRUE(nf.factors.empty());
}

TEST(NormalForm, HalfTwist) {
  auto nf = normal_form(W(3, {1, 2, 1}));
  EXPECT_EQ(nf.inf, 1);
  EXPECT_TRUE(nf.factors.empty());
  EXPECT_EQ(normal_form(half_twist_word(9)).inf, 1);
}

TEST(NormalForm, InverseGenerator) {
  auto nf = normal_form(W(3, {-1}));
  EXPECT_EQ(nf.inf, -1);
  ASSERT_EQ(nf.factors.size(), 1u);
  EXPECT_EQ(nf.factors[0].one_based(), (std::vector<int>{3, 1, 2}));
  // sigma_1^{-1} times the inverse of the reconstructed word is trivial.
  auto back = word_of(nf);
  EXPECT_EQ(normal_form(mult(W(3, {-1}), invert(back))), normal_form(W(3, {})));
}

TEST(NormalForm, RelationsAreRespected) {
  EXPECT_EQ(normal_form(W(4, {1, 2, 1})), normal_form(W(4, {2, 1, 2})));
  EXPECT_EQ(normal_form(W(5, {1, 3})), normal_form(W(5, {3, 1})));
  EXPECT_NE(normal_form(W(5, {1, 2})), normal_form(W(5, {2, 1})));
  EXPECT_NE(normal_form(conjugate(W(5, {1}), W(5, {2}))), normal_form(W(5, {1})));
  EXPECT_EQ(normal_form(conjugate(W(5, {1}), W(5, {3}))), normal_form(W(5, {1})));
}

TEST(WordOf, Examples) {
  GarsideNormalForm trivial{3, 0, {}};
  EXPECT_TRUE(word_of(trivial).empty());
  GarsideNormalForm delta{3, 1, {}};
  EXPECT_EQ(word_of(delta).letters(), (std::vector<int>{1, 2, 1}));
}

TEST(ReduceModDeltaSquared, Parity) {
  GarsideNormalForm nf = normal_form(W(5, {1, 2, -3, 4}));
  auto shifted = nf;
  shifted.inf = 4;
  EXPECT_EQ(reduce_mod_delta_squared(shifted).inf, 0);
  EXPECT_EQ(reduce_mod_delta_squared(shifted).factors, nf.factors);
  shifted.inf = -3;
  EXPECT_EQ(reduce_mod_delta_squared(shifted).inf, -1);
  shifted.inf = 0;
  EXPECT_EQ(reduce_mod_delta_squared(shifted), shifted);
  shifted.inf = 7;
  auto once = reduce_mod_delta_squared(shifted);
  EXPECT_EQ(reduce_mod_delta_squared(once), once);
}

TEST(StartingFinishingSets, OfGenerators) {
  auto s2 = permutation_of(W(5, {2}));
  EXPECT_EQ(starting_set(s2), (std::vector<int>{2}));
  EXPECT_EQ(finishing_set(s2), (std::vector<int>{2}));
  auto p = permutation_of(W(5, {1, 2}));  // sigma_1 sigma_2
  EXPECT_EQ(starting_set(p), (std::vector<int>{1}));
  EXPECT_EQ(finishing_set(p), (std::vector<int>{2}));
  EXPECT_TRUE(is_left_weighted(permutation_of(W(4, {1, 2})), permutation_of(W(4, {2}))));
  EXPECT_FALSE(is_left_weighted(permutation_of(W(4, {1})), permutation_of(W(4, {2}))));
}

TEST(PermutationBraidWord, LengthIsInversionCount) {
  EXPECT_EQ(permutation_braid_word(Permutation::reversal(6)).size(), 15u);
  EXPECT_TRUE(permutation_braid_word(Permutation::identity(6)).empty());
  auto p = permutation_of(W(6, {2, 3, 1, 2}));
  EXPECT_EQ(permutation_of(permutation_braid_word(p)), p);
}

class NormalFormProperties : public ::testing::TestWithParam<int> {};

TEST_P(NormalFormProperties, InvariantsAndRoundTrip) {
  const int n = GetParam();
  std::mt19937_64 rng(1000 + n);
  const auto gens = testing::all_generators(n);
  for (int t = 0; t < 200; ++t) {
    auto w = random_word(n, 1 + t % 25, gens, rng);
    auto nf = normal_form(w);
    ASSERT_TRUE(is_valid(nf)) << w.to_string();
    auto word = word_of(nf);
    EXPECT_EQ(normal_form(word), nf);
    EXPECT_EQ(word_of(normal_form(word)), word);
    const auto half = static_cast<std::size_t>(n * (n - 1) / 2);
    EXPECT_LE(word.size(), half * (static_cast<std::size_t>(std::abs(nf.inf)) + nf.factors.size()));
    EXPECT_TRUE(normal_form(mult(w, invert(w))) == normal_form(BraidWord(n)));
    // Delta^2 is central.
    auto d2 = mult(half_twist_word(n), half_twist_word(n));
    EXPECT_EQ(normal_form(mult(d2, w)), normal_form(mult(w, d2)));
    auto shifted = normal_form(mult(d2, w));
    EXPECT_EQ(shifted.inf, nf.inf + 2);
    EXPECT_EQ(shifted.factors, nf.factors);
  }
}

TEST_P(NormalFormProperties, CanonicalUnderRelatorInsertion) {
  const int n = GetParam();
  std::mt19937_64 rng(77 * n);
  const auto gens = testing::all_generators(n);
  for (int t = 0; t < 300; ++t) {
    auto w = random_word(n, 4 + t % 20, gens, rng);
    auto r = testing::scramble(w, 30, rng);
    ASSERT_EQ(normal_form(w), normal_form(r)) << w.to_string() << " vs " << r.to_string();
  }
}

INSTANTIATE_TEST_SUITE_P(Strands, NormalFormProperties, ::testing::Values(3, 4, 5, 6, 8, 14));

}  // namespace
}  // namespace cbkap
