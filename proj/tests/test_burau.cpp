#include <gtest/gtest.h>

#include "cbkap/burau.hpp"

#include <algorithm>
#include <numeric>
#include "test_support.hpp"

namespace cbkap {
namespace {

constexpr Fp kP = 13;

BraidWord W(int n, std::vector<int> letters) { return BraidWord(n, std::move(letters)); }

LaurentPoly t(int n, int var1, int power, Fp c) { return LaurentPoly::monomial(n, kP, var1 - 1, power, c); }
LaurentPoly one(int n) { return LaurentPoly::constant(n, kP, 1); }
LaurentPoly zero(int n) { return LaurentPoly(n, kP); }

TEST(GeneratorMatrix, FirstGenerator) {
  auto m = generator_matrix(1, 3, kP);
  EXPECT_EQ(m(0, 0), t(3, 1, 1, kP - 1));
  EXPECT_EQ(m(0, 1), one(3));
  EXPECT_EQ(m(0, 2), zero(3));
  EXPECT_EQ(m(1, 1), one(3));
  EXPECT_EQ(m(2, 2), one(3));
  EXPECT_EQ(m(1, 0), zero(3));
}

TEST(GeneratorMatrix, MiddleGenerator) {
  auto m = generator_matrix(2, 3, kP);
  EXPECT_EQ(m(1, 0), t(3, 2, 1, 1));
  EXPECT_EQ(m(1, 1), t(3, 2, 1, kP - 1));
  EXPECT_EQ(m(1, 2), one(3));
  EXPECT_EQ(m(0, 0), one(3));
  EXPECT_EQ(m(0, 1), zero(3));
  EXPECT_EQ(m(2, 2), one(3));
  EXPECT_THROW(generator_matrix(3, 3, kP), std::invalid_argument);
  EXPECT_THROW(generator_matrix(0, 3, kP), std::invalid_argument);
}

TEST(GeneratorInverse, IsTwoSidedInverse) {
  for (int n : {3, 4, 6}) {
    for (int i = 1; i < n; ++i) {
      const auto g = generator_element(i, n, kP);
      const auto h = generator_inverse_element(i, n, kP);
      EXPECT_EQ(g * h, CBElement::identity(n, kP));
      EXPECT_EQ(h * g, CBElement::identity(n, kP));
      EXPECT_EQ(h.s, g.s);
    }
  }
  auto h = generator_inverse_element(2, 4, kP);
  EXPECT_EQ(h.m(1, 0), one(4));
  EXPECT_EQ(h.m(1, 1), t(4, 3, -1, kP - 1));
  EXPECT_EQ(h.m(1, 2), t(4, 3, -1, 1));
  EXPECT_EQ(h.m(1, 3), zero(4));
}

TEST(PermAct, SubstitutesVariables) {
  auto m = generator_matrix(1, 3, kP);
  EXPECT_EQ(perm_act(Permutation::identity(3), m), m);
  Permutation s12 = Permutation::identity(3);
  s12.swap_positions(1);
  EXPECT_EQ(perm_act(s12, m)(0, 0), t(3, 2, 1, kP - 1));
}

TEST(PermAct, IsAnAction) {
  std::mt19937_64 rng(3);
  const int n = 5;
  auto m = phi(W(n, {1, -2, 3, 4, -1}), kP).m;
  for (int k = 0; k < 20; ++k) {
    std::vector<std::uint8_t> a(n), b(n);
    std::iota(a.begin(), a.end(), 0);
    std::iota(b.begin(), b.end(), 0);
    std::shuffle(a.begin(), a.end(), rng);
    std::shuffle(b.begin(), b.end(), rng);
    Permutation s(a), u(b);
    EXPECT_EQ(perm_act(s * u, m), perm_act(s, perm_act(u, m)));
  }
}

TEST(Phi, Examples) {
  EXPECT_EQ(phi(W(3, {}), kP), CBElement::identity(3, kP));
  EXPECT_EQ(phi(W(3, {1, 2, 1}), kP), phi(W(3, {2, 1, 2}), kP));
  EXPECT_EQ(phi(W(5, {1, 3}), kP), phi(W(5, {3, 1}), kP));
  EXPECT_NE(phi(W(5, {1, 2}), kP), phi(W(5, {2, 1}), kP));
}

TEST(Phi, IsMultiplicative) {
  std::mt19937_64 rng(8);
  const auto gens = testing::all_generators(4);
  for (int k = 0; k < 10; ++k) {
    auto u = random_word(4, 4, gens, rng);
    auto v = random_word(4, 4, gens, rng);
    std::vector<int> uv = u.letters();
    uv.insert(uv.end(), v.letters().begin(), v.letters().end());
    EXPECT_EQ(phi(BraidWord(4, uv), kP), phi(u, kP) * phi(v, kP));
  }
}

TEST(Phi, TermCap) {
  std::mt19937_64 rng(1);
  auto w = random_word(6, 40, testing::all_generators(6), rng);
  EXPECT_THROW(phi(w, kP, 50), std::length_error);
}

TEST(EvalPoint, RejectsZeroTau) {
  EXPECT_THROW(EvalPoint({1, 0, 2}, kP), std::invalid_argument);
  EXPECT_THROW(EvalPoint({1, 13, 2}, kP), std::invalid_argument);
  EXPECT_THROW(EvalPoint({1, 2, 3}, 12), std::invalid_argument);
  std::mt19937_64 rng(2);
  for (int k = 0; k < 100; ++k)
    for (auto tau : EvalPoint::random(8, kP, rng).taus()) EXPECT_NE(tau, 0u);
}

TEST(Evaluate, Substitution) {
  EvalPoint ep({2, 5, 7}, kP);
  auto x1 = evaluate(generator_matrix(1, 3, kP), ep);
  EXPECT_EQ(x1(0, 0), 11u);
  EXPECT_EQ(x1(0, 1), 1u);
  EXPECT_EQ(x1(0, 2), 0u);
  EXPECT_EQ(evaluate(CBMatrix::identity(3, kP), ep), FpMatrix::identity(3, kP));
}

TEST(Evaluate, IsRingHomomorphismAndCommutesWithAction) {
  std::mt19937_64 rng(4);
  const int n = 5;
  const auto gens = testing::all_generators(n);
  for (int k = 0; k < 10; ++k) {
    auto ep = EvalPoint::random(n, kP, rng);
    auto a = phi(random_word(n, 4, gens, rng), kP);
    auto b = phi(random_word(n, 4, gens, rng), kP);
    EXPECT_EQ(evaluate(a.m * b.m, ep), evaluate(a.m, ep) * evaluate(b.m, ep));
    // pi(^s m) is m evaluated at the permuted point tau_{s(j)}.
    std::vector<Fp> moved(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) moved[static_cast<std::size_t>(j)] = ep.tau(a.s[j]);
    EXPECT_EQ(evaluate(perm_act(a.s, b.m), ep), evaluate(b.m, EvalPoint(moved, kP)));
  }
}

TEST(StarApply, EmptyWordAndInverse) {
  std::mt19937_64 rng(5);
  const int n = 8;
  auto ep = EvalPoint::random(n, kP, rng);
  auto id = EvaluatedPair::identity(n, kP);
  EXPECT_EQ(star_apply(id, BraidWord(n), ep), id);
  auto w = random_word(n, 30, testing::all_generators(n), rng);
  EXPECT_EQ(star_apply(star_apply(id, w, ep), invert(w), ep), id);
}

// The letter-by-letter fold agrees with the symbolic route
// (m, s) ⋆ phi(w) = (m * pi(^s M_w), s s_w) from arbitrary starting pairs.
TEST(StarApply, AgreesWithSymbolicOracle) {
  std::mt19937_64 rng(6);
  for (int n : {3, 4, 5}) {
    const auto gens = testing::all_generators(n);
    for (int k = 0; k < 15; ++k) {
      auto ep = EvalPoint::random(n, kP, rng);
      auto prefix = random_word(n, 5, gens, rng);
      auto w = random_word(n, 1 + k % 8, gens, rng);
      auto acc = star_apply(EvaluatedPair::identity(n, kP), prefix, ep);
      auto fast = star_apply(acc, w, ep);
      auto slow = star(acc, phi(w, kP), ep);
      EXPECT_EQ(fast, slow);
      // Mixed associativity: (acc ⋆ u) ⋆ v = acc ⋆ (u v).
      auto u = phi(prefix, kP);
      auto v = phi(w, kP);
      EXPECT_EQ(star(star(EvaluatedPair::identity(n, kP), u, ep), v, ep),
                star(EvaluatedPair::identity(n, kP), u * v, ep));
    }
  }
}

TEST(StarApply, KeepsMatricesInvertible) {
  std::mt19937_64 rng(10);
  const int n = 12;
  auto ep = EvalPoint::random(n, kP, rng);
  auto acc = EvaluatedPair::identity(n, kP);
  for (int k = 0; k < 20; ++k) {
    acc = star_apply(acc, random_word(n, 25, testing::all_generators(n), rng), ep);
    EXPECT_TRUE(acc.m.invertible());
  }
}

TEST(StarCommute, Examples) {
  std::mt19937_64 rng(12);
  const int n = 5;
  auto ep = EvalPoint::random(n, kP, rng);
  EXPECT_TRUE(star_commute_check(W(n, {1, 1, -1, 1}), W(n, {3, -3, 3, 3, 4}), ep));
  EXPECT_TRUE(star_commute_check(W(n, {1}), W(n, {1}), ep));
  int failures = 0;
  for (int k = 0; k < 5; ++k)
    if (!star_commute_check(W(n, {1}), W(n, {2}), EvalPoint::random(n, kP, rng))) ++failures;
  EXPECT_EQ(failures, 5);
}

}  // namespace
}  // namespace cbkap
