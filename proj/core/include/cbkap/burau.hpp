#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "cbkap/braid.hpp"
#include "cbkap/fp.hpp"

namespace cbkap {

/// Laurent polynomial in t_1..t_n over F_p, stored sparsely by exponent
/// vector.  No zero coefficient is ever stored.
class LaurentPoly {
 public:
  using Exponents = std::vector<int>;

  LaurentPoly(int vars, Fp p) : vars_(vars), p_(p) {}
  static LaurentPoly constant(int vars, Fp p, Fp c);
  /// c * t_{var+1}^{power}, var 0-based.
  static LaurentPoly monomial(int vars, Fp p, int var, int power, Fp c);

  int vars() const noexcept { return vars_; }
  Fp modulus() const noexcept { return p_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }
  const std::map<Exponents, Fp>& terms() const noexcept { return terms_; }

  void add_term(const Exponents& e, Fp c);

  /// Substitutes t_j -> t_{s(j)}.
  LaurentPoly permuted(const Permutation& s) const;
  /// Value at t_j = taus[j]; every tau must be nonzero.
  Fp evaluate(std::span<const Fp> taus) const;

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  int vars_;
  Fp p_;
  std::map<Exponents, Fp> terms_;
};

/// n x n matrix of Laurent polynomials.
class CBMatrix {
 public:
  CBMatrix(int n, Fp p);
  static CBMatrix identity(int n, Fp p);

  int size() const noexcept { return n_; }
  Fp modulus() const noexcept { return p_; }
  const LaurentPoly& operator()(int r, int c) const { return m_[idx(r, c)]; }
  LaurentPoly& operator()(int r, int c) { return m_[idx(r, c)]; }
  std::size_t term_count() const noexcept;

  friend CBMatrix operator*(const CBMatrix& a, const CBMatrix& b);
  friend bool operator==(const CBMatrix&, const CBMatrix&) = default;

 private:
  std::size_t idx(int r, int c) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(c);
  }
  int n_;
  Fp p_;
  std::vector<LaurentPoly> m_;
};

/// Element (m, s) of GL(n, F_p(t)) ⋊ S_n.  Permutations compose as
/// s1 s2 = s1∘s2 and act on variables by t_j -> t_{s(j)}.
struct CBElement {
  CBMatrix m;
  Permutation s;

  static CBElement identity(int n, Fp p);
  friend CBElement operator*(const CBElement& a, const CBElement& b);
  friend bool operator==(const CBElement&, const CBElement&) = default;
};

/// The symmetric-group action on matrices: substitute t_j -> t_{s(j)}.
CBMatrix perm_act(const Permutation& s, const CBMatrix& m);

/// x_i(t): identity except row i, which holds t_i, -t_i, 1 around the diagonal
/// (row 1 holds -t_1, 1).
CBMatrix generator_matrix(int i, int n, Fp p);
CBElement generator_element(int i, int n, Fp p);
CBElement generator_inverse_element(int i, int n, Fp p);

/// Symbolic image of w under sigma_i -> (x_i(t), s_i).  Throws
/// std::length_error once the matrix exceeds `term_cap` stored terms.
CBElement phi(const BraidWord& w, Fp p, std::size_t term_cap = 100000);

/// Point tau_1..tau_n of (F_p^*)^n at which matrices are evaluated.
class EvalPoint {
 public:
  EvalPoint(std::vector<Fp> taus, Fp p);
  static EvalPoint random(int n, Fp p, std::mt19937_64& rng);

  int size() const noexcept { return static_cast<int>(taus_.size()); }
  Fp modulus() const noexcept { return p_; }
  const std::vector<Fp>& taus() const noexcept { return taus_; }
  Fp tau(int j) const { return taus_[static_cast<std::size_t>(j)]; }
  Fp tau_inv(int j) const { return inv_[static_cast<std::size_t>(j)]; }

 private:
  std::vector<Fp> taus_;
  std::vector<Fp> inv_;
  Fp p_;
};

FpMatrix evaluate(const CBMatrix& m, const EvalPoint& ep);

/// Element of GL(n, F_p) x S_n acted on by the colored Burau group.
struct EvaluatedPair {
  FpMatrix m;
  Permutation s;

  static EvaluatedPair identity(int n, Fp p);
  friend bool operator==(const EvaluatedPair&, const EvaluatedPair&) = default;
};

/// (m1, s1) ⋆ (m2, s2) = (m1 * pi(^{s1} m2), s1 s2) for a symbolic element.
EvaluatedPair star(const EvaluatedPair& acc, const CBElement& g, const EvalPoint& ep);

/// acc ⋆ phi(w), computed letter by letter without symbolic matrices.
EvaluatedPair star_apply(const EvaluatedPair& acc, const BraidWord& w, const EvalPoint& ep);
void star_apply_in_place(EvaluatedPair& acc, std::span<const int> letters, const EvalPoint& ep);

/// (pi(m_a), s_a) ⋆ b == (pi(m_b), s_b) ⋆ a.
bool star_commute_check(const BraidWord& a, const BraidWord& b, const EvalPoint& ep);

}  // namespace cbkap
