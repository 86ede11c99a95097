#include "cbkap/burau.hpp"

#include <stdexcept>

namespace cbkap {

LaurentPoly LaurentPoly::constant(int vars, Fp p, Fp c) {
  LaurentPoly out(vars, p);
  out.add_term(Exponents(static_cast<std::size_t>(vars), 0), c);
  return out;
}

LaurentPoly LaurentPoly::monomial(int vars, Fp p, int var, int power, Fp c) {
  LaurentPoly out(vars, p);
  Exponents e(static_cast<std::size_t>(vars), 0);
  e[static_cast<std::size_t>(var)] = power;
  out.add_term(e, c);
  return out;
}

void LaurentPoly::add_term(const Exponents& e, Fp c) {
  c %= p_;
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second = (it->second + c) % p_;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::permuted(const Permutation& s) const {
  LaurentPoly out(vars_, p_);
  for (const auto& [e, c] : terms_) {
    Exponents moved(e.size(), 0);
    for (std::size_t j = 0; j < e.size(); ++j) moved[static_cast<std::size_t>(s[static_cast<int>(j)])] = e[j];
    out.terms_.emplace(std::move(moved), c);
  }
  return out;
}

Fp LaurentPoly::evaluate(std::span<const Fp> taus) const {
  std::uint64_t total = 0;
  for (const auto& [e, c] : terms_) {
    std::uint64_t v = c;
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (e[j] == 0) continue;
      const Fp base = e[j] > 0 ? taus[j] : fp_inv(taus[j], p_);
      v = v * fp_pow(base, static_cast<std::uint64_t>(std::abs(e[j])), p_) % p_;
    }
    total = (total + v) % p_;
  }
  return static_cast<Fp>(total);
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e, c);
  return out;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out(a.vars_, a.p_);
  LaurentPoly::Exponents e(static_cast<std::size_t>(a.vars_));
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t j = 0; j < e.size(); ++j) e[j] = ea[j] + eb[j];
      out.add_term(e, static_cast<Fp>(std::uint64_t{ca} * cb % a.p_));
    }
  }
  return out;
}

CBMatrix::CBMatrix(int n, Fp p)
    : n_(n), p_(p), m_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), LaurentPoly(n, p)) {}

CBMatrix CBMatrix::identity(int n, Fp p) {
  CBMatrix m(n, p);
  for (int i = 0; i < n; ++i) m(i, i) = LaurentPoly::constant(n, p, 1);
  return m;
}

std::size_t CBMatrix::term_count() const noexcept {
  std::size_t total = 0;
  for (const auto& e : m_) total += e.term_count();
  return total;
}

CBMatrix operator*(const CBMatrix& a, const CBMatrix& b) {
  const int n = a.n_;
  CBMatrix out(n, a.p_);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const auto& x = a(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        const auto& y = b(k, j);
        if (y.is_zero()) continue;
        out(i, j) = out(i, j) + x * y;
      }
    }
  }
  return out;
}

CBElement CBElement::identity(int n, Fp p) { return {CBMatrix::identity(n, p), Permutation::identity(n)}; }

CBElement operator*(const CBElement& a, const CBElement& b) {
  return {a.m * perm_act(a.s, b.m), a.s * b.s};
}

CBMatrix perm_act(const Permutation& s, const CBMatrix& m) {
  CBMatrix out(m.size(), m.modulus());
  for (int r = 0; r < m.size(); ++r)
    for (int c = 0; c < m.size(); ++c) out(r, c) = m(r, c).permuted(s);
  return out;
}

namespace {

void check_generator(int i, int n) {
  if (i < 1 || i > n - 1) throw std::invalid_argument("generator index out of range");
}

Permutation transposition(int i, int n) {
  Permutation s = Permutation::identity(n);
  s.swap_positions(i);
  return s;
}

}  // namespace

CBMatrix generator_matrix(int i, int n, Fp p) {
  check_generator(i, n);
  CBMatrix m = CBMatrix::identity(n, p);
  const int r = i - 1;
  if (r > 0) m(r, r - 1) = LaurentPoly::monomial(n, p, r, 1, 1);
  m(r, r) = LaurentPoly::monomial(n, p, r, 1, p - 1);
  m(r, r + 1) = LaurentPoly::constant(n, p, 1);
  return m;
}

CBElement generator_element(int i, int n, Fp p) { return {generator_matrix(i, n, p), transposition(i, n)}; }

CBElement generator_inverse_element(int i, int n, Fp p) {
  check_generator(i, n);
  // (x, s)^{-1} = (^{s^{-1}} x^{-1}, s^{-1}); row i of x_i^{-1} is
  // (1, -t_i^{-1}, t_i^{-1}), and s_i turns t_i into t_{i+1}.
  CBMatrix m = CBMatrix::identity(n, p);
  const int r = i - 1;
  if (r > 0) m(r, r - 1) = LaurentPoly::constant(n, p, 1);
  m(r, r) = LaurentPoly::monomial(n, p, r + 1, -1, p - 1);
  m(r, r + 1) = LaurentPoly::monomial(n, p, r + 1, -1, 1);
  return {std::move(m), transposition(i, n)};
}

CBElement phi(const BraidWord& w, Fp p, std::size_t term_cap) {
  const int n = w.strands();
  CBElement acc = CBElement::identity(n, p);
  for (int e : w.letters()) {
    acc = acc * (e > 0 ? generator_element(e, n, p) : generator_inverse_element(-e, n, p));
    if (acc.m.term_count() > term_cap) throw std::length_error("phi: symbolic term cap exceeded");
  }
  return acc;
}

EvalPoint::EvalPoint(std::vector<Fp> taus, Fp p) : taus_(std::move(taus)), p_(p) {
  if (!is_prime(p) || p >= (1u << 16)) throw std::invalid_argument("EvalPoint: p must be a prime below 2^16");
  inv_.reserve(taus_.size());
  for (auto& t : taus_) {
    t %= p;
    if (t == 0) throw std::invalid_argument("EvalPoint: tau must be nonzero mod p");
    inv_.push_back(fp_inv(t, p));
  }
}

EvalPoint EvalPoint::random(int n, Fp p, std::mt19937_64& rng) {
  std::uniform_int_distribution<Fp> dist(1, p - 1);
  std::vector<Fp> taus(static_cast<std::size_t>(n));
  for (auto& t : taus) t = dist(rng);
  return EvalPoint(std::move(taus), p);
}

FpMatrix evaluate(const CBMatrix& m, const EvalPoint& ep) {
  if (m.size() != ep.size() || m.modulus() != ep.modulus())
    throw std::invalid_argument("evaluate: shape/modulus mismatch");
  FpMatrix out(m.size(), m.modulus());
  for (int r = 0; r < m.size(); ++r)
    for (int c = 0; c < m.size(); ++c) out(r, c) = m(r, c).evaluate(ep.taus());
  return out;
}

EvaluatedPair EvaluatedPair::identity(int n, Fp p) {
  return {FpMatrix::identity(n, p), Permutation::identity(n)};
}

EvaluatedPair star(const EvaluatedPair& acc, const CBElement& g, const EvalPoint& ep) {
  return {acc.m * evaluate(perm_act(acc.s, g.m), ep), acc.s * g.s};
}

void star_apply_in_place(EvaluatedPair& acc, std::span<const int> letters, const EvalPoint& ep) {
  const int n = acc.m.size();
  const Fp p = acc.m.modulus();
  if (ep.size() != n || ep.modulus() != p) throw std::invalid_argument("star_apply: shape/modulus mismatch");
  for (int e : letters) {
    const int g = std::abs(e);
    if (g < 1 || g > n - 1) throw std::invalid_argument("star_apply: letter out of range");
    const int r = g - 1;
    // Row r of the generator matrix, with t_j evaluated at tau_{s(j)}.
    Fp left, diag, right;
    if (e > 0) {
      const Fp t = ep.tau(acc.s[r]);
      left = t;
      diag = fp_neg(t, p);
      right = 1;
    } else {
      const Fp ti = ep.tau_inv(acc.s[r + 1]);
      left = 1;
      diag = fp_neg(ti, p);
      right = ti;
    }
    // acc.m * M where M differs from the identity only in row r.
    for (int row = 0; row < n; ++row) {
      const std::uint64_t v = acc.m(row, r);
      if (!v) continue;
      if (r > 0) acc.m(row, r - 1) = static_cast<Fp>((acc.m(row, r - 1) + v * left) % p);
      acc.m(row, r + 1) = static_cast<Fp>((acc.m(row, r + 1) + v * right) % p);
      acc.m(row, r) = static_cast<Fp>(v * diag % p);
    }
    acc.s.swap_positions(g);
  }
}

EvaluatedPair star_apply(const EvaluatedPair& acc, const BraidWord& w, const EvalPoint& ep) {
  EvaluatedPair out = acc;
  star_apply_in_place(out, w.letters(), ep);
  return out;
}

bool star_commute_check(const BraidWord& a, const BraidWord& b, const EvalPoint& ep) {
  const auto id = EvaluatedPair::identity(a.strands(), ep.modulus());
  const auto ea = star_apply(id, a, ep);
  const auto eb = star_apply(id, b, ep);
  return star_apply(ea, b, ep) == star_apply(eb, a, ep);
}

}  // namespace cbkap
