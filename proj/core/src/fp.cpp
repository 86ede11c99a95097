#include "cbkap/fp.hpp"

#include <stdexcept>
#include <utility>

namespace cbkap {

bool is_prime(std::uint32_t p) noexcept {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Fp fp_pow(Fp base, std::uint64_t exp, Fp p) noexcept {
  std::uint64_t r = 1 % p, b = base % p;
  while (exp) {
    if (exp & 1) r = r * b % p;
    b = b * b % p;
    exp >>= 1;
  }
  return static_cast<Fp>(r);
}

Fp fp_inv(Fp a, Fp p) {
  if (a % p == 0) throw std::domain_error("fp_inv: zero has no inverse");
  return fp_pow(a, p - 2, p);
}

FpMatrix::FpMatrix(int n, Fp p) : n_(n), p_(p), a_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {
  if (n < 1) throw std::invalid_argument("FpMatrix: size must be positive");
  if (!is_prime(p)) throw std::invalid_argument("FpMatrix: modulus must be prime");
}

FpMatrix::FpMatrix(int n, Fp p, std::vector<Fp> entries) : FpMatrix(n, p) {
  if (entries.size() != a_.size()) throw std::invalid_argument("FpMatrix: wrong entry count");
  for (auto& e : entries) e %= p;
  a_ = std::move(entries);
}

FpMatrix FpMatrix::identity(int n, Fp p) {
  FpMatrix m(n, p);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool FpMatrix::is_zero() const noexcept {
  for (auto e : a_)
    if (e) return false;
  return true;
}

Fp FpMatrix::determinant() const {
  std::vector<Fp> m = a_;
  const auto n = static_cast<std::size_t>(n_);
  std::uint64_t det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv * n + col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m[piv * n + c], m[col * n + c]);
      det = (p_ - det) % p_;
    }
    const Fp pv = m[col * n + col];
    det = det * pv % p_;
    const Fp inv = fp_inv(pv, p_);
    for (std::size_t r = col + 1; r < n; ++r) {
      const Fp f = static_cast<Fp>(std::uint64_t{m[r * n + col]} * inv % p_);
      if (!f) continue;
      for (std::size_t c = col; c < n; ++c) {
        const std::uint64_t sub = std::uint64_t{f} * m[col * n + c] % p_;
        m[r * n + c] = static_cast<Fp>((m[r * n + c] + p_ - sub) % p_);
      }
    }
  }
  return static_cast<Fp>(det);
}

FpMatrix operator*(const FpMatrix& x, const FpMatrix& y) {
  if (x.n_ != y.n_ || x.p_ != y.p_) throw std::invalid_argument("FpMatrix: shape/modulus mismatch");
  FpMatrix out(x.n_, x.p_);
  const auto n = static_cast<std::size_t>(x.n_);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const std::uint64_t a = x.a_[i * n + k];
      if (!a) continue;
      for (std::size_t j = 0; j < n; ++j)
        out.a_[i * n + j] = static_cast<Fp>((out.a_[i * n + j] + a * y.a_[k * n + j]) % x.p_);
    }
  }
  return out;
}

FpMatrix operator+(const FpMatrix& x, const FpMatrix& y) {
  if (x.n_ != y.n_ || x.p_ != y.p_) throw std::invalid_argument("FpMatrix: shape/modulus mismatch");
  FpMatrix out = x;
  for (std::size_t k = 0; k < out.a_.size(); ++k) out.a_[k] = (x.a_[k] + y.a_[k]) % x.p_;
  return out;
}

FpMatrix operator*(Fp scalar, const FpMatrix& x) {
  FpMatrix out = x;
  for (auto& e : out.a_) e = static_cast<Fp>(std::uint64_t{e} * (scalar % x.p_) % x.p_);
  return out;
}

FpMatrix matrix_power(const FpMatrix& m, std::uint64_t exp) {
  FpMatrix r = FpMatrix::identity(m.size(), m.modulus());
  FpMatrix b = m;
  while (exp) {
    if (exp & 1) r = r * b;
    b = b * b;
    exp >>= 1;
  }
  return r;
}

void FpPoly::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

FpPoly poly_mod(const FpPoly& a, const FpPoly& f) {
  if (f.c.empty()) throw std::domain_error("poly_mod: division by zero");
  FpPoly r = a;
  r.trim();
  const Fp p = f.p;
  const Fp lead_inv = fp_inv(f.c.back(), p);
  const int df = f.degree();
  while (r.degree() >= df) {
    const int shift = r.degree() - df;
    const Fp q = static_cast<Fp>(std::uint64_t{r.c.back()} * lead_inv % p);
    for (int k = 0; k <= df; ++k) {
      auto& coef = r.c[static_cast<std::size_t>(k + shift)];
      coef = static_cast<Fp>((coef + p - std::uint64_t{q} * f.c[static_cast<std::size_t>(k)] % p) % p);
    }
    r.trim();
  }
  return r;
}

FpPoly poly_mul_mod(const FpPoly& a, const FpPoly& b, const FpPoly& f) {
  FpPoly prod;
  prod.p = f.p;
  if (a.c.empty() || b.c.empty()) return prod;
  prod.c.assign(a.c.size() + b.c.size() - 1, 0);
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size(); ++j)
      prod.c[i + j] = static_cast<Fp>((prod.c[i + j] + std::uint64_t{a.c[i]} * b.c[j]) % f.p);
  return poly_mod(prod, f);
}

FpPoly poly_sub(const FpPoly& a, const FpPoly& b) {
  FpPoly r;
  r.p = a.p;
  r.c.assign(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t k = 0; k < r.c.size(); ++k) {
    const Fp x = k < a.c.size() ? a.c[k] : 0;
    const Fp y = k < b.c.size() ? b.c[k] : 0;
    r.c[k] = (x + a.p - y) % a.p;
  }
  r.trim();
  return r;
}

FpPoly poly_gcd(FpPoly a, FpPoly b) {
  a.trim();
  b.trim();
  while (!b.c.empty()) {
    FpPoly r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

bool is_irreducible(const FpPoly& f) {
  const int d = f.degree();
  if (d < 1) return false;
  if (d == 1) return true;
  const Fp p = f.p;
  // x^{p^i} mod f by repeated p-th powering.
  FpPoly x;
  x.p = p;
  x.c = {0, 1};
  FpPoly xp = poly_mod(x, f);
  for (int i = 1; i <= d / 2; ++i) {
    FpPoly acc;
    acc.p = p;
    acc.c = {1};
    FpPoly base = xp;
    for (Fp e = p; e; e >>= 1) {
      if (e & 1) acc = poly_mul_mod(acc, base, f);
      base = poly_mul_mod(base, base, f);
    }
    xp = acc;
    const FpPoly g = poly_gcd(f, poly_sub(xp, x));
    if (g.degree() != 0) return false;
  }
  return true;
}

FpMatrix companion_matrix(const FpPoly& f) {
  const int n = f.degree();
  if (n < 1 || f.c.back() != 1) throw std::invalid_argument("companion_matrix: need monic polynomial of degree >= 1");
  FpMatrix m(n, f.p);
  for (int r = 1; r < n; ++r) m(r, r - 1) = 1;
  for (int r = 0; r < n; ++r) m(r, n - 1) = fp_neg(f.c[static_cast<std::size_t>(r)], f.p);
  return m;
}

}  // namespace cbkap
