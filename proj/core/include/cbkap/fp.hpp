#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace cbkap {

using Fp = std::uint32_t;

bool is_prime(std::uint32_t p) noexcept;
Fp fp_pow(Fp base, std::uint64_t exp, Fp p) noexcept;
/// Multiplicative inverse of a nonzero a modulo the prime p.
Fp fp_inv(Fp a, Fp p);
inline Fp fp_neg(Fp a, Fp p) noexcept { return a == 0 ? 0 : p - a; }

/// Dense square matrix over F_p, row-major.
class FpMatrix {
 public:
  FpMatrix(int n, Fp p);
  FpMatrix(int n, Fp p, std::vector<Fp> entries);

  static FpMatrix identity(int n, Fp p);

  int size() const noexcept { return n_; }
  Fp modulus() const noexcept { return p_; }
  Fp operator()(int r, int c) const { return a_[idx(r, c)]; }
  Fp& operator()(int r, int c) { return a_[idx(r, c)]; }
  const std::vector<Fp>& entries() const noexcept { return a_; }

  bool is_zero() const noexcept;
  Fp determinant() const;
  bool invertible() const { return determinant() != 0; }

  friend FpMatrix operator*(const FpMatrix& x, const FpMatrix& y);
  friend FpMatrix operator+(const FpMatrix& x, const FpMatrix& y);
  friend FpMatrix operator*(Fp scalar, const FpMatrix& x);
  friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

 private:
  std::size_t idx(int r, int c) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(c);
  }
  int n_;
  Fp p_;
  std::vector<Fp> a_;
};

FpMatrix matrix_power(const FpMatrix& m, std::uint64_t exp);

/// Dense univariate polynomial over F_p, coefficients lowest degree first,
/// no trailing zeros (the zero polynomial is empty).
struct FpPoly {
  std::vector<Fp> c;
  Fp p = 2;

  int degree() const noexcept { return static_cast<int>(c.size()) - 1; }
  void trim();
};

FpPoly poly_mul_mod(const FpPoly& a, const FpPoly& b, const FpPoly& f);
FpPoly poly_mod(const FpPoly& a, const FpPoly& f);
FpPoly poly_gcd(FpPoly a, FpPoly b);
FpPoly poly_sub(const FpPoly& a, const FpPoly& b);

/// Ben-Or irreducibility test for a monic polynomial of degree >= 1.
bool is_irreducible(const FpPoly& f);

/// Companion matrix of a monic polynomial; its characteristic polynomial is f.
FpMatrix companion_matrix(const FpPoly& f);

}  // namespace cbkap
