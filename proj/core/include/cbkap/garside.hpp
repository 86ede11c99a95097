#pragma once

#include <string>
#include <vector>

#include "cbkap/braid.hpp"

namespace cbkap {

/// A permutation braid (positive braid in which every pair of strands
/// crosses at most once), identified with its permutation.
using GarsideFactor = Permutation;

/// Left Garside normal form Delta^inf * factors[0] * ... * factors[l-1].
struct GarsideNormalForm {
  int strands = 2;
  int inf = 0;
  std::vector<GarsideFactor> factors;

  /// Compact byte string, equal iff the normal forms are equal.
  std::string key() const;
  std::size_t canonical_length() const noexcept { return factors.size(); }

  friend bool operator==(const GarsideNormalForm&, const GarsideNormalForm&) = default;
};

/// Generators i with A = sigma_i A' for a positive A'.
std::vector<int> starting_set(const GarsideFactor& a);
/// Generators i with A = A' sigma_i for a positive A'.
std::vector<int> finishing_set(const GarsideFactor& a);
/// S(b) is contained in F(a).
bool is_left_weighted(const GarsideFactor& a, const GarsideFactor& b);

/// Checks the normal-form invariants: factors are neither trivial nor Delta
/// and every adjacent pair is left-weighted.
bool is_valid(const GarsideNormalForm& nf);

/// Positive word for a permutation braid; its length is the inversion count.
BraidWord permutation_braid_word(const GarsideFactor& a);

GarsideNormalForm normal_form(const BraidWord& w);
BraidWord word_of(const GarsideNormalForm& nf);

/// Sets inf to 0 or -1 according to its parity; factors are untouched.
GarsideNormalForm reduce_mod_delta_squared(const GarsideNormalForm& nf);

inline bool equal_in_group(const BraidWord& u, const BraidWord& v) {
  return normal_form(u) == normal_form(v);
}

}  // namespace cbkap
