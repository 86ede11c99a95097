#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace cbkap {

/// Word over the Artin generators of B_n.  Letter e > 0 stands for sigma_e,
/// e < 0 for sigma_{|e|}^{-1}; generator indices are 1-based.
class BraidWord {
 public:
  explicit BraidWord(int strands);
  BraidWord(int strands, std::vector<int> letters);

  int strands() const noexcept { return strands_; }
  const std::vector<int>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  int operator[](std::size_t k) const { return letters_[k]; }

  std::string to_string() const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_;
  std::vector<int> letters_;
};

/// Bijection of {0..n-1}.  For braids, image[j] is the final position of
/// the strand that starts at position j.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::uint8_t> images);

  static Permutation identity(int n);
  static Permutation reversal(int n);
  /// From 1-based images, as used in serialized forms.
  static Permutation from_one_based(std::span<const int> images);

  int size() const noexcept { return static_cast<int>(images_.size()); }
  int operator[](int j) const { return images_[static_cast<std::size_t>(j)]; }
  const std::vector<std::uint8_t>& images() const noexcept { return images_; }
  std::vector<int> one_based() const;

  bool is_identity() const noexcept;
  Permutation inverse() const;
  /// Swap the values at positions i-1 and i (right-multiplication by s_i).
  void swap_positions(int i);
  /// Swap the values i-1 and i wherever they occur (left-multiplication by s_i).
  void swap_values(int i);

  /// Composition a∘b: apply b first, then a.
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint8_t> images_;
};

BraidWord free_reduce(const BraidWord& w);
void free_reduce_in_place(std::vector<int>& letters);

BraidWord invert(const BraidWord& w);

/// Image of w under B_n -> S_n, in the strand-tracking convention of
/// Permutation: letters act top to bottom, so perm(uv) = perm(v)∘perm(u).
Permutation permutation_of(const BraidWord& w);

/// Delta = (s_1..s_{n-1})(s_1..s_{n-2})...(s_1).
BraidWord half_twist_word(int n);

BraidWord mult(const BraidWord& u, const BraidWord& v);
/// u^x := x u x^{-1}, freely reduced.
BraidWord conjugate(const BraidWord& u, const BraidWord& x);

/// Uniform over freely reduced words of exactly `length` letters drawn from
/// the generators in `alphabet` and their inverses.
BraidWord random_word(int n, std::size_t length, std::span<const int> alphabet,
                      std::mt19937_64& rng);

/// The automorphism sigma_i -> sigma_{n-i}.
BraidWord flip(const BraidWord& w);

/// Highest generator index |e| occurring in letters (0 for the empty word).
int max_generator(std::span<const int> letters) noexcept;

}  // namespace cbkap
