#include "cbkap/braid.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cbkap {

namespace {

void check_strands(int n) {
  if (n < 2 || n > 255) {
    throw std::invalid_argument("strand count must be in [2, 255], got " + std::to_string(n));
  }
}

}  // namespace

BraidWord::BraidWord(int strands) : strands_(strands) { check_strands(strands); }

BraidWord::BraidWord(int strands, std::vector<int> letters)
    : strands_(strands), letters_(std::move(letters)) {
  check_strands(strands);
  for (int e : letters_) {
    if (e == 0 || std::abs(e) > strands_ - 1) {
      throw std::invalid_argument("letter " + std::to_string(e) + " out of range for B_" +
                                  std::to_string(strands_));
    }
  }
}

std::string BraidWord::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t k = 0; k < letters_.size(); ++k) {
    if (k) os << ',';
    os << letters_[k];
  }
  os << ']';
  return os.str();
}

Permutation::Permutation(std::vector<std::uint8_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto v : images_) {
    if (v >= images_.size() || seen[v]) throw std::invalid_argument("not a permutation");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<std::uint8_t> im(static_cast<std::size_t>(n));
  std::iota(im.begin(), im.end(), std::uint8_t{0});
  Permutation p;
  p.images_ = std::move(im);
  return p;
}

Permutation Permutation::reversal(int n) {
  Permutation p = identity(n);
  std::reverse(p.images_.begin(), p.images_.end());
  return p;
}

Permutation Permutation::from_one_based(std::span<const int> images) {
  std::vector<std::uint8_t> im;
  im.reserve(images.size());
  for (int v : images) {
    if (v < 1 || v > static_cast<int>(images.size())) throw std::invalid_argument("not a permutation");
    im.push_back(static_cast<std::uint8_t>(v - 1));
  }
  return Permutation(std::move(im));
}

std::vector<int> Permutation::one_based() const {
  std::vector<int> out;
  out.reserve(images_.size());
  for (auto v : images_) out.push_back(v + 1);
  return out;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t j = 0; j < images_.size(); ++j)
    if (images_[j] != j) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.images_.resize(images_.size());
  for (std::size_t j = 0; j < images_.size(); ++j) p.images_[images_[j]] = static_cast<std::uint8_t>(j);
  return p;
}

void Permutation::swap_positions(int i) {
  std::swap(images_[static_cast<std::size_t>(i - 1)], images_[static_cast<std::size_t>(i)]);
}

void Permutation::swap_values(int i) {
  for (auto& v : images_) {
    if (v == i - 1) v = static_cast<std::uint8_t>(i);
    else if (v == i) v = static_cast<std::uint8_t>(i - 1);
  }
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw std::invalid_argument("permutation size mismatch");
  Permutation p;
  p.images_.resize(b.images_.size());
  for (std::size_t j = 0; j < b.images_.size(); ++j) p.images_[j] = a.images_[b.images_[j]];
  return p;
}

void free_reduce_in_place(std::vector<int>& letters) {
  std::size_t top = 0;
  for (int e : letters) {
    if (top > 0 && letters[top - 1] == -e) {
      --top;
    } else {
      letters[top++] = e;
    }
  }
  letters.resize(top);
}

BraidWord free_reduce(const BraidWord& w) {
  std::vector<int> letters = w.letters();
  free_reduce_in_place(letters);
  return BraidWord(w.strands(), std::move(letters));
}

BraidWord invert(const BraidWord& w) {
  std::vector<int> letters(w.letters().rbegin(), w.letters().rend());
  for (int& e : letters) e = -e;
  return BraidWord(w.strands(), std::move(letters));
}

Permutation permutation_of(const BraidWord& w) {
  Permutation p = Permutation::identity(w.strands());
  for (int e : w.letters()) p.swap_values(std::abs(e));
  return p;
}

BraidWord half_twist_word(int n) {
  check_strands(n);
  std::vector<int> letters;
  letters.reserve(static_cast<std::size_t>(n * (n - 1) / 2));
  for (int top = n - 1; top >= 1; --top)
    for (int i = 1; i <= top; ++i) letters.push_back(i);
  return BraidWord(n, std::move(letters));
}

BraidWord mult(const BraidWord& u, const BraidWord& v) {
  if (u.strands() != v.strands()) throw std::invalid_argument("strand count mismatch");
  std::vector<int> letters = u.letters();
  letters.insert(letters.end(), v.letters().begin(), v.letters().end());
  free_reduce_in_place(letters);
  return BraidWord(u.strands(), std::move(letters));
}

BraidWord conjugate(const BraidWord& u, const BraidWord& x) {
  return mult(mult(x, u), invert(x));
}

BraidWord random_word(int n, std::size_t length, std::span<const int> alphabet,
                      std::mt19937_64& rng) {
  if (alphabet.empty()) throw std::invalid_argument("random_word: empty alphabet");
  for (int g : alphabet) {
    if (g < 1 || g > n - 1) throw std::invalid_argument("random_word: generator out of range");
  }
  const auto k = static_cast<int>(alphabet.size());
  std::vector<int> letters;
  letters.reserve(length);
  auto signed_letter = [&](int code) {
    int g = alphabet[static_cast<std::size_t>(code / 2)];
    return (code % 2 == 0) ? g : -g;
  };
  std::uniform_int_distribution<int> first(0, 2 * k - 1);
  std::uniform_int_distribution<int> rest(0, 2 * k - 2);
  for (std::size_t pos = 0; pos < length; ++pos) {
    if (pos == 0) {
      letters.push_back(signed_letter(first(rng)));
      continue;
    }
    // Draw from 2k-1 codes; a hit on the inverse of the previous letter is
    // remapped to the one code left out of the draw.
    int prev = letters.back();
    int e = signed_letter(rest(rng));
    if (e == -prev) e = signed_letter(2 * k - 1);
    letters.push_back(e);
  }
  return BraidWord(n, std::move(letters));
}

BraidWord flip(const BraidWord& w) {
  std::vector<int> letters = w.letters();
  const int n = w.strands();
  for (int& e : letters) e = e > 0 ? n - e : -(n + e);
  return BraidWord(n, std::move(letters));
}

int max_generator(std::span<const int> letters) noexcept {
  int m = 0;
  for (int e : letters) m = std::max(m, std::abs(e));
  return m;
}

}  // namespace cbkap
