#include "cbkap/garside.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace cbkap {

namespace {

// Permutation braid with both directions cached.  fwd[j] is the final
// position of the strand starting at j, inv is its inverse.
struct Simple {
  std::vector<std::uint8_t> fwd;
  std::vector<std::uint8_t> inv;

  int strands() const { return static_cast<int>(fwd.size()); }
  bool starts_with(int i) const { return fwd[i - 1] > fwd[i]; }
  bool ends_with(int i) const { return inv[i - 1] > inv[i]; }

  // this * sigma_i, valid when !ends_with(i)
  void append(int i) {
    std::swap(inv[i - 1], inv[i]);
    fwd[inv[i - 1]] = static_cast<std::uint8_t>(i - 1);
    fwd[inv[i]] = static_cast<std::uint8_t>(i);
  }

  // sigma_i^{-1} * this, valid when starts_with(i)
  void strip_front(int i) {
    std::swap(fwd[i - 1], fwd[i]);
    inv[fwd[i - 1]] = static_cast<std::uint8_t>(i - 1);
    inv[fwd[i]] = static_cast<std::uint8_t>(i);
  }

  bool is_identity() const {
    for (std::size_t j = 0; j < fwd.size(); ++j)
      if (fwd[j] != j) return false;
    return true;
  }

  bool is_delta() const {
    const auto n = fwd.size();
    for (std::size_t j = 0; j < n; ++j)
      if (fwd[j] != n - 1 - j) return false;
    return true;
  }

  static Simple identity(int n) {
    Simple s;
    s.fwd.resize(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) s.fwd[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(j);
    s.inv = s.fwd;
    return s;
  }

  static Simple generator(int n, int i) {
    Simple s = identity(n);
    s.append(i);
    return s;
  }

  // Delta * sigma_i^{-1}
  static Simple co_generator(int n, int i) {
    Simple s = identity(n);
    for (int j = 0; j < n; ++j) s.fwd[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(n - 1 - j);
    for (auto& v : s.fwd) {
      if (v == i - 1) v = static_cast<std::uint8_t>(i);
      else if (v == i) v = static_cast<std::uint8_t>(i - 1);
    }
    for (int j = 0; j < n; ++j) s.inv[s.fwd[static_cast<std::size_t>(j)]] = static_cast<std::uint8_t>(j);
    return s;
  }

  static Simple from(const Permutation& p) {
    Simple s;
    s.fwd = p.images();
    s.inv = p.inverse().images();
    return s;
  }
};

// Moves prefix letters of b into a until S(b) ⊆ F(a).  Returns whether
// anything moved.
bool left_weight(Simple& a, Simple& b) {
  const int n = a.strands();
  bool changed = false;
  for (;;) {
    int found = 0;
    for (int i = 1; i < n; ++i) {
      if (b.starts_with(i) && !a.ends_with(i)) {
        found = i;
        break;
      }
    }
    if (found == 0) return changed;
    a.append(found);
    b.strip_front(found);
    changed = true;
  }
}

}  // namespace

std::string GarsideNormalForm::key() const {
  std::string k;
  k.reserve(8 + factors.size() * static_cast<std::size_t>(strands));
  auto u = static_cast<std::uint32_t>(inf);
  k.push_back(static_cast<char>(strands));
  for (int b = 0; b < 4; ++b) k.push_back(static_cast<char>((u >> (8 * b)) & 0xff));
  for (const auto& f : factors)
    for (auto v : f.images()) k.push_back(static_cast<char>(v));
  return k;
}

std::vector<int> starting_set(const GarsideFactor& a) {
  std::vector<int> out;
  for (int i = 1; i < a.size(); ++i)
    if (a[i - 1] > a[i]) out.push_back(i);
  return out;
}

std::vector<int> finishing_set(const GarsideFactor& a) {
  return starting_set(a.inverse());
}

bool is_left_weighted(const GarsideFactor& a, const GarsideFactor& b) {
  const auto fin = finishing_set(a);
  for (int i : starting_set(b))
    if (!std::binary_search(fin.begin(), fin.end(), i)) return false;
  return true;
}

bool is_valid(const GarsideNormalForm& nf) {
  const auto delta = Permutation::reversal(nf.strands);
  for (std::size_t k = 0; k < nf.factors.size(); ++k) {
    const auto& f = nf.factors[k];
    if (f.size() != nf.strands || f.is_identity() || f == delta) return false;
    if (k > 0 && !is_left_weighted(nf.factors[k - 1], f)) return false;
  }
  return true;
}

BraidWord permutation_braid_word(const GarsideFactor& a) {
  Simple s = Simple::from(a);
  const int n = s.strands();
  std::vector<int> letters;
  for (;;) {
    int found = 0;
    for (int i = 1; i < n; ++i) {
      if (s.starts_with(i)) {
        found = i;
        break;
      }
    }
    if (found == 0) break;
    letters.push_back(found);
    s.strip_front(found);
  }
  return BraidWord(n, std::move(letters));
}

GarsideNormalForm normal_form(const BraidWord& w) {
  const int n = w.strands();
  const auto& letters = w.letters();

  // Write each sigma_i^{-1} as Delta^{-1} (Delta sigma_i^{-1}) and push every
  // Delta^{-1} to the front; a factor passing k of them is twisted by
  // tau^k, tau(sigma_i) = sigma_{n-i}.
  int negatives = 0;
  for (int e : letters)
    if (e < 0) ++negatives;

  std::vector<Simple> factors;
  factors.reserve(letters.size());
  int seen = 0;
  for (int e : letters) {
    Simple x;
    if (e > 0) {
      const bool twisted = ((negatives - seen) & 1) != 0;
      x = Simple::generator(n, twisted ? n - e : e);
    } else {
      ++seen;
      const bool twisted = ((negatives - seen) & 1) != 0;
      x = Simple::co_generator(n, twisted ? n + e : -e);
    }
    factors.push_back(std::move(x));
    for (std::size_t j = factors.size() - 1; j > 0; --j) {
      if (!left_weight(factors[j - 1], factors[j])) break;
    }
    while (!factors.empty() && factors.back().is_identity()) factors.pop_back();
  }

  GarsideNormalForm nf;
  nf.strands = n;
  nf.inf = -negatives;
  std::size_t lead = 0;
  while (lead < factors.size() && factors[lead].is_delta()) ++lead;
  nf.inf += static_cast<int>(lead);
  nf.factors.reserve(factors.size() - lead);
  for (std::size_t k = lead; k < factors.size(); ++k) nf.factors.emplace_back(std::move(factors[k].fwd));
  return nf;
}

BraidWord word_of(const GarsideNormalForm& nf) {
  const BraidWord delta = half_twist_word(nf.strands);
  std::vector<int> letters;
  for (int k = 0; k < std::abs(nf.inf); ++k) {
    if (nf.inf > 0) {
      letters.insert(letters.end(), delta.letters().begin(), delta.letters().end());
    } else {
      for (auto it = delta.letters().rbegin(); it != delta.letters().rend(); ++it) letters.push_back(-*it);
    }
  }
  for (const auto& f : nf.factors) {
    const auto fw = permutation_braid_word(f);
    letters.insert(letters.end(), fw.letters().begin(), fw.letters().end());
  }
  return BraidWord(nf.strands, std::move(letters));
}

GarsideNormalForm reduce_mod_delta_squared(const GarsideNormalForm& nf) {
  GarsideNormalForm out = nf;
  out.inf = (nf.inf % 2 == 0) ? 0 : -1;
  return out;
}

}  // namespace cbkap
