#include "cbkap/length.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace cbkap {

namespace {

inline int sign(int e) { return e > 0 ? 1 : -1; }

// Appends e to w, cancelling against the last letter; tracks how far the
// untouched prefix of w reaches.
inline void push_reduced(std::vector<int>& w, int e, std::size_t& low) {
  if (!w.empty() && w.back() == -e) {
    w.pop_back();
    low = std::min(low, w.size());
  } else {
    w.push_back(e);
  }
}

enum class Symmetry { kIdentity, kFlip, kReverse, kFlipReverse };

std::vector<int> apply_symmetry(std::span<const int> w, int n, Symmetry s) {
  std::vector<int> out(w.begin(), w.end());
  if (s == Symmetry::kFlip || s == Symmetry::kFlipReverse)
    for (int& e : out) e = sign(e) * (n - std::abs(e));
  if (s == Symmetry::kReverse || s == Symmetry::kFlipReverse) std::reverse(out.begin(), out.end());
  return out;
}

// Scans from `from` in direction `step` for a letter cancelling e, passing
// only letters that commute with e, at most `window` letters.
bool has_partner(const std::vector<int>& w, std::ptrdiff_t from, int step, int e, int window) {
  const int ie = std::abs(e);
  for (int k = 0; k < window; ++k, from += step) {
    if (from < 0 || from >= static_cast<std::ptrdiff_t>(w.size())) return false;
    const int y = w[static_cast<std::size_t>(from)];
    if (y == -e) return true;
    if (std::abs(std::abs(y) - ie) <= 1) return false;
  }
  return false;
}

// Removes one pair x ... x^{-1} separated only by letters commuting with x.
bool slide_cancel(std::vector<int>& w) {
  for (std::size_t p = 0; p < w.size(); ++p) {
    const int x = w[p];
    const int ix = std::abs(x);
    for (std::size_t q = p + 1; q < w.size(); ++q) {
      const int y = w[q];
      if (y == -x) {
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(q));
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(p));
        return true;
      }
      if (std::abs(std::abs(y) - ix) <= 1) break;
    }
  }
  return false;
}

// Rewrites one triple s_i^a s_j^b s_i^c (|i-j| = 1) into its other
// three-letter form when that brings a cancelling partner in reach.
bool relation_rewrite(std::vector<int>& w, int window) {
  if (w.size() < 3) return false;
  for (std::size_t k = 0; k + 2 < w.size(); ++k) {
    const int a = w[k], b = w[k + 1], c = w[k + 2];
    const int ia = std::abs(a), ib = std::abs(b);
    if (std::abs(ia - ib) != 1 || std::abs(c) != ia) continue;
    int alt[3];
    if (sign(a) == sign(b) && sign(b) == sign(c)) {
      alt[0] = sign(a) * ib;
      alt[1] = sign(a) * ia;
      alt[2] = sign(a) * ib;
    } else if (sign(c) == -sign(a)) {
      alt[0] = -sign(a) * ib;
      alt[1] = sign(b) * ia;
      alt[2] = sign(a) * ib;
    } else {
      continue;
    }
    const auto pk = static_cast<std::ptrdiff_t>(k);
    if (has_partner(w, pk - 1, -1, alt[0], window) || has_partner(w, pk + 3, 1, alt[2], window)) {
      w[k] = alt[0];
      w[k + 1] = alt[1];
      w[k + 2] = alt[2];
      return true;
    }
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> handle_reduce(std::span<const int> letters, std::size_t max_steps) {
  std::vector<int> w(letters.begin(), letters.end());
  free_reduce_in_place(w);
  const int top = max_generator(w);
  std::vector<int> open(static_cast<std::size_t>(top + 2), -1);
  std::vector<char> blocked(static_cast<std::size_t>(top + 2), 0);
  std::vector<int> next;
  std::size_t start = 0;
  std::size_t steps = 0;

  for (;;) {
    std::fill(open.begin(), open.end(), -1);
    std::fill(blocked.begin(), blocked.end(), 0);
    for (std::size_t q = 0; q < start; ++q) {
      const int k = std::abs(w[q]);
      open[static_cast<std::size_t>(k)] = static_cast<int>(q);
      blocked[static_cast<std::size_t>(k)] = 0;
      blocked[static_cast<std::size_t>(k + 1)] = 1;
    }
    // Leftmost-ending handle s_i^e v s_i^{-e}, v free of s_i and s_{i-1}.
    std::size_t p = 0, q = start;
    bool found = false;
    for (; q < w.size(); ++q) {
      const auto k = static_cast<std::size_t>(std::abs(w[q]));
      const int o = open[k];
      if (o >= 0 && !blocked[k] && sign(w[static_cast<std::size_t>(o)]) != sign(w[q])) {
        p = static_cast<std::size_t>(o);
        found = true;
        break;
      }
      open[k] = static_cast<int>(q);
      blocked[k] = 0;
      blocked[k + 1] = 1;
    }
    if (!found) return w;
    if (++steps > max_steps) return std::nullopt;

    const int i = std::abs(w[p]);
    const int e = sign(w[p]);
    next.clear();
    next.insert(next.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p));
    std::size_t low = p;
    for (std::size_t r = p + 1; r < q; ++r) {
      const int x = w[r];
      if (std::abs(x) == i + 1) {
        push_reduced(next, -e * (i + 1), low);
        push_reduced(next, sign(x) * i, low);
        push_reduced(next, e * (i + 1), low);
      } else {
        push_reduced(next, x, low);
      }
    }
    for (std::size_t r = q + 1; r < w.size(); ++r) push_reduced(next, w[r], low);
    w.swap(next);
    start = low;
  }
}

void local_shorten(std::vector<int>& letters, int window) {
  free_reduce_in_place(letters);
  for (;;) {
    if (slide_cancel(letters)) continue;
    if (relation_rewrite(letters, window)) continue;
    break;
  }
}

BraidWord mixed_word_of(const GarsideNormalForm& nf) {
  if (nf.inf >= 0) return word_of(nf);
  const int n = nf.strands;
  const auto delta = Permutation::reversal(n);
  const auto k = static_cast<int>(nf.factors.size());
  const int m = -nf.inf;
  const int paired = std::min(m, k);
  std::vector<int> letters;
  const BraidWord dw = half_twist_word(n);
  for (int r = 0; r < m - paired; ++r)
    for (auto it = dw.letters().rbegin(); it != dw.letters().rend(); ++it) letters.push_back(-*it);
  // Delta^{-paired} A_1 ... A_paired = prod_j Delta^{-1} tau^{paired-j}(A_j),
  // and Delta^{-1} B = (B^{-1} Delta)^{-1}.
  for (int j = 0; j < paired; ++j) {
    Permutation a = nf.factors[static_cast<std::size_t>(j)];
    if ((paired - 1 - j) % 2 == 1) a = delta * a * delta;
    const Permutation complement = delta * a.inverse();
    const auto pw = permutation_braid_word(complement);
    for (auto it = pw.letters().rbegin(); it != pw.letters().rend(); ++it) letters.push_back(-*it);
  }
  for (int j = paired; j < k; ++j) {
    const auto pw = permutation_braid_word(nf.factors[static_cast<std::size_t>(j)]);
    letters.insert(letters.end(), pw.letters().begin(), pw.letters().end());
  }
  return BraidWord(n, std::move(letters));
}

std::vector<int> shorten(std::span<const int> letters, int strands, const ApproxOptions& opts) {
  std::vector<int> base(letters.begin(), letters.end());
  free_reduce_in_place(base);
  std::vector<int> best = base;
  local_shorten(best, opts.window);

  auto try_candidate = [&](const std::vector<int>& start) {
    static constexpr Symmetry kOrder[] = {Symmetry::kIdentity, Symmetry::kFlip, Symmetry::kReverse,
                                          Symmetry::kFlipReverse};
    const int runs = std::clamp(opts.restarts, 1, 4);
    for (int r = 0; r < runs; ++r) {
      const auto s = kOrder[r];
      auto reduced = handle_reduce(apply_symmetry(start, strands, s), opts.max_handle_steps);
      if (!reduced) continue;
      local_shorten(*reduced, opts.window);
      if (reduced->size() < best.size()) best = apply_symmetry(*reduced, strands, s);
    }
  };

  try_candidate(base);
  if (opts.garside_candidate && !base.empty()) {
    const auto mixed = mixed_word_of(normal_form(BraidWord(strands, base)));
    try_candidate(mixed.letters());
  }
  return best;
}

LengthEstimate approx_length(const BraidWord& w, const ApproxOptions& opts) {
  auto best = shorten(w.letters(), w.strands(), opts);
  const std::size_t value = best.size();
  return LengthEstimate{value, BraidWord(w.strands(), std::move(best))};
}

GeodesicBall::GeodesicBall(int strands, int radius) : strands_(strands), radius_(radius) {
  if (radius < 0) throw std::invalid_argument("GeodesicBall: negative radius");
  BraidWord id(strands);
  dist_.emplace(normal_form(id).key(), 0);
  spheres_.push_back({id});
  for (int d = 1; d <= radius; ++d) {
    std::vector<BraidWord> layer;
    for (const auto& w : spheres_.back()) {
      for (int g = 1; g < strands; ++g) {
        for (int e : {g, -g}) {
          if (!w.empty() && w.letters().back() == -e) continue;
          std::vector<int> letters = w.letters();
          letters.push_back(e);
          BraidWord next(strands, std::move(letters));
          if (dist_.emplace(normal_form(next).key(), d).second) layer.push_back(std::move(next));
        }
      }
    }
    spheres_.push_back(std::move(layer));
  }
}

std::optional<int> GeodesicBall::distance(const BraidWord& w) const {
  if (w.strands() != strands_) throw std::invalid_argument("GeodesicBall: strand count mismatch");
  auto it = dist_.find(normal_form(w).key());
  if (it == dist_.end()) return std::nullopt;
  return it->second;
}

std::vector<BraidWord> GeodesicBall::sphere(int d) const {
  if (d < 0 || d > radius_) return {};
  return spheres_[static_cast<std::size_t>(d)];
}

std::optional<int> exact_length_bfs(const BraidWord& w, int radius_cap) {
  const int n = w.strands();
  const std::string target = normal_form(w).key();
  std::unordered_map<std::string, int> seen;
  BraidWord id(n);
  if (normal_form(id).key() == target) return 0;
  seen.emplace(normal_form(id).key(), 0);
  std::vector<BraidWord> frontier{id};
  for (int d = 1; d <= radius_cap; ++d) {
    std::vector<BraidWord> layer;
    for (const auto& u : frontier) {
      for (int g = 1; g < n; ++g) {
        for (int e : {g, -g}) {
          if (!u.empty() && u.letters().back() == -e) continue;
          std::vector<int> letters = u.letters();
          letters.push_back(e);
          BraidWord next(n, std::move(letters));
          auto key = normal_form(next).key();
          if (key == target) return d;
          if (seen.emplace(std::move(key), d).second) layer.push_back(std::move(next));
        }
      }
    }
    frontier = std::move(layer);
  }
  return std::nullopt;
}

std::size_t tuple_length(std::span<const BraidWord> t, const ApproxOptions& opts) {
  std::size_t total = 0;
  for (const auto& w : t) total += shorten(w.letters(), w.strands(), opts).size();
  return total;
}

std::set<int> generator_support(std::span<const BraidWord> t, const ApproxOptions& opts) {
  std::set<int> support;
  for (const auto& w : t)
    for (int e : shorten(w.letters(), w.strands(), opts)) support.insert(std::abs(e));
  return support;
}

bool supports_separated(const std::set<int>& a, const std::set<int>& b) {
  for (int i : a)
    for (int j : b)
      if (std::abs(i - j) < 2) return false;
  return true;
}

bool is_separated(std::span<const BraidWord> a, std::span<const BraidWord> b, const ApproxOptions& opts) {
  return supports_separated(generator_support(a, opts), generator_support(b, opts));
}

}  // namespace cbkap
