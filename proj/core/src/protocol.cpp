#include "cbkap/protocol.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cbkap {

void TTPParams::validate() const {
  if (n < 7) throw std::invalid_argument("TTP needs n >= 7, got " + std::to_string(n));
  if (!is_prime(p) || p >= (1u << 16)) throw std::invalid_argument("p must be a prime below 2^16");
  if (gamma < 1) throw std::invalid_argument("gamma must be >= 1");
  if (word_len < 1 || z_len < 1) throw std::invalid_argument("word and conjugator lengths must be >= 1");
  if (r < 1) throw std::invalid_argument("r must be >= 1");
  if (private_len < 0) throw std::invalid_argument("private word length must be >= 0");
}

TTPParams parameter_set(int which) {
  TTPParams params;
  switch (which) {
    case 1:
      params.n = 14;
      params.z_len = 17;
      break;
    case 2:
      params.n = 12;
      params.z_len = 18;
      break;
    default:
      throw std::invalid_argument("unknown parameter set " + std::to_string(which));
  }
  params.p = 13;
  params.r = 3;
  params.gamma = 27;
  params.word_len = 10;
  return params;
}

bool valid_split(const std::vector<int>& bl, const std::vector<int>& br) {
  if (bl.empty() || br.empty()) return false;
  for (int i : bl)
    for (int j : br)
      if (std::abs(i - j) < 2) return false;
  return true;
}

std::pair<std::vector<int>, std::vector<int>> choose_split(int n, SplitMode mode, std::mt19937_64& rng) {
  if (n < 4) throw std::invalid_argument("choose_split: need n >= 4");
  std::vector<int> bl, br;
  if (mode == SplitMode::kFixed) {
    const int l = (n - 2) / 2;
    for (int i = 1; i <= l; ++i) bl.push_back(i);
    for (int i = l + 2; i <= n - 1; ++i) br.push_back(i);
    return {bl, br};
  }
  std::uniform_int_distribution<int> pick(0, 2);
  do {
    bl.clear();
    br.clear();
    for (int i = 1; i <= n - 1; ++i) {
      const int c = pick(rng);
      if (c == 0) bl.push_back(i);
      else if (c == 1) br.push_back(i);
    }
  } while (!valid_split(bl, br));
  return {bl, br};
}

TTPInstance ttp_build(const TTPParams& params, std::vector<int> bl, std::vector<int> br, BraidWord z,
                      std::vector<BraidWord> w, std::vector<BraidWord> v, FpMatrix m0, EvalPoint ep) {
  TTPInstance inst{params, std::move(bl), std::move(br), std::move(m0), std::move(ep), {}, {}, std::move(z),
                   std::move(w), std::move(v), {}, {}};
  auto publish = [&](const std::vector<BraidWord>& secret, std::vector<BraidWord>& out, std::vector<int>& hidden) {
    for (const auto& u : secret) {
      const auto nf = normal_form(conjugate(u, inst.z));
      const auto reduced = reduce_mod_delta_squared(nf);
      hidden.push_back((reduced.inf - nf.inf) / 2);
      out.push_back(word_of(reduced));
    }
  };
  publish(inst.w, inst.w_pub, inst.delta_sq_w);
  publish(inst.v, inst.v_pub, inst.delta_sq_v);
  return inst;
}

TTPInstance ttp_generate(const TTPParams& params, std::mt19937_64& rng) {
  params.validate();
  const int n = params.n;
  auto [bl, br] = choose_split(n, params.split, rng);
  std::vector<int> all;
  for (int i = 1; i < n; ++i) all.push_back(i);
  BraidWord z = random_word(n, static_cast<std::size_t>(params.z_len), all, rng);
  std::vector<BraidWord> w, v;
  for (int k = 0; k < params.gamma; ++k) w.push_back(random_word(n, static_cast<std::size_t>(params.word_len), bl, rng));
  for (int k = 0; k < params.gamma; ++k) v.push_back(random_word(n, static_cast<std::size_t>(params.word_len), br, rng));
  FpMatrix m0 = random_m0(n, params.p, rng);
  EvalPoint ep = EvalPoint::random(n, params.p, rng);
  return ttp_build(params, std::move(bl), std::move(br), std::move(z), std::move(w), std::move(v), std::move(m0),
                   std::move(ep));
}

FpPoly random_irreducible(int n, Fp p, std::mt19937_64& rng) {
  std::uniform_int_distribution<Fp> coef(0, p - 1);
  FpPoly f;
  f.p = p;
  do {
    f.c.assign(static_cast<std::size_t>(n) + 1, 0);
    for (int k = 0; k < n; ++k) f.c[static_cast<std::size_t>(k)] = coef(rng);
    f.c.back() = 1;
  } while (!is_irreducible(f));
  return f;
}

FpMatrix random_m0(int n, Fp p, std::mt19937_64& rng) { return companion_matrix(random_irreducible(n, p, rng)); }

FpMatrix private_matrix(const FpMatrix& m0, int r, std::mt19937_64& rng) {
  if (r < 1) throw std::invalid_argument("private_matrix: r must be >= 1");
  const Fp p = m0.modulus();
  const auto top = static_cast<std::uint64_t>(m0.size()) * p;
  std::uniform_int_distribution<std::uint64_t> alpha(1, top);
  std::uniform_int_distribution<Fp> coef(0, p - 1);
  for (;;) {
    FpMatrix acc(m0.size(), p);
    for (int k = 0; k < r; ++k) {
      const auto a = alpha(rng);
      const Fp l = coef(rng);
      acc = acc + l * matrix_power(m0, a);
    }
    if (!acc.is_zero()) return acc;
  }
}

KeyMaterial make_key(const TTPInstance& inst, Side side, std::mt19937_64& rng) {
  const auto count = static_cast<int>(published(inst, side).size());
  std::uniform_int_distribution<int> index(1, count);
  std::uniform_int_distribution<int> sign(0, 1);
  std::vector<int> word;
  for (int k = 0; k < inst.params.private_len; ++k) word.push_back(sign(rng) ? index(rng) : -index(rng));
  FpMatrix priv = private_matrix(inst.m0, inst.params.r, rng);
  return KeyMaterial{inst.m0, inst.ep, std::move(priv), std::move(word)};
}

const std::vector<BraidWord>& published(const TTPInstance& inst, Side side) {
  return side == Side::kA ? inst.w_pub : inst.v_pub;
}

BraidWord private_braid(const KeyMaterial& key, const TTPInstance& inst, Side side) {
  const auto& list = published(inst, side);
  std::vector<int> letters;
  for (int idx : key.private_word) {
    const int k = std::abs(idx);
    if (idx == 0 || k > static_cast<int>(list.size()))
      throw std::out_of_range("private word index " + std::to_string(idx) + " out of range");
    const auto& u = list[static_cast<std::size_t>(k - 1)];
    if (idx > 0) {
      letters.insert(letters.end(), u.letters().begin(), u.letters().end());
    } else {
      for (auto it = u.letters().rbegin(); it != u.letters().rend(); ++it) letters.push_back(-*it);
    }
  }
  return BraidWord(inst.params.n, std::move(letters));
}

EvaluatedPair make_public(const KeyMaterial& key, const TTPInstance& inst, Side side) {
  EvaluatedPair acc{key.private_matrix, Permutation::identity(inst.params.n)};
  star_apply_in_place(acc, private_braid(key, inst, side).letters(), key.ep);
  return acc;
}

EvaluatedPair shared_key(const KeyMaterial& key, const EvaluatedPair& other_public, const TTPInstance& inst,
                         Side side) {
  EvaluatedPair acc{key.private_matrix * other_public.m, other_public.s};
  star_apply_in_place(acc, private_braid(key, inst, side).letters(), key.ep);
  return acc;
}

}  // namespace cbkap
