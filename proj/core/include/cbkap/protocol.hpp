#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "cbkap/braid.hpp"
#include "cbkap/burau.hpp"
#include "cbkap/fp.hpp"
#include "cbkap/garside.hpp"

namespace cbkap {

enum class SplitMode {
  /// BL = {1..l}, BR = {l+2..n-1}, l = (n-2)/2.
  kFixed,
  /// Random index sets with every cross pair at distance >= 2.
  kRandom,
};

struct TTPParams {
  int n = 14;
  Fp p = 13;
  int gamma = 27;
  int word_len = 10;
  int z_len = 17;
  SplitMode split = SplitMode::kFixed;
  /// Number of powers of m0 in a private matrix.
  int r = 3;
  /// Number of published words in a private word.
  int private_len = 10;

  void validate() const;
};

TTPParams parameter_set(int which);

/// Published TTP data plus the hidden witness used for scoring.
struct TTPInstance {
  TTPParams params;
  std::vector<int> bl;
  std::vector<int> br;
  FpMatrix m0;
  EvalPoint ep;
  std::vector<BraidWord> w_pub;
  std::vector<BraidWord> v_pub;

  // Witness.  Published word i equals Delta^{2 k_i} z w_i z^{-1}; the k_i
  // are stored in delta_sq_w / delta_sq_v.
  BraidWord z;
  std::vector<BraidWord> w;
  std::vector<BraidWord> v;
  std::vector<int> delta_sq_w;
  std::vector<int> delta_sq_v;
};

enum class Side { kA, kB };

struct KeyMaterial {
  FpMatrix m0;
  EvalPoint ep;
  FpMatrix private_matrix;
  /// Signed 1-based indices into the published list of this side; a
  /// negative entry selects the inverse of the word.
  std::vector<int> private_word;
};

/// Both sets nonempty and every cross pair of indices at distance >= 2.
bool valid_split(const std::vector<int>& bl, const std::vector<int>& br);

/// Generator index sets for the TTP.
std::pair<std::vector<int>, std::vector<int>> choose_split(int n, SplitMode mode, std::mt19937_64& rng);

/// Conjugates, normal-forms and reduces modulo Delta^2; records the hidden
/// Delta^2 exponents.  The split is taken as given (see valid_split).
TTPInstance ttp_build(const TTPParams& params, std::vector<int> bl, std::vector<int> br, BraidWord z,
                      std::vector<BraidWord> w, std::vector<BraidWord> v, FpMatrix m0, EvalPoint ep);

TTPInstance ttp_generate(const TTPParams& params, std::mt19937_64& rng);

/// Random monic irreducible polynomial of degree n.
FpPoly random_irreducible(int n, Fp p, std::mt19937_64& rng);
FpMatrix random_m0(int n, Fp p, std::mt19937_64& rng);

/// Nonzero combination sum_k l_k m0^{alpha_k}, alpha_k in [1, n p].
FpMatrix private_matrix(const FpMatrix& m0, int r, std::mt19937_64& rng);

KeyMaterial make_key(const TTPInstance& inst, Side side, std::mt19937_64& rng);

const std::vector<BraidWord>& published(const TTPInstance& inst, Side side);

/// Concatenation of the selected published words (inverted where asked).
BraidWord private_braid(const KeyMaterial& key, const TTPInstance& inst, Side side);

/// (n_x, id) ⋆ w_{i1}^{e1} ⋆ ... for the chosen side.
EvaluatedPair make_public(const KeyMaterial& key, const TTPInstance& inst, Side side);

/// [(n_x, id) * other_public] ⋆ w_{i1}^{e1} ⋆ ...
EvaluatedPair shared_key(const KeyMaterial& key, const EvaluatedPair& other_public, const TTPInstance& inst,
                         Side side);

}  // namespace cbkap
