#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cbkap/braid.hpp"
#include "cbkap/length.hpp"

namespace cbkap {

struct TTPInstance;

enum class Strategy { kGreedy, kBacktracking, kVariantII };

std::string_view to_string(Strategy s) noexcept;
/// Accepts "greedy", "backtracking", "variant2".
Strategy parse_strategy(std::string_view name);

struct AttackCaps {
  std::size_t max_expansions = 10000;
  double max_seconds = 300.0;
  ApproxOptions approx{};
};

struct DeltaRecovery {
  /// Shortened representative of Delta^{-2 power} w.
  BraidWord word;
  int power;
};

/// Walks w through its coset modulo <Delta^2> while the approximate length
/// keeps dropping.
DeltaRecovery recover_delta_power(const BraidWord& w, const ApproxOptions& opts = {});

struct SearchStats {
  std::size_t iterations = 0;
  std::size_t expansions = 0;
  /// Pops of a state that is not a child of the previously expanded one.
  std::size_t backtracks = 0;
  bool cap_hit = false;
  /// Totals of expanded states in pop order (backtracking only).
  std::vector<std::size_t> popped_totals;
  /// Smallest total left in the frontier right after each pop (SIZE_MAX
  /// when it is empty).
  std::vector<std::size_t> frontier_minima;
};

struct ConjugatorSearch {
  /// x with x a x^{-1}, x b x^{-1} separated; empty on failure.
  std::optional<BraidWord> z_prime;
  /// The conjugated tuples as found by the search (shortened words).
  BraidTuple a;
  BraidTuple b;
  SearchStats stats;
  std::string failure;
};

/// Greedy descent that stops as soon as some one-letter conjugate is separated.
ConjugatorSearch recover_conjugator_greedy(const BraidTuple& a, const BraidTuple& b, const AttackCaps& caps = {});
/// Best-first search over conjugators, ordered by total tuple length.
ConjugatorSearch recover_conjugator_backtracking(const BraidTuple& a, const BraidTuple& b,
                                                 const AttackCaps& caps = {});
/// Greedy descent to a local minimum of the total length, then a single
/// separation test.
ConjugatorSearch recover_conjugator_ii(const BraidTuple& a, const BraidTuple& b, const AttackCaps& caps = {});

struct AttackOutcome {
  Strategy strategy = Strategy::kBacktracking;
  std::optional<BraidWord> z_prime;
  std::vector<int> delta_powers_w;
  std::vector<int> delta_powers_v;
  /// Independent re-verification on the published words passed.
  bool separated = false;
  /// Filled by score_against_witness.
  bool exact_z = false;
  int delta_errors = -1;
  std::size_t iterations = 0;
  std::size_t backtracks = 0;
  double wall_ms = 0.0;
  std::string failure;

  bool success() const noexcept { return separated; }
};

/// Re-conjugates Delta^{-2 p_i} pub_i by z_prime and checks separation from
/// scratch, using fresh length estimates.
bool verify_separating_conjugator(const BraidTuple& w_pub, const BraidTuple& v_pub, std::span<const int> powers_w,
                                  std::span<const int> powers_v, const BraidWord& z_prime,
                                  const ApproxOptions& opts = {});

AttackOutcome full_attack(const BraidTuple& w_pub, const BraidTuple& v_pub, Strategy strategy,
                          const AttackCaps& caps = {});

/// Compares with the hidden TTP data: Delta^2 exponents and z (or z^{-1}).
void score_against_witness(AttackOutcome& outcome, const TTPInstance& inst);

}  // namespace cbkap
