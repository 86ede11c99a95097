#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "cbkap/braid.hpp"
#include "cbkap/garside.hpp"

namespace cbkap {

/// Knobs of the geodesic-length approximation.
struct ApproxOptions {
  /// How far (in letters) the local rewrite pass looks for a partner to cancel.
  int window = 4;
  /// Number of symmetric images of the word that are shortened independently
  /// (identity, flip sigma_i -> sigma_{n-i}, reversal, flip+reversal); the
  /// shortest result wins.  Clamped to [1, 4].
  int restarts = 2;
  /// Handle-reduction budget; a run that exceeds it is discarded.
  std::size_t max_handle_steps = 200000;
  /// Also shorten the mixed Garside word (negative simple factors first).
  /// Costs a normal form; worth it for long words with large Delta content.
  bool garside_candidate = false;
};

/// A representative of the input element together with its letter count.
struct LengthEstimate {
  std::size_t value;
  BraidWord witness;
};

/// Dehornoy handle reduction.  Returns nullopt when the step budget runs out.
std::optional<std::vector<int>> handle_reduce(std::span<const int> letters, std::size_t max_steps);

/// Commutation-aware cancellation plus braid-relation rewrites that enable a
/// cancellation within `window` letters, iterated to a fixpoint.  Never
/// lengthens the word.
void local_shorten(std::vector<int>& letters, int window);

/// Shortest word found for the element of `letters`; always no longer than
/// the free reduction of the input.
std::vector<int> shorten(std::span<const int> letters, int strands, const ApproxOptions& opts = {});

LengthEstimate approx_length(const BraidWord& w, const ApproxOptions& opts = {});

/// Negative simple factors followed by positive ones; the same element as
/// word_of(nf) but usually much shorter when inf < 0.
BraidWord mixed_word_of(const GarsideNormalForm& nf);

/// Breadth-first ball around the identity in the Cayley graph of B_n,
/// deduplicated by normal form.  Suitable for small n and radius.
class GeodesicBall {
 public:
  GeodesicBall(int strands, int radius);

  int strands() const noexcept { return strands_; }
  int radius() const noexcept { return radius_; }
  /// Exact geodesic length, or nullopt when it exceeds the radius.
  std::optional<int> distance(const BraidWord& w) const;
  /// All elements at exactly distance d, each with one geodesic word.
  std::vector<BraidWord> sphere(int d) const;
  std::size_t size() const noexcept { return dist_.size(); }

 private:
  int strands_;
  int radius_;
  std::unordered_map<std::string, int> dist_;
  std::vector<std::vector<BraidWord>> spheres_;
};

/// Exact geodesic length by BFS, or nullopt once `radius_cap` is exceeded.
std::optional<int> exact_length_bfs(const BraidWord& w, int radius_cap);

using BraidTuple = std::vector<BraidWord>;

std::size_t tuple_length(std::span<const BraidWord> t, const ApproxOptions& opts = {});

/// Generator indices used by the shortened witnesses of the tuple.
std::set<int> generator_support(std::span<const BraidWord> t, const ApproxOptions& opts = {});

/// Supports disjoint and every cross pair of indices at distance >= 2.
bool supports_separated(const std::set<int>& a, const std::set<int>& b);

bool is_separated(std::span<const BraidWord> a, std::span<const BraidWord> b,
                  const ApproxOptions& opts = {});

}  // namespace cbkap
