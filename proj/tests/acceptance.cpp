// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "cbkap/attack.hpp"
#include "cbkap/burau.hpp"
#include "cbkap/garside.hpp"
#include "cbkap/harness.hpp"
#include "cbkap/length.hpp"
#include "cbkap/protocol.hpp"
#include "test_support.hpp"

namespace {

using namespace cbkap;
using Clock = std::chrono::steady_clock;

int failures = 0;

void report(int id, bool ok, const std::string& what, const std::string& detail) {
  std::printf("[%s] criterion %d: %s -- %s\n", ok ? "PASS" : "FAIL", id, what.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

int jobs() { return static_cast<int>(std::clamp(std::thread::hardware_concurrency(), 1u, 8u)); }

void relators_map_to_identity() {
  const auto t0 = Clock::now();
  std::size_t checked = 0, bad = 0;
  for (int n : {3, 4, 5}) {
    for (Fp p : {2u, 13u}) {
      const auto id = CBElement::identity(n, p);
      for (int i = 1; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          const std::vector<int> rel = j == i + 1 ? std::vector<int>{i, j, i, -j, -i, -j} : std::vector<int>{i, j, -i, -j};
          ++checked;
          if (!(phi(BraidWord(n, rel), p) == id)) ++bad;
        }
      }
    }
  }
  const double s = seconds_since(t0);
  report(1, bad == 0 && s < 60, "braid relators map to the identity (n=3..5)",
         fmt("%zu relators, %zu bad, %.2f s (limit 60 s)", checked, bad, s));
}

void protocol_agreement() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(2024);
  int ok = 0;
  for (int t = 0; t < 100; ++t) {
    const auto inst = ttp_generate(parameter_set(2), rng);
    const auto ka = make_key(inst, Side::kA, rng);
    const auto kb = make_key(inst, Side::kB, rng);
    const auto alice = shared_key(ka, make_public(kb, inst, Side::kB), inst, Side::kA);
    const auto bob = shared_key(kb, make_public(ka, inst, Side::kA), inst, Side::kB);
    ok += alice == bob;
  }
  const double s = seconds_since(t0);
  report(2, ok == 100 && s < 600, "shared keys agree at set 2 (n=12, p=13, gamma=27)",
         fmt("%d/100 runs, %.2f s (limit 600 s)", ok, s));
}

void normal_form_canonicity() {
  std::mt19937_64 rng(3);
  std::size_t pairs = 0, bad = 0;
  for (int n = 3; n <= 8; ++n) {
    const auto gens = testing::all_generators(n);
    std::uniform_int_distribution<std::size_t> len(0, 30);
    for (int t = 0; t < 1000; ++t) {
      const auto w = random_word(n, len(rng), gens, rng);
      const auto v = testing::scramble(w, 40, rng);
      ++pairs;
      if (!(normal_form(w) == normal_form(v))) ++bad;
    }
  }
  report(3, bad == 0, "normal forms agree on relator-equivalent pairs (n=3..8, 1000 each)",
         fmt("%zu pairs, %zu mismatches", pairs, bad));
}

void length_oracle_quality() {
  std::mt19937_64 rng(4);
  std::size_t cases = 0, exact = 0, below = 0;
  for (int n : {3, 4}) {
    GeodesicBall ball(n, 6);
    for (int d = 1; d <= 6; ++d) {
      for (const auto& g : ball.sphere(d)) {
        // Two non-geodesic presentations of each element.
        for (const auto& w : {word_of(normal_form(g)), testing::scramble(g, 4, rng)}) {
          const auto v = approx_length(w).value;
          ++cases;
          exact += v == static_cast<std::size_t>(d);
          below += v < static_cast<std::size_t>(d);
        }
      }
    }
  }
  const double rate = static_cast<double>(exact) / static_cast<double>(cases);
  report(4, cases >= 500 && rate >= 0.95 && below == 0, "length approximation on B3/B4, geodesic length <= 6",
         fmt("%zu cases, exact %.4f (need >= 0.95), below BFS %zu (need 0)", cases, rate, below));
}

void delta_recovery() {
  int perfect = 0, total = 0;
  std::size_t words = 0, wrong = 0;
  for (int set : {1, 2}) {
    std::mt19937_64 rng(500 + set);
    for (int t = 0; t < 20; ++t, ++total) {
      const auto inst = ttp_generate(parameter_set(set), rng);
      std::size_t bad = 0;
      for (std::size_t k = 0; k < inst.w_pub.size(); ++k) bad += recover_delta_power(inst.w_pub[k]).power != inst.delta_sq_w[k];
      for (std::size_t k = 0; k < inst.v_pub.size(); ++k) bad += recover_delta_power(inst.v_pub[k]).power != inst.delta_sq_v[k];
      words += inst.w_pub.size() + inst.v_pub.size();
      wrong += bad;
      perfect += bad == 0;
    }
  }
  report(5, perfect == total, "Delta^2 exponent recovery, 20 instances per set",
         fmt("%d/%d instances fully correct, %zu/%zu words wrong", perfect, total, wrong, words));
}

std::string rate_ci(std::size_t k, std::size_t n) {
  const auto [lo, hi] = wilson_interval(k, n);
  return fmt("%zu/%zu = %.3f (95%% CI [%.3f, %.3f])", k, n, n ? double(k) / double(n) : 0.0, lo, hi);
}

std::size_t unsound_total = 0;
std::size_t successes_audited = 0;

ExperimentReport experiment(TTPParams params, int set, std::vector<Strategy> strategies, std::uint64_t seed) {
  ExperimentConfig cfg;
  cfg.parameter_set = set;
  cfg.params = params;
  cfg.trials = 20;
  cfg.strategies = std::move(strategies);
  cfg.seed = seed;
  cfg.jobs = jobs();
  auto r = run_experiment(cfg);
  for (const auto& s : r.summaries) {
    unsound_total += s.unsound;
    successes_audited += s.successes;
  }
  return r;
}

const StrategySummary& find(const ExperimentReport& r, Strategy s) {
  return *std::find_if(r.summaries.begin(), r.summaries.end(), [&](const auto& x) { return x.strategy == s; });
}

void attack_success() {
  for (int set : {1, 2}) {
    const auto r = experiment(parameter_set(set), set,
                              {Strategy::kBacktracking, Strategy::kGreedy, Strategy::kVariantII}, 600 + set);
    const auto& bt = find(r, Strategy::kBacktracking);
    const auto& gr = find(r, Strategy::kGreedy);
    const auto& v2 = find(r, Strategy::kVariantII);
    report(6, bt.success_rate() >= 0.9 && bt.mean_wall_ms <= 60000.0,
           fmt("set %d backtracking success >= 0.90, mean time <= 60 s", set),
           rate_ci(bt.successes, bt.trials) + fmt(", mean %.2f s", bt.mean_wall_ms / 1000));
    report(6, gr.success_rate() >= 0.7, fmt("set %d greedy success >= 0.70", set), rate_ci(gr.successes, gr.trials));
    report(6, v2.exact_z_rate() >= 0.2, fmt("set %d variant II exact z >= 0.20", set),
           rate_ci(v2.exact_z, v2.trials) + fmt(", success %s", rate_ci(v2.successes, v2.trials).c_str()));
  }
}

void stress_long_conjugator() {
  auto params = parameter_set(1);
  params.z_len = 50;
  const auto r = experiment(params, 0, {Strategy::kBacktracking}, 700);
  const auto& bt = find(r, Strategy::kBacktracking);
  report(7, bt.trials >= 20 && bt.success_rate() >= 0.8, "z_len=50 backtracking success >= 0.80",
         rate_ci(bt.successes, bt.trials) + fmt(", mean %.2f s", bt.mean_wall_ms / 1000));
}

void length_growth() {
  std::mt19937_64 rng(8);
  const auto params = parameter_set(1);
  const auto gens = testing::all_generators(params.n);
  std::uniform_int_distribution<std::size_t> len(1, 10);
  int grew = 0;
  const int trials = 1000;
  for (int t = 0; t < trials; ++t) {
    auto [bl, br] = choose_split(params.n, params.split, rng);
    BraidTuple tuple;
    for (int k = 0; k < params.gamma; ++k) tuple.push_back(random_word(params.n, 10, bl, rng));
    for (int k = 0; k < params.gamma; ++k) tuple.push_back(random_word(params.n, 10, br, rng));
    const auto x = random_word(params.n, len(rng), gens, rng);
    BraidTuple conj;
    for (const auto& u : tuple) conj.push_back(conjugate(u, x));
    grew += tuple_length(conj) > tuple_length(tuple);
  }
  const double rate = double(grew) / trials;
  report(8, rate >= 0.95, "conjugation by random x (|x| <= 10) lengthens the tuple at n=14",
         fmt("%d/%d = %.4f (need >= 0.95)", grew, trials, rate));
}

void soundness() {
  report(9, unsound_total == 0, "every reported success re-verifies from published data",
         fmt("%zu successes audited, %zu unsound", successes_audited, unsound_total));
}

}  // namespace

int main() {
  const auto t0 = Clock::now();
  relators_map_to_identity();
  protocol_agreement();
  normal_form_canonicity();
  length_oracle_quality();
  delta_recovery();
  attack_success();
  stress_long_conjugator();
  length_growth();
  soundness();
  std::printf("%s: %d failing line(s), %.1f s total\n", failures ? "FAILED" : "ALL PASSED", failures,
              seconds_since(t0));
  return failures ? 1 : 0;
}
