#include "cbkap/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <iomanip>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

namespace cbkap {

using nlohmann::json;

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  std::uint64_t x = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::pair<double, double> wilson_interval(std::size_t k, std::size_t n, double z) {
  if (n == 0) return {0.0, 1.0};
  const double nn = static_cast<double>(n);
  const double ph = static_cast<double>(k) / nn;
  const double z2 = z * z;
  const double centre = (ph + z2 / (2 * nn)) / (1 + z2 / nn);
  const double half = z * std::sqrt(ph * (1 - ph) / nn + z2 / (4 * nn * nn)) / (1 + z2 / nn);
  return {std::max(0.0, centre - half), std::min(1.0, centre + half)};
}

namespace {

json words_to_json(const std::vector<BraidWord>& ws) {
  json out = json::array();
  for (const auto& w : ws) out.push_back(w.letters());
  return out;
}

std::vector<BraidWord> words_from_json(const json& j, int n) {
  std::vector<BraidWord> out;
  for (const auto& w : j) out.emplace_back(n, w.get<std::vector<int>>());
  return out;
}

}  // namespace

bool has_witness(const TTPInstance& inst) noexcept {
  return inst.w.size() == inst.w_pub.size() && inst.v.size() == inst.v_pub.size() && !inst.w_pub.empty() &&
         inst.delta_sq_w.size() == inst.w_pub.size();
}

std::string instance_to_json(const TTPInstance& inst, bool keep_witness) {
  const auto& pr = inst.params;
  json j;
  j["n"] = pr.n;
  j["p"] = pr.p;
  j["gamma"] = pr.gamma;
  j["word_len"] = pr.word_len;
  j["z_len"] = pr.z_len;
  j["r"] = pr.r;
  j["private_len"] = pr.private_len;
  j["split"] = pr.split == SplitMode::kFixed ? "fixed" : "random";
  j["BL"] = inst.bl;
  j["BR"] = inst.br;
  j["w_pub"] = words_to_json(inst.w_pub);
  j["v_pub"] = words_to_json(inst.v_pub);
  j["taus"] = inst.ep.taus();
  j["m0"] = inst.m0.entries();
  if (keep_witness) {
    j["secret"] = {{"z", inst.z.letters()},
                   {"w", words_to_json(inst.w)},
                   {"v", words_to_json(inst.v)},
                   {"taus", inst.ep.taus()},
                   {"delta_sq_w", inst.delta_sq_w},
                   {"delta_sq_v", inst.delta_sq_v}};
  }
  return j.dump(1) + "\n";
}

TTPInstance instance_from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    TTPParams pr;
    pr.n = j.at("n").get<int>();
    pr.p = j.at("p").get<Fp>();
    pr.gamma = j.at("gamma").get<int>();
    pr.word_len = j.value("word_len", pr.word_len);
    pr.z_len = j.value("z_len", pr.z_len);
    pr.r = j.value("r", pr.r);
    pr.private_len = j.value("private_len", pr.private_len);
    pr.split = j.value("split", std::string("fixed")) == "random" ? SplitMode::kRandom : SplitMode::kFixed;
    pr.validate();
    const int n = pr.n;
    const auto m0_entries = j.at("m0").get<std::vector<Fp>>();
    if (m0_entries.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
      throw std::runtime_error("m0 must have n*n entries");
    TTPInstance inst{pr,
                     j.at("BL").get<std::vector<int>>(),
                     j.at("BR").get<std::vector<int>>(),
                     FpMatrix(n, pr.p, m0_entries),
                     EvalPoint(j.at("taus").get<std::vector<Fp>>(), pr.p),
                     words_from_json(j.at("w_pub"), n),
                     words_from_json(j.at("v_pub"), n),
                     BraidWord(n),
                     {},
                     {},
                     {},
                     {}};
    if (inst.ep.size() != n) throw std::runtime_error("taus must have n entries");
    if (j.contains("secret")) {
      const auto& s = j.at("secret");
      inst.z = BraidWord(n, s.at("z").get<std::vector<int>>());
      inst.w = words_from_json(s.at("w"), n);
      inst.v = words_from_json(s.at("v"), n);
      inst.delta_sq_w = s.at("delta_sq_w").get<std::vector<int>>();
      inst.delta_sq_v = s.at("delta_sq_v").get<std::vector<int>>();
    }
    return inst;
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("malformed instance: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("malformed instance: ") + e.what());
  }
}

void ExperimentConfig::validate() const {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (strategies.empty()) throw std::invalid_argument("at least one strategy is required");
  if (jobs < 1) throw std::invalid_argument("jobs must be >= 1");
  params.validate();
}

std::vector<StrategySummary> summarize(const std::vector<TrialRow>& rows, const std::vector<Strategy>& strategies) {
  std::vector<StrategySummary> out;
  for (Strategy s : strategies) {
    StrategySummary sum{s};
    std::vector<double> times;
    for (const auto& row : rows) {
      const auto& o = row.outcome;
      if (o.strategy != s) continue;
      ++sum.trials;
      if (o.success()) ++sum.successes;
      if (o.success() && !row.audit_passed) ++sum.unsound;
      if (o.exact_z) ++sum.exact_z;
      if (o.delta_errors > 0) sum.delta_errors += static_cast<std::size_t>(o.delta_errors);
      times.push_back(o.wall_ms);
    }
    if (!times.empty()) {
      sum.mean_wall_ms = std::accumulate(times.begin(), times.end(), 0.0) / static_cast<double>(times.size());
      std::sort(times.begin(), times.end());
      const std::size_t m = times.size() / 2;
      sum.median_wall_ms = times.size() % 2 ? times[m] : 0.5 * (times[m - 1] + times[m]);
    }
    out.push_back(sum);
  }
  return out;
}

ExperimentReport run_experiment(const ExperimentConfig& config, const std::function<void(const TrialRow&)>& on_row) {
  config.validate();
  const std::size_t per_trial = config.strategies.size();
  std::vector<TrialRow> rows(static_cast<std::size_t>(config.trials) * per_trial);
  std::atomic<int> next{0};
  std::mutex collector;
  std::exception_ptr error;

  auto worker = [&] {
    for (int t = next++; t < config.trials; t = next++) {
      try {
        std::mt19937_64 rng(trial_seed(config.seed, static_cast<std::uint64_t>(t)));
        const auto inst = ttp_generate(config.params, rng);
        for (std::size_t k = 0; k < per_trial; ++k) {
          TrialRow row;
          row.instance_id = "t" + std::to_string(t);
          row.outcome = full_attack(inst.w_pub, inst.v_pub, config.strategies[k], config.caps);
          score_against_witness(row.outcome, inst);
          if (row.outcome.success())
            row.audit_passed = verify_separating_conjugator(inst.w_pub, inst.v_pub, row.outcome.delta_powers_w,
                                                            row.outcome.delta_powers_v, *row.outcome.z_prime,
                                                            config.caps.approx);
          std::lock_guard lock(collector);
          if (on_row) on_row(row);
          rows[static_cast<std::size_t>(t) * per_trial + k] = std::move(row);
        }
      } catch (...) {
        std::lock_guard lock(collector);
        if (!error) error = std::current_exception();
        next = config.trials;
      }
    }
  };
  const int threads = std::min(config.jobs, config.trials);
  std::vector<std::thread> pool;
  for (int k = 1; k < threads; ++k) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);

  ExperimentReport report{config, std::move(rows), {}};
  report.summaries = summarize(report.rows, config.strategies);
  return report;
}

std::string csv_header() {
  return "instance_id,strategy,success,separated,exact_z,z_prime_len,delta_errors,iterations,backtracks,wall_ms";
}

std::string csv_row(const TrialRow& row) {
  const auto& o = row.outcome;
  std::ostringstream s;
  s << row.instance_id << ',' << to_string(o.strategy) << ',' << int(o.success()) << ',' << int(o.separated) << ','
    << int(o.exact_z) << ',' << (o.z_prime ? static_cast<long long>(o.z_prime->letters().size()) : -1) << ','
    << o.delta_errors << ',' << o.iterations << ',' << o.backtracks << ',' << std::fixed << std::setprecision(3)
    << o.wall_ms;
  return s.str();
}

void write_csv(std::ostream& out, const std::vector<TrialRow>& rows) {
  out << csv_header() << '\n';
  for (const auto& r : rows) out << csv_row(r) << '\n';
}

std::string report_to_json(const ExperimentReport& report) {
  const auto& c = report.config;
  json j;
  j["schema"] = 1;
  j["config"] = {{"parameter_set", c.parameter_set},
                 {"n", c.params.n},
                 {"p", c.params.p},
                 {"gamma", c.params.gamma},
                 {"word_len", c.params.word_len},
                 {"z_len", c.params.z_len},
                 {"split", c.params.split == SplitMode::kFixed ? "fixed" : "random"},
                 {"trials", c.trials},
                 {"seed", c.seed},
                 {"jobs", c.jobs},
                 {"max_expansions", c.caps.max_expansions},
                 {"max_seconds", c.caps.max_seconds}};
  json strategies = json::array();
  for (const auto& s : report.summaries) {
    const auto [slo, shi] = wilson_interval(s.successes, s.trials);
    const auto [elo, ehi] = wilson_interval(s.exact_z, s.trials);
    strategies.push_back({{"strategy", std::string(to_string(s.strategy))},
                          {"trials", s.trials},
                          {"successes", s.successes},
                          {"success_rate", s.success_rate()},
                          {"success_ci95", {slo, shi}},
                          {"exact_z", s.exact_z},
                          {"exact_z_rate", s.exact_z_rate()},
                          {"exact_z_ci95", {elo, ehi}},
                          {"delta_errors", s.delta_errors},
                          {"unsound", s.unsound},
                          {"mean_wall_ms", s.mean_wall_ms},
                          {"median_wall_ms", s.median_wall_ms}});
  }
  j["strategies"] = std::move(strategies);
  return j.dump(2) + "\n";
}

}  // namespace cbkap
