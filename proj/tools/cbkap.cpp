// Command-line driver: instance generation, protocol runs, attacks and
// batch experiments.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cbkap/attack.hpp"
#include "cbkap/garside.hpp"
#include "cbkap/harness.hpp"
#include "cbkap/protocol.hpp"

namespace {

using namespace cbkap;
using Clock = std::chrono::steady_clock;

struct ParamFlags {
  int set = 1;
  std::optional<int> n, gamma, z_len, word_len;
  std::optional<unsigned> p;
  std::string split = "fixed";

  void add_to(CLI::App& app) {
    app.add_option("--set", set, "Parameter set (1: n=14, 2: n=12)")->check(CLI::IsMember({1, 2}));
    app.add_option("--n", n, "Strands (overrides the set)");
    app.add_option("--p", p, "Prime modulus");
    app.add_option("--gamma", gamma, "Published words per side");
    app.add_option("--z-len", z_len, "Length of the secret conjugator");
    app.add_option("--word-len", word_len, "Length of each secret word");
    app.add_option("--split", split, "Generator split: fixed or random")->check(CLI::IsMember({"fixed", "random"}));
  }

  bool custom() const { return n || p || gamma || z_len || word_len || split != "fixed"; }

  TTPParams params() const {
    TTPParams pr = parameter_set(set);
    if (n) pr.n = *n;
    if (p) pr.p = *p;
    if (gamma) pr.gamma = *gamma;
    if (z_len) pr.z_len = *z_len;
    if (word_len) pr.word_len = *word_len;
    pr.split = split == "random" ? SplitMode::kRandom : SplitMode::kFixed;
    pr.validate();
    return pr;
  }
};

struct CapFlags {
  std::size_t max_expansions = AttackCaps{}.max_expansions;
  double max_seconds = AttackCaps{}.max_seconds;

  void add_to(CLI::App& app) {
    app.add_option("--max-expansions", max_expansions, "Search expansion cap");
    app.add_option("--max-seconds", max_seconds, "Search wall-time cap");
  }
  AttackCaps caps() const {
    AttackCaps c;
    c.max_expansions = max_expansions;
    c.max_seconds = max_seconds;
    return c;
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

std::vector<Strategy> parse_strategies(const std::vector<std::string>& names) {
  std::vector<Strategy> out;
  for (const auto& s : names) {
    std::stringstream ss(s);
    for (std::string item; std::getline(ss, item, ',');)
      if (!item.empty()) out.push_back(parse_strategy(item));
  }
  return out;
}

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

int cmd_ttp_gen(const ParamFlags& pf, std::uint64_t seed, bool keep_witness, const std::string& out) {
  std::mt19937_64 rng(seed);
  write_text(out, instance_to_json(ttp_generate(pf.params(), rng), keep_witness));
  return 0;
}

int cmd_protocol_run(const std::string& path, std::uint64_t seed, bool tamper) {
  const auto inst = instance_from_json(read_file(path));
  std::mt19937_64 rng(seed);
  const auto t0 = Clock::now();
  const auto ka = make_key(inst, Side::kA, rng);
  const auto kb = make_key(inst, Side::kB, rng);
  auto pa = make_public(ka, inst, Side::kA);
  const auto pb = make_public(kb, inst, Side::kB);
  const double keygen_ms = ms_since(t0);
  if (tamper) pa.m(0, 0) = (pa.m(0, 0) + 1) % inst.params.p;
  const auto t1 = Clock::now();
  const auto alice = shared_key(ka, pb, inst, Side::kA);
  const auto bob = shared_key(kb, pa, inst, Side::kB);
  const double shared_ms = ms_since(t1);
  const bool match = alice == bob;
  std::printf("keys_match=%s keygen_ms=%.3f shared_ms=%.3f\n", match ? "true" : "false", keygen_ms, shared_ms);
  return match ? 0 : 1;
}

int cmd_attack(const std::string& path, const std::vector<Strategy>& strategies, const CapFlags& cf,
               const std::string& out) {
  const auto inst = instance_from_json(read_file(path));
  const std::string id = std::filesystem::path(path).stem().string();
  std::ofstream csv;
  if (!out.empty()) {
    const bool fresh = !std::filesystem::exists(out) || std::filesystem::file_size(out) == 0;
    csv.open(out, std::ios::app);
    if (!csv) throw std::runtime_error("cannot write " + out);
    if (fresh) csv << csv_header() << '\n';
  } else {
    std::cout << csv_header() << '\n';
  }
  bool all_ok = true;
  for (Strategy s : strategies) {
    TrialRow row;
    row.instance_id = id;
    row.outcome = full_attack(inst.w_pub, inst.v_pub, s, cf.caps());
    if (has_witness(inst)) score_against_witness(row.outcome, inst);
    (out.empty() ? std::cout : csv) << csv_row(row) << '\n';
    if (!row.outcome.success()) {
      all_ok = false;
      std::cerr << to_string(s) << ": " << row.outcome.failure << '\n';
    } else {
      std::cerr << to_string(s) << ": z' = " << row.outcome.z_prime->to_string() << '\n';
    }
  }
  return all_ok ? 0 : 2;
}

int cmd_experiment(const ParamFlags& pf, int trials, std::uint64_t seed, const std::vector<Strategy>& strategies,
                   int jobs, const CapFlags& cf, const std::string& out_dir) {
  ExperimentConfig cfg;
  cfg.parameter_set = pf.custom() ? 0 : pf.set;
  cfg.params = pf.params();
  cfg.trials = trials;
  cfg.seed = seed;
  cfg.strategies = strategies;
  cfg.jobs = jobs;
  cfg.caps = cf.caps();
  cfg.validate();

  const std::filesystem::path dir(out_dir);
  std::filesystem::create_directories(dir);
  // Rows are appended as they finish so an interrupted run keeps its data;
  // the file is rewritten in trial order at the end.
  std::ofstream partial(dir / "trials.csv");
  partial << csv_header() << '\n' << std::flush;
  std::size_t done = 0;
  const std::size_t total = static_cast<std::size_t>(trials) * strategies.size();
  const auto report = run_experiment(cfg, [&](const TrialRow& row) {
    partial << csv_row(row) << '\n' << std::flush;
    std::cerr << "\r" << ++done << "/" << total << std::flush;
  });
  std::cerr << '\n';
  partial.close();
  {
    std::ofstream csv(dir / "trials.csv");
    write_csv(csv, report.rows);
  }
  write_text((dir / "report.json").string(), report_to_json(report));

  std::printf("%-13s %7s %9s %17s %9s %17s %11s %11s\n", "strategy", "trials", "success", "95% CI", "exact_z",
              "95% CI", "mean_ms", "median_ms");
  for (const auto& s : report.summaries) {
    const auto [slo, shi] = wilson_interval(s.successes, s.trials);
    const auto [elo, ehi] = wilson_interval(s.exact_z, s.trials);
    std::printf("%-13s %7zu %9.3f    [%.3f, %.3f] %9.3f    [%.3f, %.3f] %11.1f %11.1f\n",
                std::string(to_string(s.strategy)).c_str(), s.trials, s.success_rate(), slo, shi, s.exact_z_rate(),
                elo, ehi, s.mean_wall_ms, s.median_wall_ms);
    if (s.unsound) std::printf("  WARNING: %zu successes failed re-verification\n", s.unsound);
  }
  return 0;
}

int cmd_bench(const ParamFlags& pf, int trials, std::uint64_t seed, const std::vector<Strategy>& strategies,
              const CapFlags& cf) {
  const auto params = pf.params();
  std::mt19937_64 rng(seed);
  double gen_ms = 0, proto_ms = 0;
  std::vector<double> attack_ms(strategies.size(), 0.0);
  std::vector<int> wins(strategies.size(), 0);
  for (int t = 0; t < trials; ++t) {
    auto t0 = Clock::now();
    const auto inst = ttp_generate(params, rng);
    gen_ms += ms_since(t0);
    t0 = Clock::now();
    const auto ka = make_key(inst, Side::kA, rng);
    const auto kb = make_key(inst, Side::kB, rng);
    const auto alice = shared_key(ka, make_public(kb, inst, Side::kB), inst, Side::kA);
    const auto bob = shared_key(kb, make_public(ka, inst, Side::kA), inst, Side::kB);
    proto_ms += ms_since(t0);
    if (!(alice == bob)) std::fprintf(stderr, "trial %d: key mismatch\n", t);
    for (std::size_t k = 0; k < strategies.size(); ++k) {
      const auto o = full_attack(inst.w_pub, inst.v_pub, strategies[k], cf.caps());
      attack_ms[k] += o.wall_ms;
      wins[k] += o.success();
    }
  }
  std::printf("n=%d p=%u gamma=%d z_len=%d trials=%d\n", params.n, params.p, params.gamma, params.z_len, trials);
  std::printf("  %-22s %10.2f ms\n", "ttp-gen", gen_ms / trials);
  std::printf("  %-22s %10.2f ms\n", "protocol round trip", proto_ms / trials);
  for (std::size_t k = 0; k < strategies.size(); ++k)
    std::printf("  attack %-15s %10.2f ms  (%d/%d)\n", std::string(to_string(strategies[k])).c_str(),
                attack_ms[k] / trials, wins[k], trials);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Colored Burau key agreement: TTP instances, protocol runs and length-based attacks"};
  app.require_subcommand(1);

  ParamFlags pf;
  CapFlags cf;
  std::uint64_t seed = 1;
  bool keep_witness = false;
  bool tamper = false;
  std::string out;
  std::string instance;
  int trials = 20;
  int jobs = 1;
  std::vector<std::string> strategy_names;

  auto* gen = app.add_subcommand("ttp-gen", "Generate a TTP instance as JSON");
  pf.add_to(*gen);
  gen->add_option("--seed", seed, "RNG seed");
  gen->add_flag("--keep-witness", keep_witness, "Include the secret block");
  gen->add_option("--out", out, "Output file (default stdout)");

  auto* proto = app.add_subcommand("protocol-run", "Run both parties on an instance and compare keys");
  proto->add_option("instance", instance, "Instance JSON")->required()->check(CLI::ExistingFile);
  proto->add_option("--seed", seed, "RNG seed for the private keys");
  proto->add_flag("--tamper", tamper, "Flip one entry of Alice's public matrix before Bob uses it");

  auto* attack = app.add_subcommand("attack", "Attack a published instance");
  attack->add_option("instance", instance, "Instance JSON")->required()->check(CLI::ExistingFile);
  attack->add_option("--strategy", strategy_names, "greedy, backtracking, variant2 (repeat or comma-separate)")
      ->default_str("backtracking");
  cf.add_to(*attack);
  attack->add_option("--out", out, "Append CSV rows to this file (default stdout)");

  auto* exp = app.add_subcommand("experiment", "Generate and attack a batch of instances");
  pf.add_to(*exp);
  exp->add_option("--trials", trials, "Instances")->check(CLI::PositiveNumber);
  exp->add_option("--seed", seed, "Experiment seed");
  exp->add_option("--strategy", strategy_names, "Strategies to run (repeat or comma-separate)")->required();
  exp->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  cf.add_to(*exp);
  exp->add_option("--out", out, "Output directory for report.json and trials.csv")->default_str("results");

  auto* bench = app.add_subcommand("bench", "Time generation, protocol and attacks");
  pf.add_to(*bench);
  bench->add_option("--trials", trials, "Instances")->check(CLI::PositiveNumber);
  bench->add_option("--seed", seed, "RNG seed");
  bench->add_option("--strategy", strategy_names, "Strategies to time");
  cf.add_to(*bench);

  CLI11_PARSE(app, argc, argv);

  try {
    auto strategies = parse_strategies(strategy_names);
    if (gen->parsed()) return cmd_ttp_gen(pf, seed, keep_witness, out);
    if (proto->parsed()) return cmd_protocol_run(instance, seed, tamper);
    if (attack->parsed()) {
      if (strategies.empty()) strategies = {Strategy::kBacktracking};
      return cmd_attack(instance, strategies, cf, out);
    }
    if (exp->parsed()) return cmd_experiment(pf, trials, seed, strategies, jobs, cf, out.empty() ? "results" : out);
    if (bench->parsed()) {
      if (strategy_names.empty()) strategies = {Strategy::kGreedy, Strategy::kBacktracking, Strategy::kVariantII};
      return cmd_bench(pf, trials, seed, strategies, cf);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
