#include "cbkap/attack.hpp"

#include <algorithm>
#include <bitset>
#include <chrono>
#include <cstdint>
#include <limits>
#include <queue>
#include <stdexcept>
#include <unordered_set>

#include "cbkap/garside.hpp"
#include "cbkap/protocol.hpp"

namespace cbkap {

std::string_view to_string(Strategy s) noexcept {
  switch (s) {
    case Strategy::kGreedy:
      return "greedy";
    case Strategy::kBacktracking:
      return "backtracking";
    case Strategy::kVariantII:
      return "variant2";
  }
  return "unknown";
}

Strategy parse_strategy(std::string_view name) {
  if (name == "greedy") return Strategy::kGreedy;
  if (name == "backtracking") return Strategy::kBacktracking;
  if (name == "variant2") return Strategy::kVariantII;
  throw std::invalid_argument("unknown strategy '" + std::string(name) + "'");
}

namespace {

using Letters = std::vector<int>;
using Clock = std::chrono::steady_clock;
using Support = std::bitset<256>;

BraidWord delta_squared_power(int n, int k) {
  const BraidWord d = half_twist_word(n);
  const BraidWord step = k >= 0 ? mult(d, d) : invert(mult(d, d));
  std::vector<int> letters;
  for (int r = 0; r < std::abs(k); ++r) letters.insert(letters.end(), step.letters().begin(), step.letters().end());
  return BraidWord(n, std::move(letters));
}

// Tuples a and b held back to back: words[0..split) is a.
struct State {
  std::vector<Letters> words;
  std::size_t split = 0;
  std::size_t total = 0;
};

Support support_of(const State& s, std::size_t from, std::size_t to) {
  Support m;
  for (std::size_t k = from; k < to; ++k)
    for (int e : s.words[k]) m.set(static_cast<std::size_t>(std::abs(e)));
  return m;
}

bool separated(const State& s) {
  const Support a = support_of(s, 0, s.split);
  const Support b = support_of(s, s.split, s.words.size());
  return ((a | (a << 1) | (a >> 1)) & b).none();
}

// Letter order used for tie-breaking: s_1, s_1^{-1}, s_2, s_2^{-1}, ...
std::vector<int> letter_order(int n) {
  std::vector<int> out;
  for (int i = 1; i < n; ++i) {
    out.push_back(i);
    out.push_back(-i);
  }
  return out;
}

Letters conjugate_by_letter(const Letters& x, int g, int n, const ApproxOptions& opts) {
  const int ig = std::abs(g);
  bool touches = false;
  for (int e : x) {
    if (std::abs(std::abs(e) - ig) <= 1) {
      touches = true;
      break;
    }
  }
  if (!touches) return x;
  Letters y;
  y.reserve(x.size() + 2);
  y.push_back(g);
  y.insert(y.end(), x.begin(), x.end());
  y.push_back(-g);
  return shorten(y, n, opts);
}

State conjugate_state(const State& s, int g, int n, const ApproxOptions& opts) {
  State out;
  out.split = s.split;
  out.words.reserve(s.words.size());
  for (const auto& x : s.words) {
    out.words.push_back(conjugate_by_letter(x, g, n, opts));
    out.total += out.words.back().size();
  }
  return out;
}

State initial_state(const BraidTuple& a, const BraidTuple& b, const ApproxOptions& opts) {
  State s;
  s.split = a.size();
  for (const auto* t : {&a, &b}) {
    for (const auto& w : *t) {
      s.words.push_back(shorten(w.letters(), w.strands(), opts));
      s.total += s.words.back().size();
    }
  }
  return s;
}

int strands_of(const BraidTuple& a, const BraidTuple& b) {
  if (!a.empty()) return a.front().strands();
  if (!b.empty()) return b.front().strands();
  throw std::invalid_argument("attack: both tuples are empty");
}

struct Child {
  int letter;
  State state;
  bool separated;
};

std::vector<Child> expand(const State& s, int n, const ApproxOptions& opts) {
  std::vector<Child> out;
  for (int g : letter_order(n)) {
    State c = conjugate_state(s, g, n, opts);
    const bool sep = separated(c);
    out.push_back(Child{g, std::move(c), sep});
  }
  return out;
}

// First child (in letter order) with the smallest total, optionally among
// separated children only.
const Child* best_child(const std::vector<Child>& children, bool separated_only) {
  const Child* best = nullptr;
  for (const auto& c : children) {
    if (separated_only && !c.separated) continue;
    if (!best || c.state.total < best->state.total) best = &c;
  }
  return best;
}

// Order-free identity of a state: sorted normal-form keys of each side.
std::string state_key(const State& s, int n) {
  std::string key;
  for (auto [from, to] : {std::pair{std::size_t{0}, s.split}, std::pair{s.split, s.words.size()}}) {
    std::vector<std::string> side;
    for (std::size_t k = from; k < to; ++k) side.push_back(normal_form(BraidWord(n, s.words[k])).key());
    std::sort(side.begin(), side.end());
    for (auto& e : side) {
      key += e;
      key += ';';
    }
    key += '|';
  }
  return key;
}

Letters prepend(int g, const Letters& c) {
  Letters out;
  out.reserve(c.size() + 1);
  out.push_back(g);
  out.insert(out.end(), c.begin(), c.end());
  free_reduce_in_place(out);
  return out;
}

BraidTuple to_tuple(const State& s, std::size_t from, std::size_t to, int n) {
  BraidTuple t;
  for (std::size_t k = from; k < to; ++k) t.emplace_back(n, s.words[k]);
  return t;
}

ConjugatorSearch success(const Letters& c, const State& s, int n, SearchStats stats) {
  ConjugatorSearch r;
  r.z_prime = BraidWord(n, c);
  r.a = to_tuple(s, 0, s.split, n);
  r.b = to_tuple(s, s.split, s.words.size(), n);
  r.stats = std::move(stats);
  return r;
}

ConjugatorSearch failure(std::string why, SearchStats stats) {
  ConjugatorSearch r;
  r.failure = std::move(why);
  r.stats = std::move(stats);
  return r;
}

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// Shared descent loop of the two greedy variants.
ConjugatorSearch descend(const BraidTuple& a, const BraidTuple& b, const AttackCaps& caps, bool stop_when_separated) {
  const int n = strands_of(a, b);
  const auto t0 = Clock::now();
  State cur = initial_state(a, b, caps.approx);
  Letters c;
  SearchStats stats;
  for (;;) {
    if (stop_when_separated && separated(cur)) return success(c, cur, n, stats);
    if (stats.expansions >= caps.max_expansions || seconds_since(t0) > caps.max_seconds) {
      stats.cap_hit = true;
      return failure("cap exceeded", stats);
    }
    ++stats.iterations;
    ++stats.expansions;
    auto children = expand(cur, n, caps.approx);
    if (stop_when_separated) {
      if (const Child* sep = best_child(children, true)) return success(prepend(sep->letter, c), sep->state, n, stats);
    }
    const Child* next = best_child(children, false);
    if (next->state.total >= cur.total) {
      // Local minimum: no one-letter conjugation shortens the tuples.
      if (!stop_when_separated && separated(cur)) return success(c, cur, n, stats);
      return failure("local minimum", stats);
    }
    c = prepend(next->letter, c);
    cur = std::move(const_cast<Child*>(next)->state);
  }
}

}  // namespace

DeltaRecovery recover_delta_power(const BraidWord& w, const ApproxOptions& opts) {
  const int n = w.strands();
  const BraidWord up = delta_squared_power(n, 1);
  const BraidWord down = invert(up);
  Letters u = shorten(w.letters(), n, opts);
  int power = 0;
  auto times = [&](const BraidWord& d) {
    Letters x = d.letters();
    x.insert(x.end(), u.begin(), u.end());
    return shorten(x, n, opts);
  };
  for (;;) {
    Letters lower = times(down);
    if (lower.size() < u.size()) {
      u = std::move(lower);
      ++power;
      continue;
    }
    Letters higher = times(up);
    if (higher.size() < u.size()) {
      u = std::move(higher);
      --power;
      continue;
    }
    break;
  }
  return DeltaRecovery{BraidWord(n, std::move(u)), power};
}

ConjugatorSearch recover_conjugator_greedy(const BraidTuple& a, const BraidTuple& b, const AttackCaps& caps) {
  return descend(a, b, caps, true);
}

ConjugatorSearch recover_conjugator_ii(const BraidTuple& a, const BraidTuple& b, const AttackCaps& caps) {
  return descend(a, b, caps, false);
}

ConjugatorSearch recover_conjugator_backtracking(const BraidTuple& a, const BraidTuple& b, const AttackCaps& caps) {
  const int n = strands_of(a, b);
  const auto t0 = Clock::now();
  SearchStats stats;

  constexpr std::size_t kRoot = std::numeric_limits<std::size_t>::max();
  struct Node {
    Letters c;
    std::size_t parent;  // index into `expanded`, kRoot for the root
    int letter;
    std::size_t total;
  };
  struct Entry {
    std::size_t total;
    std::size_t order;
    bool operator>(const Entry& o) const { return total != o.total ? total > o.total : order > o.order; }
  };

  State root = initial_state(a, b, caps.approx);
  if (separated(root)) return success({}, root, n, stats);

  std::vector<Node> nodes;
  std::vector<State> expanded;
  std::vector<std::size_t> expanded_node;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> frontier;
  std::unordered_set<std::string> visited;

  nodes.push_back(Node{{}, kRoot, 0, root.total});
  frontier.push(Entry{root.total, 0});
  visited.insert(state_key(root, n));
  std::size_t last_expanded_node = kRoot;

  while (!frontier.empty()) {
    if (stats.expansions >= caps.max_expansions || seconds_since(t0) > caps.max_seconds) {
      stats.cap_hit = true;
      return failure("cap exceeded", stats);
    }
    const Entry top = frontier.top();
    frontier.pop();
    const Node node = nodes[top.order];
    State state = node.parent == kRoot && node.c.empty()
                      ? root
                      : conjugate_state(expanded[node.parent], node.letter, n, caps.approx);
    const bool child_of_last = node.parent != kRoot && expanded_node[node.parent] == last_expanded_node;
    if (stats.expansions > 0 && !child_of_last) ++stats.backtracks;
    last_expanded_node = top.order;

    ++stats.expansions;
    ++stats.iterations;
    stats.popped_totals.push_back(state.total);
    stats.frontier_minima.push_back(frontier.empty() ? std::numeric_limits<std::size_t>::max() : frontier.top().total);
    auto children = expand(state, n, caps.approx);
    if (const Child* sep = best_child(children, true)) return success(prepend(sep->letter, node.c), sep->state, n, stats);

    const std::size_t here = expanded.size();
    expanded.push_back(std::move(state));
    expanded_node.push_back(top.order);
    for (const auto& child : children) {
      if (!visited.insert(state_key(child.state, n)).second) continue;
      Letters c = prepend(child.letter, node.c);
      nodes.push_back(Node{std::move(c), here, child.letter, child.state.total});
      frontier.push(Entry{child.state.total, nodes.size() - 1});
    }
  }
  return failure("search space exhausted", stats);
}

bool verify_separating_conjugator(const BraidTuple& w_pub, const BraidTuple& v_pub, std::span<const int> powers_w,
                                  std::span<const int> powers_v, const BraidWord& z_prime,
                                  const ApproxOptions& opts) {
  if (powers_w.size() != w_pub.size() || powers_v.size() != v_pub.size())
    throw std::invalid_argument("verify: power count mismatch");
  // Two independent rewritings of z' (Delta^{-2p} pub) z'^{-1}: whole-word
  // shortening, and conjugation one letter of z' at a time.
  auto normalize = [&](const BraidTuple& pub, std::span<const int> powers, bool stepwise) {
    BraidTuple out;
    for (std::size_t k = 0; k < pub.size(); ++k) {
      const int n = pub[k].strands();
      const auto shifted = mult(delta_squared_power(n, -powers[k]), pub[k]);
      if (!stepwise) {
        out.push_back(conjugate(shifted, z_prime));
        continue;
      }
      Letters x = shorten(shifted.letters(), n, opts);
      const auto& zl = z_prime.letters();
      for (auto it = zl.rbegin(); it != zl.rend(); ++it) x = conjugate_by_letter(x, *it, n, opts);
      out.emplace_back(n, std::move(x));
    }
    return out;
  };
  if (is_separated(normalize(w_pub, powers_w, true), normalize(v_pub, powers_v, true), opts)) return true;
  return is_separated(normalize(w_pub, powers_w, false), normalize(v_pub, powers_v, false), opts);
}

AttackOutcome full_attack(const BraidTuple& w_pub, const BraidTuple& v_pub, Strategy strategy,
                          const AttackCaps& caps) {
  AttackOutcome out;
  out.strategy = strategy;
  const auto t0 = Clock::now();

  BraidTuple a, b;
  for (const auto& w : w_pub) {
    auto r = recover_delta_power(w, caps.approx);
    out.delta_powers_w.push_back(r.power);
    a.push_back(std::move(r.word));
  }
  for (const auto& v : v_pub) {
    auto r = recover_delta_power(v, caps.approx);
    out.delta_powers_v.push_back(r.power);
    b.push_back(std::move(r.word));
  }

  ConjugatorSearch search;
  switch (strategy) {
    case Strategy::kGreedy:
      search = recover_conjugator_greedy(a, b, caps);
      break;
    case Strategy::kBacktracking:
      search = recover_conjugator_backtracking(a, b, caps);
      break;
    case Strategy::kVariantII:
      search = recover_conjugator_ii(a, b, caps);
      break;
  }
  out.wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  out.iterations = search.stats.iterations;
  out.backtracks = search.stats.backtracks;
  if (!search.z_prime) {
    out.failure = "conjugator search: " + search.failure;
    return out;
  }
  out.z_prime = search.z_prime;
  out.separated = verify_separating_conjugator(w_pub, v_pub, out.delta_powers_w, out.delta_powers_v, *out.z_prime,
                                               caps.approx);
  if (!out.separated) out.failure = "verification: conjugated published words are not separated";
  return out;
}

void score_against_witness(AttackOutcome& outcome, const TTPInstance& inst) {
  int errors = 0;
  for (std::size_t k = 0; k < outcome.delta_powers_w.size() && k < inst.delta_sq_w.size(); ++k)
    if (outcome.delta_powers_w[k] != inst.delta_sq_w[k]) ++errors;
  for (std::size_t k = 0; k < outcome.delta_powers_v.size() && k < inst.delta_sq_v.size(); ++k)
    if (outcome.delta_powers_v[k] != inst.delta_sq_v[k]) ++errors;
  outcome.delta_errors = errors;
  outcome.exact_z = false;
  if (outcome.z_prime) {
    const auto nf = normal_form(*outcome.z_prime);
    outcome.exact_z = nf == normal_form(inst.z) || nf == normal_form(invert(inst.z));
  }
}

}  // namespace cbkap
