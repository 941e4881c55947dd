// Acceptance suite: one PASS/FAIL line per criterion.
// Usage: wormlab_acceptance [criterion ...]   (default: all)

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "wormlab/battle.hpp"
#include "wormlab/hierarchy.hpp"
#include "wormlab/lemma_lab.hpp"

using namespace wormlab;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Traces {
  std::vector<BattleTrace> battles;
  std::vector<EvalTrace> evals;
};

constexpr std::uint64_t kTracedSteps = 10'000;

Ordinal cnf(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  std::vector<CnfTerm> terms;
  if (a) terms.push_back({Ordinal(2), a});
  if (b) terms.push_back({Ordinal(1), b});
  if (c) terms.push_back({Ordinal(0), c});
  return Ordinal::from_terms(std::move(terms));
}

std::string histogram(const std::map<std::int64_t, std::uint64_t>& h) {
  std::string out;
  for (const auto& [v, n] : h) out += (out.empty() ? "" : ", ") + std::to_string(v) + " x" + std::to_string(n);
  return out;
}

std::string counts(const SweepReport& r) {
  return "pass " + std::to_string(r.passed) + ", fail " + std::to_string(r.failed) + ", unknown " +
         std::to_string(r.unknown) + ", skipped " + std::to_string(r.skipped);
}

std::string first_failure(const SweepReport& r) {
  if (r.failures.empty()) return "";
  const CheckReport& f = r.failures.front();
  std::string out = "; first counterexample " + f.instance;
  for (const auto& [k, v] : f.witnesses) out += " " + k + "=" + v;
  return out;
}

// All worms with entries <= max_entry and length <= max_length, T first.
std::vector<Worm> all_worms(std::uint64_t max_entry, std::size_t max_length) {
  std::vector<Worm> out{Worm()};
  std::vector<std::vector<Ordinal>> layer{{}};
  for (std::size_t len = 1; len <= max_length; ++len) {
    std::vector<std::vector<Ordinal>> next;
    for (const auto& prefix : layer) {
      for (std::uint64_t e = 0; e <= max_entry; ++e) {
        auto es = prefix;
        es.emplace_back(e);
        out.emplace_back(es);
        next.push_back(std::move(es));
      }
    }
    layer = std::move(next);
  }
  return out;
}

// 1. Battle death steps against the brute-force oracle.
Outcome battles(Traces& traces) {
  const std::vector<std::pair<Worm, std::uint64_t>> golden{{Worm::of({0}), 1},
                                                           {Worm::of({1}), 3},
                                                           {Worm::of({0, 0}), 2},
                                                           {Worm::of({2}), 51},
                                                           {parse_worm("w"), 5}};
  Outcome out;
  for (const auto& [a, m] : golden) {
    BattleTrace t = battle(a, Budget{});
    const OracleBattle oracle = brute_force_battle(a, 1, 1000);
    bool same = t.death_step == oracle.death_step && t.death_step == m;
    for (const auto& r : t.records) same = same && r.worm && *r.worm == oracle.worms[r.step];
    out.detail += (out.detail.empty() ? "" : ", ") + a.to_string() + " -> m=" +
                  (t.death_step ? std::to_string(*t.death_step) : "budget");
    if (!same) {
      out.pass = false;
      out.detail += " (expected " + std::to_string(m) + ", oracle " +
                    (oracle.death_step ? std::to_string(*oracle.death_step) : "budget") + ")";
    }
    traces.battles.push_back(std::move(t));
  }
  return out;
}

// 2. h_1(n) = n + 1.
Outcome h_one(Traces& traces) {
  Outcome out;
  std::uint64_t bad = 0;
  for (std::uint64_t n = 0; n <= 200; ++n) {
    BattleTrace t;
    const Evaluation e = hardy_worm(Worm::of({1}), n, Budget{}, std::nullopt, &t);

    if (!e.value || *e.value != Natural(static_cast<unsigned long>(n + 1))) {
      if (bad++ == 0) out.detail = "first mismatch at n=" + std::to_string(n) + ": " + (e.value ? e.value->get_str() : "budget");
      out.pass = false;
    }
    traces.battles.push_back(std::move(t));
  }
  if (out.pass) out.detail = "h_1(n) = n+1 for n = 0..200";
  return out;
}

Outcome all_pass_sweep(const std::string& suite, std::uint64_t count, std::uint64_t seed) {
  const SweepReport r = sweep(suite, count, seed, Budget{});
  return {r.passed == count, suite + " seed " + std::to_string(seed) + ": " + counts(r) + first_failure(r)};
}

// 5. One constant c over all worms with entries <= 1, length <= 3, x <= 3.
Outcome bridge(Traces&) {
  std::vector<CheckReport> reports;
  for (const Worm& a : all_worms(1, 3)) {
    for (std::uint64_t x = 0; x <= 3; ++x) reports.push_back(check_bridge(a, x, Budget{}));
  }
  const SweepReport r = aggregate("bridge", std::move(reports), 0, Budget{});
  const bool constant = r.observed.count("c") && r.observed.at("c").size() == 1;
  const std::int64_t c = r.constants.count("c") ? r.constants.at("c") : 0;
  Outcome out;
  out.pass = r.failed == 0 && r.unknown == 0 && constant && (c == 1 || c == 2);
  out.detail = "fitted c* = " + std::to_string(c) + " (observed: " +
               (r.observed.count("c") ? histogram(r.observed.at("c")) : "none") + "); " + counts(r) + first_failure(r);
  return out;
}

// 6. One global shift and the strict inequality over B, A in {T, 0, 1, 00, 01}.
Outcome composition(Traces&) {
  const std::vector<Worm> worms{Worm(), Worm::of({0}), Worm::of({1}), Worm::of({0, 0}), Worm::of({0, 1})};
  std::vector<CheckReport> reports;
  for (const Worm& b : worms) {
    for (const Worm& a : worms) {
      for (std::uint64_t n = 0; n <= 4; ++n) reports.push_back(check_composition(b, a, n, Budget{}));
    }
  }
  const SweepReport r = aggregate("composition", std::move(reports), 0, Budget{});
  const std::int64_t shift = r.constants.count("shift") ? r.constants.at("shift") : 0;
  Outcome out;
  out.pass = r.failed == 0 && r.unknown == 0;
  out.detail = "fitted shift = " + std::to_string(shift) + " (observed: " +
               (r.observed.count("shift") ? histogram(r.observed.at("shift")) : "none") + "); " + counts(r) +
               first_failure(r);
  return out;
}

// 7. h_11(n) > 2n (n <= 4), h_111(n) > 2^n (n <= 2), h_1111(0); never fail.
Outcome growth(Traces&) {
  Outcome out;
  std::uint64_t verified = 0;
  std::uint64_t unknown = 0;
  for (std::uint64_t n = 0; n <= 4; ++n) {
    const CheckReport r = check_superexp_growth(n, Budget{});
    for (const CheckReport& leg : r.parts) {
      const bool required = (leg.lemma == "h_11(n)>2n") || (leg.lemma == "h_111(n)>2^n" && n <= 2) ||
                            (leg.lemma == "h_1111(n)>2^n_n" && n == 0);
      if (leg.verdict == Verdict::fail || (required && leg.verdict != Verdict::pass)) {
        out.pass = false;
        out.detail += leg.lemma + " at n=" + std::to_string(n) + " is " + to_string(leg.verdict) + "; ";
      }
      verified += leg.verdict == Verdict::pass;
      unknown += leg.verdict == Verdict::unknown;
    }
  }
  out.detail += std::to_string(verified) + " legs verified, " + std::to_string(unknown) + " budget-unknown, 0 fail";
  if (!out.pass) out.detail = "failed: " + out.detail;
  return out;
}

// 8. Tree-ordinal lemma sweeps.
Outcome tree_lemmas(Traces&) {
  Outcome out;
  for (const char* suite : {"cr_step", "norm_bound", "norm_step", "r_step", "norm_difference"}) {
    const SweepReport r = sweep(suite, 1000, 42, Budget{});
    if (r.passed != 1000) out.pass = false;
    out.detail += std::string(out.detail.empty() ? "" : "; ") + suite + " " + std::to_string(r.passed) + "/1000" +
                  first_failure(r);
  }
  return out;
}

// Tree terms: up to three summands from {1, w, w^(1+1)}.
std::vector<TreeOrdinal> small_trees() {
  const std::vector<TreeOrdinal> pieces{TreeOrdinal(), TreeOrdinal::units(1), TreeOrdinal::units(2)};
  std::vector<TreeOrdinal> out{TreeOrdinal()};
  std::vector<std::vector<TreeOrdinal>> layer{{}};
  for (int len = 1; len <= 3; ++len) {
    std::vector<std::vector<TreeOrdinal>> next;
    for (const auto& prefix : layer) {
      for (const auto& e : pieces) {
        auto es = prefix;
        es.push_back(e);
        out.push_back(TreeOrdinal::from_exponents(es));
        next.push_back(std::move(es));
      }
    }
    layer = std::move(next);
  }
  return out;
}

// 9. Hardy theorems on the grid, the doubling identity and the drop instance.
Outcome hardy_theorems(Traces& traces) {
  const Ordinal limit = Ordinal::omega_power(Ordinal(2), 3);
  Budget grid_budget;
  grid_budget.max_steps = 100'000;
  std::vector<TreeOrdinal> trees;
  for (const auto& t : small_trees()) {
    if (collapse(t) <= limit) trees.push_back(t);
  }
  std::vector<Ordinal> betas;
  betas.push_back(limit);
  for (std::uint64_t a = 0; a <= 2; ++a) {
    for (std::uint64_t b = 0; b <= 2; ++b) {
      for (std::uint64_t c = 0; c <= 2; ++c) betas.push_back(cnf(a, b, c));
    }
  }
  std::vector<CheckReport> comparison;
  std::vector<CheckReport> versus;
  for (const auto& t : trees) {
    for (std::uint64_t n = 0; n <= 4; ++n) {
      for (std::uint64_t m = n + 2; m <= 10; ++m) versus.push_back(check_h_vs_H(t, n, m, grid_budget));
      for (const auto& beta : betas) {
        for (std::uint64_t m = 0; m <= 10; ++m) {
          CheckReport r = check_h_comparison(t, beta, n, m, grid_budget);
          if (r.verdict != Verdict::skipped) comparison.push_back(std::move(r));
        }
      }
    }
  }
  const SweepReport hc = aggregate("h_comparison", std::move(comparison), 0, grid_budget);
  const SweepReport hv = aggregate("h_vs_H", std::move(versus), 0, grid_budget);

  Outcome out;
  out.pass = hc.failed == 0 && hv.failed == 0;
  out.detail = "H-comparison grid: " + counts(hc) + first_failure(hc) + "; h-vs-H grid: " + counts(hv) +
               first_failure(hv);

  std::uint64_t doubling_bad = 0;
  for (std::uint64_t z = 0; z <= 5; ++z) {
    for (std::uint64_t x = 0; x <= 6; ++x) {
      EvalTrace t;
      const Evaluation e = hardy_ord(fund_seq(Ordinal::omega_power(Ordinal(2)), z), x, Budget{}, &t);
      if (!e.value || *e.value != Natural(static_cast<unsigned long>((std::uint64_t{1} << z) * x))) ++doubling_bad;
      traces.evals.push_back(std::move(t));
    }
  }
  out.detail += "; doubling H_w^2[z](x) = 2^z x mismatches: " + std::to_string(doubling_bad);
  if (doubling_bad) out.pass = false;

  EvalTrace lhs_trace;
  EvalTrace rhs_trace;
  const Evaluation lhs = hardy_ord(Ordinal::omega_power(Ordinal(1), 2), 6, Budget{}, &lhs_trace);
  const Evaluation rhs = hardy_ord(Ordinal::omega_power(Ordinal(2)), 3, Budget{}, &rhs_trace);
  const CheckReport drop = check_drop(TreeOrdinal::omega_power(TreeOrdinal::units(2)), 2, 1, Budget{});
  const bool drop_ok = lhs.value == Natural(24) && rhs.value == Natural(24) && drop.verdict == Verdict::pass;
  out.detail += std::string("; drop H_w*2(6) = ") + (lhs.value ? lhs.value->get_str() : "budget") + ", H_w^2(3) = " +
                (rhs.value ? rhs.value->get_str() : "budget") + ", tree checker " + to_string(drop.verdict);
  if (!drop_ok) out.pass = false;
  traces.evals.push_back(std::move(lhs_trace));
  traces.evals.push_back(std::move(rhs_trace));
  return out;
}

// 10. collapsed_hardy = hardy_ord for w^2 a + w b + c (a, b, c <= 6) and w^3,
// x <= 6, wherever the step evaluator finishes within 10^6 steps.
Outcome evaluators(Traces& traces) {
  Budget budget;
  budget.max_steps = 1'000'000;
  std::vector<Ordinal> alphas{Ordinal::omega_power(Ordinal(3))};
  for (std::uint64_t a = 0; a <= 6; ++a) {
    for (std::uint64_t b = 0; b <= 6; ++b) {
      for (std::uint64_t c = 0; c <= 6; ++c) alphas.push_back(cnf(a, b, c));
    }
  }
  std::uint64_t compared = 0;
  std::uint64_t mismatched = 0;
  std::uint64_t out_of_budget = 0;
  std::string first;
  for (const Ordinal& alpha : alphas) {
    for (std::uint64_t x = 0; x <= 6; ++x) {
      const Evaluation step = hardy_ord(alpha, x, budget);
      if (!step.value) {
        // The step count grows with x, so larger arguments are out of budget too.
        out_of_budget += 7 - x;
        break;
      }
      ++compared;
      const Evaluation fast = collapsed_hardy(alpha, Natural(static_cast<unsigned long>(x)), Budget{});
      if (fast.value != step.value) {
        if (mismatched++ == 0) first = alpha.to_string() + " x=" + std::to_string(x);
      }
      if (step.steps <= kTracedSteps) {
        EvalTrace trace;
        hardy_ord(alpha, x, budget, &trace);
        traces.evals.push_back(std::move(trace));
      }
    }
  }
  Outcome out;
  out.pass = mismatched == 0 && compared > 0;
  out.detail = std::to_string(compared) + " instances agree" + (mismatched ? ", " + std::to_string(mismatched) +
                                                                                 " mismatch (first " + first + ")"
                                                                           : std::string()) +
               ", " + std::to_string(out_of_budget) + " beyond 10^6 steps";
  return out;
}

// 11. F_0 values and budget-unknown for F_a(x), a >= 1, x >= 2.
Outcome fast_growing_values(Traces&) {
  Outcome out;
  Natural two256;
  mpz_setbit(two256.get_mpz_t(), 256);
  const Evaluation f1 = fast_growing(Ordinal(), Natural(1));
  const Evaluation f2 = fast_growing(Ordinal(), Natural(2));
  const Evaluation f3 = fast_growing(Ordinal(), Natural(3));
  out.pass = f1.value == Natural(2) && f2.value == Natural(16) && f3.value == two256;
  out.detail = "F_0(1) = " + (f1.value ? f1.value->get_str() : "budget") + ", F_0(2) = " +
               (f2.value ? f2.value->get_str() : "budget") + ", F_0(3) " + (f3.value == two256 ? "= 2^256" : "wrong");
  std::uint64_t unknown = 0;
  std::uint64_t total = 0;
  for (const Ordinal& a : {Ordinal(1), Ordinal(2), Ordinal::omega(), Ordinal::omega_power(Ordinal(2))}) {
    for (std::uint64_t x = 2; x <= 4; ++x) {
      ++total;
      unknown += fast_growing(a, Natural(static_cast<unsigned long>(x))).exceeded();
    }
  }
  if (unknown != total) out.pass = false;
  out.detail += "; F_a(x) for a in {1, 2, w, w^2}, x in 2..4: " + std::to_string(unknown) + "/" +
                std::to_string(total) + " budget-unknown";
  return out;
}

IndexTerm bump(const IndexTerm& index, std::uint64_t k) {
  if (const auto* a = std::get_if<Ordinal>(&index)) return add(*a, Ordinal(k));
  const auto& t = std::get<TreeOrdinal>(index);
  std::vector<TreeOrdinal> es(t.exponents().begin(), t.exponents().end());
  es.resize(es.size() + k);
  return TreeOrdinal::from_exponents(std::move(es));
}

bool has_positive_entry(const Worm& a) {
  for (const auto& e : a.entries()) {
    if (!e.is_zero()) return true;
  }
  return false;
}

// Single-field mutations of a trace.
bool mutate_and_validate(Rng& rng, const Traces& traces, std::string& what) {
  std::vector<const EvalTrace*> evals;
  for (const auto& t : traces.evals) {
    if (t.entries.size() >= 2) evals.push_back(&t);
  }
  std::vector<const BattleTrace*> battles;
  for (const auto& t : traces.battles) {
    if (t.records.size() >= 2 && has_positive_entry(t.initial)) battles.push_back(&t);
  }
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  if (pick(2) == 0) {
    EvalTrace t = *evals[pick(evals.size())];
    auto& e = t.entries[pick(t.entries.size())];
    switch (pick(5)) {
      case 0:
        e.argument += 1 + pick(3);
        what = "argument";
        break;
      case 1:
        e.step += 1 + pick(3);
        what = "step";
        break;
      case 2:
        e.index = bump(e.index, 1 + pick(2));
        what = "index";
        break;
      case 3:
        t.flavor = std::holds_alternative<Ordinal>(t.entries.front().index) ? Flavor::hardy_tree : Flavor::hardy_ordinal;
        what = "flavor";
        break;
      default:
        t.complete = !t.complete;
        what = "complete";
        break;
    }
    return validate_trace(t);
  }
  BattleTrace t = *battles[pick(battles.size())];
  auto& r = t.records[pick(t.records.size())];
  switch (pick(6)) {
    case 0:
      if (r.worm) {
        r.worm = prepend(Ordinal(pick(3)), *r.worm);
      } else {
        r.worm = Worm::of({pick(3)});
      }
      what = "worm";
      break;
    case 1:
      r.length += 1 + pick(3);
      what = "length";
      break;
    case 2:
      r.step += t.total_steps + 1;
      what = "record step";
      break;
    case 3:
      r.leading = r.leading ? std::optional<Ordinal>(add(*r.leading, Ordinal(1))) : std::optional<Ordinal>(Ordinal());
      what = "leading";
      break;
    case 4:
      t.death_step = t.death_step ? std::optional<std::uint64_t>(*t.death_step + 1) : std::optional<std::uint64_t>(0);
      what = "death step";
      break;
    default:
      t.first_index += 1 + pick(3);
      what = "first index";
      break;
  }
  return validate_trace(t);
}

}  // namespace

int main(int argc, char** argv) {
  struct Criterion {
    int id;
    const char* name;
    double limit_seconds;
    std::function<Outcome(Traces&)> run;
  };
  const std::vector<Criterion> criteria{
      {1, "battle golden values vs oracle", 1, battles},
      {2, "h_1(n) = n+1, n <= 200", 1, h_one},
      {3, "step-down descent sweep", 30, [](Traces&) { return all_pass_sweep("stepdown", 1000, 42); }},
      {4, "tau-naturality sweep", 10, [](Traces&) { return all_pass_sweep("tau_naturality", 1000, 7); }},
      {5, "bridge constancy", 30, bridge},
      {6, "composition lemma", 60, composition},
      {7, "growth corollaries", 120, growth},
      {8, "tree-ordinal lemma sweeps", 60, tree_lemmas},
      {9, "Hardy theorems, doubling, drop", 120, hardy_theorems},
      {10, "evaluator cross-validation", 60, evaluators},
      {11, "fast-growing values", 5, fast_growing_values},
      {12, "trace validity", 10, nullptr},
  };

  std::vector<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.push_back(std::atoi(argv[i]));
  if (wanted.empty()) {
    for (const auto& c : criteria) wanted.push_back(c.id);
  }

  bool all = true;
  for (int id : wanted) {
    if (id < 1 || id > static_cast<int>(criteria.size())) {
      std::cerr << "unknown criterion " << id << '\n';
      return 2;
    }
    const Criterion& c = criteria[static_cast<std::size_t>(id - 1)];
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    if (c.run) {
      Traces unused;
      outcome = c.run(unused);
    } else {
      Traces traces;
      for (const auto& other : criteria) {
        if (other.id == 1 || other.id == 2 || other.id == 9 || other.id == 10) other.run(traces);
      }
      std::uint64_t invalid = 0;
      for (const auto& t : traces.battles) invalid += !validate_trace(t);
      for (const auto& t : traces.evals) invalid += !validate_trace(t);
      Rng rng(2024);
      std::uint64_t undetected = 0;
      std::string what;
      std::string missed;
      for (int i = 0; i < 100; ++i) {
        if (mutate_and_validate(rng, traces, what)) {
          if (undetected++ == 0) missed = what;
        }
      }
      outcome.pass = invalid == 0 && undetected == 0;
      outcome.detail = std::to_string(traces.battles.size()) + " battle and " + std::to_string(traces.evals.size()) +
                       " evaluation traces, " + std::to_string(invalid) + " invalid; 100 mutations, " +
                       std::to_string(undetected) + " undetected" + (missed.empty() ? "" : " (first: " + missed + ")");
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds <= c.limit_seconds;
    const bool pass = outcome.pass && in_time;
    all = all && pass;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << "criterion " << c.id << " " << (pass ? "PASS" : "FAIL") << " [" << c.name << "] " << outcome.detail << " ("
         << seconds << " s, limit " << c.limit_seconds << " s" << (in_time ? "" : ", over time") << ")";
    std::cout << line.str() << std::endl;
  }
  return all ? 0 : 1;
}
