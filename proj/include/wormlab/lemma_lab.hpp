#pragma once

// Instance checkers for the worm, tree-ordinal and Hardy lemmas, seeded
// random sweeps over them, and a brute-force battle oracle.

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "wormlab/budget.hpp"
#include "wormlab/hierarchy.hpp"
#include "wormlab/ordinal.hpp"
#include "wormlab/tree_ordinal.hpp"
#include "wormlab/worm.hpp"

namespace wormlab {

/// `unknown` means a budget ran out; `skipped` means a precondition of the
/// lemma does not hold for the instance.
enum class Verdict { pass, fail, unknown, skipped };

std::string to_string(Verdict v);

struct CheckReport {
  std::string lemma;
  std::string instance;
  Verdict verdict = Verdict::skipped;
  std::map<std::string, std::string> witnesses;
  /// Per-instance values that must agree across a sweep (e.g. a shift).
  std::map<std::string, std::int64_t> fitted;
  std::uint64_t seed = 0;
  std::vector<CheckReport> parts;
};

/// fail > unknown > pass > skipped.
Verdict combine(Verdict a, Verdict b);

/// Plain step_down simulation keeping every worm.
struct OracleBattle {
  std::vector<Worm> worms;
  std::optional<std::uint64_t> death_step;
};
OracleBattle brute_force_battle(const Worm& a, std::uint64_t first_index, std::uint64_t max_steps,
                                std::size_t max_length = 1 << 20);

CheckReport check_battle_oracle(const Worm& a, const Budget& budget);
CheckReport check_stepdown_descent(const Worm& a, std::uint64_t k);
CheckReport check_tau_naturality(const Worm& a, std::uint64_t x);
/// h_A(x) + x + c = h_{tau(A)}(x+1); c is reported as a fitted constant.
CheckReport check_bridge(const Worm& a, std::uint64_t x, const Budget& budget);
/// h_{B0A}(n) = h_A(n + h_B(n) + 2) + h_B(n) + 1 + shift (shift fitted)
/// and h_{B0A}(n) > h_A(h_B(n)).
CheckReport check_composition(const Worm& b, const Worm& a, std::uint64_t n, const Budget& budget);
/// h_{1A}(n) > h_A^(n)(n) for A with all entries >= 1.
CheckReport check_growth(const Worm& a, std::uint64_t n, const Budget& budget);
/// h_11(n) > 2n, h_111(n) > 2^n, h_1111(n) > 2^n_n.
CheckReport check_superexp_growth(std::uint64_t n, const Budget& budget);
/// Some worm of A[[m]][[m+1]]... (A itself included) equals B.
CheckReport check_reach(const Worm& a, const Worm& b, std::uint64_t m, const Budget& budget);
/// check_reach plus: B[[j]] is reached for every j <= m.
CheckReport check_reach_initial(const Worm& a, const Worm& b, std::uint64_t m, const Budget& budget);
/// h_B(x) <= h_A(y) when B is sub_y of A and x <= y.
CheckReport check_monotonicity(const Worm& a, const Worm& b, std::uint64_t x, std::uint64_t y,
                               const Budget& budget);

/// Cr(t[x]) <= Cr(t).
CheckReport check_cr_step(const TreeOrdinal& t, std::uint64_t x);
/// a < b, x >= 2, Na <= Nb + x - 2 imply a <= b[x]; for limit b also
/// a < b[x] and Na <= N(b[x]) + x - 2.
CheckReport check_norm_bound(const Ordinal& a, const Ordinal& b, std::uint64_t x);
/// For x >= 2, with y = x + Cr(t): o(t[x]) <= o(t)[y] and
/// N(o(t[x])) <= N(o(t)[y]) + y - 2.
CheckReport check_norm_step(const TreeOrdinal& t, std::uint64_t x);
/// t R~ u implies t[[x]] R u[x].
CheckReport check_r_step(const TreeOrdinal& t, const TreeOrdinal& u, std::uint64_t x);
/// For limits t R~ u and x >= 1:
/// N(t[[x]]) - N(u[x]) <= N(t[x]) - N(u[x]) + x <= x(Nt - Nu + 1).
CheckReport check_norm_difference(const TreeOrdinal& t, const TreeOrdinal& u, std::uint64_t x);
/// 2x <= H_{w^s}(x) (x > 0, s != 0) and 2^z x <= H_{w^s[z]}(x) (z > 1, s >= 2).
CheckReport check_doubling(const Ordinal& s, std::uint64_t x, std::uint64_t z, const Budget& budget);
/// H_{t[x]}(2^c (x+c)) <= H_t(x+c) for t = s + w^r, o(r) >= 2, c >= 1.
CheckReport check_drop(const TreeOrdinal& t, std::uint64_t x, std::uint64_t c, const Budget& budget);
/// All tree lemmas applicable to (t, u, x, c), one part each.
CheckReport check_tree_lemmas(const TreeOrdinal& t, const TreeOrdinal& u, std::uint64_t x, std::uint64_t c,
                              const Budget& budget);

/// o(t) <= b, n + N(o(t)) - Nb <= m - 2, n + Cr(t) < m - 2 imply
/// H_t(n) <= H_b(m).
CheckReport check_h_comparison(const TreeOrdinal& t, const Ordinal& b, std::uint64_t n, std::uint64_t m,
                               const Budget& budget);
/// m >= n + 2 implies h_t(n) <= H_t(m).
CheckReport check_h_vs_H(const TreeOrdinal& t, std::uint64_t n, std::uint64_t m, const Budget& budget);
CheckReport check_hardy_theorems(const TreeOrdinal& t, const Ordinal& b, std::uint64_t n, std::uint64_t m,
                                 const Budget& budget);

/// collapsed_hardy and H on the canonical tree agree with hardy_ord.
CheckReport check_evaluators(const Ordinal& alpha, std::uint64_t x, const Budget& budget);
/// F_a(x) <= H_{w^(3+a)}(x+3) <= F_a(x+4); passes when no leg fails and at
/// least one inequality is verified.
CheckReport check_fh_sandwich(const Ordinal& alpha, std::uint64_t x, const Budget& budget);

// Instance generators. Sizes follow the sweep defaults: worms of length
// <= 8, trees of depth <= 4, arguments <= 6.
using Rng = std::mt19937_64;
Worm random_worm(Rng& rng, std::size_t max_length, std::uint64_t max_entry, bool allow_top = true);
/// Entries drawn from 0..max_natural and w..w+max_offset.
Worm random_transfinite_worm(Rng& rng, std::size_t max_length, std::uint64_t max_natural,
                             std::uint64_t max_offset);
TreeOrdinal random_tree(Rng& rng, unsigned depth, std::size_t max_summands = 3);
/// A random u with t R u (or t R~ u when `end_agreeable`).
TreeOrdinal random_reduct(Rng& rng, const TreeOrdinal& t, bool end_agreeable);
Ordinal random_ordinal(Rng& rng, unsigned depth, std::size_t max_terms = 3, std::uint64_t max_coefficient = 3);

enum class ExecutionPolicy { serial, parallel };

struct SweepReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::uint64_t count = 0;
  Budget budget;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  std::uint64_t unknown = 0;
  std::uint64_t skipped = 0;
  /// Most frequent value of each fitted quantity.
  std::map<std::string, std::int64_t> constants;
  /// Every observed value of each fitted quantity, with multiplicity.
  std::map<std::string, std::map<std::int64_t, std::uint64_t>> observed;
  std::vector<CheckReport> failures;

  friend bool operator==(const SweepReport&, const SweepReport&) = default;
};

inline bool operator==(const CheckReport& a, const CheckReport& b) {
  return a.lemma == b.lemma && a.instance == b.instance && a.verdict == b.verdict && a.witnesses == b.witnesses &&
         a.fitted == b.fitted && a.seed == b.seed && a.parts == b.parts;
}

/// Known suite identifiers, in a fixed order.
const std::vector<std::string>& suite_names();

/// Generates and checks one instance of `suite` from its own seed.
/// Throws std::invalid_argument on an unknown suite.
CheckReport run_instance(const std::string& suite, std::uint64_t instance_seed, const Budget& budget);

/// Seed of the i-th instance of a sweep.
std::uint64_t instance_seed(std::uint64_t sweep_seed, std::uint64_t i);

/// Tallies verdicts and fits constants: each fitted quantity takes its most
/// frequent value (ties to the smallest) and passing reports that disagree
/// with it become failures.
SweepReport aggregate(const std::string& suite, std::vector<CheckReport> reports, std::uint64_t seed,
                      const Budget& budget);

SweepReport sweep(const std::string& suite, std::uint64_t count, std::uint64_t seed, const Budget& budget,
                  ExecutionPolicy policy = ExecutionPolicy::parallel);

/// Runs one checker on explicit arguments: worms A, B; trees t, u; ordinals
/// a, b, s as term text; naturals k, x, y, n, m, c, z. Field names follow the
/// checker signatures above; suite names plus tree_lemmas and hardy_theorems
/// are accepted. Throws std::invalid_argument on an unknown lemma or a
/// missing field, ParseError on malformed term text.
CheckReport check_instance(const std::string& lemma, const nlohmann::json& instance, const Budget& budget);

nlohmann::json to_json(const CheckReport& report);
nlohmann::json to_json(const SweepReport& report);
void write_text(std::ostream& out, const SweepReport& report);

}  // namespace wormlab
