#include "wormlab/lemma_lab.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "wormlab/battle.hpp"

namespace wormlab {
namespace {

Natural nat(std::uint64_t v) {
  Natural out;
  mpz_import(out.get_mpz_t(), 1, -1, sizeof v, 0, 0, &v);
  return out;
}

std::optional<std::uint64_t> small(const Natural& v) {
  if (sgn(v) < 0 || mpz_sizeinbase(v.get_mpz_t(), 2) > 64) return std::nullopt;
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof out, 0, 0, v.get_mpz_t());
  return out;
}

std::string show(const Evaluation& e) {
  if (e.value) return e.value->get_str();
  return ">=" + e.lower_bound.get_str() + " (budget)";
}

std::string show(const Natural& v) {
  if (mpz_sizeinbase(v.get_mpz_t(), 2) > 256) return "2^" + std::to_string(mpz_sizeinbase(v.get_mpz_t(), 2) - 1) + "+";
  return v.get_str();
}

// small <= big, using lower bounds where a value is missing.
Verdict le(const Evaluation& lhs, const Evaluation& rhs) {
  if (lhs.value && rhs.value) return *lhs.value <= *rhs.value ? Verdict::pass : Verdict::fail;
  if (lhs.value && rhs.lower_bound >= *lhs.value) return Verdict::pass;
  if (rhs.value && lhs.lower_bound > *rhs.value) return Verdict::fail;
  return Verdict::unknown;
}

Verdict le(const Natural& lhs, const Evaluation& rhs) {
  if (rhs.value) return lhs <= *rhs.value ? Verdict::pass : Verdict::fail;
  return rhs.lower_bound >= lhs ? Verdict::pass : Verdict::unknown;
}

// lhs > rhs
Verdict gt(const Evaluation& lhs, const Natural& rhs) {
  if (lhs.value) return *lhs.value > rhs ? Verdict::pass : Verdict::fail;
  return lhs.lower_bound > rhs ? Verdict::pass : Verdict::unknown;
}

Verdict holds(bool b) { return b ? Verdict::pass : Verdict::fail; }

CheckReport make(std::string lemma, std::string instance) {
  CheckReport r;
  r.lemma = std::move(lemma);
  r.instance = std::move(instance);
  return r;
}

CheckReport skipped(CheckReport r, const std::string& why) {
  r.verdict = Verdict::skipped;
  r.witnesses["precondition"] = why;
  return r;
}

void combine_parts(CheckReport& r) {
  r.verdict = Verdict::skipped;
  for (const auto& p : r.parts) r.verdict = combine(r.verdict, p.verdict);
}

std::int64_t sdiff(std::uint64_t a, std::uint64_t b) { return static_cast<std::int64_t>(a) - static_cast<std::int64_t>(b); }

std::string w(const Worm& a) { return a.to_string(); }

Worm worm_of(std::initializer_list<std::uint64_t> es) { return Worm::of(es); }

std::optional<std::uint64_t> pow2_times(std::uint64_t z, std::uint64_t x) {
  if (z >= 63) return x == 0 ? std::optional<std::uint64_t>(0) : std::nullopt;
  const std::uint64_t p = std::uint64_t{1} << z;
  if (x != 0 && p > std::numeric_limits<std::uint64_t>::max() / x) return std::nullopt;
  return p * x;
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::unknown:
      return "budget-unknown";
    case Verdict::skipped:
      return "skipped";
  }
  return "?";
}

Verdict combine(Verdict a, Verdict b) {
  auto rank = [](Verdict v) {
    switch (v) {
      case Verdict::fail:
        return 3;
      case Verdict::unknown:
        return 2;
      case Verdict::pass:
        return 1;
      case Verdict::skipped:
        return 0;
    }
    return 0;
  };
  return rank(a) >= rank(b) ? a : b;
}

OracleBattle brute_force_battle(const Worm& a, std::uint64_t first_index, std::uint64_t max_steps,
                                std::size_t max_length) {
  OracleBattle out;
  out.worms.push_back(a);
  std::uint64_t step = 0;
  while (!out.worms.back().is_top()) {
    if (step >= max_steps) return out;
    Worm next = step_down(out.worms.back(), first_index + step);
    if (length(next) > max_length) return out;
    out.worms.push_back(std::move(next));
    ++step;
  }
  out.death_step = step;
  return out;
}

CheckReport check_battle_oracle(const Worm& a, const Budget& budget) {
  CheckReport r = make("battle_oracle", "A=" + w(a));
  constexpr std::uint64_t kOracleSteps = 20'000;
  constexpr std::size_t kOracleLength = 4096;
  Budget capped = budget;
  capped.max_steps = std::min(budget.max_steps, kOracleSteps);
  const BattleTrace trace = battle(a, capped);
  const OracleBattle oracle = brute_force_battle(a, 1, capped.max_steps, kOracleLength);
  r.witnesses["production"] = trace.death_step ? std::to_string(*trace.death_step) : "budget";
  r.witnesses["oracle"] = oracle.death_step ? std::to_string(*oracle.death_step) : "budget";
  if (!validate_trace(trace)) {
    r.verdict = Verdict::fail;
    r.witnesses["trace"] = "invalid";
    return r;
  }
  if (!oracle.death_step) {
    r.verdict = Verdict::unknown;
    return r;
  }
  if (trace.death_step != oracle.death_step) {
    r.verdict = Verdict::fail;
    return r;
  }
  for (const auto& rec : trace.records) {
    if (rec.worm && *rec.worm != oracle.worms[rec.step]) {
      r.verdict = Verdict::fail;
      r.witnesses["mismatch_step"] = std::to_string(rec.step);
      return r;
    }
  }
  r.verdict = Verdict::pass;
  return r;
}

CheckReport check_stepdown_descent(const Worm& a, std::uint64_t k) {
  CheckReport r = make("stepdown", "A=" + w(a) + " k=" + std::to_string(k));
  if (a.is_top()) return skipped(r, "A is T");
  if (!a.is_natural()) return skipped(r, "transfinite entry");
  const Worm next = step_down(a, k);
  const Ordinal before = worm_ordinal(a);
  const Ordinal after = worm_ordinal(next);
  r.witnesses["o(A)"] = before.to_string();
  r.witnesses["o(A[[k]])"] = after.to_string();
  r.verdict = holds(after < before);
  return r;
}

CheckReport check_tau_naturality(const Worm& a, std::uint64_t x) {
  CheckReport r = make("tau_naturality", "A=" + w(a) + " x=" + std::to_string(x));
  if (a.is_top()) return skipped(r, "A is T");
  if (!a.is_natural()) return skipped(r, "transfinite entry");
  const TreeOrdinal lhs = tau(step_down(a, x));
  const TreeOrdinal rhs = fs_worm(tau(a), x + 1);
  r.witnesses["tau(A[[x]])"] = lhs.to_string();
  r.witnesses["tau(A)[[x+1]]"] = rhs.to_string();
  r.verdict = holds(lhs == rhs);
  return r;
}

CheckReport check_bridge(const Worm& a, std::uint64_t x, const Budget& budget) {
  CheckReport r = make("bridge", "A=" + w(a) + " x=" + std::to_string(x));
  if (!a.is_natural()) return skipped(r, "transfinite entry");
  const Evaluation lhs = hardy_worm(a, x, budget);
  const Evaluation rhs = hardy_tree_wormstyle(tau(a), x + 1, budget);
  r.witnesses["h_A(x)"] = show(lhs);
  r.witnesses["h_tau(A)(x+1)"] = show(rhs);
  const auto l = lhs.value ? small(*lhs.value) : std::nullopt;
  const auto rv = rhs.value ? small(*rhs.value) : std::nullopt;
  if (!l || !rv) {
    r.verdict = Verdict::unknown;
    return r;
  }
  r.fitted["c"] = sdiff(*rv, *l) - static_cast<std::int64_t>(x);
  r.verdict = Verdict::pass;
  return r;
}

CheckReport check_composition(const Worm& b, const Worm& a, std::uint64_t n, const Budget& budget) {
  CheckReport r = make("composition", "B=" + w(b) + " A=" + w(a) + " n=" + std::to_string(n));
  const Worm joined = concat(b, prepend(Ordinal(0), a));
  const Evaluation hb = hardy_worm(b, n, budget);
  r.witnesses["h_B(n)"] = show(hb);
  const auto hbv = hb.value ? small(*hb.value) : std::nullopt;
  if (!hbv) {
    r.verdict = Verdict::unknown;
    return r;
  }
  const Evaluation inner = hardy_worm(a, *hbv, budget);
  r.witnesses["h_A(h_B(n))"] = show(inner);
  if (!inner.value) {
    r.verdict = Verdict::unknown;
    return r;
  }
  const Evaluation lhs = hardy_worm(joined, n, budget);
  r.witnesses["h_B0A(n)"] = show(lhs);
  const Verdict strict = gt(lhs, *inner.value);
  r.witnesses["strict"] = to_string(strict);
  if (strict == Verdict::fail) {
    r.verdict = Verdict::fail;
    return r;
  }
  const Evaluation shifted = hardy_worm(a, n + *hbv + 2, budget);
  r.witnesses["h_A(n+h_B(n)+2)"] = show(shifted);
  const auto lv = lhs.value ? small(*lhs.value) : std::nullopt;
  const auto sv = shifted.value ? small(*shifted.value) : std::nullopt;
  if (strict != Verdict::pass || !lv || !sv) {
    r.verdict = Verdict::unknown;
    return r;
  }
  r.fitted["shift"] = sdiff(*lv, *sv + *hbv + 1);
  r.verdict = Verdict::pass;
  return r;
}

CheckReport check_growth(const Worm& a, std::uint64_t n, const Budget& budget) {
  CheckReport r = make("growth", "A=" + w(a) + " n=" + std::to_string(n));
  if (!a.is_natural()) return skipped(r, "transfinite entry");
  for (const auto& e : a.entries()) {
    if (e.is_zero()) return skipped(r, "A has an entry 0");
  }
  std::uint64_t v = n;
  for (std::uint64_t i = 0; i < n; ++i) {
    const Evaluation e = hardy_worm(a, v, budget);
    const auto next = e.value ? small(*e.value) : std::nullopt;
    if (!next) {
      r.witnesses["h_A^(n)(n)"] = "budget";
      r.verdict = Verdict::unknown;
      return r;
    }
    v = *next;
  }
  r.witnesses["h_A^(n)(n)"] = std::to_string(v);
  if (v >= budget.max_steps) {
    r.verdict = Verdict::unknown;
    return r;
  }
  const Evaluation lhs = hardy_worm(prepend(Ordinal(1), a), n, budget, v + 1);
  r.witnesses["h_1A(n)"] = show(lhs);
  r.verdict = gt(lhs, nat(v));
  return r;
}

CheckReport check_superexp_growth(std::uint64_t n, const Budget& budget) {
  CheckReport r = make("superexp_growth", "n=" + std::to_string(n));
  auto leg = [&](const std::string& name, const Worm& worm, std::optional<Natural> bound) {
    CheckReport p = make(name, "n=" + std::to_string(n));
    const auto b = bound ? small(*bound) : std::nullopt;
    if (!b || *b >= budget.max_steps) {
      p.witnesses["bound"] = bound ? show(*bound) : "budget";
      p.verdict = Verdict::unknown;
      return p;
    }
    const Evaluation h = hardy_worm(worm, n, budget, *b + 1);
    p.witnesses["bound"] = std::to_string(*b);
    p.witnesses["h"] = show(h);
    p.verdict = gt(h, *bound);
    return p;
  };
  std::optional<Natural> two_n = nat(2) * nat(n);
  std::optional<Natural> pow = n < 64 ? std::optional<Natural>(nat(std::uint64_t{1} << n)) : std::nullopt;
  r.parts.push_back(leg("h_11(n)>2n", worm_of({1, 1}), two_n));
  r.parts.push_back(leg("h_111(n)>2^n", worm_of({1, 1, 1}), pow));
  r.parts.push_back(leg("h_1111(n)>2^n_n", worm_of({1, 1, 1, 1}), superexp(nat(n), n, budget)));
  combine_parts(r);
  return r;
}

namespace {

CheckReport reach_impl(const char* lemma, const Worm& a, const Worm& b, std::uint64_t m, const Budget& budget,
                       bool initial_segments) {
  CheckReport r = make(lemma, "A=" + w(a) + " B=" + w(b) + " m=" + std::to_string(m));
  if (!sub_m(b, a, m)) return skipped(r, "B is not sub_m of A");
  std::vector<Worm> targets{b};
  if (initial_segments) {
    for (std::uint64_t j = 0; j <= m; ++j) targets.push_back(step_down(b, j));
  }
  std::vector<bool> found(targets.size(), false);
  std::size_t remaining = targets.size();
  BracketRunner runner(a, m);
  while (true) {
    for (std::size_t i = 0; i < targets.size(); ++i) {
      if (!found[i] && runner.equals(targets[i])) {
        found[i] = true;
        --remaining;
        r.witnesses["k(" + w(targets[i]) + ")"] = std::to_string(static_cast<std::int64_t>(runner.applications()) - 1);
      }
    }
    if (remaining == 0) {
      r.verdict = Verdict::pass;
      return r;
    }
    if (runner.is_top()) break;
    if (runner.applications() >= budget.max_steps || !runner.step(budget.max_term_size)) {
      r.verdict = Verdict::unknown;
      return r;
    }
  }
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (!found[i]) r.witnesses["missing"] = w(targets[i]);
  }
  r.verdict = Verdict::fail;
  return r;
}

}  // namespace

CheckReport check_reach(const Worm& a, const Worm& b, std::uint64_t m, const Budget& budget) {
  return reach_impl("reach", a, b, m, budget, false);
}

CheckReport check_reach_initial(const Worm& a, const Worm& b, std::uint64_t m, const Budget& budget) {
  return reach_impl("reach_initial", a, b, m, budget, true);
}

CheckReport check_monotonicity(const Worm& a, const Worm& b, std::uint64_t x, std::uint64_t y,
                               const Budget& budget) {
  CheckReport r = make("monotonicity",
                       "A=" + w(a) + " B=" + w(b) + " x=" + std::to_string(x) + " y=" + std::to_string(y));
  if (x > y) return skipped(r, "x > y");
  if (!sub_m(b, a, y)) return skipped(r, "B is not sub_y of A");
  const Evaluation ha = hardy_worm(a, y, budget);
  std::optional<std::uint64_t> stop;
  if (ha.value) {
    if (const auto v = small(*ha.value); v && *v < budget.max_steps) stop = *v + 1;
  }
  const Evaluation hb = hardy_worm(b, x, budget, stop);
  r.witnesses["h_A(y)"] = show(ha);
  r.witnesses["h_B(x)"] = show(hb);
  r.verdict = le(hb, ha);
  return r;
}

CheckReport check_cr_step(const TreeOrdinal& t, std::uint64_t x) {
  CheckReport r = make("cr_step", "t=" + t.to_string() + " x=" + std::to_string(x));
  const std::uint64_t before = correction(t);
  const std::uint64_t after = correction(fs_std(t, x));
  r.witnesses["Cr(t)"] = std::to_string(before);
  r.witnesses["Cr(t[x])"] = std::to_string(after);
  r.verdict = holds(after <= before);
  return r;
}

CheckReport check_norm_bound(const Ordinal& a, const Ordinal& b, std::uint64_t x) {
  CheckReport r = make("norm_bound", "a=" + a.to_string() + " b=" + b.to_string() + " x=" + std::to_string(x));
  if (!(a < b)) return skipped(r, "a >= b");
  if (x < 2) return skipped(r, "x < 2");
  const std::uint64_t na = norm(a);
  const std::uint64_t nb = norm(b);
  if (na + 2 > nb + x) return skipped(r, "Na > Nb + x - 2");
  const Ordinal bx = fund_seq(b, x);
  r.witnesses["b[x]"] = bx.to_string();
  r.witnesses["Na"] = std::to_string(na);
  r.witnesses["N(b[x])"] = std::to_string(norm(bx));
  bool ok = !(bx < a);
  if (b.is_limit()) ok = ok && a < bx && na + 2 <= norm(bx) + x;
  r.verdict = holds(ok);
  return r;
}

CheckReport check_norm_step(const TreeOrdinal& t, std::uint64_t x) {
  CheckReport r = make("norm_step", "t=" + t.to_string() + " x=" + std::to_string(x));
  if (x < 2) return skipped(r, "x < 2");
  const std::uint64_t y = x + correction(t);
  const Ordinal lhs = collapse(fs_std(t, x));
  const Ordinal rhs = fund_seq(collapse(t), y);
  r.witnesses["o(t[x])"] = lhs.to_string();
  r.witnesses["o(t)[x+Cr(t)]"] = rhs.to_string();
  r.verdict = holds(!(rhs < lhs) && norm(lhs) + 2 <= norm(rhs) + y);
  return r;
}

CheckReport check_r_step(const TreeOrdinal& t, const TreeOrdinal& u, std::uint64_t x) {
  CheckReport r = make("r_step", "t=" + t.to_string() + " u=" + u.to_string() + " x=" + std::to_string(x));
  if (!reduces_end(t, u)) return skipped(r, "not t R~ u");
  const TreeOrdinal lhs = fs_worm(t, x);
  const TreeOrdinal rhs = fs_std(u, x);
  r.witnesses["t[[x]]"] = lhs.to_string();
  r.witnesses["u[x]"] = rhs.to_string();
  r.verdict = holds(reduces(lhs, rhs));
  return r;
}

CheckReport check_norm_difference(const TreeOrdinal& t, const TreeOrdinal& u, std::uint64_t x) {
  CheckReport r =
      make("norm_difference", "t=" + t.to_string() + " u=" + u.to_string() + " x=" + std::to_string(x));
  if (!t.is_limit() || !u.is_limit()) return skipped(r, "t or u is not a limit");
  if (x < 1) return skipped(r, "x < 1");
  if (!reduces_end(t, u)) return skipped(r, "not t R~ u");
  const auto ux = static_cast<std::int64_t>(norm(fs_std(u, x)));
  const std::int64_t first = static_cast<std::int64_t>(norm(fs_worm(t, x))) - ux;
  const std::int64_t second = static_cast<std::int64_t>(norm(fs_std(t, x))) - ux + static_cast<std::int64_t>(x);
  const std::int64_t third = static_cast<std::int64_t>(x) * (sdiff(norm(t), norm(u)) + 1);
  r.witnesses["N(t[[x]])-N(u[x])"] = std::to_string(first);
  r.witnesses["N(t[x])-N(u[x])+x"] = std::to_string(second);
  r.witnesses["x(Nt-Nu+1)"] = std::to_string(third);
  r.verdict = holds(first <= second && second <= third);
  return r;
}

CheckReport check_doubling(const Ordinal& s, std::uint64_t x, std::uint64_t z, const Budget& budget) {
  CheckReport r =
      make("doubling", "s=" + s.to_string() + " x=" + std::to_string(x) + " z=" + std::to_string(z));
  const Ordinal power = Ordinal::omega_power(s);
  {
    CheckReport p = make("2x<=H_w^s(x)", r.instance);
    if (x == 0 || s.is_zero()) {
      p = skipped(p, "x = 0 or s = 0");
    } else {
      const Evaluation h = hardy_ord(power, x, budget);
      p.witnesses["H_w^s(x)"] = show(h);
      p.verdict = le(nat(2) * nat(x), h);
    }
    r.parts.push_back(std::move(p));
  }
  {
    CheckReport p = make("2^z*x<=H_w^s[z](x)", r.instance);
    const auto bound = pow2_times(z, x);
    if (z < 2 || s < Ordinal(2)) {
      p = skipped(p, "z < 2 or s < 2");
    } else if (!bound) {
      p.verdict = Verdict::unknown;
    } else {
      const Evaluation h = hardy_ord(fund_seq(power, z), x, budget);
      p.witnesses["2^z*x"] = std::to_string(*bound);
      p.witnesses["H_w^s[z](x)"] = show(h);
      p.verdict = le(nat(*bound), h);
    }
    r.parts.push_back(std::move(p));
  }
  combine_parts(r);
  return r;
}

CheckReport check_drop(const TreeOrdinal& t, std::uint64_t x, std::uint64_t c, const Budget& budget) {
  CheckReport r =
      make("drop", "t=" + t.to_string() + " x=" + std::to_string(x) + " c=" + std::to_string(c));
  if (t.is_zero()) return skipped(r, "t = 0");
  if (collapse(t.exponents().back()) < Ordinal(2)) return skipped(r, "o(r) < 2");
  if (c < 1) return skipped(r, "c < 1");
  const auto arg = pow2_times(c, x + c);
  if (!arg) {
    r.verdict = Verdict::unknown;
    return r;
  }
  const Evaluation lhs = hardy_tree(fs_std(t, x), *arg, budget);
  const Evaluation rhs = hardy_tree(t, x + c, budget);
  r.witnesses["H_t[x](2^c(x+c))"] = show(lhs);
  r.witnesses["H_t(x+c)"] = show(rhs);
  r.verdict = le(lhs, rhs);
  return r;
}

CheckReport check_tree_lemmas(const TreeOrdinal& t, const TreeOrdinal& u, std::uint64_t x, std::uint64_t c,
                              const Budget& budget) {
  CheckReport r = make("tree_lemmas", "t=" + t.to_string() + " u=" + u.to_string() + " x=" + std::to_string(x) +
                                          " c=" + std::to_string(c));
  r.parts.push_back(check_cr_step(t, x));
  r.parts.push_back(check_norm_bound(collapse(u), collapse(t), x));
  r.parts.push_back(check_norm_step(t, x));
  r.parts.push_back(check_r_step(t, u, x));
  r.parts.push_back(check_norm_difference(t, u, x));
  r.parts.push_back(check_drop(t, x, c, budget));
  combine_parts(r);
  return r;
}

CheckReport check_h_comparison(const TreeOrdinal& t, const Ordinal& b, std::uint64_t n, std::uint64_t m,
                               const Budget& budget) {
  CheckReport r = make("h_comparison", "t=" + t.to_string() + " b=" + b.to_string() + " n=" + std::to_string(n) +
                                           " m=" + std::to_string(m));
  const Ordinal ot = collapse(t);
  if (b < ot) return skipped(r, "o(t) > b");
  const std::int64_t mm = static_cast<std::int64_t>(m) - 2;
  if (static_cast<std::int64_t>(n) + sdiff(norm(ot), norm(b)) > mm) return skipped(r, "n + N(o(t)) - Nb > m - 2");
  if (static_cast<std::int64_t>(n + correction(t)) >= mm) return skipped(r, "n + Cr(t) >= m - 2");
  const Evaluation hb = hardy_ord(b, m, budget);
  r.witnesses["H_b(m)"] = show(hb);
  const Evaluation ht = hardy_tree(t, n, budget);
  r.witnesses["H_t(n)"] = show(ht);
  r.verdict = le(ht, hb);
  return r;
}

CheckReport check_h_vs_H(const TreeOrdinal& t, std::uint64_t n, std::uint64_t m, const Budget& budget) {
  CheckReport r = make("h_vs_H", "t=" + t.to_string() + " n=" + std::to_string(n) + " m=" + std::to_string(m));
  if (m < n + 2) return skipped(r, "m < n + 2");
  const Evaluation big = hardy_tree(t, m, budget);
  r.witnesses["H_t(m)"] = show(big);
  Budget capped = budget;
  if (const auto v = small(big.value ? *big.value : big.lower_bound); v && *v < capped.max_steps) {
    capped.max_steps = *v + 1;
  }
  const Evaluation lhs = hardy_tree_wormstyle(t, n, capped);
  r.witnesses["h_t(n)"] = show(lhs);
  r.verdict = le(lhs, big);
  return r;
}

CheckReport check_hardy_theorems(const TreeOrdinal& t, const Ordinal& b, std::uint64_t n, std::uint64_t m,
                                 const Budget& budget) {
  CheckReport r = make("hardy_theorems", "t=" + t.to_string() + " b=" + b.to_string() + " n=" +
                                             std::to_string(n) + " m=" + std::to_string(m));
  r.parts.push_back(check_h_comparison(t, b, n, m, budget));
  r.parts.push_back(check_h_vs_H(t, n, m, budget));
  combine_parts(r);
  return r;
}

CheckReport check_evaluators(const Ordinal& alpha, std::uint64_t x, const Budget& budget) {
  CheckReport r = make("evaluators", "a=" + alpha.to_string() + " x=" + std::to_string(x));
  const Evaluation step = hardy_ord(alpha, x, budget);
  r.witnesses["H_a(x)"] = show(step);
  if (!step.value) {
    r.verdict = Verdict::unknown;
    return r;
  }
  const Evaluation fast = collapsed_hardy(alpha, nat(x), budget);
  r.witnesses["collapsed"] = show(fast);
  CheckReport p = make("collapsed=H_a", r.instance);
  p.verdict = fast.value ? holds(*fast.value == *step.value) : Verdict::unknown;
  r.parts.push_back(std::move(p));
  const Evaluation tree = hardy_tree(canonical_tree(alpha), x, budget);
  r.witnesses["H_tree"] = show(tree);
  CheckReport q = make("H_tree=H_a", r.instance);
  q.verdict = tree.value ? holds(*tree.value == *step.value) : Verdict::unknown;
  r.parts.push_back(std::move(q));
  combine_parts(r);
  return r;
}

CheckReport check_fh_sandwich(const Ordinal& alpha, std::uint64_t x, const Budget& budget) {
  CheckReport r = make("fh_sandwich", "a=" + alpha.to_string() + " x=" + std::to_string(x));
  const Evaluation low = fast_growing(alpha, nat(x), budget);
  const Evaluation mid = collapsed_hardy(Ordinal::omega_power(add(Ordinal(3), alpha)), nat(x + 3), budget);
  const Evaluation high = fast_growing(alpha, nat(x + 4), budget);
  r.witnesses["F_a(x)"] = low.value ? show(*low.value) : "budget";
  r.witnesses["H_w^(3+a)(x+3)"] = mid.value ? show(*mid.value) : "budget";
  r.witnesses["F_a(x+4)"] = high.value ? show(*high.value) : "budget";
  auto part = [&](const std::string& name, const Evaluation& lhs, const Evaluation& rhs) {
    CheckReport p = make(name, r.instance);
    p.verdict = lhs.value && rhs.value ? holds(*lhs.value <= *rhs.value) : Verdict::unknown;
    return p;
  };
  r.parts.push_back(part("F_a(x)<=H", low, mid));
  r.parts.push_back(part("H<=F_a(x+4)", mid, high));
  const bool any_fail = std::any_of(r.parts.begin(), r.parts.end(), [](const auto& p) { return p.verdict == Verdict::fail; });
  const bool any_pass = std::any_of(r.parts.begin(), r.parts.end(), [](const auto& p) { return p.verdict == Verdict::pass; });
  r.verdict = any_fail ? Verdict::fail : any_pass ? Verdict::pass : Verdict::unknown;
  return r;
}

// Generators

Worm random_worm(Rng& rng, std::size_t max_length, std::uint64_t max_entry, bool allow_top) {
  std::uniform_int_distribution<std::size_t> len(allow_top ? 0 : 1, std::max<std::size_t>(max_length, 1));
  std::uniform_int_distribution<std::uint64_t> entry(0, max_entry);
  std::vector<Ordinal> es;
  const std::size_t n = len(rng);
  for (std::size_t i = 0; i < n; ++i) es.emplace_back(entry(rng));
  return Worm(std::move(es));
}

Worm random_transfinite_worm(Rng& rng, std::size_t max_length, std::uint64_t max_natural, std::uint64_t max_offset) {
  std::uniform_int_distribution<std::size_t> len(1, std::max<std::size_t>(max_length, 1));
  std::uniform_int_distribution<std::uint64_t> entry(0, max_natural + max_offset + 1);
  std::vector<Ordinal> es;
  const std::size_t n = len(rng);
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t v = entry(rng);
    es.push_back(v <= max_natural ? Ordinal(v) : add(Ordinal::omega(), Ordinal(v - max_natural - 1)));
  }
  return Worm(std::move(es));
}

TreeOrdinal random_tree(Rng& rng, unsigned depth, std::size_t max_summands) {
  if (depth == 0) return TreeOrdinal();
  std::uniform_int_distribution<std::size_t> count(1, std::max<std::size_t>(max_summands, 1));
  std::bernoulli_distribution unit(0.4);
  std::vector<TreeOrdinal> es;
  const std::size_t n = count(rng);
  for (std::size_t i = 0; i < n; ++i) es.push_back(unit(rng) ? TreeOrdinal() : random_tree(rng, depth - 1, max_summands));
  return TreeOrdinal::from_exponents(std::move(es));
}

TreeOrdinal random_reduct(Rng& rng, const TreeOrdinal& t, bool end_agreeable) {
  const auto es = t.exponents();
  std::size_t last_power = es.size();
  for (std::size_t i = es.size(); i-- > 0;) {
    if (!es[i].is_zero()) {
      last_power = i;
      break;
    }
  }
  std::bernoulli_distribution drop(0.5);
  std::vector<TreeOrdinal> out;
  std::size_t i = 0;
  while (i < es.size() && es[i].is_zero()) out.push_back(es[i++]);
  while (i < es.size()) {
    const bool last = i == last_power;
    out.push_back(random_reduct(rng, es[i], end_agreeable && last));
    ++i;
    std::size_t units = 0;
    while (i < es.size() && es[i].is_zero()) {
      ++units;
      ++i;
    }
    if (units > 0 && !(end_agreeable && last) && drop(rng)) --units;
    out.insert(out.end(), units, TreeOrdinal());
  }
  return TreeOrdinal::from_exponents(std::move(out));
}

Ordinal random_ordinal(Rng& rng, unsigned depth, std::size_t max_terms, std::uint64_t max_coefficient) {
  std::uniform_int_distribution<std::uint64_t> coef(1, std::max<std::uint64_t>(max_coefficient, 1));
  if (depth == 0) {
    std::uniform_int_distribution<std::uint64_t> n(0, max_coefficient);
    return Ordinal(n(rng));
  }
  std::uniform_int_distribution<std::size_t> count(0, max_terms);
  std::vector<Ordinal> exponents;
  const std::size_t k = count(rng);
  for (std::size_t i = 0; i < k; ++i) exponents.push_back(random_ordinal(rng, depth - 1, max_terms, max_coefficient));
  std::sort(exponents.begin(), exponents.end(), [](const Ordinal& a, const Ordinal& b) { return b < a; });
  exponents.erase(std::unique(exponents.begin(), exponents.end()), exponents.end());
  std::vector<CnfTerm> terms;
  for (auto& e : exponents) terms.push_back({std::move(e), coef(rng)});
  return Ordinal::from_terms(std::move(terms));
}

// Sweeps

namespace {

std::uint64_t uniform(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

// A worm B with B sub_m A: an entry of A lowered, with its tail kept.
Worm random_sub(Rng& rng, const Worm& a, std::uint64_t m) {
  const auto es = a.entries();
  const std::size_t pos = uniform(rng, 0, es.size());
  if (pos == es.size()) return Worm();
  const Ordinal& alpha = es[pos];
  Ordinal beta;
  if (const auto n = alpha.as_natural()) {
    beta = Ordinal(uniform(rng, 0, *n));
  } else if (uniform(rng, 0, 1) == 0) {
    beta = Ordinal(uniform(rng, 0, m));
  } else {
    const CnfTerm& last = alpha.terms().back();
    const std::uint64_t offset = last.exponent.is_zero() ? last.coefficient : 0;
    beta = add(Ordinal::omega(), Ordinal(uniform(rng, 0, offset)));
  }
  std::vector<Ordinal> out{beta};
  out.insert(out.end(), es.begin() + static_cast<std::ptrdiff_t>(pos) + 1, es.end());
  return Worm(std::move(out));
}

Budget with_steps(Budget b, std::uint64_t steps) {
  b.max_steps = std::min(b.max_steps, steps);
  return b;
}

// H_a(x) is at most `limit`, judged by the collapsed evaluator.
bool small_hardy(const Ordinal& a, std::uint64_t x, std::uint64_t limit) {
  Budget b;
  b.max_steps = 100'000;
  b.max_bits = 64;
  const Evaluation e = collapsed_hardy(a, nat(x), b);
  return e.value && *e.value <= nat(limit);
}

constexpr std::uint64_t kSweepValueLimit = 1'000'000;

TreeOrdinal random_limit_tree(Rng& rng, unsigned depth) {
  for (;;) {
    TreeOrdinal t = random_tree(rng, depth);
    if (t.is_limit()) return t;
  }
}

Ordinal small_cnf(Rng& rng, std::uint64_t max_coefficient) {
  // w^2*a + w*b + c
  std::vector<CnfTerm> terms;
  const std::uint64_t a = uniform(rng, 0, max_coefficient);
  const std::uint64_t b = uniform(rng, 0, max_coefficient);
  const std::uint64_t c = uniform(rng, 0, max_coefficient);
  if (a) terms.push_back({Ordinal(2), a});
  if (b) terms.push_back({Ordinal(1), b});
  if (c) terms.push_back({Ordinal(0), c});
  return Ordinal::from_terms(std::move(terms));
}

using Generator = std::function<CheckReport(Rng&, const Budget&)>;

const std::vector<std::pair<std::string, Generator>>& registry() {
  static const std::vector<std::pair<std::string, Generator>> suites = {
      {"battle_oracle",
       [](Rng& rng, const Budget& b) { return check_battle_oracle(random_transfinite_worm(rng, 3, 2, 0), b); }},
      {"stepdown",
       [](Rng& rng, const Budget&) {
         const Worm a = random_worm(rng, 8, 4, false);
         return check_stepdown_descent(a, uniform(rng, 0, 5));
       }},
      {"tau_naturality",
       [](Rng& rng, const Budget&) {
         const Worm a = random_worm(rng, 8, 4, false);
         return check_tau_naturality(a, uniform(rng, 0, 5));
       }},
      {"bridge",
       [](Rng& rng, const Budget& b) {
         const Worm a = random_worm(rng, 3, 1);
         return check_bridge(a, uniform(rng, 0, 3), b);
       }},
      {"composition",
       [](Rng& rng, const Budget& b) {
         const Worm bw = random_worm(rng, 2, 1);
         const Worm aw = random_worm(rng, 2, 1);
         return check_composition(bw, aw, uniform(rng, 0, 4), b);
       }},
      {"growth",
       [](Rng& rng, const Budget& b) {
         const Worm a = Worm(std::vector<Ordinal>(uniform(rng, 0, 2), Ordinal(1)));
         return check_growth(a, uniform(rng, 0, 3), b);
       }},
      {"superexp_growth", [](Rng& rng, const Budget& b) { return check_superexp_growth(uniform(rng, 0, 4), b); }},
      {"reach",
       [](Rng& rng, const Budget& b) {
         const Worm a = random_transfinite_worm(rng, 3, 2, 0);
         const std::uint64_t m = uniform(rng, 0, 3);
         return check_reach(a, random_sub(rng, a, m), m, b);
       }},
      {"reach_initial",
       [](Rng& rng, const Budget& b) {
         const Worm a = random_transfinite_worm(rng, 3, 2, 0);
         const std::uint64_t m = uniform(rng, 0, 3);
         return check_reach_initial(a, random_sub(rng, a, m), m, b);
       }},
      {"monotonicity",
       [](Rng& rng, const Budget& b) {
         const Worm a = random_worm(rng, 3, 2);
         const std::uint64_t y = uniform(rng, 0, 3);
         return check_monotonicity(a, random_sub(rng, a, y), uniform(rng, 0, y), y, b);
       }},
      {"cr_step", [](Rng& rng, const Budget&) { return check_cr_step(random_tree(rng, 4), uniform(rng, 0, 6)); }},
      {"norm_bound",
       [](Rng& rng, const Budget&) {
         for (;;) {
           Ordinal a = random_ordinal(rng, 2);
           Ordinal b = random_ordinal(rng, 2);
           if (a == b) continue;
           if (b < a) std::swap(a, b);
           const std::int64_t lo = std::max<std::int64_t>(2, sdiff(norm(a), norm(b)) + 2);
           if (lo > 6) continue;
           return check_norm_bound(a, b, uniform(rng, static_cast<std::uint64_t>(lo), 6));
         }
       }},
      {"norm_step", [](Rng& rng, const Budget&) { return check_norm_step(random_tree(rng, 4), uniform(rng, 2, 6)); }},
      {"r_step",
       [](Rng& rng, const Budget&) {
         const TreeOrdinal t = random_tree(rng, 4);
         return check_r_step(t, random_reduct(rng, t, true), uniform(rng, 0, 6));
       }},
      {"norm_difference",
       [](Rng& rng, const Budget&) {
         const TreeOrdinal t = random_limit_tree(rng, 4);
         return check_norm_difference(t, random_reduct(rng, t, true), uniform(rng, 1, 6));
       }},
      {"doubling",
       [](Rng& rng, const Budget& b) {
         const Ordinal s = uniform(rng, 0, 3) == 0 ? Ordinal::omega() : Ordinal(uniform(rng, 1, 3));
         return check_doubling(s, uniform(rng, 1, 6), uniform(rng, 2, 5), b);
       }},
      {"drop",
       [](Rng& rng, const Budget& b) {
         for (;;) {
           const TreeOrdinal t = random_tree(rng, 3, 2);
           if (t.is_zero() || collapse(t.exponents().back()) < Ordinal(2)) continue;
           const std::uint64_t x = uniform(rng, 0, 6);
           const std::uint64_t c = uniform(rng, 1, 3);
           if (!small_hardy(collapse(t), x + c, kSweepValueLimit)) continue;
           return check_drop(t, x, c, b);
         }
       }},
      {"h_comparison",
       [](Rng& rng, const Budget& b) {
         for (;;) {
           const TreeOrdinal t = random_tree(rng, 3, 3);
           const Ordinal beta = add(collapse(t), small_cnf(rng, 1));
           const std::uint64_t n = uniform(rng, 0, 4);
           const std::int64_t need = std::max<std::int64_t>(
               static_cast<std::int64_t>(n) + sdiff(norm(collapse(t)), norm(beta)) + 2,
               static_cast<std::int64_t>(n + correction(t)) + 3);
           if (need > 10) continue;
           const std::uint64_t m = uniform(rng, static_cast<std::uint64_t>(std::max<std::int64_t>(need, 0)), 10);
           if (!small_hardy(beta, m, kSweepValueLimit)) continue;
           return check_h_comparison(t, beta, n, m, b);
         }
       }},
      {"h_vs_H",
       [](Rng& rng, const Budget& b) {
         for (;;) {
           const TreeOrdinal t = random_tree(rng, 3, 3);
           const std::uint64_t n = uniform(rng, 0, 4);
           const std::uint64_t m = uniform(rng, n + 2, 10);
           if (!small_hardy(collapse(t), m, kSweepValueLimit)) continue;
           return check_h_vs_H(t, n, m, b);
         }
       }},
      {"evaluators",
       [](Rng& rng, const Budget& b) {
         for (;;) {
           const Ordinal a = uniform(rng, 0, 9) == 0 ? Ordinal::omega_power(Ordinal(3)) : small_cnf(rng, 4);
           const std::uint64_t x = uniform(rng, 0, 6);
           if (!small_hardy(a, x, kSweepValueLimit)) continue;
           return check_evaluators(a, x, with_steps(b, 1'000'000));
         }
       }},
      {"fh_sandwich",
       [](Rng& rng, const Budget& b) {
         static const std::vector<Ordinal> alphas{Ordinal(0), Ordinal(1), Ordinal(2), Ordinal::omega()};
         return check_fh_sandwich(alphas[uniform(rng, 0, alphas.size() - 1)], uniform(rng, 0, 2), b);
       }},
  };
  return suites;
}

const Generator& generator_for(const std::string& suite) {
  for (const auto& [name, gen] : registry()) {
    if (name == suite) return gen;
  }
  throw std::invalid_argument("unknown suite '" + suite + "'");
}

std::string constants_text(const SweepReport& report) {
  std::string out;
  for (const auto& [key, hist] : report.observed) {
    out += "  constant " + key + " = " + std::to_string(report.constants.at(key)) + "  (observed:";
    for (const auto& [v, n] : hist) out += " " + std::to_string(v) + " x" + std::to_string(n);
    out += ")\n";
  }
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& entry : registry()) out.push_back(entry.first);
    return out;
  }();
  return names;
}

std::uint64_t instance_seed(std::uint64_t sweep_seed, std::uint64_t i) {
  // splitmix64 of (seed, index)
  std::uint64_t z = sweep_seed + 0x9e3779b97f4a7c15ULL * (i + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

CheckReport run_instance(const std::string& suite, std::uint64_t seed, const Budget& budget) {
  const Generator& gen = generator_for(suite);
  Rng rng(seed);
  CheckReport r = gen(rng, budget);
  r.seed = seed;
  return r;
}

SweepReport aggregate(const std::string& suite, std::vector<CheckReport> reports, std::uint64_t seed,
                      const Budget& budget) {
  SweepReport out;
  out.suite = suite;
  out.seed = seed;
  out.count = reports.size();
  out.budget = budget;
  for (const auto& r : reports) {
    for (const auto& [key, value] : r.fitted) ++out.observed[key][value];
  }
  for (const auto& [key, hist] : out.observed) {
    auto best = hist.begin();
    for (auto it = hist.begin(); it != hist.end(); ++it) {
      if (it->second > best->second) best = it;
    }
    out.constants[key] = best->first;
  }
  for (auto& r : reports) {
    for (const auto& [key, value] : r.fitted) {
      if (r.verdict == Verdict::pass && value != out.constants[key]) {
        r.verdict = Verdict::fail;
        r.witnesses["expected_" + key] = std::to_string(out.constants[key]);
        r.witnesses["observed_" + key] = std::to_string(value);
      }
    }
    switch (r.verdict) {
      case Verdict::pass:
        ++out.passed;
        break;
      case Verdict::fail:
        ++out.failed;
        out.failures.push_back(r);
        break;
      case Verdict::unknown:
        ++out.unknown;
        break;
      case Verdict::skipped:
        ++out.skipped;
        break;
    }
  }
  return out;
}

SweepReport sweep(const std::string& suite, std::uint64_t count, std::uint64_t seed, const Budget& budget,
                  ExecutionPolicy policy) {
  generator_for(suite);
  std::vector<CheckReport> reports(count);
  const auto n = static_cast<std::int64_t>(count);
  if (policy == ExecutionPolicy::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < n; ++i) {
      reports[static_cast<std::size_t>(i)] = run_instance(suite, instance_seed(seed, static_cast<std::uint64_t>(i)), budget);
    }
  } else {
    for (std::int64_t i = 0; i < n; ++i) {
      reports[static_cast<std::size_t>(i)] = run_instance(suite, instance_seed(seed, static_cast<std::uint64_t>(i)), budget);
    }
  }
  return aggregate(suite, std::move(reports), seed, budget);
}

namespace {

struct InstanceArgs {
  const nlohmann::json& j;
  std::size_t max_nodes;

  const nlohmann::json& field(const char* key) const {
    if (!j.contains(key)) throw std::invalid_argument(std::string("instance is missing field '") + key + "'");
    return j.at(key);
  }
  std::string text(const char* key) const {
    const auto& v = field(key);
    return v.is_string() ? v.get<std::string>() : v.dump();
  }
  std::uint64_t number(const char* key) const {
    const auto& v = field(key);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
      throw std::invalid_argument(std::string("field '") + key + "' must be a natural number, got " + v.dump());
    }
    return v.get<std::uint64_t>();
  }
  Worm worm(const char* key) const { return parse_worm(text(key), max_nodes); }
  TreeOrdinal tree(const char* key) const { return parse_tree(text(key), max_nodes); }
  Ordinal ordinal(const char* key) const { return parse_ordinal(text(key), max_nodes); }
};

}  // namespace

CheckReport check_instance(const std::string& lemma, const nlohmann::json& instance, const Budget& budget) {
  if (!instance.is_object()) throw std::invalid_argument("instance must be a JSON object, got " + instance.dump());
  const InstanceArgs a{instance, static_cast<std::size_t>(budget.max_term_size)};
  if (lemma == "battle_oracle") return check_battle_oracle(a.worm("A"), budget);
  if (lemma == "stepdown") return check_stepdown_descent(a.worm("A"), a.number("k"));
  if (lemma == "tau_naturality") return check_tau_naturality(a.worm("A"), a.number("x"));
  if (lemma == "bridge") return check_bridge(a.worm("A"), a.number("x"), budget);
  if (lemma == "composition") return check_composition(a.worm("B"), a.worm("A"), a.number("n"), budget);
  if (lemma == "growth") return check_growth(a.worm("A"), a.number("n"), budget);
  if (lemma == "superexp_growth") return check_superexp_growth(a.number("n"), budget);
  if (lemma == "reach") return check_reach(a.worm("A"), a.worm("B"), a.number("m"), budget);
  if (lemma == "reach_initial") return check_reach_initial(a.worm("A"), a.worm("B"), a.number("m"), budget);
  if (lemma == "monotonicity") {
    return check_monotonicity(a.worm("A"), a.worm("B"), a.number("x"), a.number("y"), budget);
  }
  if (lemma == "cr_step") return check_cr_step(a.tree("t"), a.number("x"));
  if (lemma == "norm_bound") return check_norm_bound(a.ordinal("a"), a.ordinal("b"), a.number("x"));
  if (lemma == "norm_step") return check_norm_step(a.tree("t"), a.number("x"));
  if (lemma == "r_step") return check_r_step(a.tree("t"), a.tree("u"), a.number("x"));
  if (lemma == "norm_difference") return check_norm_difference(a.tree("t"), a.tree("u"), a.number("x"));
  if (lemma == "doubling") return check_doubling(a.ordinal("s"), a.number("x"), a.number("z"), budget);
  if (lemma == "drop") return check_drop(a.tree("t"), a.number("x"), a.number("c"), budget);
  if (lemma == "tree_lemmas") {
    return check_tree_lemmas(a.tree("t"), a.tree("u"), a.number("x"), a.number("c"), budget);
  }
  if (lemma == "h_comparison") {
    return check_h_comparison(a.tree("t"), a.ordinal("b"), a.number("n"), a.number("m"), budget);
  }
  if (lemma == "h_vs_H") return check_h_vs_H(a.tree("t"), a.number("n"), a.number("m"), budget);
  if (lemma == "hardy_theorems") {
    return check_hardy_theorems(a.tree("t"), a.ordinal("b"), a.number("n"), a.number("m"), budget);
  }
  if (lemma == "evaluators") return check_evaluators(a.ordinal("a"), a.number("x"), budget);
  if (lemma == "fh_sandwich") return check_fh_sandwich(a.ordinal("a"), a.number("x"), budget);
  throw std::invalid_argument("unknown lemma '" + lemma + "'");
}

nlohmann::json to_json(const CheckReport& report) {
  nlohmann::json j{{"lemma", report.lemma},
                   {"instance", report.instance},
                   {"verdict", to_string(report.verdict)},
                   {"seed", report.seed}};
  if (!report.witnesses.empty()) j["witnesses"] = report.witnesses;
  if (!report.fitted.empty()) j["fitted"] = report.fitted;
  if (!report.parts.empty()) {
    j["parts"] = nlohmann::json::array();
    for (const auto& p : report.parts) j["parts"].push_back(to_json(p));
  }
  return j;
}

nlohmann::json to_json(const SweepReport& report) {
  nlohmann::json j{{"suite", report.suite},
                   {"seed", report.seed},
                   {"count", report.count},
                   {"budget",
                    {{"max_steps", report.budget.max_steps},
                     {"max_bits", report.budget.max_bits},
                     {"max_term_size", report.budget.max_term_size}}},
                   {"pass", report.passed},
                   {"fail", report.failed},
                   {"budget_unknown", report.unknown},
                   {"skipped", report.skipped}};
  j["constants"] = report.constants;
  nlohmann::json observed = nlohmann::json::object();
  for (const auto& [key, hist] : report.observed) {
    for (const auto& [v, n] : hist) observed[key][std::to_string(v)] = n;
  }
  j["observed"] = observed;
  j["counterexamples"] = nlohmann::json::array();
  for (const auto& f : report.failures) j["counterexamples"].push_back(to_json(f));
  return j;
}

void write_text(std::ostream& out, const SweepReport& report) {
  out << "== " << report.suite << "  seed " << report.seed << ", " << report.count << " instances\n";
  out << "  budget: steps " << report.budget.max_steps << ", bits " << report.budget.max_bits << ", term size "
      << report.budget.max_term_size << '\n';
  out << "  pass " << report.passed << "  fail " << report.failed << "  budget-unknown " << report.unknown
      << "  skipped " << report.skipped << '\n';
  out << constants_text(report);
  for (const auto& f : report.failures) {
    out << "  counterexample [" << f.lemma << "] " << f.instance << "  (seed " << f.seed << ")\n";
    for (const auto& [k, v] : f.witnesses) out << "    " << k << " = " << v << '\n';
    for (const auto& p : f.parts) {
      if (p.verdict != Verdict::fail) continue;
      out << "    part " << p.lemma << ": fail\n";
      for (const auto& [k, v] : p.witnesses) out << "      " << k << " = " << v << '\n';
    }
  }
}

}  // namespace wormlab
