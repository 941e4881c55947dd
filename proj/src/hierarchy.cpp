#include "wormlab/hierarchy.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>

#include <nlohmann/json.hpp>

namespace wormlab {
namespace {

constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
constexpr unsigned kMaxDepth = 10'000;

std::uint64_t trailing_units(const Ordinal& a) {
  const auto ts = a.terms();
  if (ts.empty() || !ts.back().exponent.is_zero()) return 0;
  return ts.back().coefficient;
}

Ordinal drop_units(const Ordinal& a, std::uint64_t k) {
  std::vector<CnfTerm> ts(a.terms().begin(), a.terms().end());
  if (ts.back().coefficient == k) {
    ts.pop_back();
  } else {
    ts.back().coefficient -= k;
  }
  return Ordinal::from_terms(std::move(ts));
}

std::optional<std::uint64_t> to_u64(const Natural& v) {
  if (sgn(v) < 0 || mpz_sizeinbase(v.get_mpz_t(), 2) > 64) return std::nullopt;
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof out, 0, 0, v.get_mpz_t());
  return out;
}

Natural from_u64(std::uint64_t v) {
  Natural out;
  mpz_import(out.get_mpz_t(), 1, -1, sizeof v, 0, 0, &v);
  return out;
}

std::uint64_t bit_length(const Natural& v) { return sgn(v) == 0 ? 0 : mpz_sizeinbase(v.get_mpz_t(), 2); }

Evaluation finished(std::uint64_t value, std::uint64_t steps) {
  Evaluation e;
  e.value = from_u64(value);
  e.lower_bound = *e.value;
  e.steps = steps;
  return e;
}

Evaluation unfinished(std::uint64_t bound, std::uint64_t steps) {
  Evaluation e;
  e.lower_bound = from_u64(bound);
  e.steps = steps;
  return e;
}

// Summands copied when the brackets rebuild the exponent path of e.
std::uint64_t rebuild_cost(const TreeOrdinal& e) {
  std::uint64_t cost = 0;
  for (const TreeOrdinal* p = &e; p->is_limit(); p = &p->exponents().back()) cost += p->size();
  return cost;
}

// Shared driver for H_t and h_t: the term is kept as a stack of summand
// exponents, rightmost summand at the back.
Evaluation run_tree(const TreeOrdinal& t, std::uint64_t x, const Budget& budget, EvalTrace* trace, bool worm_style) {
  std::vector<TreeOrdinal> stack(t.exponents().begin(), t.exponents().end());
  std::uint64_t arg = x;
  std::uint64_t steps = 0;
  std::uint64_t work = 0;
  if (trace) {
    trace->flavor = worm_style ? Flavor::hardy_tree_worm : Flavor::hardy_tree;
    trace->entries.clear();
    trace->complete = false;
  }
  auto record = [&] {
    if (!trace) return;
    work += stack.size();
    trace->entries.push_back({TreeOrdinal::from_exponents(stack), from_u64(arg), steps});
  };
  record();
  while (!stack.empty()) {
    if (steps >= budget.max_steps || work >= budget.max_steps) return unfinished(arg, steps);
    if (stack.back().is_zero()) {
      std::uint64_t run = 1;
      if (!trace) {
        const std::size_t n = stack.size();
        while (run < n && stack[n - 1 - run].is_zero()) ++run;
        run = std::min(run, budget.max_steps - std::max(steps, work));
      }
      if (arg > kMax - run) return unfinished(arg, steps);
      stack.resize(stack.size() - run);
      arg += run;
      steps += run;
      work += run;
    } else {
      const TreeOrdinal e = stack.back();
      if (e.is_successor()) {
        const TreeOrdinal s = e.drop_last(1);
        const std::uint64_t width = worm_style && !s.is_zero() ? 2 : 1;
        const std::uint64_t room = budget.max_term_size - std::min<std::uint64_t>(budget.max_term_size, stack.size() - 1);
        if (arg > room / width) return unfinished(arg, steps);
        stack.pop_back();
        for (std::uint64_t i = 0; i < arg; ++i) {
          stack.push_back(s);
          if (width == 2) stack.emplace_back();
        }
      } else {
        work += rebuild_cost(e);
        if (work > budget.max_steps) return unfinished(arg, steps);
        stack.back() = worm_style ? fs_worm(e, arg) : fs_std(e, arg);
      }
      ++work;
      if (worm_style) {
        if (arg == kMax) return unfinished(arg, steps);
        ++arg;
      }
      ++steps;
    }
    record();
  }
  if (trace) trace->complete = true;
  return finished(arg, steps);
}

std::optional<Natural> superexp_from(Natural v, std::uint64_t n, const Budget& budget) {
  for (std::uint64_t i = 0; i < n; ++i) {
    const auto exponent = to_u64(v);
    if (!exponent || *exponent >= budget.max_bits) return std::nullopt;
    Natural next;
    mpz_setbit(next.get_mpz_t(), *exponent);
    v = std::move(next);
  }
  return v;
}

struct FastGrowing {
  const Budget& budget;
  std::uint64_t steps = 0;

  unsigned depth = 0;

  std::optional<Natural> eval(const Ordinal& a, const Natural& x) {
    if (++steps > budget.max_steps || depth >= kMaxDepth) return std::nullopt;
    ++depth;
    auto v = eval_at(a, x);
    --depth;
    return v;
  }

  std::optional<Natural> eval_at(const Ordinal& a, const Natural& x) {
    const auto n = to_u64(x);
    if (a.is_zero()) {
      if (!n) return std::nullopt;
      return superexp_from(x, *n, budget);
    }
    if (!n) return std::nullopt;
    if (a.is_limit()) return eval(fund_seq(a, *n), x);
    const Ordinal pred = a.predecessor();
    Natural v = x;
    for (std::uint64_t i = 0; i < *n; ++i) {
      auto next = eval(pred, v);
      if (!next) return std::nullopt;
      v = std::move(*next);
    }
    return v;
  }
};

struct CollapsedHardy {
  const Budget& budget;
  std::uint64_t steps = 0;

  unsigned depth = 0;

  bool charge() { return ++steps <= budget.max_steps; }

  // H_{w^e * c}(x)
  std::optional<Natural> power(const Ordinal& e, std::uint64_t c, Natural x) {
    if (depth >= kMaxDepth) return std::nullopt;
    ++depth;
    auto v = power_at(e, c, std::move(x));
    --depth;
    return v;
  }

  std::optional<Natural> power_at(const Ordinal& e, std::uint64_t c, Natural x) {
    if (!charge()) return std::nullopt;
    if (e.is_zero()) {
      x += from_u64(c);
      if (bit_length(x) > budget.max_bits) return std::nullopt;
      return x;
    }
    if (e == Ordinal(1)) {
      if (c > budget.max_bits || bit_length(x) + c > budget.max_bits) return std::nullopt;
      mpz_mul_2exp(x.get_mpz_t(), x.get_mpz_t(), c);
      return x;
    }
    if (e == Ordinal(2)) {
      for (std::uint64_t i = 0; i < c; ++i) {
        if (!charge()) return std::nullopt;
        const auto shift = to_u64(x);
        if (!shift || *shift > budget.max_bits || bit_length(x) + *shift > budget.max_bits) return std::nullopt;
        mpz_mul_2exp(x.get_mpz_t(), x.get_mpz_t(), *shift);
      }
      return x;
    }
    for (std::uint64_t i = 0; i < c; ++i) {
      const auto n = to_u64(x);
      if (!n) return std::nullopt;
      if (e.is_limit()) {
        auto next = power(fund_seq(e, *n), 1, std::move(x));
        if (!next) return std::nullopt;
        x = std::move(*next);
        continue;
      }
      const Ordinal pred = e.predecessor();
      for (std::uint64_t j = 0; j < *n; ++j) {
        auto next = power(pred, 1, std::move(x));
        if (!next) return std::nullopt;
        x = std::move(*next);
      }
    }
    return x;
  }
};

template <class Index>
bool validate_chain(const EvalTrace& trace, bool worm_style) {
  const auto& es = trace.entries;
  for (std::size_t i = 0; i < es.size(); ++i) {
    if (es[i].step != i || !std::holds_alternative<Index>(es[i].index)) return false;
    if (sgn(es[i].argument) < 0) return false;
  }
  for (std::size_t i = 0; i + 1 < es.size(); ++i) {
    const Index& cur = std::get<Index>(es[i].index);
    const Index& next = std::get<Index>(es[i + 1].index);
    if (cur.is_zero()) return false;
    const auto x = to_u64(es[i].argument);
    if (!x) return false;
    Index expected;
    if constexpr (std::is_same_v<Index, Ordinal>) {
      expected = fund_seq(cur, *x);
    } else {
      expected = worm_style ? fs_worm(cur, *x) : fs_std(cur, *x);
    }
    if (!(expected == next)) return false;
    const unsigned delta = cur.is_successor() || worm_style ? 1 : 0;
    if (es[i + 1].argument != es[i].argument + delta) return false;
  }
  if (trace.complete != std::get<Index>(es.back().index).is_zero()) return false;
  return true;
}

std::string index_to_string(const IndexTerm& index) {
  return std::visit([](const auto& term) { return term.to_string(); }, index);
}

std::string stable_hash(const Natural& v) {
  std::size_t count = 0;
  unsigned char* bytes = static_cast<unsigned char*>(mpz_export(nullptr, &count, 1, 1, 1, 0, v.get_mpz_t()));
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (std::size_t i = 0; i < count; ++i) {
    h ^= bytes[i];
    h *= 0x100000001b3ULL;
  }
  void (*release)(void*, std::size_t) = nullptr;
  mp_get_memory_functions(nullptr, nullptr, &release);
  release(bytes, count);
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace

std::string to_string(Flavor flavor) {
  switch (flavor) {
    case Flavor::hardy_ordinal:
      return "H-ord";
    case Flavor::hardy_tree:
      return "H-tree";
    case Flavor::hardy_tree_worm:
      return "h-tree";
  }
  return "?";
}

bool validate_trace(const EvalTrace& trace) {
  if (trace.entries.empty()) return false;
  switch (trace.flavor) {
    case Flavor::hardy_ordinal:
      return validate_chain<Ordinal>(trace, false);
    case Flavor::hardy_tree:
      return validate_chain<TreeOrdinal>(trace, false);
    case Flavor::hardy_tree_worm:
      return validate_chain<TreeOrdinal>(trace, true);
  }
  return false;
}

std::optional<Natural> superexp(const Natural& x, std::uint64_t n, const Budget& budget) {
  return superexp_from(x, n, budget);
}

Evaluation hardy_ord(const Ordinal& alpha, std::uint64_t x, const Budget& budget, EvalTrace* trace) {
  Ordinal a = alpha;
  std::uint64_t arg = x;
  std::uint64_t steps = 0;
  if (trace) {
    trace->flavor = Flavor::hardy_ordinal;
    trace->entries.clear();
    trace->complete = false;
  }
  auto record = [&] {
    if (trace) trace->entries.push_back({a, from_u64(arg), steps});
  };
  record();
  while (!a.is_zero()) {
    if (steps >= budget.max_steps) return unfinished(arg, steps);
    if (a.is_successor()) {
      const std::uint64_t run = trace ? 1 : std::min(trailing_units(a), budget.max_steps - steps);
      if (arg > kMax - run) return unfinished(arg, steps);
      a = drop_units(a, run);
      arg += run;
      steps += run;
    } else {
      a = fund_seq(a, arg);
      ++steps;
    }
    record();
  }
  if (trace) trace->complete = true;
  return finished(arg, steps);
}

Evaluation hardy_tree(const TreeOrdinal& t, std::uint64_t x, const Budget& budget, EvalTrace* trace) {
  return run_tree(t, x, budget, trace, false);
}

Evaluation hardy_tree_wormstyle(const TreeOrdinal& t, std::uint64_t x, const Budget& budget, EvalTrace* trace) {
  return run_tree(t, x, budget, trace, true);
}

Evaluation hardy_worm(const Worm& a, std::uint64_t m, const Budget& budget, std::optional<std::uint64_t> stop_after,
                      BattleTrace* trace, const BattleOptions& options) {
  BattleOptions opts = options;
  opts.record = trace != nullptr;
  BattleTrace run = run_brackets(a, m, budget, opts, stop_after);
  Evaluation e;
  e.steps = run.total_steps;
  if (run.death_step) {
    e.value = from_u64(*run.death_step == 0 ? 0 : *run.death_step - 1);
    e.lower_bound = *e.value;
  } else {
    e.lower_bound = from_u64(run.total_steps);
  }
  if (trace) *trace = std::move(run);
  return e;
}

Evaluation fast_growing(const Ordinal& alpha, const Natural& x, const Budget& budget) {
  FastGrowing f{budget};
  Evaluation e;
  e.value = f.eval(alpha, x);
  e.steps = f.steps;
  e.lower_bound = e.value ? *e.value : x;
  return e;
}

Evaluation collapsed_hardy(const Ordinal& alpha, const Natural& x, const Budget& budget) {
  CollapsedHardy h{budget};
  std::optional<Natural> v = x;
  const auto ts = alpha.terms();
  for (auto it = ts.rbegin(); it != ts.rend() && v; ++it) v = h.power(it->exponent, it->coefficient, std::move(*v));
  Evaluation e;
  e.value = std::move(v);
  e.steps = h.steps;
  e.lower_bound = e.value ? *e.value : x;
  return e;
}

nlohmann::json natural_to_json(const Natural& v, bool full) {
  if (const auto small = to_u64(v)) return *small;
  const std::size_t approx_digits = mpz_sizeinbase(v.get_mpz_t(), 10);
  if (full || approx_digits <= 1'000'000) {
    std::string text = v.get_str();
    if (full || text.size() <= 10'000) return text;
    return {{"digits", text.size()},
            {"bits", bit_length(v)},
            {"leading_digits", text.substr(0, 20)},
            {"hash", stable_hash(v)}};
  }
  // Too large to print quickly: read the leading digits off a 256-bit
  // floating-point image of the value.
  const std::uint64_t bits = bit_length(v);
  const Natural top = v >> static_cast<mp_bitcnt_t>(bits - 192);
  mpf_class f(top, 256);
  mpf_mul_2exp(f.get_mpf_t(), f.get_mpf_t(), bits - 192);
  mp_exp_t exponent = 0;
  char* digits = mpf_get_str(nullptr, &exponent, 10, 25, f.get_mpf_t());
  std::string leading(digits);
  void (*release)(void*, std::size_t) = nullptr;
  mp_get_memory_functions(nullptr, nullptr, &release);
  release(digits, leading.size() + 1);
  leading.resize(std::min<std::size_t>(leading.size(), 20));
  return {{"digits", exponent}, {"bits", bits}, {"leading_digits", leading}, {"hash", stable_hash(v)}};
}

void write_json_lines(std::ostream& out, const EvalTrace& trace, bool full_values) {
  for (const auto& entry : trace.entries) {
    nlohmann::json line{{"step", entry.step},
                        {"index_term", index_to_string(entry.index)},
                        {"argument", natural_to_json(entry.argument, full_values)}};
    out << line.dump() << '\n';
  }
}

}  // namespace wormlab
