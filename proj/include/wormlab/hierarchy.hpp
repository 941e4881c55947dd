#pragma once

// Hardy functions on ordinals, tree ordinals and worms, the fast-growing
// hierarchy, and superexponentiation, all evaluated under a Budget.

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "wormlab/battle.hpp"
#include "wormlab/budget.hpp"
#include "wormlab/ordinal.hpp"
#include "wormlab/tree_ordinal.hpp"
#include "wormlab/worm.hpp"

namespace wormlab {

/// Outcome of a budgeted evaluation. An absent value means the budget ran
/// out; `lower_bound` is then the best bound established so far.
struct Evaluation {
  std::optional<Natural> value;
  std::uint64_t steps = 0;
  Natural lower_bound;

  bool exceeded() const noexcept { return !value; }
};

enum class Flavor {
  hardy_ordinal,  // H_a, standard brackets
  hardy_tree,     // H_t, standard brackets
  hardy_tree_worm,  // h_t, worm-style brackets, argument grows at limits too
};

std::string to_string(Flavor flavor);

using IndexTerm = std::variant<Ordinal, TreeOrdinal>;

struct TraceEntry {
  IndexTerm index;
  Natural argument;
  std::uint64_t step = 0;

  friend bool operator==(const TraceEntry&, const TraceEntry&) = default;
};

/// Evaluation sequence (xi_i, x_i, i) in evaluation order: entry 0 holds the
/// initial index and argument.
struct EvalTrace {
  Flavor flavor = Flavor::hardy_ordinal;
  std::vector<TraceEntry> entries;
  /// The evaluation reached index 0.
  bool complete = false;
};

/// Checks xi_{i+1} = xi_i[x_i] (worm-style brackets for h_t), the argument
/// increments (1 at successors; 0 at limits for H, 1 for h), consecutive
/// step numbers, index flavor, and that the final index is zero exactly when
/// the trace is complete.
bool validate_trace(const EvalTrace& trace);

/// 2^x_n: 2^x_0 = x, 2^x_(n+1) = 2^(2^x_n).
std::optional<Natural> superexp(const Natural& x, std::uint64_t n, const Budget& budget = {});

Evaluation hardy_ord(const Ordinal& alpha, std::uint64_t x, const Budget& budget = {},
                     EvalTrace* trace = nullptr);
Evaluation hardy_tree(const TreeOrdinal& t, std::uint64_t x, const Budget& budget = {},
                      EvalTrace* trace = nullptr);
Evaluation hardy_tree_wormstyle(const TreeOrdinal& t, std::uint64_t x, const Budget& budget = {},
                                EvalTrace* trace = nullptr);

/// h_A(m): the least k with A[[m]][[m+1]]...[[m+k]] = T. Stops early once
/// more than `stop_after` applications have been made without reaching T,
/// reporting the lower bound only. The trace, if given, records the worms
/// (full worms subject to `options`).
Evaluation hardy_worm(const Worm& a, std::uint64_t m, const Budget& budget = {},
                      std::optional<std::uint64_t> stop_after = std::nullopt,
                      BattleTrace* trace = nullptr, const BattleOptions& options = {});

/// F_0(x) = 2^x_x, F_(a+1)(x) = F_a^(x)(x), F_l(x) = F_(l[x])(x).
/// This and collapsed_hardy recurse on the index; nesting deeper than 10^4
/// counts as running out of budget.
Evaluation fast_growing(const Ordinal& alpha, const Natural& x, const Budget& budget = {});

/// H_a(x) through H_(b+c) = H_b o H_c and closed forms for w^0, w^1, w^2.
Evaluation collapsed_hardy(const Ordinal& alpha, const Natural& x, const Budget& budget = {});

/// Decimal text, or {digits, bits, leading_digits, hash} above 10^4 digits
/// unless `full`.
nlohmann::json natural_to_json(const Natural& v, bool full = false);

/// One {step, index_term, argument} object per line.
void write_json_lines(std::ostream& out, const EvalTrace& trace, bool full_values = false);

}  // namespace wormlab
