#pragma once

// Tree ordinals: sums w^t1 + ... + w^tn of arbitrary order and multiplicity.
// Unlike Ordinal, nothing is absorbed, so a term carries more structure than
// the ordinal it denotes.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wormlab/ordinal.hpp"

namespace wormlab {

class TreeOrdinal {
 public:
  TreeOrdinal() = default;  // zero

  /// k copies of w^0.
  static TreeOrdinal units(std::uint64_t k);
  static TreeOrdinal omega_power(const TreeOrdinal& exponent);
  static TreeOrdinal from_exponents(std::vector<TreeOrdinal> exponents);

  bool is_zero() const noexcept { return exponents_ == nullptr; }
  /// Rightmost summand is w^0.
  bool is_successor() const noexcept;
  bool is_limit() const noexcept { return !is_zero() && !is_successor(); }

  std::span<const TreeOrdinal> exponents() const noexcept;
  std::size_t size() const noexcept { return exponents().size(); }
  std::size_t node_count() const noexcept;

  /// Number of trailing w^0 summands.
  std::size_t trailing_units() const noexcept;
  /// Drops the last k summands.
  TreeOrdinal drop_last(std::size_t k) const;

  std::string to_string() const;

  friend bool operator==(const TreeOrdinal& a, const TreeOrdinal& b);

 private:
  explicit TreeOrdinal(std::shared_ptr<const std::vector<TreeOrdinal>> exponents)
      : exponents_(std::move(exponents)) {}

  std::shared_ptr<const std::vector<TreeOrdinal>> exponents_;
};

/// Concatenation of summand lists.
TreeOrdinal operator+(const TreeOrdinal& a, const TreeOrdinal& b);
/// t * k = t + ... + t (k copies).
TreeOrdinal repeat(const TreeOrdinal& t, std::uint64_t k);

/// o(t): evaluates the sum with absorption.
Ordinal collapse(const TreeOrdinal& t);

/// Standard brackets t[x].
TreeOrdinal fs_std(const TreeOrdinal& t, std::uint64_t x);
/// Worm-style brackets t[[x]]: (t+w)[[x]] = t+x and
/// (t+w^(s+1))[[x]] = t+(w^s+1)*x for s != 0.
TreeOrdinal fs_worm(const TreeOrdinal& t, std::uint64_t x);

/// Number of summands plus the norms of all exponents.
std::uint64_t norm(const TreeOrdinal& t);

/// Ordinal correction Cr: sum of N(w^ti) over indices i that have a later
/// summand with larger collapsed exponent, plus the maximum Cr(ti).
std::uint64_t correction(const TreeOrdinal& t);

/// Relation R: u is t with at most one unit removed from each unit block
/// following an w-power, exponents related by R.
bool reduces(const TreeOrdinal& t, const TreeOrdinal& u);
/// Relation R~: like R, but the final unit block is kept and the final
/// exponents are related by R~.
bool reduces_end(const TreeOrdinal& t, const TreeOrdinal& u);

enum class Reach { yes, no, unknown };

/// t <=_n s: some iterate s[n]...[n] equals t. Stops after `max_steps`.
Reach reachable_fs(const TreeOrdinal& t, const TreeOrdinal& s, std::uint64_t n,
                   std::uint64_t max_steps);

/// Same grammar as ordinals; summand order is kept as written.
TreeOrdinal parse_tree(std::string_view text, std::size_t max_nodes = kDefaultTermBudget);

/// The canonical tree term of an ordinal (CNF order, coefficients unfolded).
TreeOrdinal canonical_tree(const Ordinal& a);

}  // namespace wormlab
