#pragma once

// Worms of the closed fragment: finite sequences <a1><a2>...<an>T of ordinals,
// leftmost entry first. The empty sequence is T (top).

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wormlab/ordinal.hpp"
#include "wormlab/tree_ordinal.hpp"

namespace wormlab {

class Worm {
 public:
  Worm() = default;  // T
  explicit Worm(std::vector<Ordinal> entries) : entries_(std::move(entries)) {}
  /// Natural-number entries, leftmost first.
  static Worm of(std::initializer_list<std::uint64_t> entries);

  bool is_top() const noexcept { return entries_.empty(); }
  std::span<const Ordinal> entries() const noexcept { return entries_; }
  const Ordinal& front() const { return entries_.front(); }
  /// All entries are natural numbers.
  bool is_natural() const noexcept;

  /// Text form: entries joined by '.', T for the empty worm.
  std::string to_string() const;

  friend bool operator==(const Worm&, const Worm&) = default;

 private:
  std::vector<Ordinal> entries_;
};

Worm concat(const Worm& a, const Worm& b);
/// <a>B
Worm prepend(const Ordinal& a, const Worm& b);

std::size_t length(const Worm& a);

/// Maximal prefix whose entries are all >= alpha.
Worm head(const Worm& a, const Ordinal& alpha);
/// What is left after head(a, alpha).
Worm remainder(const Worm& a, const Ordinal& alpha);
/// head(<a>B) = head(<a>B, a); head(T) = T.
Worm head(const Worm& a);
Worm remainder(const Worm& a);

/// c(T) = T, c(<0>A) = A, c(<a+1>A) = <a>A. Throws DomainError on a
/// leading limit entry.
Worm chop(const Worm& a);

/// The step-down A[[k]].
Worm step_down(const Worm& a, std::uint64_t k);

/// A+: every entry incremented.
Worm promote(const Worm& a);

/// (<alpha> h_{alpha+1}(B))^{k+1} r_{alpha+1}(B).
Worm q_form(const Ordinal& alpha, std::uint64_t k, const Worm& b);

/// Tree ordinal of a natural-entry worm; throws DomainError otherwise.
TreeOrdinal tau(const Worm& a);
/// o(A) = o(tau(A)).
Ordinal worm_ordinal(const Worm& a);
/// A <_0 B, decided through worm_ordinal.
bool lt0(const Worm& a, const Worm& b);

/// B is T, or A = D<a>C and B = <b>C with b <= a.
bool sub(const Worm& b, const Worm& a);
/// sub, plus: if b = n < w and a >= w then n <= m.
bool sub_m(const Worm& b, const Worm& a, std::uint64_t m);

/// Parses `1.0.w+2`; `T` or the empty string is the top worm.
Worm parse_worm(std::string_view text, std::size_t max_nodes = kDefaultTermBudget);

}  // namespace wormlab
