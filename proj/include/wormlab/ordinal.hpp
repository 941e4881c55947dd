#pragma once

// Cantor normal form notations for ordinals below epsilon_0.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wormlab {

/// Default cap on the number of nodes a parsed or constructed term may have.
inline constexpr std::size_t kDefaultTermBudget = 1'000'000;

/// Thrown when a term would exceed its node budget.
class TermBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown on malformed text input. `position` is the offending byte offset.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Thrown when an operation is applied outside its domain (e.g. tau on a
/// transfinite worm entry).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct CnfTerm;

/// An ordinal below epsilon_0 in Cantor normal form
///   w^e1 * c1 + ... + w^ek * ck,  e1 > ... > ek,  ci >= 1.
/// The representation is canonical, so structural equality is ordinal
/// equality. Values are immutable and share structure on copy.
class Ordinal {
 public:
  Ordinal() = default;  // zero
  explicit Ordinal(std::uint64_t n);

  static Ordinal omega();
  static Ordinal omega_power(const Ordinal& exponent, std::uint64_t coefficient = 1);
  /// Builds from terms; throws std::invalid_argument if not canonical.
  static Ordinal from_terms(std::vector<CnfTerm> terms);

  bool is_zero() const noexcept { return terms_ == nullptr; }
  bool is_successor() const noexcept;
  bool is_limit() const noexcept { return !is_zero() && !is_successor(); }
  bool is_natural() const noexcept;
  std::optional<std::uint64_t> as_natural() const noexcept;

  std::span<const CnfTerm> terms() const noexcept;
  std::size_t node_count() const noexcept;

  Ordinal successor() const;
  /// Predecessor of a successor ordinal; throws DomainError otherwise.
  Ordinal predecessor() const;

  std::string to_string() const;

  friend std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b);
  friend bool operator==(const Ordinal& a, const Ordinal& b);

 private:
  explicit Ordinal(std::shared_ptr<const std::vector<CnfTerm>> terms)
      : terms_(std::move(terms)) {}

  std::shared_ptr<const std::vector<CnfTerm>> terms_;
};

struct CnfTerm {
  Ordinal exponent;
  std::uint64_t coefficient = 1;

  friend bool operator==(const CnfTerm&, const CnfTerm&) = default;
};

std::strong_ordering compare(const Ordinal& a, const Ordinal& b);

/// Ordinal sum a + b; summands of a below the leading exponent of b vanish.
Ordinal add(const Ordinal& a, const Ordinal& b);

/// a * n for a natural number n.
Ordinal multiply_natural(const Ordinal& a, std::uint64_t n);

/// Standard fundamental sequence: 0[x] = 0, (a+1)[x] = a,
/// (g + w^(b+1))[x] = g + w^b * x, (g + w^l)[x] = g + w^(l[x]).
Ordinal fund_seq(const Ordinal& a, std::uint64_t x);

/// N0 = 0, N(w^a + b) = 1 + Na + Nb with b < w^(a+1).
std::uint64_t norm(const Ordinal& a);

/// w_0 = 1, w_(n+1) = w^(w_n).
Ordinal omega_tower(std::uint64_t n, std::size_t max_nodes = kDefaultTermBudget);

/// Parses `0`, naturals, `w`, `w^<atom>`, `*<nat>`, `+`, parentheses.
/// Non-canonical sums are normalised (e.g. `1+w` is `w`).
Ordinal parse_ordinal(std::string_view text, std::size_t max_nodes = kDefaultTermBudget);

struct OrdinalHash {
  std::size_t operator()(const Ordinal& a) const noexcept;
};

}  // namespace wormlab
