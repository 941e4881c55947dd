#pragma once

// Shared recursive-descent parser for the term grammar used by ordinals,
// tree ordinals and worm entries:
//
//   sum     := product ('+' product)*
//   product := power ('*' nat)*
//   power   := atom ('^' power)?
//   atom    := nat | 'w' | '(' sum ')'
//
// The parser builds an untyped syntax tree; each notation interprets it.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string_view>
#include <vector>

namespace wormlab::detail {

struct Syntax {
  enum class Kind { natural, omega, power, sum, times };
  Kind kind = Kind::natural;
  std::uint64_t value = 0;  // natural literal, or repeat count for `times`
  std::size_t position = 0;
  std::vector<std::unique_ptr<Syntax>> children;
};

/// Parses a complete term; throws ParseError naming the offending token.
std::unique_ptr<Syntax> parse_term_syntax(std::string_view text);

}  // namespace wormlab::detail
