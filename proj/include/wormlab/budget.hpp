#pragma once

#include <cstdint>

#include <gmpxx.h>

namespace wormlab {

/// Arbitrary-precision natural number.
using Natural = mpz_class;

/// Resource limits for evaluators. Running out yields an "unknown" outcome,
/// never a wrong value.
struct Budget {
  /// Rewriting steps (Hardy clause applications, worm step-downs). Tree
  /// evaluations also charge every summand copied while rebuilding a nested
  /// exponent or recording a trace entry.
  std::uint64_t max_steps = 100'000'000;
  /// Bit length of any big value produced.
  std::uint64_t max_bits = std::uint64_t{1} << 33;
  /// Worm length / tree summand count reached during an evaluation.
  std::uint64_t max_term_size = std::uint64_t{1} << 24;

  /// Defaults, overridden by WORMLAB_MAX_STEPS, WORMLAB_MAX_BITS and
  /// WORMLAB_MAX_TERM_SIZE when set.
  static Budget from_environment();

  friend bool operator==(const Budget&, const Budget&) = default;
};

}  // namespace wormlab
