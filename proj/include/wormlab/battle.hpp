#pragma once

// Production worm-battle engine. Worms are stored reversed (leftmost entry at
// the back) with entries packed into 32-bit codes, so a step-down touches
// only the front of the worm. The plain Worm-based simulation in
// lemma_lab.hpp is the reference it is tested against.

#include <cstdint>
#include <optional>
#include <ostream>
#include <unordered_map>
#include <vector>

#include "wormlab/budget.hpp"
#include "wormlab/worm.hpp"

namespace wormlab {

/// Iterates A[[s]][[s+1]]... starting from a given bracket index.
class BracketRunner {
 public:
  BracketRunner(const Worm& start, std::uint64_t first_index);

  bool is_top() const noexcept { return reversed_.empty(); }
  std::size_t length() const noexcept { return reversed_.size(); }
  /// Index the next call to step() applies.
  std::uint64_t next_index() const noexcept { return index_; }
  std::uint64_t applications() const noexcept { return applications_; }

  /// Applies one step-down. Returns false (and leaves the worm unchanged) if
  /// the result would exceed `max_length` entries.
  bool step(std::uint64_t max_length);

  Ordinal leading() const;
  Worm worm() const;
  bool equals(const Worm& other) const;

 private:
  using Code = std::uint32_t;
  static constexpr Code kTag = Code{1} << 31;

  Code encode(const Ordinal& a);
  Ordinal decode(Code c) const;
  /// a >= b
  bool at_least(Code a, Code b) const;

  std::vector<Code> reversed_;
  std::vector<Code> block_;
  std::vector<Ordinal> table_;
  std::unordered_map<Ordinal, Code, OrdinalHash> interned_;
  std::uint64_t index_;
  std::uint64_t applications_ = 0;
};

struct BattleRecord {
  std::uint64_t step = 0;
  std::size_t length = 0;
  /// Leading entry; empty for T.
  std::optional<Ordinal> leading;
  /// Full worm, kept for early steps and at power-of-two checkpoints.
  std::optional<Worm> worm;

  friend bool operator==(const BattleRecord&, const BattleRecord&) = default;
};

/// A_0 = A, A_{k+1} = A_k[[k + first_index]].
struct BattleTrace {
  Worm initial;
  std::uint64_t first_index = 1;
  std::vector<BattleRecord> records;
  std::optional<std::uint64_t> death_step;
  std::uint64_t total_steps = 0;
  bool budget_exceeded = false;
};

struct BattleOptions {
  /// Steps below this keep their full worm in the trace.
  std::uint64_t full_records = 100'000;
  /// Full worms longer than this are stored as summaries only.
  std::size_t max_stored_length = 4096;
  bool record = true;
};

BattleTrace battle(const Worm& a, const Budget& budget, const BattleOptions& options = {});

/// The bracket iteration A[[s]][[s+1]]... run until T, the budget, or
/// `max_applications` step-downs.
BattleTrace run_brackets(const Worm& a, std::uint64_t first_index, const Budget& budget,
                         const BattleOptions& options = {},
                         std::optional<std::uint64_t> max_applications = std::nullopt);

/// Replays the battle from each stored worm and checks the following records
/// (length, leading entry, next stored worm), step numbering, and that the
/// death step (if any) ends in T. Replay stops after 10^6 applications.
bool validate_trace(const BattleTrace& trace);

/// One JSON object per line: {step, worm, length} (worm omitted for summary
/// records, which carry `leading` instead), then a summary object.
void write_json_lines(std::ostream& out, const BattleTrace& trace);
/// step,length,leading
void write_csv(std::ostream& out, const BattleTrace& trace);

}  // namespace wormlab
