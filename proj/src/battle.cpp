#include "wormlab/battle.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace wormlab {

BracketRunner::BracketRunner(const Worm& start, std::uint64_t first_index) : index_(first_index) {
  const auto es = start.entries();
  reversed_.reserve(es.size());
  for (auto it = es.rbegin(); it != es.rend(); ++it) reversed_.push_back(encode(*it));
}

BracketRunner::Code BracketRunner::encode(const Ordinal& a) {
  if (const auto n = a.as_natural(); n && *n < kTag) return static_cast<Code>(*n);
  if (const auto it = interned_.find(a); it != interned_.end()) return it->second;
  if (table_.size() >= kTag) throw std::length_error("too many distinct transfinite worm entries");
  const Code code = kTag | static_cast<Code>(table_.size());
  table_.push_back(a);
  interned_.emplace(a, code);
  return code;
}

Ordinal BracketRunner::decode(Code c) const {
  if ((c & kTag) == 0) return Ordinal(c);
  return table_[c & ~kTag];
}

bool BracketRunner::at_least(Code a, Code b) const {
  if (((a | b) & kTag) == 0) return a >= b;
  return !(decode(a) < decode(b));
}

bool BracketRunner::step(std::uint64_t max_length) {
  if (reversed_.empty()) {
    ++applications_;
    ++index_;
    return true;
  }
  const Code lead = reversed_.back();
  if (lead == 0) {
    reversed_.pop_back();
  } else if ((lead & kTag) == 0) {
    // Natural successor entry: replicate the decremented head k+1 times.
    std::size_t h = 1;
    const std::size_t n = reversed_.size();
    while (h < n && at_least(reversed_[n - 1 - h], lead)) ++h;
    const std::uint64_t copies = index_ + 1;
    if (n - h > max_length || h > (max_length - (n - h)) / copies) return false;
    block_.assign(reversed_.end() - static_cast<std::ptrdiff_t>(h), reversed_.end());
    block_.back() = lead - 1;
    reversed_.resize(n - h);
    reversed_.reserve(n - h + h * copies);
    for (std::uint64_t i = 0; i < copies; ++i) reversed_.insert(reversed_.end(), block_.begin(), block_.end());
  } else {
    const Ordinal alpha = decode(lead);
    if (alpha.is_limit()) {
      reversed_.back() = encode(fund_seq(alpha, index_));
    } else {
      std::size_t h = 1;
      const std::size_t n = reversed_.size();
      while (h < n && at_least(reversed_[n - 1 - h], lead)) ++h;
      const std::uint64_t copies = index_ + 1;
      if (n - h > max_length || h > (max_length - (n - h)) / copies) return false;
      block_.assign(reversed_.end() - static_cast<std::ptrdiff_t>(h), reversed_.end());
      block_.back() = encode(alpha.predecessor());
      reversed_.resize(n - h);
      for (std::uint64_t i = 0; i < copies; ++i) reversed_.insert(reversed_.end(), block_.begin(), block_.end());
    }
  }
  ++applications_;
  ++index_;
  return true;
}

Ordinal BracketRunner::leading() const { return decode(reversed_.back()); }

Worm BracketRunner::worm() const {
  std::vector<Ordinal> entries;
  entries.reserve(reversed_.size());
  for (auto it = reversed_.rbegin(); it != reversed_.rend(); ++it) entries.push_back(decode(*it));
  return Worm(std::move(entries));
}

bool BracketRunner::equals(const Worm& other) const {
  const auto es = other.entries();
  if (es.size() != reversed_.size()) return false;
  const std::size_t n = es.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Code c = reversed_[n - 1 - i];
    if ((c & kTag) == 0) {
      const auto v = es[i].as_natural();
      if (!v || *v != c) return false;
    } else if (decode(c) != es[i]) {
      return false;
    }
  }
  return true;
}

namespace {

BattleRecord make_record(const BracketRunner& runner, std::uint64_t step, const BattleOptions& options) {
  BattleRecord record;
  record.step = step;
  record.length = runner.length();
  if (!runner.is_top()) record.leading = runner.leading();
  const bool full = step < options.full_records || std::has_single_bit(step);
  if (full && runner.length() <= options.max_stored_length) record.worm = runner.worm();
  return record;
}

}  // namespace

BattleTrace battle(const Worm& a, const Budget& budget, const BattleOptions& options) {
  return run_brackets(a, 1, budget, options);
}

BattleTrace run_brackets(const Worm& a, std::uint64_t first_index, const Budget& budget,
                         const BattleOptions& options, std::optional<std::uint64_t> max_applications) {
  const std::uint64_t limit = std::min(budget.max_steps, max_applications.value_or(budget.max_steps));
  BattleTrace trace;
  trace.initial = a;
  trace.first_index = first_index;
  BracketRunner runner(a, first_index);
  auto keep = [&](std::uint64_t step) {
    return options.record && (step < options.full_records || std::has_single_bit(step));
  };
  if (options.record) trace.records.push_back(make_record(runner, 0, options));
  std::uint64_t step = 0;
  while (!runner.is_top()) {
    if (step >= limit || !runner.step(budget.max_term_size)) {
      trace.budget_exceeded = true;
      break;
    }
    ++step;
    if (keep(step) || (options.record && runner.is_top())) trace.records.push_back(make_record(runner, step, options));
  }
  trace.total_steps = step;
  if (!trace.budget_exceeded) trace.death_step = step;
  return trace;
}

namespace {

constexpr std::uint64_t kReplaySteps = 1'000'000;
constexpr std::uint64_t kReplayLength = 1'000'000;

}  // namespace

bool validate_trace(const BattleTrace& trace) {
  const auto& records = trace.records;
  if (records.empty()) return false;
  if (records.front().step != 0 || !records.front().worm || *records.front().worm != trace.initial) return false;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    if (i > 0 && r.step <= records[i - 1].step) return false;
    if (r.step > trace.total_steps) return false;
    if (r.worm) {
      if (r.worm->entries().size() != r.length) return false;
      if (r.worm->is_top() ? r.leading.has_value() : (!r.leading || *r.leading != r.worm->front())) return false;
    } else if ((r.length == 0) == r.leading.has_value()) {
      return false;
    }
  }
  // Replay from each stored worm through the following summary records.
  std::uint64_t replayed = 0;
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (!records[i].worm) continue;
    BracketRunner runner(*records[i].worm, trace.first_index + records[i].step);
    std::uint64_t step = records[i].step;
    for (std::size_t j = i + 1; j < records.size(); ++j) {
      const auto& r = records[j];
      while (step < r.step) {
        if (runner.is_top() || replayed++ >= kReplaySteps) return true;
        if (!runner.step(kReplayLength)) return true;
        ++step;
      }
      if (runner.length() != r.length) return false;
      if (runner.is_top() ? r.leading.has_value() : (!r.leading || *r.leading != runner.leading())) return false;
      if (r.worm) {
        if (!runner.equals(*r.worm)) return false;
        break;
      }
    }
  }
  if (trace.death_step) {
    if (trace.budget_exceeded || *trace.death_step != trace.total_steps) return false;
    const auto& last = records.back();
    if (last.step != *trace.death_step || last.length != 0) return false;
    // T can only appear at the death step.
    for (std::size_t i = 0; i + 1 < records.size(); ++i) {
      if (records[i].length == 0) return false;
    }
  } else if (!trace.budget_exceeded) {
    return false;
  }
  return true;
}

void write_json_lines(std::ostream& out, const BattleTrace& trace) {
  for (const auto& r : trace.records) {
    nlohmann::json line{{"step", r.step}, {"length", r.length}};
    if (r.worm) {
      line["worm"] = r.worm->to_string();
    } else {
      line["leading"] = r.leading ? r.leading->to_string() : "T";
    }
    out << line.dump() << '\n';
  }
  nlohmann::json summary{{"initial", trace.initial.to_string()}, {"total_steps", trace.total_steps}};
  if (trace.first_index != 1) summary["first_index"] = trace.first_index;
  if (trace.death_step) {
    summary["death_step"] = *trace.death_step;
  } else {
    summary["budget_exceeded"] = true;
  }
  out << summary.dump() << '\n';
}

void write_csv(std::ostream& out, const BattleTrace& trace) {
  out << "step,length,leading\n";
  for (const auto& r : trace.records) {
    out << r.step << ',' << r.length << ',' << (r.leading ? r.leading->to_string() : "T") << '\n';
  }
}

}  // namespace wormlab
