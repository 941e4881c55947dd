#include "wormlab/worm.hpp"

#include <algorithm>

namespace wormlab {
namespace {

std::size_t head_length(std::span<const Ordinal> entries, const Ordinal& alpha) {
  std::size_t i = 0;
  while (i < entries.size() && !(entries[i] < alpha)) ++i;
  return i;
}

// Blocks are read right to left: trailing zeros first, then w^tau(block-1).
TreeOrdinal tau_of(std::span<const std::uint64_t> entries) {
  std::vector<TreeOrdinal> summands;
  std::size_t end = entries.size();
  while (end > 0) {
    if (entries[end - 1] == 0) {
      summands.emplace_back();
      --end;
      continue;
    }
    std::size_t begin = end;
    while (begin > 0 && entries[begin - 1] != 0) --begin;
    std::vector<std::uint64_t> block(entries.begin() + static_cast<std::ptrdiff_t>(begin),
                                     entries.begin() + static_cast<std::ptrdiff_t>(end));
    for (auto& v : block) --v;
    summands.push_back(tau_of(block));
    end = begin;
  }
  return TreeOrdinal::from_exponents(std::move(summands));
}

}  // namespace

Worm Worm::of(std::initializer_list<std::uint64_t> entries) {
  std::vector<Ordinal> out;
  out.reserve(entries.size());
  for (auto e : entries) out.emplace_back(e);
  return Worm(std::move(out));
}

bool Worm::is_natural() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(), [](const Ordinal& e) { return e.is_natural(); });
}

std::string Worm::to_string() const {
  if (entries_.empty()) return "T";
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i > 0) out += '.';
    out += entries_[i].to_string();
  }
  return out;
}

Worm concat(const Worm& a, const Worm& b) {
  std::vector<Ordinal> out(a.entries().begin(), a.entries().end());
  out.insert(out.end(), b.entries().begin(), b.entries().end());
  return Worm(std::move(out));
}

Worm prepend(const Ordinal& a, const Worm& b) {
  std::vector<Ordinal> out;
  out.reserve(b.entries().size() + 1);
  out.push_back(a);
  out.insert(out.end(), b.entries().begin(), b.entries().end());
  return Worm(std::move(out));
}

std::size_t length(const Worm& a) { return a.entries().size(); }

Worm head(const Worm& a, const Ordinal& alpha) {
  const auto es = a.entries();
  return Worm(std::vector<Ordinal>(es.begin(), es.begin() + static_cast<std::ptrdiff_t>(head_length(es, alpha))));
}

Worm remainder(const Worm& a, const Ordinal& alpha) {
  const auto es = a.entries();
  return Worm(std::vector<Ordinal>(es.begin() + static_cast<std::ptrdiff_t>(head_length(es, alpha)), es.end()));
}

Worm head(const Worm& a) { return a.is_top() ? a : head(a, a.front()); }

Worm remainder(const Worm& a) { return a.is_top() ? a : remainder(a, a.front()); }

Worm chop(const Worm& a) {
  if (a.is_top()) return a;
  const auto es = a.entries();
  if (es.front().is_zero()) return Worm(std::vector<Ordinal>(es.begin() + 1, es.end()));
  if (es.front().is_limit()) throw DomainError("chop of a worm with a limit leading entry");
  std::vector<Ordinal> out(es.begin(), es.end());
  out.front() = out.front().predecessor();
  return Worm(std::move(out));
}

Worm step_down(const Worm& a, std::uint64_t k) {
  if (a.is_top() || a.front().is_zero()) return chop(a);
  const auto es = a.entries();
  if (es.front().is_limit()) {
    std::vector<Ordinal> out(es.begin(), es.end());
    out.front() = fund_seq(out.front(), k);
    return Worm(std::move(out));
  }
  const std::size_t h = head_length(es, es.front());
  std::vector<Ordinal> block(es.begin(), es.begin() + static_cast<std::ptrdiff_t>(h));
  block.front() = block.front().predecessor();
  std::vector<Ordinal> out;
  out.reserve(h * (k + 1) + (es.size() - h));
  for (std::uint64_t i = 0; i <= k; ++i) out.insert(out.end(), block.begin(), block.end());
  out.insert(out.end(), es.begin() + static_cast<std::ptrdiff_t>(h), es.end());
  return Worm(std::move(out));
}

Worm promote(const Worm& a) {
  std::vector<Ordinal> out;
  out.reserve(a.entries().size());
  for (const auto& e : a.entries()) out.push_back(e.successor());
  return Worm(std::move(out));
}

Worm q_form(const Ordinal& alpha, std::uint64_t k, const Worm& b) {
  const Ordinal next = alpha.successor();
  const Worm block = prepend(alpha, head(b, next));
  const Worm rest = remainder(b, next);
  Worm out;
  for (std::uint64_t i = 0; i <= k; ++i) out = concat(out, block);
  return concat(out, rest);
}

TreeOrdinal tau(const Worm& a) {
  std::vector<std::uint64_t> entries;
  entries.reserve(a.entries().size());
  for (const auto& e : a.entries()) {
    const auto n = e.as_natural();
    if (!n) throw DomainError("tau is defined only for natural-number worms, got entry " + e.to_string());
    entries.push_back(*n);
  }
  return tau_of(entries);
}

Ordinal worm_ordinal(const Worm& a) { return collapse(tau(a)); }

bool lt0(const Worm& a, const Worm& b) { return worm_ordinal(a) < worm_ordinal(b); }

bool sub(const Worm& b, const Worm& a) {
  if (b.is_top()) return true;
  const auto be = b.entries();
  const auto ae = a.entries();
  if (be.size() > ae.size()) return false;
  const std::size_t offset = ae.size() - be.size();
  if (!std::equal(be.begin() + 1, be.end(), ae.begin() + static_cast<std::ptrdiff_t>(offset) + 1)) return false;
  return !(ae[offset] < be.front());
}

bool sub_m(const Worm& b, const Worm& a, std::uint64_t m) {
  if (!sub(b, a)) return false;
  if (b.is_top()) return true;
  const Ordinal& beta = b.front();
  const Ordinal& alpha = a.entries()[a.entries().size() - b.entries().size()];
  if (beta.is_natural() && !alpha.is_natural()) return *beta.as_natural() <= m;
  return true;
}

Worm parse_worm(std::string_view text, std::size_t max_nodes) {
  std::size_t first = 0;
  while (first < text.size() && (text[first] == ' ' || text[first] == '\t')) ++first;
  std::size_t last = text.size();
  while (last > first && (text[last - 1] == ' ' || text[last - 1] == '\t')) --last;
  text = text.substr(first, last - first);
  if (text.empty() || text == "T") return Worm();
  std::vector<Ordinal> entries;
  std::size_t start = 0;
  std::size_t nodes = 0;
  while (true) {
    const std::size_t dot = text.find('.', start);
    const std::string_view piece = text.substr(start, dot == std::string_view::npos ? std::string_view::npos : dot - start);
    try {
      entries.push_back(parse_ordinal(piece, max_nodes));
    } catch (const ParseError& e) {
      throw ParseError(std::string("worm entry ") + std::to_string(entries.size() + 1) + ": " + e.what(),
                       first + start + e.position());
    }
    nodes += entries.back().node_count();
    if (nodes > max_nodes) throw TermBudgetExceeded("parsed worm exceeds term budget");
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  return Worm(std::move(entries));
}

}  // namespace wormlab
