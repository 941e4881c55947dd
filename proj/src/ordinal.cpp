#include "wormlab/ordinal.hpp"

#include <algorithm>
#include <limits>

#include "term_syntax.hpp"

namespace wormlab {
namespace {

const std::vector<CnfTerm> kNoTerms;

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (a > std::numeric_limits<std::uint64_t>::max() - b) {
    throw std::overflow_error("ordinal coefficient overflow");
  }
  return a + b;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    throw std::overflow_error("ordinal coefficient overflow");
  }
  return a * b;
}

}  // namespace

Ordinal::Ordinal(std::uint64_t n) {
  if (n != 0) terms_ = std::make_shared<const std::vector<CnfTerm>>(std::vector<CnfTerm>{{Ordinal(), n}});
}

Ordinal Ordinal::omega() { return omega_power(Ordinal(1)); }

Ordinal Ordinal::omega_power(const Ordinal& exponent, std::uint64_t coefficient) {
  if (coefficient == 0) return Ordinal();
  return Ordinal(std::make_shared<const std::vector<CnfTerm>>(
      std::vector<CnfTerm>{{exponent, coefficient}}));
}

Ordinal Ordinal::from_terms(std::vector<CnfTerm> terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coefficient == 0) throw std::invalid_argument("CNF coefficient must be positive");
    if (i > 0 && !(terms[i].exponent < terms[i - 1].exponent)) {
      throw std::invalid_argument("CNF exponents must be strictly decreasing");
    }
  }
  if (terms.empty()) return Ordinal();
  return Ordinal(std::make_shared<const std::vector<CnfTerm>>(std::move(terms)));
}

std::span<const CnfTerm> Ordinal::terms() const noexcept {
  return terms_ ? std::span<const CnfTerm>(*terms_) : std::span<const CnfTerm>(kNoTerms);
}

bool Ordinal::is_successor() const noexcept {
  return terms_ != nullptr && terms_->back().exponent.is_zero();
}

bool Ordinal::is_natural() const noexcept {
  return terms_ == nullptr || (terms_->size() == 1 && terms_->front().exponent.is_zero());
}

std::optional<std::uint64_t> Ordinal::as_natural() const noexcept {
  if (terms_ == nullptr) return 0;
  if (terms_->size() == 1 && terms_->front().exponent.is_zero()) return terms_->front().coefficient;
  return std::nullopt;
}

std::size_t Ordinal::node_count() const noexcept {
  std::size_t count = 1;
  for (const auto& term : terms()) count += term.exponent.node_count();
  return count;
}

Ordinal Ordinal::successor() const { return add(*this, Ordinal(1)); }

Ordinal Ordinal::predecessor() const {
  if (!is_successor()) throw DomainError("predecessor of a non-successor ordinal");
  std::vector<CnfTerm> terms(terms_->begin(), terms_->end());
  if (--terms.back().coefficient == 0) terms.pop_back();
  return from_terms(std::move(terms));
}

std::strong_ordering compare(const Ordinal& a, const Ordinal& b) {
  const auto at = a.terms();
  const auto bt = b.terms();
  if (at.data() == bt.data() && at.size() == bt.size()) return std::strong_ordering::equal;
  const std::size_t n = std::min(at.size(), bt.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = compare(at[i].exponent, bt[i].exponent); c != 0) return c;
    if (auto c = at[i].coefficient <=> bt[i].coefficient; c != 0) return c;
  }
  return at.size() <=> bt.size();
}

std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) { return compare(a, b); }

bool operator==(const Ordinal& a, const Ordinal& b) { return compare(a, b) == 0; }

Ordinal add(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return b;
  const auto bt = b.terms();
  const Ordinal& lead = bt.front().exponent;
  std::vector<CnfTerm> terms;
  terms.reserve(a.terms().size() + bt.size());
  for (const auto& term : a.terms()) {
    const auto c = compare(term.exponent, lead);
    if (c > 0) {
      terms.push_back(term);
    } else {
      if (c == 0) {
        terms.push_back({lead, checked_add(term.coefficient, bt.front().coefficient)});
        terms.insert(terms.end(), bt.begin() + 1, bt.end());
        return Ordinal::from_terms(std::move(terms));
      }
      break;
    }
  }
  terms.insert(terms.end(), bt.begin(), bt.end());
  return Ordinal::from_terms(std::move(terms));
}

Ordinal multiply_natural(const Ordinal& a, std::uint64_t n) {
  if (n == 0 || a.is_zero()) return Ordinal();
  std::vector<CnfTerm> terms(a.terms().begin(), a.terms().end());
  terms.front().coefficient = checked_mul(terms.front().coefficient, n);
  return Ordinal::from_terms(std::move(terms));
}

Ordinal fund_seq(const Ordinal& a, std::uint64_t x) {
  if (a.is_zero()) return a;
  if (a.is_successor()) return a.predecessor();
  std::vector<CnfTerm> terms(a.terms().begin(), a.terms().end());
  const Ordinal exponent = terms.back().exponent;
  if (--terms.back().coefficient == 0) terms.pop_back();
  if (exponent.is_successor()) {
    if (x > 0) terms.push_back({exponent.predecessor(), x});
  } else {
    terms.push_back({fund_seq(exponent, x), 1});
  }
  return Ordinal::from_terms(std::move(terms));
}

std::uint64_t norm(const Ordinal& a) {
  std::uint64_t total = 0;
  for (const auto& term : a.terms()) {
    total = checked_add(total, checked_mul(term.coefficient, 1 + norm(term.exponent)));
  }
  return total;
}

Ordinal omega_tower(std::uint64_t n, std::size_t max_nodes) {
  // w_n has n+1 nodes in this representation.
  if (n >= max_nodes) throw TermBudgetExceeded("omega tower exceeds term budget");
  Ordinal result(1);
  for (std::uint64_t i = 0; i < n; ++i) result = Ordinal::omega_power(result);
  return result;
}

namespace {

struct OrdinalBuilder {
  std::size_t max_nodes;
  std::size_t nodes = 0;

  void charge(std::size_t count) {
    nodes += count;
    if (nodes > max_nodes) throw TermBudgetExceeded("parsed ordinal exceeds term budget");
  }

  Ordinal build(const detail::Syntax& node) {
    charge(1);
    switch (node.kind) {
      case detail::Syntax::Kind::natural:
        return Ordinal(node.value);
      case detail::Syntax::Kind::omega:
        return Ordinal::omega();
      case detail::Syntax::Kind::power:
        return Ordinal::omega_power(build(*node.children.front()));
      case detail::Syntax::Kind::times:
        return multiply_natural(build(*node.children.front()), node.value);
      case detail::Syntax::Kind::sum: {
        Ordinal total;
        for (const auto& child : node.children) total = add(total, build(*child));
        return total;
      }
    }
    return Ordinal();
  }
};

void append_ordinal(std::string& out, const Ordinal& a);

void append_exponent(std::string& out, const Ordinal& e) {
  if (e.is_natural()) {
    out += std::to_string(*e.as_natural());
  } else if (e == Ordinal::omega()) {
    out += 'w';
  } else {
    out += '(';
    append_ordinal(out, e);
    out += ')';
  }
}

void append_ordinal(std::string& out, const Ordinal& a) {
  if (a.is_zero()) {
    out += '0';
    return;
  }
  bool first = true;
  for (const auto& term : a.terms()) {
    if (!first) out += '+';
    first = false;
    if (term.exponent.is_zero()) {
      out += std::to_string(term.coefficient);
      continue;
    }
    out += 'w';
    if (term.exponent != Ordinal(1)) {
      out += '^';
      append_exponent(out, term.exponent);
    }
    if (term.coefficient != 1) {
      out += '*';
      out += std::to_string(term.coefficient);
    }
  }
}

}  // namespace

std::string Ordinal::to_string() const {
  std::string out;
  append_ordinal(out, *this);
  return out;
}

Ordinal parse_ordinal(std::string_view text, std::size_t max_nodes) {
  const auto syntax = detail::parse_term_syntax(text);
  return OrdinalBuilder{max_nodes}.build(*syntax);
}

std::size_t OrdinalHash::operator()(const Ordinal& a) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (const auto& term : a.terms()) {
    h ^= (*this)(term.exponent) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= std::hash<std::uint64_t>{}(term.coefficient) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace wormlab
