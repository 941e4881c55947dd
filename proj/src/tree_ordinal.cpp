#include "wormlab/tree_ordinal.hpp"

#include <algorithm>

#include "term_syntax.hpp"

namespace wormlab {
namespace {

const std::vector<TreeOrdinal> kNoExponents;

// t = k_{-1} + w^{t_0} + k_0 + ... + w^{t_n} + k_n with every t_i != 0.
struct Blocks {
  std::uint64_t leading_units = 0;
  std::vector<const TreeOrdinal*> powers;
  std::vector<std::uint64_t> units_after;
};

Blocks decompose(const TreeOrdinal& t) {
  Blocks blocks;
  for (const auto& e : t.exponents()) {
    if (e.is_zero()) {
      if (blocks.powers.empty()) {
        ++blocks.leading_units;
      } else {
        ++blocks.units_after.back();
      }
    } else {
      blocks.powers.push_back(&e);
      blocks.units_after.push_back(0);
    }
  }
  return blocks;
}

bool reduces_impl(const TreeOrdinal& t, const TreeOrdinal& u, bool keep_end) {
  if (t == u) return true;
  const Blocks bt = decompose(t);
  const Blocks bu = decompose(u);
  if (bt.leading_units != bu.leading_units || bt.powers.size() != bu.powers.size()) return false;
  const std::size_t n = bt.powers.size();
  for (std::size_t i = 0; i < n; ++i) {
    const bool last = i + 1 == n;
    const std::uint64_t k = bt.units_after[i];
    const std::uint64_t k2 = bu.units_after[i];
    if (last && keep_end) {
      if (k != k2 || !reduces_impl(*bt.powers[i], *bu.powers[i], true)) return false;
    } else {
      if (k2 > k || k - k2 > 1 || !reduces_impl(*bt.powers[i], *bu.powers[i], false)) return false;
    }
  }
  return true;
}

}  // namespace

TreeOrdinal TreeOrdinal::units(std::uint64_t k) {
  if (k == 0) return TreeOrdinal();
  if (k > kDefaultTermBudget) throw TermBudgetExceeded("tree ordinal exceeds term budget");
  return TreeOrdinal(std::make_shared<const std::vector<TreeOrdinal>>(k, TreeOrdinal()));
}

TreeOrdinal TreeOrdinal::omega_power(const TreeOrdinal& exponent) {
  return TreeOrdinal(std::make_shared<const std::vector<TreeOrdinal>>(1, exponent));
}

TreeOrdinal TreeOrdinal::from_exponents(std::vector<TreeOrdinal> exponents) {
  if (exponents.empty()) return TreeOrdinal();
  return TreeOrdinal(std::make_shared<const std::vector<TreeOrdinal>>(std::move(exponents)));
}

bool TreeOrdinal::is_successor() const noexcept {
  return exponents_ != nullptr && exponents_->back().is_zero();
}

std::span<const TreeOrdinal> TreeOrdinal::exponents() const noexcept {
  return exponents_ ? std::span<const TreeOrdinal>(*exponents_)
                    : std::span<const TreeOrdinal>(kNoExponents);
}

std::size_t TreeOrdinal::node_count() const noexcept {
  std::size_t count = 1;
  for (const auto& e : exponents()) count += e.node_count();
  return count;
}

std::size_t TreeOrdinal::trailing_units() const noexcept {
  const auto es = exponents();
  std::size_t k = 0;
  while (k < es.size() && es[es.size() - 1 - k].is_zero()) ++k;
  return k;
}

TreeOrdinal TreeOrdinal::drop_last(std::size_t k) const {
  const auto es = exponents();
  if (k >= es.size()) return TreeOrdinal();
  return from_exponents(std::vector<TreeOrdinal>(es.begin(), es.end() - static_cast<std::ptrdiff_t>(k)));
}

bool operator==(const TreeOrdinal& a, const TreeOrdinal& b) {
  if (a.exponents_ == b.exponents_) return true;
  const auto ae = a.exponents();
  const auto be = b.exponents();
  return std::equal(ae.begin(), ae.end(), be.begin(), be.end());
}

TreeOrdinal operator+(const TreeOrdinal& a, const TreeOrdinal& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  std::vector<TreeOrdinal> es(a.exponents().begin(), a.exponents().end());
  es.insert(es.end(), b.exponents().begin(), b.exponents().end());
  return TreeOrdinal::from_exponents(std::move(es));
}

TreeOrdinal repeat(const TreeOrdinal& t, std::uint64_t k) {
  if (k == 0 || t.is_zero()) return TreeOrdinal();
  if (t.size() * k > kDefaultTermBudget) throw TermBudgetExceeded("tree ordinal exceeds term budget");
  std::vector<TreeOrdinal> es;
  es.reserve(t.size() * k);
  for (std::uint64_t i = 0; i < k; ++i) es.insert(es.end(), t.exponents().begin(), t.exponents().end());
  return TreeOrdinal::from_exponents(std::move(es));
}

Ordinal collapse(const TreeOrdinal& t) {
  Ordinal result;
  for (const auto& e : t.exponents()) result = add(result, Ordinal::omega_power(collapse(e)));
  return result;
}

TreeOrdinal fs_std(const TreeOrdinal& t, std::uint64_t x) {
  if (t.is_zero()) return t;
  if (t.is_successor()) return t.drop_last(1);
  const auto es = t.exponents();
  std::vector<TreeOrdinal> out(es.begin(), es.end() - 1);
  const TreeOrdinal& e = es.back();
  if (e.is_successor()) {
    const TreeOrdinal s = e.drop_last(1);
    if (out.size() + x > kDefaultTermBudget) throw TermBudgetExceeded("tree ordinal exceeds term budget");
    out.insert(out.end(), x, s);
  } else {
    out.push_back(fs_std(e, x));
  }
  return TreeOrdinal::from_exponents(std::move(out));
}

TreeOrdinal fs_worm(const TreeOrdinal& t, std::uint64_t x) {
  if (t.is_zero()) return t;
  if (t.is_successor()) return t.drop_last(1);
  const auto es = t.exponents();
  std::vector<TreeOrdinal> out(es.begin(), es.end() - 1);
  const TreeOrdinal& e = es.back();
  if (e.is_successor()) {
    const TreeOrdinal s = e.drop_last(1);
    if (out.size() + 2 * x > kDefaultTermBudget) throw TermBudgetExceeded("tree ordinal exceeds term budget");
    if (s.is_zero()) {
      out.insert(out.end(), x, TreeOrdinal());
    } else {
      for (std::uint64_t i = 0; i < x; ++i) {
        out.push_back(s);
        out.push_back(TreeOrdinal());
      }
    }
  } else {
    out.push_back(fs_worm(e, x));
  }
  return TreeOrdinal::from_exponents(std::move(out));
}

std::uint64_t norm(const TreeOrdinal& t) {
  std::uint64_t total = t.size();
  for (const auto& e : t.exponents()) total += norm(e);
  return total;
}

std::uint64_t correction(const TreeOrdinal& t) {
  const auto es = t.exponents();
  if (es.empty()) return 0;
  std::vector<Ordinal> collapsed;
  collapsed.reserve(es.size());
  for (const auto& e : es) collapsed.push_back(collapse(e));

  std::uint64_t inverted = 0;
  std::uint64_t inner = 0;
  Ordinal later_max;
  bool have_later = false;
  for (std::size_t i = es.size(); i-- > 0;) {
    if (have_later && collapsed[i] < later_max) inverted += 1 + norm(es[i]);
    if (!have_later || later_max < collapsed[i]) later_max = collapsed[i];
    have_later = true;
    inner = std::max(inner, correction(es[i]));
  }
  return inverted + inner;
}

bool reduces(const TreeOrdinal& t, const TreeOrdinal& u) { return reduces_impl(t, u, false); }

bool reduces_end(const TreeOrdinal& t, const TreeOrdinal& u) { return reduces_impl(t, u, true); }

Reach reachable_fs(const TreeOrdinal& t, const TreeOrdinal& s, std::uint64_t n,
                   std::uint64_t max_steps) {
  const Ordinal target = collapse(t);
  TreeOrdinal current = s;
  for (std::uint64_t step = 0;; ++step) {
    if (current == t) return Reach::yes;
    // Collapses strictly decrease along the iteration.
    if (current.is_zero() || collapse(current) < target) return Reach::no;
    if (step == max_steps) return Reach::unknown;
    current = fs_std(current, n);
  }
}

namespace {

struct TreeBuilder {
  std::size_t max_nodes;
  std::size_t nodes = 0;

  void check(const TreeOrdinal& t) {
    nodes += t.node_count();
    if (nodes > max_nodes) throw TermBudgetExceeded("parsed tree ordinal exceeds term budget");
  }

  TreeOrdinal build(const detail::Syntax& node) {
    TreeOrdinal result;
    switch (node.kind) {
      case detail::Syntax::Kind::natural:
        if (node.value > max_nodes) throw TermBudgetExceeded("parsed tree ordinal exceeds term budget");
        result = TreeOrdinal::units(node.value);
        break;
      case detail::Syntax::Kind::omega:
        result = TreeOrdinal::omega_power(TreeOrdinal::units(1));
        break;
      case detail::Syntax::Kind::power:
        result = TreeOrdinal::omega_power(build(*node.children.front()));
        break;
      case detail::Syntax::Kind::times: {
        const TreeOrdinal base = build(*node.children.front());
        if (node.value != 0 && base.size() > max_nodes / node.value) {
          throw TermBudgetExceeded("parsed tree ordinal exceeds term budget");
        }
        result = repeat(base, node.value);
        break;
      }
      case detail::Syntax::Kind::sum:
        for (const auto& child : node.children) result = result + build(*child);
        break;
    }
    check(result);
    return result;
  }
};

void append_tree(std::string& out, const TreeOrdinal& t) {
  const auto es = t.exponents();
  if (es.empty()) {
    out += '0';
    return;
  }
  bool first = true;
  for (std::size_t i = 0; i < es.size();) {
    std::size_t j = i + 1;
    while (j < es.size() && es[j] == es[i]) ++j;
    const std::size_t run = j - i;
    if (!first) out += '+';
    first = false;
    const TreeOrdinal& e = es[i];
    if (e.is_zero()) {
      out += std::to_string(run);
    } else {
      out += 'w';
      const bool all_units = e.trailing_units() == e.size();
      if (!(all_units && e.size() == 1)) {
        out += '^';
        if (all_units) {
          out += std::to_string(e.size());
        } else if (e.size() == 1 && e.exponents().front() == TreeOrdinal::units(1)) {
          out += 'w';
        } else {
          out += '(';
          append_tree(out, e);
          out += ')';
        }
      }
      if (run > 1) {
        out += '*';
        out += std::to_string(run);
      }
    }
    i = j;
  }
}

}  // namespace

std::string TreeOrdinal::to_string() const {
  std::string out;
  append_tree(out, *this);
  return out;
}

TreeOrdinal parse_tree(std::string_view text, std::size_t max_nodes) {
  const auto syntax = detail::parse_term_syntax(text);
  return TreeBuilder{max_nodes}.build(*syntax);
}

TreeOrdinal canonical_tree(const Ordinal& a) {
  std::vector<TreeOrdinal> es;
  for (const auto& term : a.terms()) {
    if (es.size() + term.coefficient > kDefaultTermBudget) {
      throw TermBudgetExceeded("canonical tree exceeds term budget");
    }
    es.insert(es.end(), term.coefficient, canonical_tree(term.exponent));
  }
  return TreeOrdinal::from_exponents(std::move(es));
}

}  // namespace wormlab
