#include "term_syntax.hpp"

#include <cctype>
#include <limits>
#include <string>

#include "wormlab/ordinal.hpp"

namespace wormlab::detail {
namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  std::unique_ptr<Syntax> parse() {
    auto result = sum();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected");
    return result;
  }

 private:
  [[noreturn]] void fail(const char* what) const {
    std::string token = pos_ < text_.size() ? std::string(1, text_[pos_]) : "end of input";
    throw ParseError(std::string(what) + " '" + token + "' at position " + std::to_string(pos_),
                     pos_);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::uint64_t natural() {
    skip_space();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail("expected a natural number, found");
    }
    std::uint64_t value = 0;
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const std::uint64_t digit = static_cast<std::uint64_t>(text_[pos_] - '0');
      if (value > (std::numeric_limits<std::uint64_t>::max() - digit) / 10) {
        pos_ = start;
        fail("natural number too large");
      }
      value = value * 10 + digit;
      ++pos_;
    }
    return value;
  }

  std::unique_ptr<Syntax> make(Syntax::Kind kind, std::size_t at) {
    auto node = std::make_unique<Syntax>();
    node->kind = kind;
    node->position = at;
    return node;
  }

  std::unique_ptr<Syntax> sum() {
    skip_space();
    auto node = make(Syntax::Kind::sum, pos_);
    node->children.push_back(product());
    while (accept('+')) node->children.push_back(product());
    if (node->children.size() == 1) return std::move(node->children.front());
    return node;
  }

  std::unique_ptr<Syntax> product() {
    auto base = power();
    while (accept('*')) {
      auto node = make(Syntax::Kind::times, base->position);
      node->value = natural();
      node->children.push_back(std::move(base));
      base = std::move(node);
    }
    return base;
  }

  std::unique_ptr<Syntax> power() {
    auto base = atom();
    if (accept('^')) {
      if (base->kind != Syntax::Kind::omega) {
        --pos_;
        fail("exponent base must be w, found");
      }
      auto node = make(Syntax::Kind::power, base->position);
      node->children.push_back(power());
      return node;
    }
    return base;
  }

  std::unique_ptr<Syntax> atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected");
    const char c = text_[pos_];
    if (c == 'w') {
      auto node = make(Syntax::Kind::omega, pos_);
      ++pos_;
      return node;
    }
    if (c == '(') {
      ++pos_;
      auto inner = sum();
      if (!accept(')')) fail("expected ')', found");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      auto node = make(Syntax::Kind::natural, pos_);
      node->value = natural();
      return node;
    }
    fail("unexpected");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::unique_ptr<Syntax> parse_term_syntax(std::string_view text) { return Parser(text).parse(); }

}  // namespace wormlab::detail
