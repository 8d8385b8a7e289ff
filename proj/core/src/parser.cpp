#include <cctype>
#include <charconv>

#include "frobkit/error.hpp"
#include "frobkit/polynomial.hpp"

namespace frobkit {

namespace {

// Recursive descent over
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' int)?
//   base   := int | var | '(' expr ')'
// A leading '-' before a term is accepted as negation.
class Parser {
 public:
  Parser(std::string_view text, const Ring& ring) : text_(text), ring_(ring) {}

  Polynomial parse() {
    auto p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial acc(ring_);
    if (accept('-')) {
      acc -= term();
    } else {
      acc += term();
    }
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    auto acc = factor();
    while (accept('*')) acc *= factor();
    return acc;
  }

  Polynomial factor() {
    auto b = base();
    if (!accept('^')) return b;
    skip_ws();
    auto start = pos_;
    auto e = integer();
    if (e >= 0) return pow(b, static_cast<std::uint64_t>(e));
    if (!b.is_monomial()) {
      pos_ = start;
      fail("negative exponent on a non-monomial");
    }
    if (!ring_->laurent()) {
      pos_ = start;
      fail("negative exponent in a non-Laurent ring");
    }
    const auto& t = b.leading();
    Monomial m;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (__builtin_mul_overflow(t.mono.exp[i], e, &m.exp[i])) throw ExponentOverflow();
    }
    Coeff c = ring_->modulus().inv(t.coeff);
    return Polynomial::monomial(ring_, m, ring_->modulus().pow(c, static_cast<std::uint64_t>(-e)));
  }

  Polynomial base() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      auto inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
      return Polynomial::constant(ring_, ring_->modulus().reduce(integer()));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      auto start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string name(text_.substr(start, pos_ - start));
      auto idx = ring_->index_of(name);
      if (!idx) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return Polynomial::variable(ring_, *idx);
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::int64_t integer() {
    skip_ws();
    auto start = pos_;
    if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, v);
    if (ec != std::errc() || ptr != text_.data() + pos_) {
      pos_ = start;
      fail("malformed integer");
    }
    return v;
  }

  std::string_view text_;
  const Ring& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_poly(std::string_view text, const Ring& ring) { return Parser(text, ring).parse(); }

}  // namespace frobkit
