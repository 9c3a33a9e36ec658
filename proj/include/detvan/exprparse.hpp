#pragma once

// Polynomial expression grammar:
//
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := '-' factor | base ('^' nat)?
//   base   := nat | name | '(' expr ')'
//
// `^` binds tighter than unary minus, so -x^2 is -(x^2). Whitespace is
// ignored between tokens. Multiplication must be written explicitly.

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "detvan/errors.hpp"
#include "detvan/polynomial.hpp"

namespace detvan {

namespace detail {

class ExprParser {
 public:
  ExprParser(std::string_view src, RingPtr ring) : src_(src), ring_(std::move(ring)) {}

  Polynomial parse() {
    skip_ws();
    if (pos_ == src_.size()) fail("empty expression");
    Polynomial p = expr();
    skip_ws();
    if (pos_ != src_.size()) fail(std::string("unexpected character '") + src_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else return acc;
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (accept('*')) acc *= factor();
    return acc;
  }

  Polynomial factor() {
    if (accept('-')) return -factor();
    Polynomial b = base();
    if (accept('^')) {
      skip_ws();
      if (pos_ < src_.size() && src_[pos_] == '-') fail("negative exponent");
      const Integer e = natural();
      if (e > 100000) fail("exponent too large");
      return pow(b, static_cast<unsigned>(e.get_ui()));
    }
    return b;
  }

  Polynomial base() {
    skip_ws();
    if (pos_ >= src_.size()) fail("unexpected end of input");
    const char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Polynomial::constant(ring_, Rational(natural()));
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
        ++pos_;
      const std::string name(src_.substr(start, pos_ - start));
      auto idx = ring_->index_of(name);
      if (!idx) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return Polynomial::variable(ring_, *idx);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  Integer natural() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a natural number");
    return Integer(std::string(src_.substr(start, pos_ - start)));
  }

  std::string_view src_;
  RingPtr ring_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Polynomial parse_poly(std::string_view src, const RingPtr& ring) {
  return detail::ExprParser(src, ring).parse();
}

inline Polynomial parse_poly(std::string_view src, const std::vector<std::string>& vars) {
  return parse_poly(src, make_ring(vars));
}

}  // namespace detvan
