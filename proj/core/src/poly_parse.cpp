#include <cctype>
#include <stdexcept>
#include <string>

#include "psiexp/poly_pt.hpp"

namespace psiexp {

namespace {

// Recursive descent over
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := '-' unary | '+' unary | power
//   power  := atom ('^' natural)?
//   atom   := natural | 'p' | 't' | '(' expr ')'
class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  PolyPT parse() {
    PolyPT r = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected character");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("parse_poly: " + what + " at offset " + std::to_string(pos_) + " in '" +
                                std::string(s_) + "'");
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string digits() {
    skip_ws();
    const auto start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::string(s_.substr(start, pos_ - start));
  }

  PolyPT expr() {
    PolyPT acc = term();
    for (;;) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  PolyPT term() {
    PolyPT acc = unary();
    for (;;) {
      if (accept('*')) {
        acc *= unary();
      } else if (accept('/')) {
        const auto divisor = unary().as_constant();
        if (!divisor) fail("division by a non-constant");
        if (divisor->is_zero()) fail("division by zero");
        acc *= divisor->inverse();
      } else {
        return acc;
      }
    }
  }

  PolyPT unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  PolyPT power() {
    PolyPT base = atom();
    if (accept('^')) {
      const std::string e = digits();
      if (e.size() > 4) fail("exponent too large");
      return base.pow(static_cast<unsigned>(std::stoul(e)));
    }
    return base;
  }

  PolyPT atom() {
    if (accept('(')) {
      PolyPT inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (accept('p')) return PolyPT::var_p();
    if (accept('t')) return PolyPT::var_t();
    return PolyPT(Rational::from_strings(digits(), "1"));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

PolyPT parse_poly(std::string_view text) { return Parser(text).parse(); }

}  // namespace psiexp
