#pragma once

#include <string>

#include "psiexp/rational.hpp"

namespace psiexp::detail {

inline std::string power_string(char var, unsigned k) {
  std::string s(1, var);
  if (k > 1) s += "^" + std::to_string(k);
  return s;
}

// Accumulates signed terms "c*mono" into "a - b + c" form.
class TermWriter {
 public:
  void add(const Rational& c, const std::string& mono) {
    const bool neg = c.sign() < 0;
    const Rational mag = c.abs();
    std::string term;
    if (mono.empty()) {
      term = mag.to_string();
    } else if (mag == Rational(1)) {
      term = mono;
    } else {
      term = mag.to_string() + "*" + mono;
    }
    if (out_.empty()) {
      out_ = neg ? "-" + term : term;
    } else {
      out_ += neg ? " - " : " + ";
      out_ += term;
    }
  }
  std::string str() const { return out_.empty() ? "0" : out_; }

 private:
  std::string out_;
};

}  // namespace psiexp::detail
