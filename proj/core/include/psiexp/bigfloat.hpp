#pragma once

#include <compare>
#include <ostream>
#include <string>

#include <mpfr.h>

#include "psiexp/rational.hpp"

namespace psiexp {

using Precision = mpfr_prec_t;

inline constexpr Precision kDefaultPrecision = 256;
inline constexpr Precision kMinPrecision = 64;

/// Binary floating-point value with its own precision in bits (MPFR,
/// round-to-nearest). Binary operations round to the larger operand
/// precision.
class BigFloat {
 public:
  explicit BigFloat(Precision prec = kDefaultPrecision);
  BigFloat(long value, Precision prec);
  BigFloat(double value, Precision prec);
  BigFloat(const Rational& value, Precision prec);
  /// Decimal string such as "0.5772156649"; throws std::invalid_argument.
  static BigFloat from_string(const std::string& text, Precision prec);

  BigFloat(const BigFloat& o);
  BigFloat(BigFloat&& o) noexcept;
  BigFloat& operator=(const BigFloat& o);
  BigFloat& operator=(BigFloat&& o) noexcept;
  ~BigFloat();

  Precision precision() const { return mpfr_get_prec(v_); }
  /// Value rounded to a new precision.
  BigFloat rounded(Precision prec) const;

  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// Scientific decimal with `digits` significant digits; digits = 0 picks
  /// floor(precision * log10(2)).
  std::string to_string(std::size_t digits = 0) const;

  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }

  BigFloat& operator+=(const BigFloat& o);
  BigFloat& operator-=(const BigFloat& o);
  BigFloat& operator*=(const BigFloat& o);
  BigFloat& operator/=(const BigFloat& o);
  friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
  friend BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
  friend BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
  friend BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }
  BigFloat operator-() const;

  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b);

  friend std::ostream& operator<<(std::ostream& os, const BigFloat& x) { return os << x.to_string(); }

 private:
  mpfr_t v_;
};

BigFloat abs(const BigFloat& x);
BigFloat log(const BigFloat& x);
BigFloat exp(const BigFloat& x);
BigFloat pow(const BigFloat& x, const BigFloat& y);
BigFloat pow(const BigFloat& x, long n);
BigFloat ldexp(const BigFloat& x, long e);  ///< x * 2^e
BigFloat const_log2(Precision prec);

}  // namespace psiexp
