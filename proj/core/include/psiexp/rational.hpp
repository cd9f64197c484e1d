#pragma once

#include <compare>
#include <concepts>
#include <cstddef>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace psiexp {

/// Exact signed rational number, always kept in lowest terms with a
/// positive denominator. Zero is 0/1.
class Rational {
 public:
  Rational() = default;

  template <std::signed_integral I>
  Rational(I value) : q_(static_cast<long>(value)) {}  // NOLINT(implicit)

  template <std::unsigned_integral U>
  Rational(U value) : q_(static_cast<unsigned long>(value)) {}  // NOLINT(implicit)

  Rational(long num, long den);
  explicit Rational(mpq_class q);

  /// Builds num/den from decimal strings (either may carry a sign).
  /// Throws std::invalid_argument on malformed input or zero denominator.
  static Rational from_strings(std::string_view num, std::string_view den);

  /// Accepts "a/b" or "a" with optional leading sign.
  static Rational parse(std::string_view text);

  const mpq_class& get() const { return q_; }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  std::string numerator_string() const { return q_.get_num().get_str(); }
  std::string denominator_string() const { return q_.get_den().get_str(); }
  std::string to_string() const;

  /// Numerator as a machine integer; only valid when it fits in a long.
  long numerator_long() const;
  long denominator_long() const;

  Rational abs() const;
  Rational inverse() const;
  Rational pow(unsigned exponent) const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

 private:
  mpq_class q_{0};
};

/// Binomial coefficient C(n, k) for natural n.
Rational binomial(unsigned long n, unsigned long k);
Rational factorial(unsigned long n);

}  // namespace psiexp
