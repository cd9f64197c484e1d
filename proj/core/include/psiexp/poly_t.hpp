#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "psiexp/rational.hpp"

namespace psiexp {

/// Dense univariate polynomial with Rational coefficients in ascending
/// powers. No trailing zeros are stored; the zero polynomial is empty.
class PolyT {
 public:
  PolyT() = default;
  explicit PolyT(std::vector<Rational> coeffs);

  static PolyT constant(const Rational& c);
  static PolyT monomial(const Rational& c, unsigned power);
  /// The identity polynomial t.
  static PolyT variable();

  /// Highest power with nonzero coefficient; nullopt for the zero polynomial.
  std::optional<unsigned> degree() const;
  bool is_zero() const { return coeffs_.empty(); }

  /// Coefficient of t^k (zero beyond the degree).
  Rational coefficient(unsigned k) const;
  std::span<const Rational> coefficients() const { return coeffs_; }

  Rational eval(const Rational& t) const;
  PolyT derivative() const;
  /// Returns q(t) = this(a*t + b).
  PolyT compose_affine(const Rational& a, const Rational& b) const;

  PolyT& operator+=(const PolyT& o);
  PolyT& operator-=(const PolyT& o);
  PolyT& operator*=(const PolyT& o);
  PolyT& operator*=(const Rational& c);

  friend PolyT operator+(PolyT a, const PolyT& b) { return a += b; }
  friend PolyT operator-(PolyT a, const PolyT& b) { return a -= b; }
  friend PolyT operator*(PolyT a, const PolyT& b) { return a *= b; }
  friend PolyT operator*(PolyT a, const Rational& c) { return a *= c; }
  friend PolyT operator*(const Rational& c, PolyT a) { return a *= c; }
  PolyT operator-() const;

  friend bool operator==(const PolyT&, const PolyT&) = default;

  /// Human-readable form, highest power first, e.g. "1/24*t^2 - 1/24*t + 23/5760".
  std::string to_string(char var = 't') const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

}  // namespace psiexp
