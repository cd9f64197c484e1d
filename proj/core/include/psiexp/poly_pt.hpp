#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "psiexp/poly_t.hpp"
#include "psiexp/rational.hpp"

namespace psiexp {

enum class Var { p, t };

/// Exponent pair of a monomial p^p * t^t. Ordered by p-power, then t-power.
struct Exponents {
  unsigned p = 0;
  unsigned t = 0;
  friend auto operator<=>(const Exponents&, const Exponents&) = default;
};

/// Sparse bivariate polynomial in (p, t) with Rational coefficients.
/// Only nonzero coefficients are stored; the zero polynomial is the empty map.
class PolyPT {
 public:
  using TermMap = std::map<Exponents, Rational>;

  PolyPT() = default;
  PolyPT(const Rational& c);  // NOLINT(implicit): constants embed naturally

  static PolyPT monomial(const Rational& c, unsigned p_power, unsigned t_power);
  static PolyPT var_p();
  static PolyPT var_t();
  /// Lifts a univariate polynomial into the given variable.
  static PolyPT from_univariate(const PolyT& poly, Var var);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Coefficient of p^i t^j (zero if absent).
  Rational coefficient(unsigned p_power, unsigned t_power) const;

  /// Maximum exponent of `var` over stored monomials; nullopt for zero.
  std::optional<unsigned> degree_in(Var var) const;

  /// Exact substitution of a value for one variable.
  PolyPT eval_t(const Rational& t0) const;
  PolyPT eval_p(const Rational& p0) const;
  PolyPT eval(Var var, const Rational& value) const;
  /// Substitutes t := t + shift.
  PolyPT shift_t(const Rational& shift) const;

  PolyPT derivative_t() const;
  /// Coefficient of t^k, as a polynomial in p only.
  PolyPT t_coefficient(unsigned k) const;

  /// Collapses to a univariate polynomial; throws std::logic_error if the
  /// other variable occurs.
  PolyT to_univariate(Var var) const;
  /// Returns the value if this is a constant polynomial.
  std::optional<Rational> as_constant() const;

  PolyPT& operator+=(const PolyPT& o);
  PolyPT& operator-=(const PolyPT& o);
  PolyPT& operator*=(const PolyPT& o);
  PolyPT& operator*=(const Rational& c);

  friend PolyPT operator+(PolyPT a, const PolyPT& b) { return a += b; }
  friend PolyPT operator-(PolyPT a, const PolyPT& b) { return a -= b; }
  friend PolyPT operator*(const PolyPT& a, const PolyPT& b);
  friend PolyPT operator*(PolyPT a, const Rational& c) { return a *= c; }
  friend PolyPT operator*(const Rational& c, PolyPT a) { return a *= c; }
  PolyPT operator-() const;
  PolyPT pow(unsigned exponent) const;

  friend bool operator==(const PolyPT&, const PolyPT&) = default;

  /// Plain text, highest (p, t) monomial first: "1/2*p^2*t - 1/12*p".
  std::string to_string() const;
  /// LaTeX, using \tfrac for fractional coefficients.
  std::string to_latex() const;

 private:
  void add_term(const Exponents& e, const Rational& c);
  TermMap terms_;
};

inline PolyPT poly_mul(const PolyPT& a, const PolyPT& b) { return a * b; }
inline PolyPT poly_eval_t(const PolyPT& a, const Rational& t0) { return a.eval_t(t0); }
inline std::optional<unsigned> degree_in(const PolyPT& a, Var var) { return a.degree_in(var); }

/// Parses an expression over p and t with rational constants, e.g.
/// "1/24*p*(-2+3*p+12*t-12*p*t-12*t^2+12*p*t^2)". Supports + - * /, ^ with
/// a natural exponent, and parentheses. Division is allowed only by nonzero
/// constants. Throws std::invalid_argument on malformed input.
PolyPT parse_poly(std::string_view text);

}  // namespace psiexp
