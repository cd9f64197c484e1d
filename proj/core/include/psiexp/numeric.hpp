#pragma once

#include <optional>
#include <span>
#include <stdexcept>

#include "psiexp/bigfloat.hpp"
#include "psiexp/expansions.hpp"
#include "psiexp/rational.hpp"

namespace psiexp {

/// One approximation and its error against an independent reference.
struct ApproxResult {
  unsigned long n = 0;
  unsigned order_used = 0;  ///< truncation order N
  BigFloat value;
  BigFloat reference;
  BigFloat abs_error;
  std::optional<double> est_order;
};

/// Exact H_n = 1 + 1/2 + ... + 1/n (H_0 = 0).
Rational harmonic(unsigned long n);

/// Digamma reference. Lifts the argument with psi(x) = psi(x+m) - sum 1/(x+k)
/// until x+m >= max(32, prec/4), then sums the asymptotic series
///   log y - 1/(2y) - sum_{k=1}^{K} B_{2k} / (2k y^{2k}),  K = 2*ceil(prec/16),
/// at prec + 32 bits. Throws std::domain_error for x <= 0.
BigFloat psi_ref(const BigFloat& x, Precision prec = kDefaultPrecision);

/// Euler's constant as -psi_ref(1).
BigFloat euler_gamma(Precision prec = kDefaultPrecision);

/// x^{p0} * sum_{n<=N} G_n(p0, t0) x^{-n}, coefficients specialized exactly
/// and converted at the precision of x. Requires N <= g.order(), x > 0.
BigFloat eval_expansion(const GSeries& g, const Rational& p0, const Rational& t0, const BigFloat& x, unsigned N);
/// Builds the fixed-p series internally.
BigFloat eval_expansion(const Rational& p0, const Rational& t0, const BigFloat& x, unsigned N);

/// gamma ~ H_n - log(x * sum_{k<=N} S_k(t) x^{-k}) with x = n + 1 - t, so
/// that x + t = n + 1. Reference: euler_gamma. t defaults to 1.
ApproxResult approx_gamma(unsigned long n, unsigned N, Precision prec = kDefaultPrecision, const Rational& t = 1);

/// H_n ~ gamma + log(x * sum_{k<=N} S_k(t) x^{-k}) with x = n + 1 - t.
/// Reference: exact H_n rounded to prec.
ApproxResult approx_harmonic(unsigned long n, unsigned N, Precision prec = kDefaultPrecision, const Rational& t = 1);

/// exp(p psi(x+t)) ~ truncated series at x = n. Reference: exp(p psi_ref(n+t)).
ApproxResult approx_exp_psi(unsigned long n, unsigned N, const Rational& p, const Rational& t,
                            Precision prec = kDefaultPrecision);

struct ErrorPoint {
  double n = 0;
  BigFloat abs_error;
};

class DegenerateFit : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Negated least-squares slope of log(error) against log(n).
/// Throws DegenerateFit with fewer than two distinct n, or if any error is 0
/// ("exceeds measurable order").
double convergence_order(std::span<const ErrorPoint> points);

}  // namespace psiexp
