#include "psiexp/numeric.hpp"

#include <algorithm>
#include <cmath>

#include "psiexp/bernoulli.hpp"

namespace psiexp {

namespace {

constexpr Precision kGuardBits = 32;

Precision lift_threshold(Precision prec) { return std::max<Precision>(32, prec / 4); }

unsigned asymptotic_terms(Precision prec) { return static_cast<unsigned>(2 * ((prec + 15) / 16)); }

Rational lift_point(unsigned long n, const Rational& t) {
  const Rational x = Rational(n) + Rational(1) - t;
  if (x.sign() <= 0) throw std::domain_error("approximant needs n + 1 - t > 0");
  return x;
}

}  // namespace

Rational harmonic(unsigned long n) {
  mpq_class acc(0);
  for (unsigned long k = 1; k <= n; ++k) acc += mpq_class(1, k);
  return Rational(acc);
}

BigFloat psi_ref(const BigFloat& x, Precision prec) {
  if (x.sign() <= 0) throw std::domain_error("psi_ref needs x > 0");
  const Precision work = prec + kGuardBits;
  const BigFloat one(1L, work);
  const BigFloat threshold(static_cast<long>(lift_threshold(prec)), work);

  BigFloat y = x.rounded(work);
  BigFloat lifted(work);
  while (y < threshold) {
    lifted += one / y;
    y += one;
  }

  const BigFloat inv_y2 = one / (y * y);
  BigFloat power = inv_y2;
  BigFloat series(work);
  const unsigned K = asymptotic_terms(prec);
  for (unsigned k = 1; k <= K; ++k) {
    series += BigFloat(bernoulli_number(2 * k) / Rational(2 * k), work) * power;
    power *= inv_y2;
  }
  BigFloat result = log(y) - one / (y + y) - series - lifted;
  return result.rounded(prec);
}

BigFloat euler_gamma(Precision prec) { return -psi_ref(BigFloat(1L, prec), prec); }

BigFloat eval_expansion(const GSeries& g, const Rational& p0, const Rational& t0, const BigFloat& x, unsigned N) {
  if (N > g.order()) throw std::out_of_range("eval_expansion: N exceeds the available coefficients");
  if (x.sign() <= 0) throw std::domain_error("eval_expansion needs x > 0");
  const Precision prec = x.precision();
  const BigFloat inv_x = BigFloat(1L, prec) / x;
  // Horner in 1/x over exactly specialized coefficients.
  BigFloat sum(prec);
  for (unsigned n = N + 1; n-- > 0;) {
    const auto c = g[n].eval_p(p0).eval_t(t0).as_constant();
    if (!c) throw std::logic_error("coefficient did not specialize to a constant");
    sum = sum * inv_x + BigFloat(*c, prec);
  }
  const BigFloat lead = p0.is_integer() ? pow(x, p0.numerator_long()) : pow(x, BigFloat(p0, prec));
  return lead * sum;
}

BigFloat eval_expansion(const Rational& p0, const Rational& t0, const BigFloat& x, unsigned N) {
  return eval_expansion(g_via_bernoulli(N, p0), p0, t0, x, N);
}

ApproxResult approx_gamma(unsigned long n, unsigned N, Precision prec, const Rational& t) {
  if (n < 1) throw std::domain_error("approx_gamma needs n >= 1");
  const BigFloat x(lift_point(n, t), prec);
  ApproxResult r;
  r.n = n;
  r.order_used = N;
  r.value = BigFloat(harmonic(n), prec) - log(eval_expansion(Rational(1), t, x, N));
  r.reference = euler_gamma(prec);
  r.abs_error = abs(r.value - r.reference);
  return r;
}

ApproxResult approx_harmonic(unsigned long n, unsigned N, Precision prec, const Rational& t) {
  if (n < 1) throw std::domain_error("approx_harmonic needs n >= 1");
  const BigFloat x(lift_point(n, t), prec);
  ApproxResult r;
  r.n = n;
  r.order_used = N;
  r.value = euler_gamma(prec) + log(eval_expansion(Rational(1), t, x, N));
  r.reference = BigFloat(harmonic(n), prec);
  r.abs_error = abs(r.value - r.reference);
  return r;
}

ApproxResult approx_exp_psi(unsigned long n, unsigned N, const Rational& p, const Rational& t, Precision prec) {
  if (n < 1) throw std::domain_error("approx_exp_psi needs n >= 1");
  const BigFloat x(Rational(n), prec);
  ApproxResult r;
  r.n = n;
  r.order_used = N;
  r.value = eval_expansion(p, t, x, N);
  const Rational arg = Rational(n) + t;
  if (arg.sign() <= 0) throw std::domain_error("approx_exp_psi needs n + t > 0");
  r.reference = exp(BigFloat(p, prec) * psi_ref(BigFloat(arg, prec), prec));
  r.abs_error = abs(r.value - r.reference);
  return r;
}

double convergence_order(std::span<const ErrorPoint> points) {
  if (points.size() < 2) throw DegenerateFit("convergence_order needs at least two points");
  std::vector<long double> lx, ly;
  for (const auto& pt : points) {
    if (pt.abs_error.is_zero()) throw DegenerateFit("error is zero: exceeds measurable order");
    if (pt.abs_error.sign() < 0 || pt.n <= 0) throw DegenerateFit("errors and n must be positive");
    lx.push_back(std::log(static_cast<long double>(pt.n)));
    ly.push_back(static_cast<long double>(log(pt.abs_error).to_double()));
  }
  const long double m = static_cast<long double>(lx.size());
  long double sx = 0, sy = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sx += lx[i];
    sy += ly[i];
  }
  const long double mx = sx / m, my = sy / m;
  long double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
  }
  if (sxx == 0) throw DegenerateFit("all points share the same n");
  return static_cast<double>(-sxy / sxx);
}

}  // namespace psiexp
