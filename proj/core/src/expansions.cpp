#include "psiexp/expansions.hpp"

#include <stdexcept>

#include "psiexp/bernoulli.hpp"

namespace psiexp {

std::string_view route_name(Route route) {
  switch (route) {
    case Route::power_transform:
      return "power-transform";
    case Route::bernoulli_recurrence:
      return "bernoulli-recurrence";
    case Route::compositions:
      return "explicit-compositions";
  }
  return "unknown";
}

Route route_from_name(std::string_view name) {
  for (Route r : {Route::power_transform, Route::bernoulli_recurrence, Route::compositions})
    if (route_name(r) == name) return r;
  throw std::invalid_argument("unknown route '" + std::string(name) + "'");
}

namespace {

// (-1)^{k+1} B_k(t) for k = 0..N (entry 0 unused).
std::vector<PolyPT> signed_bernoulli(unsigned N) {
  std::vector<PolyPT> out(N + 1);
  for (unsigned k = 1; k <= N; ++k) {
    PolyPT b = PolyPT::from_univariate(bernoulli_poly(k), Var::t);
    out[k] = k % 2 == 1 ? b : -b;
  }
  return out;
}

GSeries bernoulli_recurrence(unsigned N, const PolyPT& p) {
  const auto sb = signed_bernoulli(N);
  GSeries g;
  g.route = Route::bernoulli_recurrence;
  g.coeffs.reserve(N + 1);
  g.coeffs.emplace_back(1);
  for (unsigned n = 1; n <= N; ++n) {
    PolyPT acc;
    for (unsigned k = 1; k <= n; ++k) acc += sb[k] * g.coeffs[n - k];
    g.coeffs.push_back(p * acc * Rational(1, n));
  }
  return g;
}

void collect_compositions(unsigned remaining, unsigned parts, const PolyT& product, std::vector<PolyT>& sums,
                          const std::vector<PolyT>& scaled) {
  if (remaining == 0) {
    sums[parts] += product;
    return;
  }
  for (unsigned k = 1; k <= remaining; ++k) collect_compositions(remaining - k, parts + 1, product * scaled[k], sums, scaled);
}

}  // namespace

SSeries s_coeffs(unsigned N) {
  // Same recurrence as G with p = 1.
  const GSeries g = bernoulli_recurrence(N, PolyPT(1));
  SSeries s;
  s.coeffs.reserve(N + 1);
  for (const auto& c : g.coeffs) s.coeffs.push_back(c.to_univariate(Var::t));
  return s;
}

Expansion power_transform(const Expansion& a, const PolyPT& power) {
  if (a.coeffs.empty() || a.coeffs.front() != PolyPT(1))
    throw std::invalid_argument("power_transform requires a_0 = 1");
  const std::size_t N = a.coeffs.size() - 1;
  Expansion b;
  b.base_exponent = a.base_exponent * power;
  b.coeffs.reserve(N + 1);
  b.coeffs.emplace_back(1);
  const PolyPT one_plus_power = power + PolyPT(1);
  for (std::size_t n = 1; n <= N; ++n) {
    PolyPT acc;
    for (std::size_t k = 1; k <= n; ++k) {
      if (a.coeffs[k].is_zero()) continue;
      const PolyPT weight = one_plus_power * Rational(k) - PolyPT(Rational(n));
      acc += weight * a.coeffs[k] * b.coeffs[n - k];
    }
    b.coeffs.push_back(acc * Rational(1, static_cast<long>(n)));
  }
  return b;
}

GSeries g_via_power_transform(unsigned N) {
  const SSeries s = s_coeffs(N);
  Expansion a;
  a.base_exponent = PolyPT(1);
  for (const auto& c : s.coeffs) a.coeffs.push_back(PolyPT::from_univariate(c, Var::t));
  Expansion b = power_transform(a, PolyPT::var_p());
  return GSeries{std::move(b.coeffs), Route::power_transform};
}

GSeries g_via_bernoulli(unsigned N) { return bernoulli_recurrence(N, PolyPT::var_p()); }

GSeries g_via_bernoulli(unsigned N, const Rational& p0) { return bernoulli_recurrence(N, PolyPT(p0)); }

std::vector<PolyT> composition_power_sums(unsigned n, unsigned limit) {
  if (n > limit)
    throw LimitExceeded("composition route limited to n <= " + std::to_string(limit) + ", requested " +
                        std::to_string(n));
  std::vector<PolyT> scaled(n + 1);
  for (unsigned k = 1; k <= n; ++k) scaled[k] = bernoulli_poly(k) * Rational(1, k);
  std::vector<PolyT> sums(n + 1);
  if (n == 0) {
    sums[0] = PolyT::constant(1);
    return sums;
  }
  collect_compositions(n, 0, PolyT::constant(1), sums, scaled);
  return sums;
}

GSeries g_via_compositions(unsigned N, unsigned limit) {
  if (N > limit)
    throw LimitExceeded("composition route limited to N <= " + std::to_string(limit) + ", requested " +
                        std::to_string(N));
  GSeries g;
  g.route = Route::compositions;
  g.coeffs.reserve(N + 1);
  g.coeffs.emplace_back(1);
  const PolyPT minus_p = -PolyPT::var_p();
  for (unsigned n = 1; n <= N; ++n) {
    const auto sums = composition_power_sums(n, limit);
    PolyPT acc;
    PolyPT minus_p_pow(1);
    for (unsigned r = 1; r <= n; ++r) {
      minus_p_pow *= minus_p;
      acc += minus_p_pow * PolyPT::from_univariate(sums[r], Var::t) * factorial(r).inverse();
    }
    g.coeffs.push_back(n % 2 == 0 ? acc : -acc);
  }
  return g;
}

PolyPT binomial_in_p(long shift, unsigned k) {
  PolyPT r(1);
  for (unsigned j = 0; j < k; ++j) r *= PolyPT::var_p() + PolyPT(Rational(shift - static_cast<long>(j)));
  return r * factorial(k).inverse();
}

PolyPT shift_compose(const GSeries& g, unsigned n, const Rational& s, const std::optional<Rational>& t) {
  if (n > g.order()) throw std::out_of_range("shift_compose: n exceeds the series order");
  PolyPT acc;
  for (unsigned k = 0; k <= n; ++k) {
    const PolyPT base = g.coeffs[n - k].eval_t(s);
    const PolyPT t_pow = t ? PolyPT(t->pow(k)) : PolyPT::monomial(1, 0, k);
    acc += binomial_in_p(static_cast<long>(k) - static_cast<long>(n), k) * base * t_pow;
  }
  return acc;
}

Expansion specialize(const GSeries& g, const std::optional<Rational>& p0, const std::optional<Rational>& t0) {
  Expansion e;
  e.base_exponent = p0 ? PolyPT(*p0) : PolyPT::var_p();
  e.coeffs.reserve(g.coeffs.size());
  for (const auto& c : g.coeffs) {
    PolyPT v = c;
    if (p0) v = v.eval_p(*p0);
    if (t0) v = v.eval_t(*t0);
    e.coeffs.push_back(std::move(v));
  }
  return e;
}

}  // namespace psiexp
