#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "psiexp/expansion.hpp"
#include "psiexp/poly_pt.hpp"
#include "psiexp/poly_t.hpp"

namespace psiexp {

/// Coefficients S_0..S_N of  psi(x+t) ~ log(sum_n S_n(t) x^{1-n}).
struct SSeries {
  std::vector<PolyT> coeffs;
  std::size_t order() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
};

/// Which derivation produced a G-series.
enum class Route { power_transform, bernoulli_recurrence, compositions };

std::string_view route_name(Route route);
/// Throws std::invalid_argument for unknown names.
Route route_from_name(std::string_view name);

/// Coefficients G_0..G_N of  exp(p psi(x+t)) ~ x^p sum_n G_n(p,t) x^{-n}.
/// When the series was built for a fixed p, the coefficients carry no p.
struct GSeries {
  std::vector<PolyPT> coeffs;
  Route route = Route::bernoulli_recurrence;

  std::size_t order() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  const PolyPT& operator[](std::size_t n) const { return coeffs.at(n); }
};

/// Raised when the composition route is asked for more terms than its cap.
class LimitExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

inline constexpr unsigned kDefaultCompositionLimit = 16;

SSeries s_coeffs(unsigned N);

/// Series of g(x)^power from the series of g(x) with a_0 = 1:
///   b_0 = 1,  b_n = (1/n) sum_{k=1}^{n} [k(1+power) - n] a_k b_{n-k}.
/// `power` may be symbolic (PolyPT::var_p()) or a constant.
/// Throws std::invalid_argument when a_0 != 1.
Expansion power_transform(const Expansion& a, const PolyPT& power);

/// G-series by raising the S-series to the power p.
GSeries g_via_power_transform(unsigned N);

/// G_n = (p/n) sum_{k=1}^{n} (-1)^{k+1} B_k(t) G_{n-k}. Canonical route.
GSeries g_via_bernoulli(unsigned N);
/// Same recurrence with p fixed to p0; coefficients are polynomials in t.
GSeries g_via_bernoulli(unsigned N, const Rational& p0);

/// W_{n,r}(t) = sum over ordered compositions k_1+...+k_r = n (k_i >= 1) of
/// B_{k_1}(t)...B_{k_r}(t) / (k_1...k_r). Returns W_{n,0..n} (W_{n,0} is zero
/// for n >= 1). Throws LimitExceeded if n > limit.
std::vector<PolyT> composition_power_sums(unsigned n, unsigned limit = kDefaultCompositionLimit);

/// (-1)^n G_n = sum_{r=1}^{n} (-p)^r / r! * W_{n,r}(t).
GSeries g_via_compositions(unsigned N, unsigned limit = kDefaultCompositionLimit);

/// Binomial C(p + shift, k) as a polynomial in p:
/// (p+shift)(p+shift-1)...(p+shift-k+1) / k!.
PolyPT binomial_in_p(long shift, unsigned k);

/// Right-hand side of the shift identity
///   G_n(p, s+t) = sum_{k=0}^{n} C(p-n+k, k) G_{n-k}(p, s) t^k,
/// with t symbolic when nullopt. Requires n <= g.order().
PolyPT shift_compose(const GSeries& g, unsigned n, const Rational& s, const std::optional<Rational>& t);

/// Substitutes p and/or t exactly. base_exponent becomes p0 (or stays the
/// symbol p when p0 is absent).
Expansion specialize(const GSeries& g, const std::optional<Rational>& p0, const std::optional<Rational>& t0);

}  // namespace psiexp
