#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "psiexp/expansions.hpp"
#include "psiexp/poly_pt.hpp"
#include "psiexp/poly_t.hpp"

namespace psiexp {

/// Outcome of one exact identity check. `witness` holds the nonzero
/// residual (or offending polynomial) and is present iff the check failed.
struct CheckReport {
  std::string check_name;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::optional<PolyPT> witness;
  std::string detail;

  bool passed() const { return !witness.has_value(); }
};

/// G_{p+1}(p, t) is identically zero. Requires even p >= 2.
CheckReport check_even_p_vanishing(unsigned p);

/// deg_t G_n(p,.) = n for n <= p, deg_t <= n-p-1 for p+1 <= n <= N, and for
/// even p >= 2 also deg_t G_{p+2+k} = k. Requires N >= p+2.
CheckReport check_degree_collapse(unsigned p, unsigned N);

/// G_n(p,1) = (-1)^n G_n(p,0) as polynomials in p, n <= N.
CheckReport check_reflection(unsigned N);

/// At t = 1/2: odd G vanish, deg_p G_{2n} = n, and the even-index recurrence
///   G_{2n} = (p/2n) sum_{k=1}^{n} (1 - 2^{1-2k}) B_{2k} G_{2n-2k}
/// reproduces the canonical values, for all indices <= N.
CheckReport check_half_argument(unsigned N);

/// All three G routes agree exactly for n <= N (N within the composition cap).
CheckReport check_route_agreement(unsigned N);

/// shift_compose(n, s, t) == G_n(p, s+t) for n <= N; t symbolic when absent.
CheckReport check_shift_identity(unsigned N, const Rational& s, const std::optional<Rational>& t);

/// dG_n/dt = (p+1-n) G_{n-1} for 1 <= n <= N.
CheckReport check_derivative_relation(unsigned N);

/// G_{n,k} = C(p-n+k, k) G_{n-k,0}, where G_{n,k} is the t^k coefficient.
CheckReport check_coefficient_table(unsigned N);

/// Multiset of Bernoulli indices (sorted ascending) -> coefficient.
using CollectedIdentity = std::map<std::vector<unsigned>, Rational>;

/// sum_{r=1}^{2n+1} ((-2n)^r / r!) sum_{k_1+..+k_r=2n+1} prod B_{k_i}(t)/k_i,
/// expanded as a polynomial in t. Zero for every n >= 1.
/// Throws std::invalid_argument for n = 0, LimitExceeded beyond the cap.
PolyT bernoulli_identity(unsigned n, unsigned limit = kDefaultCompositionLimit);

/// Same left side, with compositions grouped into monomials in the B_k(t).
CollectedIdentity bernoulli_identity_collected(unsigned n, unsigned limit = kDefaultCompositionLimit);

/// Expands a collected identity into a polynomial in t.
PolyT evaluate_collected(const CollectedIdentity& identity);

/// e.g. "-2/3*B_3(t) + 2*B_2(t)*B_1(t) - 4/3*B_1(t)^3".
std::string collected_to_string(const CollectedIdentity& identity);

}  // namespace psiexp
