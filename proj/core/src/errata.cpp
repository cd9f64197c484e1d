#include "psiexp/errata.hpp"

#include "psiexp/bernoulli.hpp"
#include "psiexp/identities.hpp"

namespace psiexp {

namespace {

constexpr unsigned kCanonicalOrder = 12;

std::string instance_label(const GoldenEntry& e) {
  std::string s = std::string(1, e.kind) + "_" + std::to_string(e.n);
  if (e.p || e.t) {
    s += " at";
    if (e.p) s += " p=" + e.p->to_string();
    if (e.t) s += " t=" + e.t->to_string();
  }
  return s;
}

// G-recurrence as printed in the power-transform form, with S_n (instead of
// S_k) inside the sum.
PolyPT printed_power_transform_g(unsigned N) {
  const SSeries s = s_coeffs(N);
  std::vector<PolyPT> g{PolyPT(1)};
  const PolyPT p = PolyPT::var_p();
  for (unsigned n = 1; n <= N; ++n) {
    const PolyPT sn = PolyPT::from_univariate(s.coeffs[n], Var::t);
    PolyPT acc;
    for (unsigned k = 1; k <= n; ++k) acc += (p * Rational(k) + PolyPT(Rational(k) - Rational(n))) * sn * g[n - k];
    g.push_back(acc * Rational(1, n));
  }
  return g[N];
}

// Even-index recurrence at t=1/2 as printed: -(p/2n) sum (1 - 2^{-2k}) B_{2k} G_{2n-2k}.
PolyPT printed_half_recurrence(unsigned m) {
  std::vector<PolyPT> g{PolyPT(1)};
  for (unsigned j = 1; j <= m; ++j) {
    PolyPT acc;
    for (unsigned k = 1; k <= j; ++k)
      acc += g[j - k] * ((Rational(1) - Rational(2).pow(2 * k).inverse()) * bernoulli_number(2 * k));
    g.push_back(-(PolyPT::var_p() * acc * Rational(1, 2 * j)));
  }
  return g[m];
}

// Degree-collapse expansion as printed: sum_k (-1)^k C(n-p+1, k) G_{n-k}(p,0) t^k.
PolyPT printed_degree_expansion(const GSeries& g_fixed_p, unsigned p, unsigned n) {
  PolyPT acc;
  for (unsigned k = 0; k <= n; ++k) {
    const Rational sign = k % 2 == 0 ? Rational(1) : Rational(-1);
    acc += g_fixed_p[n - k].eval_t(0) * (sign * binomial(n - p + 1, k)) * PolyPT::monomial(1, 0, k);
  }
  return acc;
}

void add_if_differs(std::vector<ErrataEntry>& out, std::string location, const PolyPT& printed, const PolyPT& computed,
                    std::string note) {
  if (printed == computed) return;
  out.push_back({std::move(location), printed.to_string(), computed.to_string(), std::move(note)});
}

}  // namespace

std::vector<ErrataEntry> errata_report() {
  std::vector<ErrataEntry> out;
  const GSeries canonical = g_via_bernoulli(kCanonicalOrder);

  for (const auto& o : evaluate_golden(canonical)) {
    if (o.status != GoldenStatus::erratum) continue;
    out.push_back({o.entry->table + ", " + instance_label(*o.entry), o.entry->printed, o.computed.to_string(),
                   o.entry->note});
  }

  add_if_differs(out, "power-transform recurrence for G_n (S_n printed inside the sum), G_2",
                 printed_power_transform_g(2), canonical[2],
                 "the sum must use S_k; with S_n it no longer raises the S-series to the power p");

  add_if_differs(out, "t=1/2 even-index recurrence, G_2", printed_half_recurrence(1), canonical[2].eval_t(Rational(1, 2)),
                 "correct form: G_2n = (p/2n) sum (1 - 2^(1-2k)) B_2k G_(2n-2k)");

  {
    const Rational printed = (Rational(1) - Rational(2).pow(4).inverse()) * bernoulli_number(2);
    add_if_differs(out, "half-argument Bernoulli value, B_2(1/2)", PolyPT(printed), PolyPT(bernoulli_poly(2).eval(Rational(1, 2))),
                   "correct identity: B_k(1/2) = (2^(1-k) - 1) B_k");
  }

  {
    const PolyT b1 = bernoulli_poly(1), b2 = bernoulli_poly(2), b3 = bernoulli_poly(3);
    const PolyT printed = b3 * Rational(2, 3) + b1 * b2 * Rational(2) - b1 * b1 * b1 * Rational(4, 3);
    add_if_differs(out, "Bernoulli-polynomial identity n=1 (left side)", PolyPT::from_univariate(printed, Var::t),
                   PolyPT::from_univariate(bernoulli_identity(1), Var::t),
                   "leading term must be -2/3*B_3(t); as printed the left side is not zero");
  }

  {
    const unsigned p = 2, n = 4;
    const GSeries g = g_via_bernoulli(n, Rational(p));
    add_if_differs(out, "degree-collapse expansion with C(n-p+1, k), G_4 at p=2", printed_degree_expansion(g, p, n), g[n],
                   "the binomial must be C(n-p-1, k)");
  }

  {
    const PolyPT b1 = PolyPT::from_univariate(bernoulli_poly(1), Var::t);
    add_if_differs(out, "log-plus-Bernoulli series for psi(x+t), x^-1 coefficient", -b1, b1,
                   "correct series: log x + sum_{n>=1} (-1)^(n+1) B_n(t) x^-n / n");
  }

  return out;
}

}  // namespace psiexp
