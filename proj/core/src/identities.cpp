#include "psiexp/identities.hpp"

#include <algorithm>
#include <stdexcept>

#include "psiexp/bernoulli.hpp"

namespace psiexp {

namespace {

std::string deg_string(const std::optional<unsigned>& d) { return d ? std::to_string(*d) : "none"; }

CheckReport make_report(std::string name, std::vector<std::pair<std::string, std::string>> params) {
  CheckReport r;
  r.check_name = std::move(name);
  r.parameters = std::move(params);
  return r;
}

CheckReport& fail(CheckReport& r, PolyPT witness, std::string detail) {
  r.witness = std::move(witness);
  r.detail = std::move(detail);
  return r;
}

}  // namespace

CheckReport check_even_p_vanishing(unsigned p) {
  if (p < 2 || p % 2 != 0) throw std::invalid_argument("check_even_p_vanishing needs an even p >= 2");
  auto r = make_report("even-p-vanishing", {{"p", std::to_string(p)}});
  const GSeries g = g_via_bernoulli(p + 1, Rational(p));
  if (!g[p + 1].is_zero()) return fail(r, g[p + 1], "G_" + std::to_string(p + 1) + " is not identically zero");
  return r;
}

CheckReport check_degree_collapse(unsigned p, unsigned N) {
  if (N < p + 2) throw std::invalid_argument("check_degree_collapse needs N >= p + 2");
  auto r = make_report("degree-collapse", {{"p", std::to_string(p)}, {"N", std::to_string(N)}});
  const GSeries g = g_via_bernoulli(N, Rational(p));
  for (unsigned n = 0; n <= N; ++n) {
    const auto d = g[n].degree_in(Var::t);
    const std::string at = "deg_t G_" + std::to_string(n) + " = " + deg_string(d);
    if (n <= p) {
      if (d != n) return fail(r, g[n], at + ", expected " + std::to_string(n));
    } else if (d && *d > n - p - 1) {
      return fail(r, g[n], at + ", expected <= " + std::to_string(n - p - 1));
    }
    if (p >= 2 && p % 2 == 0 && n >= p + 2 && d != n - p - 2)
      return fail(r, g[n], at + ", expected exactly " + std::to_string(n - p - 2));
  }
  return r;
}

CheckReport check_reflection(unsigned N) {
  auto r = make_report("reflection", {{"N", std::to_string(N)}});
  const GSeries g = g_via_bernoulli(N);
  for (unsigned n = 0; n <= N; ++n) {
    const PolyPT at0 = g[n].eval_t(0);
    const PolyPT residual = g[n].eval_t(1) - (n % 2 == 0 ? at0 : -at0);
    if (!residual.is_zero())
      return fail(r, residual, "G_" + std::to_string(n) + "(p,1) != (-1)^n G_" + std::to_string(n) + "(p,0)");
  }
  return r;
}

CheckReport check_half_argument(unsigned N) {
  auto r = make_report("half-argument", {{"N", std::to_string(N)}});
  const GSeries g = g_via_bernoulli(N);
  const Rational half(1, 2);
  std::vector<PolyPT> even{PolyPT(1)};  // even-index recurrence, indexed by n/2
  for (unsigned n = 0; n <= N; ++n) {
    const PolyPT v = g[n].eval_t(half);
    const std::string name = "G_" + std::to_string(n) + "(p,1/2)";
    if (n % 2 == 1) {
      if (!v.is_zero()) return fail(r, v, name + " does not vanish");
      continue;
    }
    const unsigned m = n / 2;
    if (v.degree_in(Var::p) != m)
      return fail(r, v, name + " has p-degree " + deg_string(v.degree_in(Var::p)) + ", expected " + std::to_string(m));
    if (m == 0) continue;
    PolyPT acc;
    for (unsigned k = 1; k <= m; ++k) {
      const Rational factor = Rational(1) - Rational(2).pow(2 * k - 1).inverse();
      acc += even[m - k] * (factor * bernoulli_number(2 * k));
    }
    even.push_back(PolyPT::var_p() * acc * Rational(1, n));
    if (even[m] != v) return fail(r, even[m] - v, name + " disagrees with the even-index recurrence");
  }
  return r;
}

CheckReport check_route_agreement(unsigned N) {
  auto r = make_report("route-agreement", {{"N", std::to_string(N)}});
  const GSeries a = g_via_power_transform(N);
  const GSeries b = g_via_bernoulli(N);
  const GSeries c = g_via_compositions(N);
  for (unsigned n = 0; n <= N; ++n) {
    if (a[n] != b[n]) return fail(r, a[n] - b[n], "power-transform and bernoulli routes differ at n=" + std::to_string(n));
    if (c[n] != b[n]) return fail(r, c[n] - b[n], "composition and bernoulli routes differ at n=" + std::to_string(n));
  }
  return r;
}

CheckReport check_shift_identity(unsigned N, const Rational& s, const std::optional<Rational>& t) {
  auto r = make_report("shift-identity",
                       {{"N", std::to_string(N)}, {"s", s.to_string()}, {"t", t ? t->to_string() : "symbolic"}});
  const GSeries g = g_via_bernoulli(N);
  for (unsigned n = 0; n <= N; ++n) {
    const PolyPT direct = t ? g[n].eval_t(s + *t) : g[n].shift_t(s);
    const PolyPT residual = shift_compose(g, n, s, t) - direct;
    if (!residual.is_zero()) return fail(r, residual, "shift identity fails at n=" + std::to_string(n));
  }
  return r;
}

CheckReport check_derivative_relation(unsigned N) {
  auto r = make_report("derivative-relation", {{"N", std::to_string(N)}});
  const GSeries g = g_via_bernoulli(N);
  for (unsigned n = 1; n <= N; ++n) {
    const PolyPT factor = PolyPT::var_p() + PolyPT(Rational(1) - Rational(n));
    const PolyPT residual = g[n].derivative_t() - factor * g[n - 1];
    if (!residual.is_zero()) return fail(r, residual, "dG/dt relation fails at n=" + std::to_string(n));
  }
  return r;
}

CheckReport check_coefficient_table(unsigned N) {
  auto r = make_report("coefficient-table", {{"N", std::to_string(N)}});
  const GSeries g = g_via_bernoulli(N);
  for (unsigned n = 0; n <= N; ++n) {
    for (unsigned k = 0; k <= n; ++k) {
      const PolyPT expected =
          binomial_in_p(static_cast<long>(k) - static_cast<long>(n), k) * g[n - k].t_coefficient(0);
      const PolyPT residual = g[n].t_coefficient(k) - expected;
      if (!residual.is_zero())
        return fail(r, residual, "G_{" + std::to_string(n) + "," + std::to_string(k) + "} mismatch");
    }
  }
  return r;
}

PolyT bernoulli_identity(unsigned n, unsigned limit) {
  if (n == 0) throw std::invalid_argument("bernoulli_identity needs n >= 1");
  const unsigned m = 2 * n + 1;
  const auto sums = composition_power_sums(m, limit);
  const Rational minus_2n = -Rational(2 * n);
  PolyT acc;
  for (unsigned r = 1; r <= m; ++r) acc += sums[r] * (minus_2n.pow(r) / factorial(r));
  return acc;
}

namespace {

void collect_monomials(unsigned remaining, std::vector<unsigned>& parts, const Rational& weight, const Rational& base,
                       CollectedIdentity& out) {
  if (remaining == 0) {
    auto key = parts;
    std::sort(key.begin(), key.end());
    const unsigned r = static_cast<unsigned>(parts.size());
    out[key] += base.pow(r) / factorial(r) * weight;
    return;
  }
  for (unsigned k = 1; k <= remaining; ++k) {
    parts.push_back(k);
    collect_monomials(remaining - k, parts, weight * Rational(1, k), base, out);
    parts.pop_back();
  }
}

}  // namespace

CollectedIdentity bernoulli_identity_collected(unsigned n, unsigned limit) {
  if (n == 0) throw std::invalid_argument("bernoulli_identity needs n >= 1");
  const unsigned m = 2 * n + 1;
  if (m > limit)
    throw LimitExceeded("composition route limited to n <= " + std::to_string(limit) + ", requested " +
                        std::to_string(m));
  CollectedIdentity out;
  std::vector<unsigned> parts;
  collect_monomials(m, parts, Rational(1), -Rational(2 * n), out);
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

PolyT evaluate_collected(const CollectedIdentity& identity) {
  PolyT acc;
  for (const auto& [indices, coeff] : identity) {
    PolyT term = PolyT::constant(coeff);
    for (unsigned k : indices) term *= bernoulli_poly(k);
    acc += term;
  }
  return acc;
}

std::string collected_to_string(const CollectedIdentity& identity) {
  std::vector<const CollectedIdentity::value_type*> order;
  for (const auto& kv : identity) order.push_back(&kv);
  std::stable_sort(order.begin(), order.end(),
                   [](const auto* a, const auto* b) { return a->first.size() < b->first.size(); });
  std::string out;
  for (const auto* kv : order) {
    const auto& [indices, coeff] = *kv;
    std::string mono;
    for (std::size_t i = 0; i < indices.size();) {
      std::size_t j = i;
      while (j < indices.size() && indices[j] == indices[i]) ++j;
      if (!mono.empty()) mono += "*";
      mono += "B_" + std::to_string(indices[i]) + "(t)";
      if (j - i > 1) mono += "^" + std::to_string(j - i);
      i = j;
    }
    const Rational mag = coeff.abs();
    std::string term = mag == Rational(1) ? mono : mag.to_string() + "*" + mono;
    if (out.empty())
      out = coeff.sign() < 0 ? "-" + term : term;
    else
      out += (coeff.sign() < 0 ? " - " : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

}  // namespace psiexp
