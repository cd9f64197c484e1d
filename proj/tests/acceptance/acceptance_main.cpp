// Acceptance suite: one PASS/FAIL line per criterion, indented detail below.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "psiexp/errata.hpp"
#include "psiexp/expansions.hpp"
#include "psiexp/identities.hpp"
#include "psiexp/numeric.hpp"

using namespace psiexp;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> lines;

  void clause(bool ok, const std::string& text) {
    pass = pass && ok;
    lines.push_back(std::string(ok ? "ok   " : "FAIL ") + text);
  }
  void info(const std::string& text) { lines.push_back("info " + text); }
};

std::string sci(const BigFloat& v) { return v.to_string(4); }

std::string fix(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

bool all_passed(const std::vector<CheckReport>& reports, std::string& first_failure) {
  for (const auto& r : reports)
    if (!r.passed()) {
      first_failure = r.check_name + " " + r.detail;
      return false;
    }
  return true;
}

// ---------------------------------------------------------------- 1

Outcome route_agreement() {
  Outcome o;
  const auto a = g_via_power_transform(12);
  const auto b = g_via_bernoulli(12);
  const auto c = g_via_compositions(12);
  unsigned bad = 0;
  for (unsigned n = 0; n <= 12; ++n)
    if (!(a[n] == b[n] && b[n] == c[n])) ++bad;
  o.clause(bad == 0, "power-transform, bernoulli-recurrence and explicit-compositions agree for n <= 12 (" +
                         std::to_string(bad) + " mismatches)");
  const auto r = check_route_agreement(12);
  o.clause(r.passed(), "check_route_agreement(12)");
  return o;
}

// ---------------------------------------------------------------- 2

struct Coverage {
  const char* table;
  std::vector<unsigned> ns;
};

Outcome golden_tables() {
  Outcome o;
  const auto canonical = g_via_bernoulli(12);
  const auto outcomes = evaluate_golden(canonical);
  const auto errata = errata_report();

  const std::vector<Coverage> required{
      {"S-polynomials", {0, 1, 2, 3, 4, 5, 6}},
      {"psi(x) log-series (t=0)", {2, 3, 4, 5, 6}},
      {"psi(x+1/2) log-series", {2, 4, 6, 8}},
      {"p=2 column", {0, 1, 2, 3, 4, 5, 6}},
      {"p=3 column", {0, 1, 2, 3, 4, 5, 6}},
      {"t=1 list", {0, 1, 2, 3, 4, 5}},
      {"t=1/2 list", {0, 2, 4, 6}},
      {"exp(2 psi(x)) series", {0, 1, 2, 3, 4, 5, 6, 7}},
      {"exp(psi(x+1)) four-term series", {0, 1, 2, 3, 4}},
  };
  std::string missing;
  for (const auto& cov : required)
    for (unsigned n : cov.ns) {
      bool found = false;
      for (const auto& g : outcomes) found = found || (g.entry->table == cov.table && g.entry->n == n);
      if (!found) missing += std::string(" ") + cov.table + "/" + std::to_string(n);
    }
  o.clause(missing.empty(), "required table entries present" + (missing.empty() ? "" : ":" + missing));

  unsigned confirmed = 0, erratum = 0, excluded = 0;
  std::string unexpected, unreported;
  for (const auto& g : outcomes) {
    const auto& e = *g.entry;
    if (g.status != e.expected) unexpected += " " + e.id;
    switch (g.status) {
      case GoldenStatus::confirmed: ++confirmed; break;
      case GoldenStatus::excluded:
        ++excluded;
        if (!(e.table == "p=3 column" && e.n == 6)) unexpected += " " + e.id + "(excluded)";
        break;
      case GoldenStatus::erratum: {
        ++erratum;
        bool listed = false;
        for (const auto& x : errata)
          listed = listed || (x.location.rfind(e.table + ",", 0) == 0 && x.printed == e.printed &&
                              x.computed == g.computed.to_string());
        if (!listed) unreported += " " + e.id;
        break;
      }
    }
  }
  o.clause(unexpected.empty(), std::to_string(confirmed) + " confirmed, " + std::to_string(erratum) + " errata, " +
                                   std::to_string(excluded) + " excluded; outcomes match recorded status" +
                                   (unexpected.empty() ? "" : ", unexpected:" + unexpected));
  o.clause(unreported.empty(), "every mismatching entry is in the errata report with both values" +
                                   (unreported.empty() ? "" : ", missing:" + unreported));

  auto has = [&](const std::string& prefix) {
    for (const auto& x : errata)
      if (x.location.rfind(prefix, 0) == 0 && !x.printed.empty() && !x.computed.empty()) return true;
    return false;
  };
  o.clause(has("general G-polynomials, G_1"), "documented erratum: general-table G_1 sign");
  o.clause(has("t=1/2 even-index recurrence"), "documented erratum: t=1/2 even-index recurrence form");
  o.clause(has("Bernoulli-polynomial identity n=1"), "documented erratum: Bernoulli identity n=1 leading sign");
  return o;
}

// ---------------------------------------------------------------- 3

Outcome identity_checks() {
  Outcome o;
  std::string why;
  {
    std::vector<CheckReport> r;
    for (unsigned p = 2; p <= 20; p += 2) r.push_back(check_even_p_vanishing(p));
    o.clause(all_passed(r, why), "even-p vanishing, p = 2..20" + (why.empty() ? "" : ": " + why));
  }
  {
    std::vector<CheckReport> r;
    for (unsigned p = 0; p <= 12; ++p) r.push_back(check_degree_collapse(p, p + 6));
    o.clause(all_passed(r, why), "degree collapse, p = 0..12, N = p+6" + (why.empty() ? "" : ": " + why));
  }
  o.clause(check_reflection(15).passed(), "reflection, N = 15");
  o.clause(check_half_argument(14).passed(), "half-argument, N = 14");
  {
    std::mt19937_64 rng(20240611);
    std::uniform_int_distribution<long> num(-12, 12), den(1, 9);
    std::vector<CheckReport> r;
    for (int i = 0; i < 20; ++i) {
      const Rational s(num(rng), den(rng));
      const Rational t(num(rng), den(rng));
      r.push_back(check_shift_identity(10, s, t));
    }
    o.clause(all_passed(r, why), "shift identity, 20 random (s, t), n <= 10" + (why.empty() ? "" : ": " + why));
  }
  o.clause(check_derivative_relation(12).passed(), "dG_n/dt = (p+1-n) G_{n-1}, n <= 12");
  return o;
}

// ---------------------------------------------------------------- 4

Outcome bernoulli_identity_suite() {
  Outcome o;
  std::string nonzero;
  for (unsigned n = 1; n <= 6; ++n)
    if (!bernoulli_identity(n).is_zero()) nonzero += " " + std::to_string(n);
  o.clause(nonzero.empty(), "identity is the zero polynomial for n = 1..6" + (nonzero.empty() ? "" : ", not for:" + nonzero));

  const CollectedIdentity expected{{{3}, Rational(-2, 3)}, {{1, 2}, Rational(2)}, {{1, 1, 1}, Rational(-4, 3)}};
  const auto got = bernoulli_identity_collected(1);
  o.clause(got == expected, "n=1 collected: " + collected_to_string(got));
  return o;
}

// ---------------------------------------------------------------- 5

std::vector<ErrorPoint> eval_errors(unsigned N) {
  const GSeries g = g_via_bernoulli(N, Rational(1));
  std::vector<ErrorPoint> pts;
  for (long x : {16L, 32L, 64L, 128L}) {
    const BigFloat bx(x, kDefaultPrecision);
    const BigFloat oracle = exp(psi_ref(bx + BigFloat(1L, kDefaultPrecision)));
    pts.push_back({double(x), abs(eval_expansion(g, Rational(1), Rational(1), bx, N) - oracle)});
  }
  return pts;
}

Outcome numeric_orders() {
  Outcome o;
  std::vector<ErrorPoint> pts;
  for (unsigned long n : {32ul, 64ul, 128ul, 256ul}) pts.push_back({double(n), approx_gamma(n, 4).abs_error});
  const double gamma_order = convergence_order(pts);
  o.clause(std::abs(gamma_order - 5.0) <= 0.15, "approx_gamma N=4 order over n = 32..256: " + fix(gamma_order) +
                                                     " (target 5.0 +/- 0.15)");

  const auto g100 = approx_gamma(100, 4);
  o.clause(g100.abs_error < BigFloat(1e-10, kDefaultPrecision), "approx_gamma(100, 4) abs_error " +
                                                                    sci(g100.abs_error) + " < 1e-10");
  const auto h10 = approx_harmonic(10, 4);
  o.clause(h10.abs_error < BigFloat(1e-7, kDefaultPrecision) && h10.reference == BigFloat(Rational(7381, 2520), kDefaultPrecision),
           "approx_harmonic(10, 4) abs_error " + sci(h10.abs_error) + " < 1e-7 vs 7381/2520");

  const auto e3 = eval_errors(3);
  const double order3 = convergence_order(e3);
  std::ostringstream errs;
  for (const auto& p : e3) errs << " " << sci(p.abs_error);
  o.clause(std::abs(order3 - 4.0) <= 0.15, "eval_expansion p=1 t=1 N=3 order over x = 16..128: " + fix(order3) +
                                               " (target 4.0 +/- 0.15; errors" + errs.str() + ")");
  o.info("eval_expansion p=1 t=1 N=4 order over x = 16..128: " + fix(convergence_order(eval_errors(4))));
  return o;
}

// ---------------------------------------------------------------- 6

Outcome oracle_sanity() {
  Outcome o;
  const Precision prec = 256;
  const BigFloat bound = ldexp(BigFloat(1L, prec), -240);
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 100.0);
  BigFloat worst(0L, prec);
  for (int i = 0; i < 100; ++i) {
    const BigFloat x(100.0 - u(rng), prec);  // (0, 100]
    const BigFloat r = abs(psi_ref(x + BigFloat(1L, prec), prec) - psi_ref(x, prec) - BigFloat(1L, prec) / x);
    if (worst < r) worst = r;
  }
  o.clause(worst < bound, "recurrence residual over 100 random x in (0, 100]: max " + sci(worst) + " < 2^-240");

  const BigFloat half = psi_ref(BigFloat(Rational(1, 2), prec), prec);
  const BigFloat closed = -euler_gamma(prec) - BigFloat(2L, prec) * const_log2(prec);
  const BigFloat d = abs(half - closed);
  o.clause(d < bound, "psi(1/2) vs -gamma - 2 ln 2: " + sci(d) + " < 2^-240");
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double budget_s;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "route agreement", 10, route_agreement},
      {2, "golden tables", 0, golden_tables},
      {3, "exact identity checks", 30, identity_checks},
      {4, "Bernoulli identity", 0, bernoulli_identity_suite},
      {5, "numeric orders", 10, numeric_orders},
      {6, "oracle sanity", 0, oracle_sanity},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.clause(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.budget_s > 0) o.clause(secs < c.budget_s, "runtime " + fix(secs) + " s < " + fix(c.budget_s) + " s");
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " (" << fix(secs) << " s)\n";
    for (const auto& l : o.lines) std::cout << "    " << l << '\n';
    failed += o.pass ? 0 : 1;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
