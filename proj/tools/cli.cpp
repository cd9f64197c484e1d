#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "psiexp/errata.hpp"
#include "psiexp/expansions.hpp"
#include "psiexp/identities.hpp"
#include "psiexp/numeric.hpp"
#include "render.hpp"

namespace psiexp::cli {
namespace {

// Thrown for bad argument values after CLI11 has accepted the syntax.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string format = "text";
  unsigned long prec = kDefaultPrecision;
  std::optional<unsigned> max_n;
};

Rational parse_rational(const std::string& flag, const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const std::exception&) {
    throw UsageError(flag + ": malformed rational '" + text + "' (expected a/b or an integer)");
  }
}

std::optional<Rational> parse_opt(const std::string& flag, const std::optional<std::string>& text) {
  if (!text) return std::nullopt;
  return parse_rational(flag, *text);
}

Format pick_format(const Globals& g, std::initializer_list<Format> allowed) {
  auto f = format_from_name(g.format);
  if (!f || std::find(allowed.begin(), allowed.end(), *f) == allowed.end())
    throw UsageError("--format " + g.format + " is not available for this command");
  return *f;
}

// ---- coeffs

struct CoeffsArgs {
  std::string kind;
  std::optional<unsigned> n;
  std::optional<std::string> p, t;
};

int cmd_coeffs(const CoeffsArgs& a, const Globals& g, std::ostream& out) {
  const Format format = pick_format(g, {Format::text, Format::json, Format::csv, Format::latex});
  const std::optional<unsigned> n = a.n ? a.n : g.max_n;
  if (!n) throw UsageError("coeffs: --n is required");
  const auto p = parse_opt("--p", a.p);
  const auto t = parse_opt("--t", a.t);

  CoeffTable table;
  table.p = p;
  table.t = t;
  if (a.kind == "s") {
    if (p) throw UsageError("coeffs s: --p does not apply (the S-series is fixed at p = 1)");
    table.kind = 'S';
    for (const auto& s : s_coeffs(*n).coeffs) {
      PolyPT c = PolyPT::from_univariate(s, Var::t);
      table.coeffs.push_back(t ? PolyPT(c.eval_t(*t)) : c);
    }
  } else {
    table.kind = 'G';
    const GSeries series = p ? g_via_bernoulli(*n, *p) : g_via_bernoulli(*n);
    for (const auto& c : series.coeffs) table.coeffs.push_back(t ? c.eval_t(*t) : c);
  }
  out << render_coeffs(table, format);
  return kExitOk;
}

// ---- verify

constexpr unsigned kIdentityCap = (kDefaultCompositionLimit - 1) / 2;

CheckReport identity_report(unsigned n) {
  CheckReport r;
  r.check_name = "bernoulli-identity";
  r.parameters = {{"n", std::to_string(n)}};
  const PolyT lhs = bernoulli_identity(n);
  if (!lhs.is_zero()) {
    r.witness = PolyPT::from_univariate(lhs, Var::t);
    r.detail = "left side is not the zero polynomial";
  }
  return r;
}

unsigned clamp_note(unsigned requested, unsigned cap, const char* suite, std::ostream& err) {
  if (requested <= cap) return requested;
  err << "note: " << suite << " suite capped at " << cap << " (requested " << requested << ")\n";
  return cap;
}

std::vector<CheckReport> run_suite(const std::string& suite, unsigned max_n, unsigned seed, std::ostream& err) {
  const bool all = suite == "all";
  std::vector<CheckReport> reports;
  if (all || suite == "even-p")
    for (unsigned p = 2; p <= std::max(max_n, 2u); p += 2) reports.push_back(check_even_p_vanishing(p));
  if (all || suite == "degrees")
    for (unsigned p = 0; p <= max_n; ++p) reports.push_back(check_degree_collapse(p, p + 6));
  if (all || suite == "reflection") reports.push_back(check_reflection(max_n));
  if (all || suite == "half") reports.push_back(check_half_argument(max_n));
  if (all || suite == "routes")
    reports.push_back(check_route_agreement(clamp_note(max_n, kDefaultCompositionLimit, "routes", err)));
  if (all || suite == "identity")
    for (unsigned n = 1, cap = clamp_note(max_n, kIdentityCap, "identity", err); n <= cap; ++n)
      reports.push_back(identity_report(n));
  if (all || suite == "shift") {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-9, 9), den(1, 7);
    reports.push_back(check_shift_identity(max_n, Rational(num(rng), den(rng)), std::nullopt));
    for (int i = 0; i < 4; ++i) {
      const Rational s(num(rng), den(rng));
      const Rational t(num(rng), den(rng));
      reports.push_back(check_shift_identity(max_n, s, t));
    }
  }
  if (all || suite == "derivative") reports.push_back(check_derivative_relation(max_n));
  if (all || suite == "table") reports.push_back(check_coefficient_table(max_n));
  return reports;
}

int cmd_verify(const std::string& suite, unsigned seed, const Globals& g, std::ostream& out, std::ostream& err) {
  const Format format = pick_format(g, {Format::text, Format::json, Format::csv, Format::markdown, Format::latex});
  const auto reports = run_suite(suite, g.max_n.value_or(12), seed, err);
  out << render_reports(reports, format);
  const bool ok = std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.passed(); });
  return ok ? kExitOk : kExitVerifyFailed;
}

// ---- approx

struct ApproxArgs {
  std::string target;
  unsigned long n = 0;
  unsigned order = 4;
  std::optional<std::string> p, t;
  bool sweep = false;
};

int cmd_approx(const ApproxArgs& a, const Globals& g, std::ostream& out, std::ostream& err) {
  const Format format = pick_format(g, {Format::text, Format::json, Format::csv, Format::latex});
  if (a.n < 1) throw UsageError("approx: --n must be at least 1");
  const auto p = parse_opt("--p", a.p);
  const Rational t = parse_opt("--t", a.t).value_or(Rational(1));
  if (p && a.target != "exp-psi") throw UsageError("approx " + a.target + ": --p only applies to exp-psi");
  if (a.target != "exp-psi" && (t.sign() <= 0 || t > Rational(1)))
    throw UsageError("approx " + a.target + ": --t must lie in (0, 1]");
  const Precision prec = static_cast<Precision>(g.prec);

  auto one = [&](unsigned long n) {
    if (a.target == "gamma") return approx_gamma(n, a.order, prec, t);
    if (a.target == "harmonic") return approx_harmonic(n, a.order, prec, t);
    return approx_exp_psi(n, a.order, p.value_or(Rational(1)), t, prec);
  };

  ApproxTable table;
  table.target = a.target;
  table.p = a.target == "exp-psi" ? std::optional<Rational>(p.value_or(Rational(1))) : std::nullopt;
  table.t = t;
  table.prec = g.prec;
  const unsigned points = a.sweep ? 4 : 1;
  std::vector<ErrorPoint> fit;
  for (unsigned i = 0; i < points; ++i) {
    ApproxResult r = one(a.n << i);
    fit.push_back({static_cast<double>(r.n), r.abs_error});
    if (i > 0) {
      try {
        r.est_order = convergence_order(std::span<const ErrorPoint>(fit).subspan(i - 1, 2));
      } catch (const DegenerateFit&) {
      }
    }
    table.rows.push_back(std::move(r));
  }
  if (a.sweep) {
    try {
      table.fitted_order = convergence_order(fit);
    } catch (const DegenerateFit& e) {
      err << "note: " << e.what() << '\n';
    }
  }
  out << render_approx(table, format);
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact coefficients and numeric checks for exp(p psi(x+t)) expansions", "psiexp"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--format", g.format, "text, json, csv, latex (markdown for errata and verify)")
      ->check(CLI::IsMember({"text", "json", "csv", "latex", "markdown"}));
  app.add_option("--prec", g.prec, "working precision in bits")->check(CLI::Range(64ul, 1ul << 20));
  app.add_option("--max-n", g.max_n, "largest index for tables and checks");

  CoeffsArgs ca;
  auto* coeffs = app.add_subcommand("coeffs", "print S_n or G_n coefficients");
  coeffs->add_option("kind", ca.kind, "s or g")->required()->check(CLI::IsMember({"s", "g"}));
  coeffs->add_option("--n", ca.n, "largest index");
  coeffs->add_option("--p", ca.p, "fix p (a/b)");
  coeffs->add_option("--t", ca.t, "fix t (a/b)");

  std::string suite = "all";
  unsigned seed = 1;
  auto* verify = app.add_subcommand("verify", "run exact identity checks");
  verify->add_option("--suite", suite)
      ->check(CLI::IsMember({"all", "even-p", "degrees", "reflection", "half", "identity", "routes", "shift",
                             "derivative", "table"}));
  verify->add_option("--seed", seed, "seed for the shift suite's random pairs");

  auto* errata = app.add_subcommand("errata", "list printed values that disagree with computation");

  ApproxArgs aa;
  auto* approx = app.add_subcommand("approx", "compare a truncated expansion with a high-precision oracle");
  approx->add_option("target", aa.target, "gamma, harmonic or exp-psi")
      ->required()
      ->check(CLI::IsMember({"gamma", "harmonic", "exp-psi"}));
  approx->add_option("--n", aa.n)->required();
  approx->add_option("--order", aa.order, "truncation order N");
  approx->add_option("--p", aa.p, "exponent p for exp-psi (a/b)");
  approx->add_option("--t", aa.t, "shift t (a/b), default 1");
  approx->add_flag("--sweep", aa.sweep, "also run 2n, 4n, 8n and fit the convergence order");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*coeffs) return cmd_coeffs(ca, g, out);
    if (*verify) return cmd_verify(suite, seed, g, out, err);
    if (*errata) {
      out << render_errata(errata_report(), pick_format(g, {Format::text, Format::json, Format::csv, Format::latex,
                                                            Format::markdown}));
      return kExitOk;
    }
    return cmd_approx(aa, g, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace psiexp::cli
