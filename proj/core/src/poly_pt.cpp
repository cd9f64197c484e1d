#include "psiexp/poly_pt.hpp"

#include <algorithm>
#include <stdexcept>

#include "format_detail.hpp"

namespace psiexp {

PolyPT::PolyPT(const Rational& c) {
  if (!c.is_zero()) terms_.emplace(Exponents{0, 0}, c);
}

PolyPT PolyPT::monomial(const Rational& c, unsigned p_power, unsigned t_power) {
  PolyPT r;
  r.add_term({p_power, t_power}, c);
  return r;
}

PolyPT PolyPT::var_p() { return monomial(1, 1, 0); }
PolyPT PolyPT::var_t() { return monomial(1, 0, 1); }

PolyPT PolyPT::from_univariate(const PolyT& poly, Var var) {
  PolyPT r;
  const auto cs = poly.coefficients();
  for (unsigned k = 0; k < cs.size(); ++k) {
    if (cs[k].is_zero()) continue;
    r.terms_.emplace(var == Var::p ? Exponents{k, 0} : Exponents{0, k}, cs[k]);
  }
  return r;
}

void PolyPT::add_term(const Exponents& e, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Rational PolyPT::coefficient(unsigned p_power, unsigned t_power) const {
  auto it = terms_.find({p_power, t_power});
  return it == terms_.end() ? Rational{} : it->second;
}

std::optional<unsigned> PolyPT::degree_in(Var var) const {
  if (terms_.empty()) return std::nullopt;
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, var == Var::p ? e.p : e.t);
  return d;
}

PolyPT PolyPT::eval(Var var, const Rational& value) const {
  PolyPT r;
  for (const auto& [e, c] : terms_) {
    const unsigned k = var == Var::p ? e.p : e.t;
    const Exponents kept = var == Var::p ? Exponents{0, e.t} : Exponents{e.p, 0};
    r.add_term(kept, c * value.pow(k));
  }
  return r;
}

PolyPT PolyPT::eval_t(const Rational& t0) const { return eval(Var::t, t0); }
PolyPT PolyPT::eval_p(const Rational& p0) const { return eval(Var::p, p0); }

PolyPT PolyPT::shift_t(const Rational& shift) const {
  // (t + s)^k = sum_j C(k, j) s^(k-j) t^j
  PolyPT r;
  for (const auto& [e, c] : terms_) {
    for (unsigned j = 0; j <= e.t; ++j) r.add_term({e.p, j}, c * binomial(e.t, j) * shift.pow(e.t - j));
  }
  return r;
}

PolyPT PolyPT::derivative_t() const {
  PolyPT r;
  for (const auto& [e, c] : terms_) {
    if (e.t == 0) continue;
    r.add_term({e.p, e.t - 1}, c * Rational(e.t));
  }
  return r;
}

PolyPT PolyPT::t_coefficient(unsigned k) const {
  PolyPT r;
  for (const auto& [e, c] : terms_)
    if (e.t == k) r.add_term({e.p, 0}, c);
  return r;
}

PolyT PolyPT::to_univariate(Var var) const {
  std::vector<Rational> cs;
  for (const auto& [e, c] : terms_) {
    const unsigned other = var == Var::p ? e.t : e.p;
    if (other != 0) throw std::logic_error("polynomial depends on the other variable: " + to_string());
    const unsigned k = var == Var::p ? e.p : e.t;
    if (cs.size() <= k) cs.resize(k + 1);
    cs[k] = c;
  }
  return PolyT(std::move(cs));
}

std::optional<Rational> PolyPT::as_constant() const {
  if (terms_.empty()) return Rational{};
  if (terms_.size() == 1 && terms_.begin()->first == Exponents{0, 0}) return terms_.begin()->second;
  return std::nullopt;
}

PolyPT& PolyPT::operator+=(const PolyPT& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

PolyPT& PolyPT::operator-=(const PolyPT& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

PolyPT operator*(const PolyPT& a, const PolyPT& b) {
  PolyPT r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term({ea.p + eb.p, ea.t + eb.t}, ca * cb);
  return r;
}

PolyPT& PolyPT::operator*=(const PolyPT& o) {
  *this = *this * o;
  return *this;
}

PolyPT& PolyPT::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, x] : terms_) x *= c;
  return *this;
}

PolyPT PolyPT::operator-() const {
  PolyPT r = *this;
  for (auto& [e, x] : r.terms_) x = -x;
  return r;
}

PolyPT PolyPT::pow(unsigned exponent) const {
  PolyPT result(1);
  PolyPT base = *this;
  while (exponent) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent) base *= base;
  }
  return result;
}

std::string PolyPT::to_string() const {
  detail::TermWriter w;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    if (e.p > 0) mono = detail::power_string('p', e.p);
    if (e.t > 0) mono += (mono.empty() ? "" : "*") + detail::power_string('t', e.t);
    w.add(c, mono);
  }
  return w.str();
}

std::string PolyPT::to_latex() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool neg = c.sign() < 0;
    const Rational mag = c.abs();
    std::string mono;
    if (e.p > 0) mono += e.p == 1 ? "p" : "p^{" + std::to_string(e.p) + "}";
    if (e.t > 0) mono += e.t == 1 ? "t" : "t^{" + std::to_string(e.t) + "}";
    std::string coef;
    if (!mag.is_integer())
      coef = "\\tfrac{" + mag.numerator_string() + "}{" + mag.denominator_string() + "}";
    else if (mono.empty() || mag != Rational(1))
      coef = mag.numerator_string();
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? "-" : "+";
    out += coef + mono;
    first = false;
  }
  return out;
}

}  // namespace psiexp
