#include "psiexp/poly_t.hpp"

#include <algorithm>
#include <utility>

#include "format_detail.hpp"

namespace psiexp {

PolyT::PolyT(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

PolyT PolyT::constant(const Rational& c) { return PolyT(std::vector<Rational>{c}); }

PolyT PolyT::monomial(const Rational& c, unsigned power) {
  std::vector<Rational> v(power + 1);
  v[power] = c;
  return PolyT(std::move(v));
}

PolyT PolyT::variable() { return monomial(1, 1); }

void PolyT::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::optional<unsigned> PolyT::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return static_cast<unsigned>(coeffs_.size() - 1);
}

Rational PolyT::coefficient(unsigned k) const { return k < coeffs_.size() ? coeffs_[k] : Rational{}; }

Rational PolyT::eval(const Rational& t) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= t;
    acc += *it;
  }
  return acc;
}

PolyT PolyT::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * Rational(k);
  return PolyT(std::move(d));
}

PolyT PolyT::compose_affine(const Rational& a, const Rational& b) const {
  // Horner in the polynomial ring: acc = acc*(a t + b) + c_k.
  const PolyT inner(std::vector<Rational>{b, a});
  PolyT acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= inner;
    acc += constant(*it);
  }
  return acc;
}

PolyT& PolyT::operator+=(const PolyT& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

PolyT& PolyT::operator-=(const PolyT& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

PolyT& PolyT::operator*=(const PolyT& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> r(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(r);
  trim();
  return *this;
}

PolyT& PolyT::operator*=(const Rational& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

PolyT PolyT::operator-() const {
  PolyT r = *this;
  for (auto& x : r.coeffs_) x = -x;
  return r;
}

std::string PolyT::to_string(char var) const {
  detail::TermWriter w;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    if (coeffs_[k].is_zero()) continue;
    std::string mono;
    if (k > 0) mono = detail::power_string(var, static_cast<unsigned>(k));
    w.add(coeffs_[k], mono);
  }
  return w.str();
}

}  // namespace psiexp
