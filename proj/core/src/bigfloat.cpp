#include "psiexp/bigfloat.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace psiexp {

namespace {

Precision check_prec(Precision prec) {
  if (prec < kMinPrecision) throw std::invalid_argument("precision must be at least 64 bits");
  if (prec > MPFR_PREC_MAX) throw std::invalid_argument("precision too large");
  return prec;
}

// Result slot at the wider of two precisions, used by compound operators.
void widen(mpfr_ptr v, Precision prec) {
  if (mpfr_get_prec(v) < prec) mpfr_prec_round(v, prec, MPFR_RNDN);
}

}  // namespace

BigFloat::BigFloat(Precision prec) {
  mpfr_init2(v_, check_prec(prec));
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(long value, Precision prec) : BigFloat(prec) { mpfr_set_si(v_, value, MPFR_RNDN); }

BigFloat::BigFloat(double value, Precision prec) : BigFloat(prec) { mpfr_set_d(v_, value, MPFR_RNDN); }

BigFloat::BigFloat(const Rational& value, Precision prec) : BigFloat(prec) {
  mpfr_set_q(v_, value.get().get_mpq_t(), MPFR_RNDN);
}

BigFloat BigFloat::from_string(const std::string& text, Precision prec) {
  BigFloat r(prec);
  char* end = nullptr;
  mpfr_strtofr(r.v_, text.c_str(), &end, 10, MPFR_RNDN);
  if (text.empty() || end == text.c_str() || *end != '\0')
    throw std::invalid_argument("malformed decimal: '" + text + "'");
  return r;
}

BigFloat::BigFloat(const BigFloat& o) {
  mpfr_init2(v_, o.precision());
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
  mpfr_init2(v_, o.precision());
  mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
  if (this != &o) {
    mpfr_set_prec(v_, o.precision());
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::rounded(Precision prec) const {
  BigFloat r(prec);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

std::string BigFloat::to_string(std::size_t digits) const {
  if (digits == 0) digits = static_cast<std::size_t>(std::floor(static_cast<double>(precision()) * std::log10(2.0)));
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_inf_p(v_)) return sign() < 0 ? "-inf" : "inf";
  if (is_zero()) return "0";
  mpfr_exp_t exp10 = 0;
  char* raw = mpfr_get_str(nullptr, &exp10, 10, digits, v_, MPFR_RNDN);
  std::string mant(raw);
  mpfr_free_str(raw);
  std::string sign;
  if (mant.front() == '-') {
    sign = "-";
    mant.erase(0, 1);
  }
  std::string out = sign + mant.substr(0, 1);
  if (mant.size() > 1) out += "." + mant.substr(1);
  out += "e" + std::to_string(static_cast<long>(exp10) - 1);
  return out;
}

BigFloat& BigFloat::operator+=(const BigFloat& o) {
  widen(v_, o.precision());
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& o) {
  widen(v_, o.precision());
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& o) {
  widen(v_, o.precision());
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& o) {
  if (o.is_zero()) throw std::domain_error("BigFloat division by zero");
  widen(v_, o.precision());
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigFloat BigFloat::operator-() const {
  BigFloat r(*this);
  mpfr_neg(r.v_, r.v_, MPFR_RNDN);
  return r;
}

std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b) {
  if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.v_, b.v_);
  return c < 0 ? std::partial_ordering::less : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

BigFloat abs(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_abs(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigFloat log(const BigFloat& x) {
  if (x.sign() <= 0) throw std::domain_error("log of a nonpositive value");
  BigFloat r(x.precision());
  mpfr_log(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigFloat exp(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_exp(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigFloat pow(const BigFloat& x, const BigFloat& y) {
  BigFloat r(std::max(x.precision(), y.precision()));
  mpfr_pow(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}

BigFloat pow(const BigFloat& x, long n) {
  BigFloat r(x.precision());
  mpfr_pow_si(r.get(), x.get(), n, MPFR_RNDN);
  return r;
}

BigFloat ldexp(const BigFloat& x, long e) {
  BigFloat r(x.precision());
  mpfr_mul_2si(r.get(), x.get(), e, MPFR_RNDN);
  return r;
}

BigFloat const_log2(Precision prec) {
  BigFloat r(prec);
  mpfr_const_log2(r.get(), MPFR_RNDN);
  return r;
}

}  // namespace psiexp
