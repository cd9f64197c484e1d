#include "psiexp/bernoulli.hpp"

namespace psiexp {

void BernoulliCache::fill_numbers(unsigned k) {
  if (numbers_.empty()) numbers_.emplace_back(1);
  while (numbers_.size() <= k) {
    const unsigned m = static_cast<unsigned>(numbers_.size());
    if (m > 1 && m % 2 == 1) {
      numbers_.emplace_back(0);
      continue;
    }
    Rational acc;
    for (unsigned j = 0; j < m; ++j) acc += binomial(m + 1, j) * numbers_[j];
    numbers_.push_back(-acc / Rational(m + 1));
  }
}

Rational BernoulliCache::number(unsigned k) {
  std::lock_guard lock(mu_);
  fill_numbers(k);
  return numbers_[k];
}

PolyT BernoulliCache::poly(unsigned k) {
  std::lock_guard lock(mu_);
  fill_numbers(k);
  while (polys_.size() <= k) {
    const unsigned m = static_cast<unsigned>(polys_.size());
    std::vector<Rational> c(m + 1);
    for (unsigned j = 0; j <= m; ++j) c[m - j] = binomial(m, j) * numbers_[j];
    polys_.emplace_back(std::move(c));
  }
  return polys_[k];
}

BernoulliCache& bernoulli_cache() {
  static BernoulliCache cache;
  return cache;
}

Rational bernoulli_number(unsigned k) { return bernoulli_cache().number(k); }

PolyT bernoulli_poly(unsigned k) { return bernoulli_cache().poly(k); }

bool bernoulli_reflection_check(unsigned k) {
  const PolyT b = bernoulli_poly(k);
  const PolyT reflected = b.compose_affine(-1, 1);
  return reflected == (k % 2 == 0 ? b : -b);
}

}  // namespace psiexp
