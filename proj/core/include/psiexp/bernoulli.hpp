#pragma once

#include <mutex>
#include <vector>

#include "psiexp/poly_t.hpp"
#include "psiexp/rational.hpp"

namespace psiexp {

/// Growable table of Bernoulli numbers B_k (convention B_1 = -1/2, so
/// B_k = B_k(0)) and Bernoulli polynomials B_k(t). Filled on demand; entries
/// are never evicted. Thread-safe: fills are serialized by a mutex.
class BernoulliCache {
 public:
  Rational number(unsigned k);
  PolyT poly(unsigned k);

 private:
  void fill_numbers(unsigned k);
  std::mutex mu_;
  std::vector<Rational> numbers_;
  std::vector<PolyT> polys_;
};

/// Process-wide cache used by the free functions below.
BernoulliCache& bernoulli_cache();

/// Exact B_k from sum_{j=0}^{k} C(k+1, j) B_j = 0 for k >= 1, B_0 = 1.
Rational bernoulli_number(unsigned k);
/// B_k(t) = sum_j C(k, j) B_j t^{k-j}; monic of degree k.
PolyT bernoulli_poly(unsigned k);
/// True iff B_k(1 - t) == (-1)^k B_k(t) exactly.
bool bernoulli_reflection_check(unsigned k);

}  // namespace psiexp
