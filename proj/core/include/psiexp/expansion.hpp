#pragma once

#include <vector>

#include "psiexp/poly_pt.hpp"

namespace psiexp {

/// Formal series x^e * sum_n c_n x^{-n}, n = 0..N. The exponent e is a
/// polynomial in p so that both x^p (symbolic) and x^{p0} fit.
struct Expansion {
  PolyPT base_exponent;
  std::vector<PolyPT> coeffs;

  std::size_t order() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  friend bool operator==(const Expansion&, const Expansion&) = default;
};

}  // namespace psiexp
