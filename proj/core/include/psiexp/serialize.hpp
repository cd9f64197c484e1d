#pragma once

#include <string>

#include "psiexp/expansions.hpp"
#include "psiexp/poly_pt.hpp"

namespace psiexp {

/// {"var_order": ["p","t"], "terms": [{"p":i,"t":j,"num":"..","den":".."}, ...]}
/// with terms sorted by (p-power, t-power) ascending.
std::string polypt_to_json(const PolyPT& poly, int indent = -1);
/// Throws std::invalid_argument on schema violations.
PolyPT polypt_from_json(const std::string& text);

/// {"N": int, "route": string, "coeffs": [PolyPT-json, ...]}
std::string gseries_to_json(const GSeries& series, int indent = -1);
GSeries gseries_from_json(const std::string& text);

/// One row per (n, p-power, t-power, num, den), with a header line.
std::string gseries_to_csv(const GSeries& series);

}  // namespace psiexp
