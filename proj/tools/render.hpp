#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "psiexp/errata.hpp"
#include "psiexp/identities.hpp"
#include "psiexp/numeric.hpp"
#include "psiexp/poly_pt.hpp"

namespace psiexp::cli {

enum class Format { text, json, csv, latex, markdown };

std::optional<Format> format_from_name(std::string_view name);
std::string_view format_name(Format format);

/// A coefficient list as printed by `coeffs`.
struct CoeffTable {
  char kind = 'G';  // 'S' or 'G'
  std::optional<Rational> p;
  std::optional<Rational> t;
  std::vector<PolyPT> coeffs;
};

std::string render_coeffs(const CoeffTable& table, Format format);
std::string render_reports(const std::vector<CheckReport>& reports, Format format);
std::string render_errata(const std::vector<ErrataEntry>& entries, Format format);

struct ApproxTable {
  std::string target;
  std::optional<Rational> p;
  Rational t;
  unsigned long prec = 0;
  std::vector<ApproxResult> rows;
  std::optional<double> fitted_order;
};

std::string render_approx(const ApproxTable& table, Format format);

}  // namespace psiexp::cli
