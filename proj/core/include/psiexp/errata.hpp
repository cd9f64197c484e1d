#pragma once

#include <optional>
#include <string>
#include <vector>

#include "psiexp/expansions.hpp"
#include "psiexp/poly_pt.hpp"

namespace psiexp {

enum class GoldenStatus { confirmed, erratum, excluded };

std::string_view golden_status_name(GoldenStatus status);

/// One printed coefficient from the published tables.
struct GoldenEntry {
  std::string id;
  std::string table;
  char kind = 'G';  ///< 'S' (p = 1 series) or 'G'
  unsigned n = 0;
  std::optional<Rational> p;  ///< nullopt: symbolic
  std::optional<Rational> t;  ///< nullopt: symbolic
  std::string printed;        ///< expression in p, t as printed
  GoldenStatus expected = GoldenStatus::confirmed;
  std::string note;
};

/// The embedded table set, in file order.
const std::vector<GoldenEntry>& golden_entries();

struct GoldenOutcome {
  const GoldenEntry* entry = nullptr;
  std::optional<PolyPT> printed;  ///< nullopt for excluded entries
  PolyPT computed;
  GoldenStatus status = GoldenStatus::confirmed;  ///< observed
};

/// Compares every embedded entry against `canonical` (a symbolic series from
/// g_via_bernoulli with order >= the largest n in the tables).
std::vector<GoldenOutcome> evaluate_golden(const GSeries& canonical);

struct ErrataEntry {
  std::string location;
  std::string printed;
  std::string computed;
  std::string note;
};

/// Every mismatch between printed and computed values: table entries plus
/// printed formulas re-evaluated at a witness instance. Deterministic order.
std::vector<ErrataEntry> errata_report();

}  // namespace psiexp
