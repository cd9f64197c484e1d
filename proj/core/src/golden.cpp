#include <stdexcept>
#include <string_view>

#include <json.hpp>

#include "psiexp/errata.hpp"

namespace psiexp {

namespace detail {
extern const std::string_view kGoldenTablesJson;
}

std::string_view golden_status_name(GoldenStatus status) {
  switch (status) {
    case GoldenStatus::confirmed:
      return "confirmed";
    case GoldenStatus::erratum:
      return "erratum";
    case GoldenStatus::excluded:
      return "excluded";
  }
  return "unknown";
}

namespace {

GoldenStatus status_from_name(const std::string& s) {
  for (auto st : {GoldenStatus::confirmed, GoldenStatus::erratum, GoldenStatus::excluded})
    if (golden_status_name(st) == s) return st;
  throw std::runtime_error("golden tables: unknown status '" + s + "'");
}

std::optional<Rational> optional_rational(const nlohmann::json& j) {
  if (j.is_null()) return std::nullopt;
  return Rational::parse(j.get<std::string>());
}

std::vector<GoldenEntry> load() {
  const auto doc = nlohmann::json::parse(detail::kGoldenTablesJson);
  std::vector<GoldenEntry> out;
  for (const auto& j : doc.at("entries")) {
    GoldenEntry e;
    e.id = j.at("id").get<std::string>();
    e.table = j.at("table").get<std::string>();
    const auto kind = j.at("kind").get<std::string>();
    if (kind != "S" && kind != "G") throw std::runtime_error("golden tables: bad kind in " + e.id);
    e.kind = kind.front();
    e.n = j.at("n").get<unsigned>();
    e.p = optional_rational(j.at("p"));
    e.t = optional_rational(j.at("t"));
    e.printed = j.at("printed").get<std::string>();
    e.expected = status_from_name(j.at("status").get<std::string>());
    e.note = j.value("note", "");
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

const std::vector<GoldenEntry>& golden_entries() {
  static const std::vector<GoldenEntry> entries = load();
  return entries;
}

std::vector<GoldenOutcome> evaluate_golden(const GSeries& canonical) {
  std::vector<GoldenOutcome> out;
  for (const auto& e : golden_entries()) {
    if (e.n > canonical.order()) throw std::out_of_range("canonical series too short for golden entry " + e.id);
    GoldenOutcome o;
    o.entry = &e;
    PolyPT v = canonical[e.n];
    if (e.kind == 'S') v = v.eval_p(1);
    if (e.p) v = v.eval_p(*e.p);
    if (e.t) v = v.eval_t(*e.t);
    o.computed = std::move(v);
    if (e.expected == GoldenStatus::excluded) {
      o.status = GoldenStatus::excluded;
    } else {
      o.printed = parse_poly(e.printed);
      o.status = *o.printed == o.computed ? GoldenStatus::confirmed : GoldenStatus::erratum;
    }
    out.push_back(std::move(o));
  }
  return out;
}

}  // namespace psiexp
