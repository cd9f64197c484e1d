#include "psiexp/serialize.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace psiexp {

using nlohmann::json;

namespace {

json polypt_json(const PolyPT& poly) {
  json terms = json::array();
  for (const auto& [e, c] : poly.terms()) {
    terms.push_back({{"p", e.p}, {"t", e.t}, {"num", c.numerator_string()}, {"den", c.denominator_string()}});
  }
  return {{"var_order", {"p", "t"}}, {"terms", std::move(terms)}};
}

PolyPT polypt_parse(const json& j) {
  if (!j.is_object() || !j.contains("terms") || !j.contains("var_order"))
    throw std::invalid_argument("polynomial JSON needs 'var_order' and 'terms'");
  if (j.at("var_order") != json({"p", "t"})) throw std::invalid_argument("var_order must be [\"p\",\"t\"]");
  PolyPT r;
  bool have_prev = false;
  Exponents prev;
  for (const auto& term : j.at("terms")) {
    if (!term.is_object()) throw std::invalid_argument("term must be an object");
    const auto& jp = term.at("p");
    const auto& jt = term.at("t");
    if (!jp.is_number_unsigned() || !jt.is_number_unsigned())
      throw std::invalid_argument("exponents must be natural numbers");
    if (!term.at("num").is_string() || !term.at("den").is_string())
      throw std::invalid_argument("num/den must be decimal strings");
    const Exponents e{jp.get<unsigned>(), jt.get<unsigned>()};
    if (have_prev && !(prev < e)) throw std::invalid_argument("terms must be strictly sorted by (p, t)");
    const Rational c = Rational::from_strings(term.at("num").get<std::string>(), term.at("den").get<std::string>());
    if (c.is_zero()) throw std::invalid_argument("zero coefficients are not stored");
    r += PolyPT::monomial(c, e.p, e.t);
    prev = e;
    have_prev = true;
  }
  return r;
}

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace

std::string polypt_to_json(const PolyPT& poly, int indent) { return polypt_json(poly).dump(indent); }

PolyPT polypt_from_json(const std::string& text) {
  try {
    return polypt_parse(parse_text(text));
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed polynomial JSON: ") + e.what());
  }
}

std::string gseries_to_json(const GSeries& series, int indent) {
  json coeffs = json::array();
  for (const auto& c : series.coeffs) coeffs.push_back(polypt_json(c));
  json j = {{"N", series.order()}, {"route", std::string(route_name(series.route))}, {"coeffs", std::move(coeffs)}};
  return j.dump(indent);
}

GSeries gseries_from_json(const std::string& text) {
  try {
    const json j = parse_text(text);
    GSeries g;
    g.route = route_from_name(j.at("route").get<std::string>());
    for (const auto& c : j.at("coeffs")) g.coeffs.push_back(polypt_parse(c));
    if (g.coeffs.empty() || j.at("N").get<std::size_t>() != g.coeffs.size() - 1)
      throw std::invalid_argument("'N' disagrees with the number of coefficients");
    return g;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed series JSON: ") + e.what());
  }
}

std::string gseries_to_csv(const GSeries& series) {
  std::ostringstream os;
  os << "n,p_power,t_power,num,den\n";
  for (std::size_t n = 0; n < series.coeffs.size(); ++n)
    for (const auto& [e, c] : series.coeffs[n].terms())
      os << n << ',' << e.p << ',' << e.t << ',' << c.numerator_string() << ',' << c.denominator_string() << '\n';
  return os.str();
}

}  // namespace psiexp
