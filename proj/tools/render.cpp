#include "render.hpp"

#include <array>
#include <cmath>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "psiexp/serialize.hpp"

namespace psiexp::cli {
namespace {

using nlohmann::ordered_json;

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

std::string md_cell(const std::string& s) {
  std::string r;
  for (char c : s) {
    if (c == '|') r += '\\';
    r += c;
  }
  return r;
}

std::string tex_text(const std::string& s) {
  std::string r;
  for (char c : s) {
    switch (c) {
      case '_': case '&': case '%': case '#': case '$': case '{': case '}':
        r += '\\';
        r += c;
        break;
      case '^': r += "\\^{}"; break;
      case '\\': r += "\\textbackslash{}"; break;
      default: r += c;
    }
  }
  return r;
}

ordered_json poly_json(const PolyPT& poly) { return ordered_json::parse(polypt_to_json(poly)); }

ordered_json opt_rational(const std::optional<Rational>& r) {
  return r ? ordered_json(r->to_string()) : ordered_json(nullptr);
}

// Plain fixed-point rendering of a double for est_order columns.
std::string fixed(double v, int digits = 4) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::optional<Format> format_from_name(std::string_view name) {
  static constexpr std::array<std::pair<std::string_view, Format>, 5> kNames{{
      {"text", Format::text}, {"json", Format::json}, {"csv", Format::csv},
      {"latex", Format::latex}, {"markdown", Format::markdown}}};
  for (const auto& [n, f] : kNames)
    if (n == name) return f;
  return std::nullopt;
}

std::string_view format_name(Format format) {
  switch (format) {
    case Format::text: return "text";
    case Format::json: return "json";
    case Format::csv: return "csv";
    case Format::latex: return "latex";
    case Format::markdown: return "markdown";
  }
  return "text";
}

std::string render_coeffs(const CoeffTable& table, Format format) {
  const std::string sym(1, table.kind);
  std::ostringstream os;
  const bool numeric = std::all_of(table.coeffs.begin(), table.coeffs.end(),
                                   [](const PolyPT& c) { return c.as_constant().has_value(); });
  switch (format) {
    case Format::text:
      for (std::size_t n = 0; n < table.coeffs.size(); ++n)
        os << sym << '_' << n << " = " << table.coeffs[n].to_string() << '\n';
      break;
    case Format::csv:
      if (numeric) {
        os << "n,value\n";
        for (std::size_t n = 0; n < table.coeffs.size(); ++n)
          os << n << ',' << table.coeffs[n].as_constant()->to_string() << '\n';
      } else {
        os << "n,p_power,t_power,num,den\n";
        for (std::size_t n = 0; n < table.coeffs.size(); ++n)
          for (const auto& [e, c] : table.coeffs[n].terms())
            os << n << ',' << e.p << ',' << e.t << ',' << c.numerator_string() << ',' << c.denominator_string()
               << '\n';
      }
      break;
    case Format::json: {
      ordered_json j;
      j["kind"] = std::string(1, static_cast<char>(std::tolower(table.kind)));
      j["N"] = table.coeffs.empty() ? 0 : table.coeffs.size() - 1;
      j["p"] = opt_rational(table.p);
      j["t"] = opt_rational(table.t);
      j["coeffs"] = ordered_json::array();
      for (const auto& c : table.coeffs) j["coeffs"].push_back(poly_json(c));
      os << dump(j);
      break;
    }
    case Format::latex:
    case Format::markdown:
      os << "\\begin{align*}\n";
      for (std::size_t n = 0; n < table.coeffs.size(); ++n) {
        os << "        " << sym << '_' << n << "&=" << table.coeffs[n].to_latex();
        os << (n + 1 < table.coeffs.size() ? ",\\\\\n" : "\n");
      }
      os << "\\end{align*}\n";
      break;
  }
  return os.str();
}

std::string render_reports(const std::vector<CheckReport>& reports, Format format) {
  std::ostringstream os;
  std::size_t failed = 0;
  for (const auto& r : reports) failed += r.passed() ? 0 : 1;

  auto params_text = [](const CheckReport& r) {
    std::string s;
    for (const auto& [k, v] : r.parameters) s += (s.empty() ? "" : " ") + k + "=" + v;
    return s;
  };

  switch (format) {
    case Format::text:
      for (const auto& r : reports) {
        os << (r.passed() ? "PASS " : "FAIL ") << r.check_name;
        if (!r.parameters.empty()) os << " (" << params_text(r) << ")";
        if (!r.detail.empty()) os << ": " << r.detail;
        os << '\n';
        if (r.witness) os << "  witness: " << r.witness->to_string() << '\n';
      }
      os << reports.size() << " checks, " << failed << " failed\n";
      break;
    case Format::csv:
      os << "check,parameters,passed,detail,witness\n";
      for (const auto& r : reports)
        os << csv_field(r.check_name) << ',' << csv_field(params_text(r)) << ',' << (r.passed() ? "true" : "false")
           << ',' << csv_field(r.detail) << ',' << csv_field(r.witness ? r.witness->to_string() : "") << '\n';
      break;
    case Format::markdown:
      os << "| check | parameters | result | detail |\n|---|---|---|---|\n";
      for (const auto& r : reports)
        os << "| " << md_cell(r.check_name) << " | " << md_cell(params_text(r)) << " | "
           << (r.passed() ? "pass" : "FAIL") << " | " << md_cell(r.detail) << " |\n";
      break;
    case Format::latex:
      os << "\\begin{tabular}{lll}\n\\hline\ncheck & parameters & result\\\\\n\\hline\n";
      for (const auto& r : reports)
        os << tex_text(r.check_name) << " & " << tex_text(params_text(r)) << " & " << (r.passed() ? "pass" : "FAIL")
           << "\\\\\n";
      os << "\\hline\n\\end{tabular}\n";
      break;
    case Format::json: {
      ordered_json j;
      j["passed"] = failed == 0;
      j["checks"] = ordered_json::array();
      for (const auto& r : reports) {
        ordered_json c;
        c["check"] = r.check_name;
        c["parameters"] = ordered_json::object();
        for (const auto& [k, v] : r.parameters) c["parameters"][k] = v;
        c["passed"] = r.passed();
        c["detail"] = r.detail;
        c["witness"] = r.witness ? poly_json(*r.witness) : ordered_json(nullptr);
        j["checks"].push_back(std::move(c));
      }
      os << dump(j);
      break;
    }
  }
  return os.str();
}

std::string render_errata(const std::vector<ErrataEntry>& entries, Format format) {
  std::ostringstream os;
  switch (format) {
    case Format::text:
      for (std::size_t i = 0; i < entries.size(); ++i) {
        const auto& e = entries[i];
        if (i) os << '\n';
        os << "[" << i + 1 << "] " << e.location << '\n';
        os << "  printed:  " << e.printed << '\n';
        os << "  computed: " << e.computed << '\n';
        if (!e.note.empty()) os << "  note:     " << e.note << '\n';
      }
      break;
    case Format::csv:
      os << "location,printed,computed,note\n";
      for (const auto& e : entries)
        os << csv_field(e.location) << ',' << csv_field(e.printed) << ',' << csv_field(e.computed) << ','
           << csv_field(e.note) << '\n';
      break;
    case Format::markdown:
      os << "| location | printed | computed | note |\n|---|---|---|---|\n";
      for (const auto& e : entries)
        os << "| " << md_cell(e.location) << " | `" << md_cell(e.printed) << "` | `" << md_cell(e.computed) << "` | "
           << md_cell(e.note) << " |\n";
      break;
    case Format::latex:
      os << "\\begin{tabular}{llll}\n\\hline\nlocation & printed & computed & note\\\\\n\\hline\n";
      for (const auto& e : entries)
        os << tex_text(e.location) << " & \\texttt{" << tex_text(e.printed) << "} & \\texttt{" << tex_text(e.computed)
           << "} & " << tex_text(e.note) << "\\\\\n";
      os << "\\hline\n\\end{tabular}\n";
      break;
    case Format::json: {
      ordered_json j = ordered_json::array();
      for (const auto& e : entries)
        j.push_back({{"location", e.location}, {"printed", e.printed}, {"computed", e.computed}, {"note", e.note}});
      os << dump(j);
      break;
    }
  }
  return os.str();
}

std::string render_approx(const ApproxTable& table, Format format) {
  std::ostringstream os;
  auto est = [](const ApproxResult& r) { return r.est_order ? fixed(*r.est_order) : std::string(); };
  switch (format) {
    case Format::text:
      for (std::size_t i = 0; i < table.rows.size(); ++i) {
        const auto& r = table.rows[i];
        if (i) os << '\n';
        os << table.target << " n=" << r.n << " N=" << r.order_used << '\n';
        os << "  value:     " << r.value.to_string() << '\n';
        os << "  oracle:    " << r.reference.to_string() << '\n';
        os << "  abs_error: " << r.abs_error.to_string(6) << '\n';
        if (r.est_order) os << "  est_order: " << est(r) << '\n';
      }
      if (table.fitted_order) os << "\nfitted order: " << fixed(*table.fitted_order) << '\n';
      break;
    case Format::csv:
    case Format::markdown:
      os << "n,N,value,abs_error,est_order\n";
      for (const auto& r : table.rows)
        os << r.n << ',' << r.order_used << ',' << r.value.to_string() << ',' << r.abs_error.to_string(6) << ','
           << est(r) << '\n';
      break;
    case Format::latex:
      os << "\\begin{tabular}{rrlll}\n\\hline\n$n$ & $N$ & value & error & order\\\\\n\\hline\n";
      for (const auto& r : table.rows)
        os << r.n << " & " << r.order_used << " & $" << r.value.to_string(20) << "$ & $" << r.abs_error.to_string(6)
           << "$ & " << est(r) << "\\\\\n";
      os << "\\hline\n\\end{tabular}\n";
      break;
    case Format::json: {
      ordered_json j;
      j["target"] = table.target;
      j["p"] = opt_rational(table.p);
      j["t"] = table.t.to_string();
      j["prec"] = table.prec;
      j["rows"] = ordered_json::array();
      for (const auto& r : table.rows) {
        ordered_json row;
        row["n"] = r.n;
        row["N"] = r.order_used;
        row["value"] = r.value.to_string();
        row["reference"] = r.reference.to_string();
        row["abs_error"] = r.abs_error.to_string(6);
        row["est_order"] = r.est_order ? ordered_json(*r.est_order) : ordered_json(nullptr);
        j["rows"].push_back(std::move(row));
      }
      j["fitted_order"] = table.fitted_order ? ordered_json(*table.fitted_order) : ordered_json(nullptr);
      os << dump(j);
      break;
    }
  }
  return os.str();
}

}  // namespace psiexp::cli
