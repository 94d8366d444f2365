#include "degen/render.hpp"

#include <json.hpp>

#include <cctype>
#include <sstream>
#include <utility>

namespace degen {

using Json = nlohmann::ordered_json;

const char* to_string(OutputFormat format) {
  switch (format) {
    case OutputFormat::json: return "json";
    case OutputFormat::latex: return "latex";
    case OutputFormat::markdown: return "markdown";
    case OutputFormat::csv: return "csv";
  }
  return "?";
}

std::optional<OutputFormat> output_format_from(std::string_view name) {
  if (name == "json") return OutputFormat::json;
  if (name == "latex") return OutputFormat::latex;
  if (name == "markdown") return OutputFormat::markdown;
  if (name == "csv") return OutputFormat::csv;
  return std::nullopt;
}

MatrixView matrix_view(const SeidelMatrix& matrix, std::string kind) {
  MatrixView view{std::move(kind), matrix.size(), {}};
  view.rows.reserve(static_cast<size_t>(matrix.size()) + 1);
  for (int k = 0; k <= matrix.size(); ++k) {
    std::vector<BiPoly> row;
    row.reserve(static_cast<size_t>(matrix.size() - k) + 1);
    for (int n = 0; k + n <= matrix.size(); ++n) row.push_back(matrix.at(k, n));
    view.rows.push_back(std::move(row));
  }
  return view;
}

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

namespace {

Json poly_to_json(const BiPoly& poly) {
  Json terms = Json::array();
  for (const auto& [m, c] : poly.terms()) {
    Json term;
    term["x_deg"] = m.x_deg;
    term["lambda_deg"] = m.lambda_deg;
    term["num"] = c.numerator().get_str();
    term["den"] = c.denominator().get_str();
    terms.push_back(std::move(term));
  }
  return terms;
}

[[noreturn]] void parse_fail(const std::string& where, const std::string& why) {
  throw ParseError(where + ": " + why);
}

int read_int(const Json& j, const char* key, const std::string& where, int min_value) {
  if (!j.is_object() || !j.contains(key) || !j[key].is_number_integer()) {
    parse_fail(where, std::string("missing integer field '") + key + "'");
  }
  const int value = j[key].get<int>();
  if (value < min_value) {
    parse_fail(where, std::string("field '") + key + "' must be >= " +
                          std::to_string(min_value));
  }
  return value;
}

Int read_big_int(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key) || !j[key].is_string()) {
    parse_fail(where, std::string("missing decimal-string field '") + key + "'");
  }
  try {
    return Int(j[key].get<std::string>(), 10);
  } catch (const std::invalid_argument&) {
    parse_fail(where, std::string("field '") + key + "' is not a decimal integer");
  }
}

BiPoly poly_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) parse_fail(where, "polynomial must be an array of terms");
  BiPoly poly;
  size_t index = 0;
  for (const Json& term : j) {
    const std::string term_where = where + ", term " + std::to_string(index);
    const int x_deg = read_int(term, "x_deg", term_where, 0);
    const int lambda_deg = read_int(term, "lambda_deg", term_where, 0);
    const Int num = read_big_int(term, "num", term_where);
    const Int den = read_big_int(term, "den", term_where);
    if (den == 0) parse_fail(term_where, "denominator is zero");
    poly += BiPoly::term(Rational(num, den), x_deg, lambda_deg);
    ++index;
  }
  return poly;
}

Json parse_json_root(std::string_view text, const char* what) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

std::string dump_line(const Json& j) { return j.dump() + "\n"; }

}  // namespace

TableView parse_table_json(std::string_view text) {
  const Json root = parse_json_root(text, "table");
  if (!root.is_object()) parse_fail("table", "top level must be an object");
  if (!root.contains("kind") || !root["kind"].is_string()) {
    parse_fail("table", "missing string field 'kind'");
  }
  TableView view;
  view.kind = root["kind"].get<std::string>();
  view.n_max = read_int(root, "n_max", "table", 0);
  if (!root.contains("entries") || !root["entries"].is_array()) {
    parse_fail("table", "missing array field 'entries'");
  }
  const Json& entries = root["entries"];
  if (entries.size() != static_cast<size_t>(view.n_max) + 1) {
    parse_fail("table", "expected exactly n_max + 1 entries");
  }
  int expected_n = 0;
  for (const Json& entry : entries) {
    const std::string where = "entry " + std::to_string(expected_n);
    if (read_int(entry, "n", where, 0) != expected_n) {
      parse_fail(where, "indices must run 0..n_max in order");
    }
    if (!entry.contains("poly")) parse_fail(where, "missing field 'poly'");
    view.values.push_back(poly_from_json(entry["poly"], where));
    ++expected_n;
  }
  return view;
}

MatrixView parse_matrix_json(std::string_view text) {
  const Json root = parse_json_root(text, "matrix");
  if (!root.is_object()) parse_fail("matrix", "top level must be an object");
  if (!root.contains("kind") || !root["kind"].is_string()) {
    parse_fail("matrix", "missing string field 'kind'");
  }
  MatrixView view;
  view.kind = root["kind"].get<std::string>();
  view.size = read_int(root, "n_max", "matrix", 0);
  if (!root.contains("entries") || !root["entries"].is_array()) {
    parse_fail("matrix", "missing array field 'entries'");
  }
  view.rows.resize(static_cast<size_t>(view.size) + 1);
  for (int k = 0; k <= view.size; ++k) {
    view.rows[static_cast<size_t>(k)].resize(static_cast<size_t>(view.size - k) + 1);
  }
  const size_t expected =
      static_cast<size_t>(view.size + 1) * static_cast<size_t>(view.size + 2) / 2;
  if (root["entries"].size() != expected) {
    parse_fail("matrix", "expected (n_max+1)(n_max+2)/2 entries");
  }
  std::vector<std::vector<bool>> filled(view.rows.size());
  for (size_t k = 0; k < view.rows.size(); ++k) {
    filled[k].resize(view.rows[k].size(), false);
  }
  size_t index = 0;
  for (const Json& entry : root["entries"]) {
    const std::string where = "entry " + std::to_string(index);
    const int k = read_int(entry, "k", where, 0);
    const int n = read_int(entry, "n", where, 0);
    if (k + n > view.size) parse_fail(where, "position outside the triangle");
    if (filled[static_cast<size_t>(k)][static_cast<size_t>(n)]) {
      parse_fail(where, "duplicate position");
    }
    filled[static_cast<size_t>(k)][static_cast<size_t>(n)] = true;
    if (!entry.contains("poly")) parse_fail(where, "missing field 'poly'");
    view.rows[static_cast<size_t>(k)][static_cast<size_t>(n)] =
        poly_from_json(entry["poly"], where);
    ++index;
  }
  return view;
}

std::vector<BiPoly> parse_seed_json(std::string_view text) {
  const Json root = parse_json_root(text, "seed");
  if (!root.is_array() || root.empty()) {
    parse_fail("seed", "top level must be a non-empty array of polynomials");
  }
  std::vector<BiPoly> rows;
  rows.reserve(root.size());
  size_t index = 0;
  for (const Json& poly : root) {
    rows.push_back(poly_from_json(poly, "entry " + std::to_string(index)));
    ++index;
  }
  return rows;
}

// ---------------------------------------------------------------------------
// LaTeX
// ---------------------------------------------------------------------------

namespace {

std::string rational_to_latex(const Rational& value) {
  const Rational mag = value.abs();
  if (mag.is_integer()) return mag.numerator().get_str();
  return "\\frac{" + mag.numerator().get_str() + "}{" + mag.denominator().get_str() + "}";
}

std::string lambda_power_latex(int deg) {
  if (deg == 0) return "";
  if (deg == 1) return "\\lambda";
  return "\\lambda^{" + std::to_string(deg) + "}";
}

// Flat λ-polynomial in descending powers, e.g. "\frac{1}{2}\lambda-\frac{1}{2}".
std::string lambda_poly_latex(const std::vector<std::pair<int, Rational>>& terms) {
  std::string out;
  for (const auto& [deg, coeff] : terms) {
    out += coeff.is_negative() ? "-" : (out.empty() ? "" : "+");
    const std::string var = lambda_power_latex(deg);
    const Rational mag = coeff.abs();
    if (var.empty()) {
      out += rational_to_latex(mag);
    } else {
      if (!mag.is_one()) out += rational_to_latex(mag);
      out += var;
    }
  }
  return out;
}

}  // namespace

std::string poly_to_latex(const BiPoly& poly) {
  if (poly.is_zero()) return "0";
  // Group terms by descending x-degree; canonical iteration order already
  // delivers the λ coefficients of each group in descending order.
  std::vector<std::pair<int, std::vector<std::pair<int, Rational>>>> groups;
  for (const auto& [m, c] : poly.terms()) {
    if (groups.empty() || groups.back().first != m.x_deg) {
      groups.push_back({m.x_deg, {}});
    }
    groups.back().second.push_back({m.lambda_deg, c});
  }
  std::string out;
  for (const auto& [x_deg, lambda_terms] : groups) {
    std::string x_var;
    if (x_deg == 1) x_var = "x";
    if (x_deg > 1) x_var = "x^{" + std::to_string(x_deg) + "}";
    if (x_deg == 0 || lambda_terms.size() == 1) {
      std::string piece = lambda_poly_latex(lambda_terms);
      if (!x_var.empty()) {
        // A lone coefficient of 1 or -1 reduces to the bare power of x.
        if (piece == "1") piece.clear();
        if (piece == "-1") piece = "-";
        // keep a macro name from swallowing the variable (…\lambda x)
        if (!piece.empty() && std::isalpha(static_cast<unsigned char>(piece.back()))) {
          piece += " ";
        }
        piece += x_var;
      }
      if (!out.empty() && piece.front() != '-') out += "+";
      out += piece;
    } else {
      if (!out.empty()) out += "+";
      out += "\\left(" + lambda_poly_latex(lambda_terms) + "\\right)" + x_var;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Renderers
// ---------------------------------------------------------------------------

namespace {

std::string table_symbol_latex(const std::string& kind, bool with_x) {
  std::string symbol = "a";
  if (kind == "bernoulli") symbol = "\\beta";
  if (kind == "euler") symbol = "\\mathcal{E}";
  if (kind == "genocchi") symbol = "\\mathcal{G}";
  return symbol + "_{n,\\lambda}" + (with_x ? "(x)" : "");
}

std::string render_table_json(const TableView& table) {
  Json root;
  root["kind"] = table.kind;
  root["n_max"] = table.n_max;
  Json entries = Json::array();
  for (int n = 0; n <= table.n_max; ++n) {
    Json entry;
    entry["n"] = n;
    entry["poly"] = poly_to_json(table.values[static_cast<size_t>(n)]);
    entries.push_back(std::move(entry));
  }
  root["entries"] = std::move(entries);
  return dump_line(root);
}

std::string render_matrix_json(const MatrixView& matrix) {
  Json root;
  root["kind"] = matrix.kind;
  root["n_max"] = matrix.size;
  Json entries = Json::array();
  for (int k = 0; k <= matrix.size; ++k) {
    for (int n = 0; k + n <= matrix.size; ++n) {
      Json entry;
      entry["k"] = k;
      entry["n"] = n;
      entry["poly"] =
          poly_to_json(matrix.rows[static_cast<size_t>(k)][static_cast<size_t>(n)]);
      entries.push_back(std::move(entry));
    }
  }
  root["entries"] = std::move(entries);
  return dump_line(root);
}

Json report_to_json(const VerificationReport& report) {
  Json root;
  root["n_max"] = report.n_max;
  root["include_paper_tables"] = report.include_paper_tables;
  root["all_pass"] = report.all_pass();
  Json checks = Json::array();
  for (const CheckResult& check : report.checks) {
    Json j;
    j["id"] = check.id;
    j["anchor"] = check.anchor;
    j["n_range"] = Json::array({check.n_lo, check.n_hi});
    j["status"] = check.passed() ? "pass" : "fail";
    Json failures = Json::array();
    for (const CheckFailure& failure : check.failures) {
      Json f;
      f["at"] = failure.where;
      f["residual"] = poly_to_json(failure.residual);
      failures.push_back(std::move(f));
    }
    j["failures"] = std::move(failures);
    checks.push_back(std::move(j));
  }
  root["checks"] = std::move(checks);
  return root;
}

size_t failed_count(const VerificationReport& report) {
  size_t failed = 0;
  for (const CheckResult& check : report.checks) {
    if (!check.passed()) ++failed;
  }
  return failed;
}

}  // namespace

std::string render_table(const TableView& table, OutputFormat format) {
  switch (format) {
    case OutputFormat::json:
      return render_table_json(table);
    case OutputFormat::csv: {
      std::ostringstream out;
      out << "n,value\n";
      for (int n = 0; n <= table.n_max; ++n) {
        out << n << "," << table.values[static_cast<size_t>(n)].str() << "\n";
      }
      return out.str();
    }
    case OutputFormat::markdown: {
      std::ostringstream out;
      out << "| n | value |\n|---|---|\n";
      for (int n = 0; n <= table.n_max; ++n) {
        out << "| " << n << " | " << table.values[static_cast<size_t>(n)].str()
            << " |\n";
      }
      return out.str();
    }
    case OutputFormat::latex: {
      bool with_x = false;
      for (const BiPoly& value : table.values) {
        if (value.degree_x() > 0) with_x = true;
      }
      const std::string symbol = table_symbol_latex(table.kind, with_x);
      std::ostringstream out;
      out << "\\begin{align*}\n";
      for (int n = 0; n <= table.n_max; ++n) {
        std::string lhs = symbol;
        const auto pos = lhs.find("n,");
        lhs.replace(pos, 1, std::to_string(n));
        out << lhs << " &= " << poly_to_latex(table.values[static_cast<size_t>(n)])
            << "\\\\\n";
      }
      out << "\\end{align*}\n";
      return out.str();
    }
  }
  throw std::invalid_argument("render: unknown format");
}

std::string render_matrix(const MatrixView& matrix, OutputFormat format) {
  switch (format) {
    case OutputFormat::json:
      return render_matrix_json(matrix);
    case OutputFormat::csv: {
      std::ostringstream out;
      out << "k,n,value\n";
      for (int k = 0; k <= matrix.size; ++k) {
        for (int n = 0; k + n <= matrix.size; ++n) {
          out << k << "," << n << ","
              << matrix.rows[static_cast<size_t>(k)][static_cast<size_t>(n)].str()
              << "\n";
        }
      }
      return out.str();
    }
    case OutputFormat::markdown: {
      std::ostringstream out;
      out << "| k/n |";
      for (int n = 0; n <= matrix.size; ++n) out << " " << n << " |";
      out << "\n|---|";
      for (int n = 0; n <= matrix.size; ++n) out << "---|";
      out << "\n";
      for (int k = 0; k <= matrix.size; ++k) {
        out << "| " << k << " |";
        for (int n = 0; n <= matrix.size; ++n) {
          if (k + n <= matrix.size) {
            out << " "
                << matrix.rows[static_cast<size_t>(k)][static_cast<size_t>(n)].str()
                << " |";
          } else {
            out << "  |";
          }
        }
        out << "\n";
      }
      return out.str();
    }
    case OutputFormat::latex: {
      std::ostringstream out;
      out << "\\begin{pmatrix}\n";
      for (int k = 0; k <= matrix.size; ++k) {
        for (int n = 0; n <= matrix.size; ++n) {
          if (n > 0) out << " & ";
          if (k + n <= matrix.size) {
            out << poly_to_latex(
                matrix.rows[static_cast<size_t>(k)][static_cast<size_t>(n)]);
          }
        }
        out << "\\\\\n";
      }
      out << "\\end{pmatrix}\n";
      return out.str();
    }
  }
  throw std::invalid_argument("render: unknown format");
}

std::string render_report(const VerificationReport& report, OutputFormat format) {
  switch (format) {
    case OutputFormat::json:
      return dump_line(report_to_json(report));
    case OutputFormat::csv: {
      std::ostringstream out;
      out << "id,anchor,n_lo,n_hi,status,failures\n";
      for (const CheckResult& check : report.checks) {
        out << check.id << "," << check.anchor << "," << check.n_lo << ","
            << check.n_hi << "," << (check.passed() ? "pass" : "fail") << ","
            << check.failures.size() << "\n";
      }
      return out.str();
    }
    case OutputFormat::markdown: {
      std::ostringstream out;
      out << "# verification report\n\n";
      out << "- n range: 0.." << report.n_max << "\n";
      out << "- paper-table comparisons: "
          << (report.include_paper_tables ? "included" : "excluded") << "\n";
      const size_t failed = failed_count(report);
      if (failed == 0) {
        out << "- result: all " << report.checks.size() << " checks passed\n";
      } else {
        out << "- result: " << failed << " of " << report.checks.size()
            << " checks failed\n";
      }
      out << "\n| check | anchor | range | status |\n|---|---|---|---|\n";
      for (const CheckResult& check : report.checks) {
        out << "| " << check.id << " | " << check.anchor << " | " << check.n_lo
            << ".." << check.n_hi << " | " << (check.passed() ? "pass" : "fail")
            << " |\n";
      }
      bool any_failure = false;
      for (const CheckResult& check : report.checks) {
        for (const CheckFailure& failure : check.failures) {
          if (!any_failure) {
            out << "\n## failures\n\n";
            any_failure = true;
          }
          out << "- `" << check.id << "` " << failure.where
              << ": residual = " << failure.residual.str() << "\n";
        }
      }
      return out.str();
    }
    case OutputFormat::latex: {
      std::ostringstream out;
      out << "\\begin{tabular}{llll}\n";
      out << "check & anchor & range & status\\\\\n\\hline\n";
      for (const CheckResult& check : report.checks) {
        out << check.id << " & " << check.anchor << " & " << check.n_lo << ".."
            << check.n_hi << " & " << (check.passed() ? "pass" : "fail") << "\\\\\n";
      }
      out << "\\end{tabular}\n";
      return out.str();
    }
  }
  throw std::invalid_argument("render: unknown format");
}

}  // namespace degen
