#pragma once

#include "degen/bipoly.hpp"
#include "degen/seidel.hpp"
#include "degen/verify.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace degen {

enum class OutputFormat { json, latex, markdown, csv };

const char* to_string(OutputFormat format);
std::optional<OutputFormat> output_format_from(std::string_view name);

/// Raised by the JSON readers; the message carries an entry/term
/// position whenever one is known.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Payload of a rendered sequence table: one polynomial per index.
struct TableView {
  std::string kind;
  int n_max = 0;
  std::vector<BiPoly> values;
};

/// Payload of a rendered Euler-Seidel matrix: triangular rows by k.
struct MatrixView {
  std::string kind;
  int size = 0;
  std::vector<std::vector<BiPoly>> rows;
};

MatrixView matrix_view(const SeidelMatrix& matrix, std::string kind);

// Renderers are byte-deterministic for a fixed payload; every number is
// an exact rational and terms follow the canonical order.
std::string render_table(const TableView& table, OutputFormat format);
std::string render_matrix(const MatrixView& matrix, OutputFormat format);
std::string render_report(const VerificationReport& report, OutputFormat format);

TableView parse_table_json(std::string_view text);
MatrixView parse_matrix_json(std::string_view text);

/// Seed file payload: a JSON array of polynomials, each an array of term
/// records {"x_deg", "lambda_deg", "num", "den"}.
std::vector<BiPoly> parse_seed_json(std::string_view text);

std::string poly_to_latex(const BiPoly& poly);

}  // namespace degen
