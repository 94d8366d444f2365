#include "degen.h"

#include "degen/render.hpp"
#include "degen/seidel.hpp"
#include "degen/sequences.hpp"
#include "degen/verify.hpp"

#include <cstdlib>
#include <cstring>
#include <optional>
#include <string>

struct degen_table {
  degen::SequenceTable table;
};

struct degen_matrix {
  degen::MatrixView view;
};

struct degen_report {
  degen::VerificationReport report;
};

namespace {

thread_local std::string g_last_error;

degen_status fail(degen_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

template <typename Fn>
degen_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const degen::ParseError& e) {
    return fail(DEGEN_ERR_PARSE, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(DEGEN_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(DEGEN_ERR_INTERNAL, e.what());
  }
}

char* copy_to_c_string(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

degen_status require(bool condition, const char* message) {
  return condition ? DEGEN_OK : fail(DEGEN_ERR_INVALID_ARGUMENT, message);
}

degen::SequenceKind parse_kind_or_throw(const char* kind) {
  const auto parsed = degen::sequence_kind_from(kind == nullptr ? "" : kind);
  if (!parsed) {
    throw std::invalid_argument(std::string("unknown kind '") +
                                (kind == nullptr ? "(null)" : kind) + "'");
  }
  return *parsed;
}

degen::OutputFormat parse_format_or_throw(const char* format) {
  const auto parsed = degen::output_format_from(format == nullptr ? "" : format);
  if (!parsed) {
    throw std::invalid_argument(std::string("unknown format '") +
                                (format == nullptr ? "(null)" : format) + "'");
  }
  return *parsed;
}

degen::SeidelMode parse_mode_or_throw(const char* mode) {
  const std::string_view name = mode == nullptr ? "" : mode;
  if (name == "degenerate") return degen::SeidelMode::degenerate;
  if (name == "classical") return degen::SeidelMode::classical;
  throw std::invalid_argument(std::string("unknown mode '") + std::string(name) + "'");
}

std::optional<degen::Rational> parse_lambda_or_throw(const char* lambda) {
  if (lambda == nullptr) return std::nullopt;
  return degen::Rational::parse(lambda);
}

degen_matrix* build_matrix_handle(std::span<const degen::BiPoly> seed, int size,
                                  degen::SeidelMode mode, std::string kind) {
  const degen::SeidelMatrix matrix = degen::SeidelMatrix::build(seed, size, mode);
  return new degen_matrix{degen::matrix_view(matrix, std::move(kind))};
}

}  // namespace

extern "C" {

const char* degen_last_error(void) { return g_last_error.c_str(); }

void degen_string_free(char* text) { std::free(text); }

degen_status degen_table_create(const char* kind, int n_max, degen_table** out_table) {
  if (degen_status s = require(out_table != nullptr, "null output handle"); s != DEGEN_OK)
    return s;
  return guarded([&] {
    if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
    *out_table = new degen_table{degen::build_table(parse_kind_or_throw(kind), n_max)};
    return DEGEN_OK;
  });
}

void degen_table_free(degen_table* table) { delete table; }

degen_status degen_table_render(const degen_table* table, const char* format,
                                int polynomials, const char* lambda, char** out_text) {
  if (degen_status s = require(table != nullptr && out_text != nullptr, "null argument");
      s != DEGEN_OK)
    return s;
  return guarded([&] {
    const degen::OutputFormat fmt = parse_format_or_throw(format);
    const auto lambda_value = parse_lambda_or_throw(lambda);
    degen::TableView view{degen::to_string(table->table.kind), table->table.n_max,
                          polynomials != 0 ? table->table.polynomials
                                           : table->table.numbers};
    if (lambda_value) {
      for (degen::BiPoly& value : view.values) value = value.eval_lambda(*lambda_value);
    }
    *out_text = copy_to_c_string(degen::render_table(view, fmt));
    return DEGEN_OK;
  });
}

degen_status degen_table_json_canonicalize(const char* json_text, char** out_text) {
  if (degen_status s = require(json_text != nullptr && out_text != nullptr,
                               "null argument");
      s != DEGEN_OK)
    return s;
  return guarded([&] {
    const degen::TableView view = degen::parse_table_json(json_text);
    *out_text = copy_to_c_string(degen::render_table(view, degen::OutputFormat::json));
    return DEGEN_OK;
  });
}

degen_status degen_matrix_create(const char* kind, int size, const char* mode,
                                 degen_matrix** out_matrix) {
  if (degen_status s = require(out_matrix != nullptr, "null output handle");
      s != DEGEN_OK)
    return s;
  return guarded([&] {
    if (size < 0) throw std::invalid_argument("size must be >= 0");
    const degen::SequenceKind sequence_kind = parse_kind_or_throw(kind);
    const auto seed = degen::polynomials_from_numbers(
        degen::sequence_numbers(sequence_kind, size, degen::Route::recurrence));
    *out_matrix = build_matrix_handle(seed, size, parse_mode_or_throw(mode),
                                      degen::to_string(sequence_kind));
    return DEGEN_OK;
  });
}

degen_status degen_matrix_create_from_seed(const char* seed_json, int size,
                                           const char* mode, degen_matrix** out_matrix) {
  if (degen_status s = require(seed_json != nullptr && out_matrix != nullptr,
                               "null argument");
      s != DEGEN_OK)
    return s;
  return guarded([&] {
    if (size < 0) throw std::invalid_argument("size must be >= 0");
    const auto seed = degen::parse_seed_json(seed_json);
    if (seed.size() < static_cast<size_t>(size) + 1) {
      throw degen::ParseError("seed: needs at least N + 1 polynomials, got " +
                              std::to_string(seed.size()));
    }
    *out_matrix = build_matrix_handle(seed, size, parse_mode_or_throw(mode), "custom");
    return DEGEN_OK;
  });
}

void degen_matrix_free(degen_matrix* matrix) { delete matrix; }

degen_status degen_matrix_render(const degen_matrix* matrix, const char* format,
                                 const char* lambda, char** out_text) {
  if (degen_status s = require(matrix != nullptr && out_text != nullptr, "null argument");
      s != DEGEN_OK)
    return s;
  return guarded([&] {
    const degen::OutputFormat fmt = parse_format_or_throw(format);
    const auto lambda_value = parse_lambda_or_throw(lambda);
    degen::MatrixView view = matrix->view;
    if (lambda_value) {
      for (auto& row : view.rows) {
        for (degen::BiPoly& entry : row) entry = entry.eval_lambda(*lambda_value);
      }
    }
    *out_text = copy_to_c_string(degen::render_matrix(view, fmt));
    return DEGEN_OK;
  });
}

degen_status degen_matrix_json_canonicalize(const char* json_text, char** out_text) {
  if (degen_status s = require(json_text != nullptr && out_text != nullptr,
                               "null argument");
      s != DEGEN_OK)
    return s;
  return guarded([&] {
    const degen::MatrixView view = degen::parse_matrix_json(json_text);
    *out_text = copy_to_c_string(degen::render_matrix(view, degen::OutputFormat::json));
    return DEGEN_OK;
  });
}

degen_status degen_verify_run(int n_max, int include_paper_tables,
                              degen_report** out_report) {
  if (degen_status s = require(out_report != nullptr, "null output handle");
      s != DEGEN_OK)
    return s;
  return guarded([&] {
    if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
    *out_report = new degen_report{degen::run_all(n_max, include_paper_tables != 0)};
    return DEGEN_OK;
  });
}

void degen_report_free(degen_report* report) { delete report; }

int degen_report_all_pass(const degen_report* report) {
  return report != nullptr && report->report.all_pass() ? 1 : 0;
}

degen_status degen_report_render(const degen_report* report, const char* format,
                                 char** out_text) {
  if (degen_status s = require(report != nullptr && out_text != nullptr, "null argument");
      s != DEGEN_OK)
    return s;
  return guarded([&] {
    *out_text = copy_to_c_string(
        degen::render_report(report->report, parse_format_or_throw(format)));
    return DEGEN_OK;
  });
}

}  // extern "C"
