// Command-line front end. Links only the C API from degen.h.

#include <degen.h>

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

constexpr int kExitChecksFailed = 1;
constexpr int kExitUsage = 2;

int fail_usage(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  return kExitUsage;
}

int emit(char* text) {
  std::fputs(text, stdout);
  degen_string_free(text);
  return 0;
}

struct TableArgs {
  std::string kind;
  int n_max = 0;
  bool polynomials = false;
  std::string lambda;
  bool lambda_given = false;
  std::string format = "json";
  bool force_lambda_zero = false;
};

int run_table(const TableArgs& args) {
  degen_table* table = nullptr;
  if (degen_table_create(args.kind.c_str(), args.n_max, &table) != DEGEN_OK) {
    return fail_usage(degen_last_error());
  }
  const char* lambda = nullptr;
  if (args.force_lambda_zero) {
    lambda = "0";
  } else if (args.lambda_given) {
    lambda = args.lambda.c_str();
  }
  char* text = nullptr;
  const degen_status status = degen_table_render(
      table, args.format.c_str(), args.polynomials ? 1 : 0, lambda, &text);
  degen_table_free(table);
  if (status != DEGEN_OK) return fail_usage(degen_last_error());
  return emit(text);
}

struct MatrixArgs {
  std::string kind;
  std::string seed_file;
  int size = 0;
  std::string lambda;
  bool lambda_given = false;
  bool classical = false;
  std::string format = "json";
};

int run_matrix(const MatrixArgs& args) {
  if (args.kind.empty() == args.seed_file.empty()) {
    return fail_usage("matrix needs either a sequence kind or --seed-file");
  }
  degen_matrix* matrix = nullptr;
  if (!args.seed_file.empty()) {
    std::ifstream in(args.seed_file);
    if (!in) return fail_usage("cannot read seed file '" + args.seed_file + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    const std::string seed = buffer.str();
    if (degen_matrix_create_from_seed(seed.c_str(), args.size, "degenerate", &matrix) !=
        DEGEN_OK) {
      return fail_usage("seed file '" + args.seed_file + "': " + degen_last_error());
    }
  } else {
    if (degen_matrix_create(args.kind.c_str(), args.size, "degenerate", &matrix) !=
        DEGEN_OK) {
      return fail_usage(degen_last_error());
    }
  }
  const char* lambda = nullptr;
  if (args.classical) {
    lambda = "0";
  } else if (args.lambda_given) {
    lambda = args.lambda.c_str();
  }
  char* text = nullptr;
  const degen_status status =
      degen_matrix_render(matrix, args.format.c_str(), lambda, &text);
  degen_matrix_free(matrix);
  if (status != DEGEN_OK) return fail_usage(degen_last_error());
  return emit(text);
}

struct VerifyArgs {
  int n_max = 0;
  bool include_paper_tables = false;
  std::string format = "json";
};

int run_verify(const VerifyArgs& args) {
  degen_report* report = nullptr;
  if (degen_verify_run(args.n_max, args.include_paper_tables ? 1 : 0, &report) !=
      DEGEN_OK) {
    return fail_usage(degen_last_error());
  }
  char* text = nullptr;
  const degen_status status = degen_report_render(report, args.format.c_str(), &text);
  const bool all_pass = degen_report_all_pass(report) != 0;
  degen_report_free(report);
  if (status != DEGEN_OK) return fail_usage(degen_last_error());
  emit(text);
  return all_pass ? 0 : kExitChecksFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact degenerate Bernoulli/Euler/Genocchi tables, Euler-Seidel "
               "matrices, and identity verification"};
  app.require_subcommand(1);
  const std::string format_help = "output format: json|latex|markdown|csv";

  TableArgs table_args;
  CLI::App* table = app.add_subcommand("table", "print a number/polynomial table");
  table->add_option("kind", table_args.kind, "bernoulli|euler|genocchi")->required();
  table->add_option("--n", table_args.n_max, "largest index n")->required();
  table->add_flag("--polynomials", table_args.polynomials,
                  "print the polynomials in x instead of the numbers");
  table->add_option("--lambda", table_args.lambda,
                    "substitute an exact rational p/q for lambda");
  table->add_option("--format", table_args.format, format_help);

  TableArgs limit_args;
  limit_args.force_lambda_zero = true;
  CLI::App* limit =
      app.add_subcommand("limit", "classical limit table (table --lambda 0)");
  limit->add_option("kind", limit_args.kind, "bernoulli|euler|genocchi")->required();
  limit->add_option("--n", limit_args.n_max, "largest index n")->required();
  limit->add_flag("--polynomials", limit_args.polynomials,
                  "print the polynomials in x instead of the numbers");
  limit->add_option("--format", limit_args.format, format_help);

  MatrixArgs matrix_args;
  CLI::App* matrix =
      app.add_subcommand("matrix", "print a degenerate Euler-Seidel matrix");
  matrix->add_option("kind", matrix_args.kind,
                     "bernoulli|euler|genocchi (polynomial seed)");
  matrix->add_option("--N", matrix_args.size, "matrix size (entries with k+n <= N)")
      ->required();
  matrix->add_option("--seed-file", matrix_args.seed_file,
                     "JSON file with custom seed polynomials");
  auto* lambda_opt = matrix->add_option("--lambda", matrix_args.lambda,
                                        "substitute an exact rational p/q for lambda");
  matrix->add_flag("--classical", matrix_args.classical, "shorthand for --lambda 0")
      ->excludes(lambda_opt);
  matrix->add_option("--format", matrix_args.format, format_help);

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand("verify", "run the identity checks");
  verify->add_option("--n", verify_args.n_max, "largest index n")->required();
  verify->add_flag("--include-paper-tables", verify_args.include_paper_tables,
                   "also compare against the transcribed printed tables");
  verify->add_option("--format", verify_args.format, format_help);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (table->parsed()) {
    table_args.lambda_given = table->count("--lambda") > 0;
    return run_table(table_args);
  }
  if (limit->parsed()) return run_table(limit_args);
  if (matrix->parsed()) {
    matrix_args.lambda_given = matrix->count("--lambda") > 0;
    return run_matrix(matrix_args);
  }
  if (verify->parsed()) return run_verify(verify_args);
  return kExitUsage;
}
