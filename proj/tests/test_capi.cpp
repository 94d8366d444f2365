#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <degen.h>

#include <string>

namespace {

std::string take(char* text) {
  REQUIRE(text != nullptr);
  std::string out(text);
  degen_string_free(text);
  return out;
}

}  // namespace

TEST_CASE("table handles: create, render, free") {
  degen_table* table = nullptr;
  REQUIRE(degen_table_create("bernoulli", 2, &table) == DEGEN_OK);

  char* text = nullptr;
  REQUIRE(degen_table_render(table, "csv", 0, nullptr, &text) == DEGEN_OK);
  CHECK(take(text) == "n,value\n0,1\n1,1/2*λ - 1/2\n2,-1/6*λ^2 + 1/6\n");

  REQUIRE(degen_table_render(table, "csv", 0, "0", &text) == DEGEN_OK);
  CHECK(take(text) == "n,value\n0,1\n1,-1/2\n2,1/6\n");

  REQUIRE(degen_table_render(table, "csv", 1, nullptr, &text) == DEGEN_OK);
  CHECK(take(text).find("x") != std::string::npos);

  REQUIRE(degen_table_render(table, "csv", 0, "1/3", &text) == DEGEN_OK);
  CHECK(take(text) == "n,value\n0,1\n1,-1/3\n2,4/27\n");

  degen_table_free(table);
}

TEST_CASE("table errors set status and message") {
  degen_table* table = nullptr;
  CHECK(degen_table_create("fibonacci", 2, &table) == DEGEN_ERR_INVALID_ARGUMENT);
  CHECK(std::string(degen_last_error()).find("fibonacci") != std::string::npos);
  CHECK(degen_table_create("bernoulli", -1, &table) == DEGEN_ERR_INVALID_ARGUMENT);
  CHECK(degen_table_create("bernoulli", 2, nullptr) == DEGEN_ERR_INVALID_ARGUMENT);

  REQUIRE(degen_table_create("euler", 1, &table) == DEGEN_OK);
  char* text = nullptr;
  CHECK(degen_table_render(table, "yaml", 0, nullptr, &text) ==
        DEGEN_ERR_INVALID_ARGUMENT);
  CHECK(degen_table_render(table, "json", 0, "1/x", &text) ==
        DEGEN_ERR_INVALID_ARGUMENT);
  CHECK(degen_table_render(nullptr, "json", 0, nullptr, &text) ==
        DEGEN_ERR_INVALID_ARGUMENT);
  degen_table_free(table);
}

TEST_CASE("matrix handles and modes") {
  degen_matrix* matrix = nullptr;
  REQUIRE(degen_matrix_create("genocchi", 2, "degenerate", &matrix) == DEGEN_OK);
  char* text = nullptr;
  REQUIRE(degen_matrix_render(matrix, "csv", nullptr, &text) == DEGEN_OK);
  CHECK(take(text).find("2,0,2*x - 2*λ + 1\n") != std::string::npos);
  degen_matrix_free(matrix);

  REQUIRE(degen_matrix_create("genocchi", 2, "classical", &matrix) == DEGEN_OK);
  degen_matrix_free(matrix);

  CHECK(degen_matrix_create("genocchi", 2, "both", &matrix) ==
        DEGEN_ERR_INVALID_ARGUMENT);
  CHECK(degen_matrix_create("genocchi", -1, "degenerate", &matrix) ==
        DEGEN_ERR_INVALID_ARGUMENT);
}

TEST_CASE("matrix from seed json") {
  const char* seed =
      "[[{\"x_deg\":0,\"lambda_deg\":0,\"num\":\"1\",\"den\":\"1\"}],"
      "[{\"x_deg\":1,\"lambda_deg\":0,\"num\":\"1\",\"den\":\"1\"}],"
      "[{\"x_deg\":0,\"lambda_deg\":1,\"num\":\"1\",\"den\":\"2\"}]]";
  degen_matrix* matrix = nullptr;
  REQUIRE(degen_matrix_create_from_seed(seed, 2, "degenerate", &matrix) == DEGEN_OK);
  char* text = nullptr;
  REQUIRE(degen_matrix_render(matrix, "json", nullptr, &text) == DEGEN_OK);
  const std::string json = take(text);
  CHECK(json.find("\"kind\":\"custom\"") != std::string::npos);
  degen_matrix_free(matrix);

  // too few rows for the requested size
  CHECK(degen_matrix_create_from_seed(seed, 3, "degenerate", &matrix) ==
        DEGEN_ERR_PARSE);
  CHECK(degen_matrix_create_from_seed("[[{\"x_deg\":0,\"lambda_deg\":0,"
                                      "\"num\":\"1\",\"den\":\"0\"}]]",
                                      0, "degenerate", &matrix) == DEGEN_ERR_PARSE);
  CHECK(std::string(degen_last_error()).find("denominator") != std::string::npos);
  CHECK(degen_matrix_create_from_seed("nonsense", 0, "degenerate", &matrix) ==
        DEGEN_ERR_PARSE);
}

TEST_CASE("json canonicalization round trips") {
  degen_table* table = nullptr;
  REQUIRE(degen_table_create("euler", 4, &table) == DEGEN_OK);
  char* text = nullptr;
  REQUIRE(degen_table_render(table, "json", 1, nullptr, &text) == DEGEN_OK);
  const std::string rendered = take(text);
  degen_table_free(table);

  REQUIRE(degen_table_json_canonicalize(rendered.c_str(), &text) == DEGEN_OK);
  CHECK(take(text) == rendered);
  CHECK(degen_table_json_canonicalize("{}", &text) == DEGEN_ERR_PARSE);

  degen_matrix* matrix = nullptr;
  REQUIRE(degen_matrix_create("bernoulli", 3, "degenerate", &matrix) == DEGEN_OK);
  REQUIRE(degen_matrix_render(matrix, "json", nullptr, &text) == DEGEN_OK);
  const std::string matrix_json = take(text);
  degen_matrix_free(matrix);
  REQUIRE(degen_matrix_json_canonicalize(matrix_json.c_str(), &text) == DEGEN_OK);
  CHECK(take(text) == matrix_json);
}

TEST_CASE("verification reports") {
  degen_report* report = nullptr;
  REQUIRE(degen_verify_run(6, 0, &report) == DEGEN_OK);
  CHECK(degen_report_all_pass(report) == 1);
  char* text = nullptr;
  REQUIRE(degen_report_render(report, "markdown", &text) == DEGEN_OK);
  CHECK(take(text).find("all 20 checks passed") != std::string::npos);
  degen_report_free(report);

  REQUIRE(degen_verify_run(6, 1, &report) == DEGEN_OK);
  CHECK(degen_report_all_pass(report) == 0);
  REQUIRE(degen_report_render(report, "json", &text) == DEGEN_OK);
  CHECK(take(text).find("\"all_pass\":false") != std::string::npos);
  degen_report_free(report);

  CHECK(degen_verify_run(-1, 0, &report) == DEGEN_ERR_INVALID_ARGUMENT);
  CHECK(degen_report_all_pass(nullptr) == 0);
}
