/*
 * degen — exact degenerate Bernoulli/Euler/Genocchi engine, C interface.
 *
 * Every function that can fail returns a degen_status; on failure a
 * human-readable message is available from degen_last_error() until the
 * next call on the same thread. Objects are returned through opaque
 * handles and must be released with the matching *_free function.
 * Rendered text is returned as a malloc'd NUL-terminated string owned by
 * the caller; release it with degen_string_free().
 *
 * All values are exact rationals; renderers are byte-deterministic for
 * fixed arguments. Handles are immutable after creation and may be
 * shared freely between threads.
 */

#ifndef DEGEN_H
#define DEGEN_H

#ifndef DEGEN_API
#if defined(_WIN32)
#define DEGEN_API
#else
#define DEGEN_API __attribute__((visibility("default")))
#endif
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum degen_status {
  DEGEN_OK = 0,
  DEGEN_ERR_INVALID_ARGUMENT = 1, /* bad kind/format/lambda/size, null output */
  DEGEN_ERR_PARSE = 2,            /* malformed JSON payload */
  DEGEN_ERR_INTERNAL = 3
} degen_status;

typedef struct degen_table degen_table;   /* one family's numbers + polynomials */
typedef struct degen_matrix degen_matrix; /* triangular Euler-Seidel table */
typedef struct degen_report degen_report; /* identity verification report */

/* Message for the last failing call on this thread; never NULL. */
DEGEN_API const char* degen_last_error(void);

DEGEN_API void degen_string_free(char* text);

/*
 * Sequence tables.
 *
 * kind:   "bernoulli" | "euler" | "genocchi"
 * format: "json" | "latex" | "markdown" | "csv"
 * lambda: NULL for the symbolic table, else an exact rational "p/q" or "p"
 *         substituted for the λ variable.
 * polynomials: nonzero renders the polynomials in x, zero the numbers.
 */
DEGEN_API degen_status degen_table_create(const char* kind, int n_max,
                                          degen_table** out_table);
DEGEN_API void degen_table_free(degen_table* table);
DEGEN_API degen_status degen_table_render(const degen_table* table, const char* format,
                                          int polynomials, const char* lambda,
                                          char** out_text);
/* Parses table JSON and re-emits it in canonical form (validation helper;
 * canonical input round-trips byte-identically). */
DEGEN_API degen_status degen_table_json_canonicalize(const char* json_text,
                                                     char** out_text);

/*
 * Euler-Seidel matrices of size N (entries a_{k,n} with k + n <= N).
 *
 * mode: "degenerate" | "classical". The degenerate fill weights the
 * first summand by (1 - (k-n)λ); the classical fill does not.
 * Seed JSON is an array of polynomials, each an array of term records
 * {"x_deg", "lambda_deg", "num", "den"}; at least N + 1 rows.
 */
DEGEN_API degen_status degen_matrix_create(const char* kind, int size, const char* mode,
                                           degen_matrix** out_matrix);
DEGEN_API degen_status degen_matrix_create_from_seed(const char* seed_json, int size,
                                                     const char* mode,
                                                     degen_matrix** out_matrix);
DEGEN_API void degen_matrix_free(degen_matrix* matrix);
DEGEN_API degen_status degen_matrix_render(const degen_matrix* matrix,
                                           const char* format, const char* lambda,
                                           char** out_text);
DEGEN_API degen_status degen_matrix_json_canonicalize(const char* json_text,
                                                      char** out_text);

/*
 * Identity verification. include_paper_tables adds comparisons against
 * the transcribed printed tables and matrix displays; those record any
 * printed entry that disagrees with the computed value as a failure with
 * a symbolic residual.
 */
DEGEN_API degen_status degen_verify_run(int n_max, int include_paper_tables,
                                        degen_report** out_report);
DEGEN_API void degen_report_free(degen_report* report);
DEGEN_API int degen_report_all_pass(const degen_report* report);
DEGEN_API degen_status degen_report_render(const degen_report* report,
                                           const char* format, char** out_text);

#ifdef __cplusplus
}
#endif

#endif /* DEGEN_H */
