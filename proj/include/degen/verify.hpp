#pragma once

#include "degen/bipoly.hpp"

#include <string>
#include <vector>

namespace degen {

/// One failed comparison inside a check: `where` locates it (e.g. "n=3"
/// or "entry (2,1)") and `residual` is the nonzero symbolic difference.
struct CheckFailure {
  std::string where;
  BiPoly residual;
};

/// Outcome of one identity check over an index range. A check passes
/// exactly when it recorded no failures; every comparison behind it is
/// exact, with no tolerance anywhere.
struct CheckResult {
  std::string id;
  std::string anchor;
  int n_lo = 0;
  int n_hi = 0;
  std::vector<CheckFailure> failures;

  bool passed() const { return failures.empty(); }
};

struct VerificationReport {
  int n_max = 0;
  bool include_paper_tables = false;
  std::vector<CheckResult> checks;

  bool all_pass() const;
};

// Argument-shift identities: the value of each family at x+1-λ expressed
// through the value at x-λ and a degenerate falling factorial.
CheckResult check_bernoulli_argument_shift(int n_max);
CheckResult check_euler_argument_shift(int n_max);
CheckResult check_genocchi_argument_shift(int n_max);

/// Recurrence route vs series route for each family, exact equality.
std::vector<CheckResult> check_dual_routes(int n_max);

/// numbers[n] equals polynomials[n] at x = 0 for each family.
std::vector<CheckResult> check_values_at_zero(int n_max);

/// Boundary identities at x = 1 plus the Genocchi-Bernoulli two-scale
/// relation 𝓖_n = 2(β_{n,λ} - 2^n β_{n,λ/2}).
std::vector<CheckResult> check_boundary_and_relations(int n_max);

/// Euler-Seidel transforms on the three polynomial seeds and a fixed set
/// of pseudo-random rational seeds: recursive fill vs closed form,
/// inversion round trip, and the generating-function law.
std::vector<CheckResult> check_seidel_transforms(int n_max);

/// λ := 0 degenerations: sequence limits against the classical oracles,
/// and collapse of the Seidel transforms to the classical binomial pair.
std::vector<CheckResult> check_classical_degeneration(int n_max);

/// Computed numbers vs the printed number tables (claims, not ground
/// truth; residual = printed - computed).
std::vector<CheckResult> check_paper_number_tables(int n_max);

/// Computed Seidel entries vs every fully-printed entry of the three
/// matrix displays.
std::vector<CheckResult> check_matrix_displays();

/// Runs every check in a deterministic order. Paper-table comparisons
/// (number tables and matrix displays) are included only on request so
/// that internal consistency and fidelity-to-print stay separate.
VerificationReport run_all(int n_max, bool include_paper_tables);

}  // namespace degen
