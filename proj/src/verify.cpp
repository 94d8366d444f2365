#include "degen/verify.hpp"

#include "degen/classical.hpp"
#include "degen/paper_tables.hpp"
#include "degen/seidel.hpp"
#include "degen/sequences.hpp"

#include <random>

namespace degen {

namespace {

void record(CheckResult& check, std::string where, BiPoly residual) {
  if (!residual.is_zero()) {
    check.failures.push_back({std::move(where), std::move(residual)});
  }
}

BiPoly shift_arg_up() {  // x + 1 - λ
  return BiPoly::x() + BiPoly(Rational(1)) - BiPoly::lambda();
}

BiPoly shift_arg_down() {  // x - λ
  return BiPoly::x() - BiPoly::lambda();
}

// (x-λ)_{m,λ}
BiPoly falling_at_shift(int m) {
  return falling_factorial(m).substitute_x(shift_arg_down());
}

}  // namespace

bool VerificationReport::all_pass() const {
  for (const CheckResult& check : checks) {
    if (!check.passed()) return false;
  }
  return true;
}

CheckResult check_bernoulli_argument_shift(int n_max) {
  CheckResult check{"bernoulli.argument-shift", "theorem 3.3", 0, n_max, {}};
  const auto polys = polynomials_from_numbers(bernoulli_numbers_recurrence(n_max));
  const BiPoly up = shift_arg_up();
  const BiPoly down = shift_arg_down();
  for (int n = 0; n <= n_max; ++n) {
    const BiPoly lhs = polys[static_cast<size_t>(n)].substitute_x(up);
    BiPoly rhs = polys[static_cast<size_t>(n)].substitute_x(down);
    if (n >= 1) rhs += falling_at_shift(n - 1) * Rational(n);
    record(check, "n=" + std::to_string(n), lhs - rhs);
  }
  return check;
}

CheckResult check_euler_argument_shift(int n_max) {
  CheckResult check{"euler.argument-shift", "theorem 3.4", 0, n_max, {}};
  const auto polys = polynomials_from_numbers(euler_numbers(n_max, Route::recurrence));
  const BiPoly up = shift_arg_up();
  const BiPoly down = shift_arg_down();
  for (int n = 0; n <= n_max; ++n) {
    const BiPoly lhs = polys[static_cast<size_t>(n)].substitute_x(up);
    const BiPoly rhs =
        falling_at_shift(n) * Rational(2) - polys[static_cast<size_t>(n)].substitute_x(down);
    record(check, "n=" + std::to_string(n), lhs - rhs);
  }
  return check;
}

CheckResult check_genocchi_argument_shift(int n_max) {
  CheckResult check{"genocchi.argument-shift", "theorem 3.5", 0, n_max, {}};
  const auto polys = polynomials_from_numbers(genocchi_numbers(n_max, Route::recurrence));
  const BiPoly up = shift_arg_up();
  const BiPoly down = shift_arg_down();
  for (int n = 0; n <= n_max; ++n) {
    const BiPoly lhs = polys[static_cast<size_t>(n)].substitute_x(up);
    BiPoly rhs = -polys[static_cast<size_t>(n)].substitute_x(down);
    if (n >= 1) rhs += falling_at_shift(n - 1) * Rational(2L * n);
    record(check, "n=" + std::to_string(n), lhs - rhs);
  }
  return check;
}

std::vector<CheckResult> check_dual_routes(int n_max) {
  std::vector<CheckResult> checks;
  for (const SequenceKind kind :
       {SequenceKind::bernoulli, SequenceKind::euler, SequenceKind::genocchi}) {
    CheckResult check{std::string(to_string(kind)) + ".dual-route",
                      "recurrence vs generating function", 0, n_max, {}};
    const auto by_recurrence = sequence_numbers(kind, n_max, Route::recurrence);
    const auto by_series = sequence_numbers(kind, n_max, Route::series);
    for (int n = 0; n <= n_max; ++n) {
      record(check, "n=" + std::to_string(n),
             by_recurrence[static_cast<size_t>(n)] - by_series[static_cast<size_t>(n)]);
    }
    checks.push_back(std::move(check));
  }
  return checks;
}

std::vector<CheckResult> check_values_at_zero(int n_max) {
  std::vector<CheckResult> checks;
  const BiPoly zero;
  for (const SequenceKind kind :
       {SequenceKind::bernoulli, SequenceKind::euler, SequenceKind::genocchi}) {
    CheckResult check{std::string(to_string(kind)) + ".value-at-zero",
                      "numbers are the polynomials at x=0", 0, n_max, {}};
    const SequenceTable table = build_table(kind, n_max);
    for (int n = 0; n <= n_max; ++n) {
      record(check, "n=" + std::to_string(n),
             table.polynomials[static_cast<size_t>(n)].substitute_x(zero) -
                 table.numbers[static_cast<size_t>(n)]);
    }
    checks.push_back(std::move(check));
  }
  return checks;
}

std::vector<CheckResult> check_boundary_and_relations(int n_max) {
  std::vector<CheckResult> checks;
  const BiPoly one(Rational(1));

  {
    CheckResult check{"bernoulli.boundary", "boundary value at x=1",
                      0, n_max, {}};
    const SequenceTable t = build_table(SequenceKind::bernoulli, n_max);
    for (int n = 0; n <= n_max; ++n) {
      BiPoly lhs = t.polynomials[static_cast<size_t>(n)].substitute_x(one) -
                   t.numbers[static_cast<size_t>(n)];
      if (n == 1) lhs -= one;
      record(check, "n=" + std::to_string(n), lhs);
    }
    checks.push_back(std::move(check));
  }
  {
    CheckResult check{"euler.boundary", "boundary value at x=1",
                      0, n_max, {}};
    const SequenceTable t = build_table(SequenceKind::euler, n_max);
    for (int n = 0; n <= n_max; ++n) {
      BiPoly lhs = t.polynomials[static_cast<size_t>(n)].substitute_x(one) +
                   t.numbers[static_cast<size_t>(n)];
      if (n == 0) lhs -= BiPoly(Rational(2));
      record(check, "n=" + std::to_string(n), lhs);
    }
    checks.push_back(std::move(check));
  }
  {
    CheckResult check{"genocchi.boundary", "boundary value at x=1",
                      0, n_max, {}};
    const SequenceTable t = build_table(SequenceKind::genocchi, n_max);
    for (int n = 0; n <= n_max; ++n) {
      BiPoly lhs = t.polynomials[static_cast<size_t>(n)].substitute_x(one) +
                   t.numbers[static_cast<size_t>(n)];
      if (n == 1) lhs -= BiPoly(Rational(2));
      record(check, "n=" + std::to_string(n), lhs);
    }
    checks.push_back(std::move(check));
  }
  {
    CheckResult check{"genocchi.from-bernoulli",
                      "two-scale Bernoulli relation", 0, n_max, {}};
    const auto genocchi = genocchi_numbers(n_max, Route::recurrence);
    const auto from_bernoulli = genocchi_from_bernoulli(bernoulli_numbers_recurrence(n_max));
    for (int n = 0; n <= n_max; ++n) {
      record(check, "n=" + std::to_string(n),
             genocchi[static_cast<size_t>(n)] - from_bernoulli[static_cast<size_t>(n)]);
    }
    checks.push_back(std::move(check));
  }
  return checks;
}

namespace {

// Deterministic seeds for the transform checks: the three polynomial
// families plus pseudo-random rational sequences from a fixed generator.
struct NamedSeed {
  std::string name;
  std::vector<BiPoly> values;
};

std::vector<NamedSeed> transform_seeds(int n_max, int random_count, unsigned rng_seed) {
  std::vector<NamedSeed> seeds;
  for (const SequenceKind kind :
       {SequenceKind::bernoulli, SequenceKind::euler, SequenceKind::genocchi}) {
    seeds.push_back({to_string(kind),
                     polynomials_from_numbers(sequence_numbers(kind, n_max, Route::recurrence))});
  }
  std::mt19937 rng(rng_seed);
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 9);
  for (int s = 0; s < random_count; ++s) {
    std::vector<BiPoly> values;
    values.reserve(static_cast<size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) {
      values.push_back(BiPoly(Rational(num(rng), den(rng))));
    }
    seeds.push_back({"rational-seed-" + std::to_string(s), std::move(values)});
  }
  return seeds;
}

}  // namespace

std::vector<CheckResult> check_seidel_transforms(int n_max) {
  std::vector<CheckResult> checks;
  const auto seeds = transform_seeds(n_max, 8, 0x5eed);

  CheckResult closed_form{"seidel.closed-form", "theorem 3.1 (forward)", 0, n_max, {}};
  CheckResult inversion{"seidel.inversion", "theorem 3.1 (inverse)", 0, n_max, {}};
  CheckResult law{"seidel.generating-law", "theorem 3.2", 0, n_max, {}};

  for (const NamedSeed& seed : seeds) {
    const SeidelMatrix matrix =
        SeidelMatrix::build(seed.values, n_max, SeidelMode::degenerate);
    const auto final_column = matrix.final_column();
    const auto [a, a_bar] = seidel_generating_law(seed.values, n_max);
    for (int n = 0; n <= n_max; ++n) {
      record(closed_form, seed.name + ", n=" + std::to_string(n),
             matrix.at(n, 0) - final_from_initial(seed.values, n));
      record(inversion, seed.name + ", n=" + std::to_string(n),
             initial_from_final(final_column, n) - seed.values[static_cast<size_t>(n)]);
      record(law, seed.name + ", n=" + std::to_string(n),
             a_bar.coeff(n) - matrix.at(n, 0));
    }
  }
  checks.push_back(std::move(closed_form));
  checks.push_back(std::move(inversion));
  checks.push_back(std::move(law));
  return checks;
}

std::vector<CheckResult> check_classical_degeneration(int n_max) {
  std::vector<CheckResult> checks;
  const Rational zero(0);

  const auto compare_limit = [&](SequenceKind kind, const std::vector<Rational>& oracle) {
    CheckResult check{std::string(to_string(kind)) + ".classical-limit",
                      "limit at lambda=0 vs classical recurrence", 0, n_max, {}};
    const SequenceTable t = build_table(kind, n_max);
    const auto number_limits = classical_limit(t.numbers);
    const auto poly_limits = classical_limit(t.polynomials);
    const auto oracle_polys = classical_polynomials(oracle);
    for (int n = 0; n <= n_max; ++n) {
      record(check, "numbers, n=" + std::to_string(n),
             number_limits[static_cast<size_t>(n)] -
                 BiPoly(oracle[static_cast<size_t>(n)]));
      record(check, "polynomials, n=" + std::to_string(n),
             poly_limits[static_cast<size_t>(n)] - oracle_polys[static_cast<size_t>(n)]);
    }
    return check;
  };

  checks.push_back(compare_limit(SequenceKind::bernoulli, classical_bernoulli_numbers(n_max)));
  checks.push_back(compare_limit(SequenceKind::euler, classical_euler_numbers(n_max)));
  checks.push_back(compare_limit(SequenceKind::genocchi, classical_genocchi_numbers(n_max)));

  CheckResult collapse{"seidel.classical-collapse",
                       "classical collapse of the transforms", 0, n_max, {}};
  const auto seeds = transform_seeds(n_max, 4, 0xc1a55);
  for (const NamedSeed& seed : seeds) {
    std::vector<BiPoly> seed_at_zero;
    seed_at_zero.reserve(seed.values.size());
    for (const BiPoly& v : seed.values) seed_at_zero.push_back(v.eval_lambda(zero));

    const SeidelMatrix degenerate =
        SeidelMatrix::build(seed.values, n_max, SeidelMode::degenerate).eval_lambda(zero);
    const SeidelMatrix classical =
        SeidelMatrix::build(seed_at_zero, n_max, SeidelMode::classical);
    for (int k = 0; k <= n_max; ++k) {
      for (int n = 0; k + n <= n_max; ++n) {
        record(collapse,
               seed.name + ", entry (" + std::to_string(k) + "," + std::to_string(n) + ")",
               degenerate.at(k, n) - classical.at(k, n));
      }
    }
    // Classical binomial transform a_{n,0} = Σ C(n,k) a_{0,k}, the λ=0
    // form of the closed formula.
    for (int n = 0; n <= n_max; ++n) {
      BiPoly sum;
      for (int k = 0; k <= n; ++k) {
        sum += seed_at_zero[static_cast<size_t>(k)] *
               Rational(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k)));
      }
      record(collapse, seed.name + ", binomial transform n=" + std::to_string(n),
             classical.at(n, 0) - sum);
    }
  }
  // All-ones seed: the classical final sequence is 2^n.
  {
    const std::vector<BiPoly> ones(static_cast<size_t>(n_max) + 1, BiPoly(Rational(1)));
    const auto [a, a_bar] = seidel_generating_law(ones, n_max);
    Int power(1);
    for (int n = 0; n <= n_max; ++n) {
      record(collapse, "all-ones seed, n=" + std::to_string(n),
             a_bar.coeff(n).eval_lambda(zero) - BiPoly(Rational(power)));
      power *= 2;
    }
  }
  checks.push_back(std::move(collapse));
  return checks;
}

std::vector<CheckResult> check_paper_number_tables(int n_max) {
  std::vector<CheckResult> checks;
  for (const SequenceKind kind :
       {SequenceKind::bernoulli, SequenceKind::euler, SequenceKind::genocchi}) {
    const auto& table = published::number_table(kind);
    CheckResult check{std::string("published-table.") + to_string(kind),
                      "printed number table", 0, n_max, {}};
    const auto computed = sequence_numbers(kind, n_max, Route::recurrence);
    for (const auto& entry : table) {
      if (entry.n > n_max) continue;
      record(check, "n=" + std::to_string(entry.n),
             published::to_poly(entry.terms) - computed[static_cast<size_t>(entry.n)]);
    }
    checks.push_back(std::move(check));
  }
  return checks;
}

std::vector<CheckResult> check_matrix_displays() {
  std::vector<CheckResult> checks;
  constexpr int display_size = 3;  // deepest printed entry sits on k+n = 3
  for (const SequenceKind kind :
       {SequenceKind::bernoulli, SequenceKind::euler, SequenceKind::genocchi}) {
    CheckResult check{std::string("published-matrix.") + to_string(kind),
                      "printed matrix display", 0, display_size, {}};
    const auto seed =
        polynomials_from_numbers(sequence_numbers(kind, display_size, Route::recurrence));
    const SeidelMatrix matrix = SeidelMatrix::build(seed, display_size, SeidelMode::degenerate);
    for (const auto& entry : published::matrix_display(kind)) {
      record(check,
             "entry (" + std::to_string(entry.k) + "," + std::to_string(entry.n) + ")",
             published::to_poly(entry.terms) - matrix.at(entry.k, entry.n));
    }
    checks.push_back(std::move(check));
  }
  return checks;
}

VerificationReport run_all(int n_max, bool include_paper_tables) {
  VerificationReport report{n_max, include_paper_tables, {}};
  auto append = [&report](std::vector<CheckResult> checks) {
    for (CheckResult& check : checks) report.checks.push_back(std::move(check));
  };

  append(check_dual_routes(n_max));
  append(check_values_at_zero(n_max));
  append(check_boundary_and_relations(n_max));
  report.checks.push_back(check_bernoulli_argument_shift(n_max));
  report.checks.push_back(check_euler_argument_shift(n_max));
  report.checks.push_back(check_genocchi_argument_shift(n_max));
  append(check_seidel_transforms(n_max));
  append(check_classical_degeneration(n_max));
  if (include_paper_tables) {
    append(check_paper_number_tables(n_max));
    append(check_matrix_displays());
  }
  return report;
}

}  // namespace degen
