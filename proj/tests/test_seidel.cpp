#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "degen/seidel.hpp"
#include "degen/sequences.hpp"
#include "helpers.hpp"

using namespace degen;
using degen::test::poly;

namespace {

std::vector<BiPoly> polynomial_seed(SequenceKind kind, int n_max) {
  return polynomials_from_numbers(sequence_numbers(kind, n_max, Route::recurrence));
}

}  // namespace

TEST_CASE("matrix entries quoted from the displays") {
  const auto genocchi = SeidelMatrix::build(polynomial_seed(SequenceKind::genocchi, 2),
                                            2, SeidelMode::degenerate);
  CHECK(genocchi.at(2, 0) == poly({{2, 1, 1, 0}, {1, 1, 0, 0}, {-2, 1, 0, 1}}));
  CHECK(genocchi.at(0, 0).is_zero());
  CHECK(genocchi.at(0, 1) == BiPoly(Rational(1)));
  CHECK(genocchi.at(0, 2) == poly({{2, 1, 1, 0}, {-1, 1, 0, 0}}));
  CHECK(genocchi.at(1, 0) == BiPoly(Rational(1)));
  CHECK(genocchi.at(1, 1) == poly({{2, 1, 1, 0}}));

  const auto euler = SeidelMatrix::build(polynomial_seed(SequenceKind::euler, 1), 1,
                                         SeidelMode::degenerate);
  CHECK(euler.at(1, 0) == poly({{1, 1, 1, 0}, {1, 2, 0, 0}, {-1, 1, 0, 1}}));
  CHECK(euler.at(0, 1) == poly({{1, 1, 1, 0}, {-1, 2, 0, 0}}));

  const auto bernoulli = SeidelMatrix::build(polynomial_seed(SequenceKind::bernoulli, 1),
                                             1, SeidelMode::degenerate);
  CHECK(bernoulli.at(1, 0) == poly({{1, 1, 1, 0}, {1, 2, 0, 0}, {-1, 2, 0, 1}}));

  const auto tiny = SeidelMatrix::build(polynomial_seed(SequenceKind::bernoulli, 0), 0,
                                        SeidelMode::degenerate);
  CHECK(tiny.at(0, 0) == BiPoly(Rational(1)));
}

TEST_CASE("classical mode on the all-ones seed") {
  const std::vector<BiPoly> ones(11, BiPoly(Rational(1)));
  const auto matrix = SeidelMatrix::build(ones, 10, SeidelMode::classical);
  Int power(1);
  for (int n = 0; n <= 10; ++n) {
    CHECK(matrix.at(n, 0) == BiPoly(Rational(power)));
    power *= 2;
  }
}

TEST_CASE("build validates the seed length") {
  const std::vector<BiPoly> three(3, BiPoly(Rational(1)));
  CHECK_THROWS_AS(SeidelMatrix::build(three, 3, SeidelMode::degenerate),
                  std::invalid_argument);
  CHECK_THROWS_AS(final_from_initial(three, 3), std::invalid_argument);
  const auto matrix = SeidelMatrix::build(three, 2, SeidelMode::degenerate);
  CHECK_THROWS_AS(matrix.at(2, 1), std::invalid_argument);
}

TEST_CASE("closed form matches the recursive fill") {
  std::mt19937 rng(77);
  const auto seed = test::random_rational_seed(rng, 8);
  const auto matrix = SeidelMatrix::build(seed, 7, SeidelMode::degenerate);
  CHECK(final_from_initial(seed, 0) == seed[0]);
  for (int n = 0; n <= 7; ++n) {
    CHECK(final_from_initial(seed, n) == matrix.at(n, 0));
  }

  const auto genocchi_seed = polynomial_seed(SequenceKind::genocchi, 2);
  const auto genocchi = SeidelMatrix::build(genocchi_seed, 2, SeidelMode::degenerate);
  CHECK(final_from_initial(genocchi_seed, 2) == genocchi.at(2, 0));
  CHECK(final_from_initial(genocchi_seed, 2) ==
        poly({{2, 1, 1, 0}, {1, 1, 0, 0}, {-2, 1, 0, 1}}));
}

TEST_CASE("inversion recovers the seed") {
  // ⟨1-λ⟩_{2,λ} = (1-λ)·((1-λ)+λ) = 1-λ
  const BiPoly one_minus_lambda = BiPoly(Rational(1)) - BiPoly::lambda();
  CHECK(rising_factorial(2).substitute_x(one_minus_lambda) == one_minus_lambda);

  std::mt19937 rng(78);
  for (int trial = 0; trial < 5; ++trial) {
    const auto seed = test::random_rational_seed(rng, 11);
    const auto matrix = SeidelMatrix::build(seed, 10, SeidelMode::degenerate);
    const auto final_column = matrix.final_column();
    CHECK(initial_from_final(final_column, 0) == final_column[0]);
    for (int n = 0; n <= 10; ++n) {
      // round trip in both directions
      CHECK(initial_from_final(final_column, n) == seed[n]);
      std::vector<BiPoly> finals;
      for (int k = 0; k <= n; ++k) finals.push_back(final_from_initial(seed, k));
      CHECK(final_from_initial(seed, n) == matrix.at(n, 0));
      CHECK(initial_from_final(finals, n) == seed[n]);
    }
  }

  for (const SequenceKind kind :
       {SequenceKind::bernoulli, SequenceKind::euler, SequenceKind::genocchi}) {
    const auto seed = polynomial_seed(kind, 10);
    const auto matrix = SeidelMatrix::build(seed, 10, SeidelMode::degenerate);
    const auto final_column = matrix.final_column();
    for (int n = 0; n <= 10; ++n) {
      CHECK(final_from_initial(seed, n) == matrix.at(n, 0));
      CHECK(initial_from_final(final_column, n) == seed[n]);
    }
  }
}

TEST_CASE("degenerate fill at lambda = 0 is the classical fill") {
  std::mt19937 rng(79);
  const auto seed = test::random_rational_seed(rng, 9);
  const auto degenerate =
      SeidelMatrix::build(seed, 8, SeidelMode::degenerate).eval_lambda(Rational(0));
  const auto classical = SeidelMatrix::build(seed, 8, SeidelMode::classical);
  for (int k = 0; k <= 8; ++k) {
    for (int n = 0; k + n <= 8; ++n) {
      CHECK(degenerate.at(k, n) == classical.at(k, n));
    }
  }
}

TEST_CASE("generating-function law") {
  for (const SequenceKind kind :
       {SequenceKind::bernoulli, SequenceKind::euler, SequenceKind::genocchi}) {
    const auto seed = polynomial_seed(kind, 12);
    const auto matrix = SeidelMatrix::build(seed, 12, SeidelMode::degenerate);
    const auto [a, a_bar] = seidel_generating_law(seed, 12);
    for (int n = 0; n <= 12; ++n) {
      CHECK(a.coeff(n) == seed[n]);
      CHECK(a_bar.coeff(n) == matrix.at(n, 0));
    }
  }

  // Bernoulli seed: the final sequence is the polynomial at x+1-λ
  const auto beta_polys = polynomial_seed(SequenceKind::bernoulli, 8);
  const auto [a, a_bar] = seidel_generating_law(beta_polys, 8);
  const BiPoly shifted_arg = BiPoly::x() + BiPoly(Rational(1)) - BiPoly::lambda();
  for (int n = 0; n <= 8; ++n) {
    CHECK(a_bar.coeff(n) == beta_polys[n].substitute_x(shifted_arg));
  }

  // all-ones seed at λ=0 gives the classical law with 2^n
  const std::vector<BiPoly> ones(13, BiPoly(Rational(1)));
  const auto [ones_a, ones_a_bar] = seidel_generating_law(ones, 12);
  Int power(1);
  for (int n = 0; n <= 12; ++n) {
    CHECK(ones_a_bar.coeff(n).eval_lambda(Rational(0)) == BiPoly(Rational(power)));
    power *= 2;
  }
}

TEST_CASE("interior entries the displays misprint, derived two ways") {
  // The (2,1) entries of the Bernoulli and Euler displays follow from the
  // argument-shift identities:  a_{3,0} = (1-3λ)a_{2,0} + a_{2,1}, with
  // a_{3,0} known in closed form. Both derivations agree with the fill,
  // which pins the computed values the verification suite reports as
  // differing from print.
  const BiPoly up = BiPoly::x() + BiPoly(Rational(1)) - BiPoly::lambda();
  const BiPoly weight = BiPoly(Rational(1)) - BiPoly::term(Rational(3), 0, 1);

  {
    const auto seed = polynomial_seed(SequenceKind::bernoulli, 3);
    const auto matrix = SeidelMatrix::build(seed, 3, SeidelMode::degenerate);
    const BiPoly a30 = seed[3].substitute_x(up);
    CHECK(matrix.at(3, 0) == a30);
    CHECK(matrix.at(2, 1) == a30 - weight * matrix.at(2, 0));
    CHECK(matrix.at(2, 1) ==
          poly({{1, 1, 3, 0},
                {1, 2, 2, 0},
                {-3, 2, 2, 1},
                {1, 2, 1, 1},
                {-1, 2, 1, 0},
                {1, 4, 0, 3},
                {-5, 6, 0, 2},
                {3, 4, 0, 1},
                {-1, 6, 0, 0}}));
  }
  {
    const auto seed = polynomial_seed(SequenceKind::euler, 3);
    const auto matrix = SeidelMatrix::build(seed, 3, SeidelMode::degenerate);
    const BiPoly a30 = seed[3].substitute_x(up);
    CHECK(matrix.at(3, 0) == a30);
    CHECK(matrix.at(2, 1) == a30 - weight * matrix.at(2, 0));
    CHECK(matrix.at(2, 1) ==
          poly({{1, 1, 3, 0},
                {1, 2, 2, 0},
                {-3, 1, 2, 1},
                {2, 1, 1, 2},
                {-1, 1, 1, 0},
                {-1, 1, 0, 2},
                {3, 2, 0, 1},
                {-1, 4, 0, 0}}));
  }
}
