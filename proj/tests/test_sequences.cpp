#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "degen/classical.hpp"
#include "degen/sequences.hpp"
#include "helpers.hpp"

#include <thread>

using namespace degen;
using degen::test::poly;

TEST_CASE("bernoulli numbers") {
  const auto beta = bernoulli_numbers_recurrence(5);
  CHECK(beta[0] == BiPoly(Rational(1)));
  CHECK(beta[1] == poly({{-1, 2, 0, 0}, {1, 2, 0, 1}}));
  CHECK(beta[2] == poly({{1, 6, 0, 0}, {-1, 6, 0, 2}}));
  // both routes give -λ/4 + λ³/4 here (the printed table differs; the
  // verification suite flags that entry)
  CHECK(beta[3] == poly({{-1, 4, 0, 1}, {1, 4, 0, 3}}));
  CHECK(beta[4] == poly({{-1, 30, 0, 0}, {2, 3, 0, 2}, {-19, 30, 0, 4}}));
  CHECK(beta[5] == poly({{1, 4, 0, 1}, {-5, 2, 0, 3}, {9, 4, 0, 5}}));

  const auto by_series = bernoulli_numbers_series(5);
  CHECK(by_series[0] == BiPoly(Rational(1)));
  CHECK(by_series[2] == poly({{1, 6, 0, 0}, {-1, 6, 0, 2}}));
  CHECK(by_series[5] == poly({{1, 4, 0, 1}, {-5, 2, 0, 3}, {9, 4, 0, 5}}));
}

TEST_CASE("euler numbers") {
  const auto e = euler_numbers(4, Route::recurrence);
  CHECK(e[0] == BiPoly(Rational(1)));
  CHECK(e[1] == BiPoly(Rational(-1, 2)));
  CHECK(e[2] == poly({{1, 2, 0, 1}}));
  CHECK(e[3] == poly({{1, 4, 0, 0}, {-1, 1, 0, 2}}));
  CHECK(e[4] == poly({{-3, 2, 0, 1}, {3, 1, 0, 3}}));
}

TEST_CASE("genocchi numbers") {
  const auto g = genocchi_numbers(5, Route::recurrence);
  CHECK(g[0].is_zero());
  CHECK(g[1] == BiPoly(Rational(1)));
  CHECK(g[2] == BiPoly(Rational(-1)));
  CHECK(g[3] == poly({{3, 2, 0, 1}}));
  CHECK(g[4] == poly({{1, 1, 0, 0}, {-4, 1, 0, 2}}));
  CHECK(g[5] == poly({{-15, 2, 0, 1}, {15, 1, 0, 3}}));
}

TEST_CASE("recurrence and series routes agree exactly") {
  for (const SequenceKind kind :
       {SequenceKind::bernoulli, SequenceKind::euler, SequenceKind::genocchi}) {
    CAPTURE(to_string(kind));
    CHECK(sequence_numbers(kind, 12, Route::recurrence) ==
          sequence_numbers(kind, 12, Route::series));
  }
}

TEST_CASE("polynomials from numbers") {
  const SequenceTable bernoulli = build_table(SequenceKind::bernoulli, 3);
  CHECK(bernoulli.polynomials[0] == BiPoly(Rational(1)));
  CHECK(bernoulli.polynomials[1] ==
        poly({{1, 1, 1, 0}, {-1, 2, 0, 0}, {1, 2, 0, 1}}));

  const SequenceTable euler = build_table(SequenceKind::euler, 2);
  CHECK(euler.polynomials[0] == BiPoly(Rational(1)));

  const SequenceTable genocchi = build_table(SequenceKind::genocchi, 2);
  CHECK(genocchi.polynomials[2] == poly({{2, 1, 1, 0}, {-1, 1, 0, 0}}));
}

TEST_CASE("numbers equal polynomials at x = 0 and carry no x") {
  const BiPoly zero;
  for (const SequenceKind kind :
       {SequenceKind::bernoulli, SequenceKind::euler, SequenceKind::genocchi}) {
    const SequenceTable table = build_table(kind, 12);
    for (int n = 0; n <= 12; ++n) {
      CHECK(table.numbers[n].degree_x() == 0);
      CHECK(table.polynomials[n].substitute_x(zero) == table.numbers[n]);
    }
  }
}

TEST_CASE("boundary identities at x = 1") {
  const BiPoly one(Rational(1));
  const BiPoly two(Rational(2));
  const SequenceTable b = build_table(SequenceKind::bernoulli, 12);
  const SequenceTable e = build_table(SequenceKind::euler, 12);
  const SequenceTable g = build_table(SequenceKind::genocchi, 12);
  for (int n = 0; n <= 12; ++n) {
    const BiPoly beta_delta = b.polynomials[n].substitute_x(one) - b.numbers[n];
    CHECK(beta_delta == (n == 1 ? one : BiPoly()));
    const BiPoly euler_sum = e.polynomials[n].substitute_x(one) + e.numbers[n];
    CHECK(euler_sum == (n == 0 ? two : BiPoly()));
    const BiPoly genocchi_sum = g.polynomials[n].substitute_x(one) + g.numbers[n];
    CHECK(genocchi_sum == (n == 1 ? two : BiPoly()));
  }
}

TEST_CASE("genocchi from bernoulli at two lambda scales") {
  const auto beta = bernoulli_numbers_recurrence(12);
  const auto from_bernoulli = genocchi_from_bernoulli(beta);
  CHECK(from_bernoulli[0].is_zero());
  CHECK(from_bernoulli[2] == BiPoly(Rational(-1)));
  CHECK(from_bernoulli[3] == poly({{3, 2, 0, 1}}));
  CHECK(from_bernoulli == genocchi_numbers(12, Route::recurrence));
}

TEST_CASE("classical oracles") {
  const auto b = classical_bernoulli_numbers(12);
  CHECK(b[0] == Rational(1));
  CHECK(b[1] == Rational(-1, 2));
  CHECK(b[2] == Rational(1, 6));
  CHECK(b[3] == Rational(0));
  CHECK(b[4] == Rational(-1, 30));
  CHECK(b[6] == Rational(1, 42));
  CHECK(b[12] == Rational(-691, 2730));

  const auto e = classical_euler_numbers(8);
  CHECK(e[0] == Rational(1));
  CHECK(e[1] == Rational(-1, 2));
  CHECK(e[2] == Rational(0));
  CHECK(e[3] == Rational(1, 4));
  CHECK(e[5] == Rational(-1, 2));
  CHECK(e[7] == Rational(17, 8));

  const auto g = classical_genocchi_numbers(8);
  CHECK(g[0] == Rational(0));
  CHECK(g[1] == Rational(1));
  CHECK(g[2] == Rational(-1));
  CHECK(g[4] == Rational(1));
  CHECK(g[6] == Rational(-3));
  CHECK(g[8] == Rational(17));

  const auto b_polys = classical_polynomials(b);
  CHECK(b_polys[2] == poly({{1, 1, 2, 0}, {-1, 1, 1, 0}, {1, 6, 0, 0}}));
  CHECK(b_polys[3] == poly({{1, 1, 3, 0}, {-3, 2, 2, 0}, {1, 2, 1, 0}}));
}

TEST_CASE("classical limits match the oracles") {
  const auto check_kind = [](SequenceKind kind, const std::vector<Rational>& oracle) {
    const SequenceTable table = build_table(kind, 12);
    const auto number_limits = classical_limit(table.numbers);
    const auto poly_limits = classical_limit(table.polynomials);
    const auto oracle_polys = classical_polynomials(oracle);
    for (int n = 0; n <= 12; ++n) {
      CHECK(number_limits[n] == BiPoly(oracle[n]));
      CHECK(poly_limits[n] == oracle_polys[n]);
    }
  };
  check_kind(SequenceKind::bernoulli, classical_bernoulli_numbers(12));
  check_kind(SequenceKind::euler, classical_euler_numbers(12));
  check_kind(SequenceKind::genocchi, classical_genocchi_numbers(12));

  // spot values quoted directly
  const auto genocchi_limits =
      classical_limit(genocchi_numbers(6, Route::recurrence));
  CHECK(genocchi_limits[6] == BiPoly(Rational(-3)));
  const auto euler_limits = classical_limit(euler_numbers(3, Route::recurrence));
  CHECK(euler_limits[3] == BiPoly(Rational(1, 4)));

  // table-level limit substitutes both sequences at once
  const SequenceTable limited = classical_limit(build_table(SequenceKind::bernoulli, 4));
  CHECK(limited.numbers[4] == BiPoly(Rational(-1, 30)));
  CHECK(limited.polynomials[2] == poly({{1, 1, 2, 0}, {-1, 1, 1, 0}, {1, 6, 0, 0}}));
  for (const BiPoly& value : limited.polynomials) CHECK(value.degree_lambda() == 0);
}

TEST_CASE("kind and route plumbing") {
  CHECK(sequence_kind_from("bernoulli") == SequenceKind::bernoulli);
  CHECK(sequence_kind_from("euler") == SequenceKind::euler);
  CHECK(sequence_kind_from("genocchi") == SequenceKind::genocchi);
  CHECK(!sequence_kind_from("fibonacci").has_value());
  CHECK(std::string(to_string(SequenceKind::genocchi)) == "genocchi");
}

TEST_CASE("tables can be built concurrently") {
  std::vector<SequenceTable> results(4, build_table(SequenceKind::bernoulli, 0));
  std::vector<std::thread> workers;
  for (auto& slot : results) {
    workers.emplace_back([&slot] { slot = build_table(SequenceKind::bernoulli, 10); });
  }
  for (auto& worker : workers) worker.join();
  for (const auto& table : results) {
    CHECK(table.numbers == results.front().numbers);
    CHECK(table.polynomials == results.front().polynomials);
  }
}
