#include "degen/classical.hpp"

#include <stdexcept>

namespace degen {

namespace {

Rational rational_binomial(int n, int k) {
  return Rational(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k)));
}

void require_nonnegative(int n_max) {
  if (n_max < 0) throw std::invalid_argument("classical: n_max must be >= 0");
}

}  // namespace

std::vector<Rational> classical_bernoulli_numbers(int n_max) {
  require_nonnegative(n_max);
  std::vector<Rational> b(static_cast<size_t>(n_max) + 1);
  b[0] = Rational(1);
  for (int n = 1; n <= n_max; ++n) {
    Rational acc;
    for (int k = 0; k <= n - 1; ++k) {
      acc += Rational(binomial(static_cast<unsigned long>(n) + 1,
                               static_cast<unsigned long>(k))) *
             b[static_cast<size_t>(k)];
    }
    b[static_cast<size_t>(n)] = -acc / Rational(n + 1);
  }
  return b;
}

std::vector<Rational> classical_euler_numbers(int n_max) {
  require_nonnegative(n_max);
  std::vector<Rational> e(static_cast<size_t>(n_max) + 1);
  e[0] = Rational(1);
  for (int n = 1; n <= n_max; ++n) {
    Rational acc;
    for (int k = 0; k <= n - 1; ++k) {
      acc += rational_binomial(n, k) * e[static_cast<size_t>(k)];
    }
    e[static_cast<size_t>(n)] = acc * Rational(-1, 2);
  }
  return e;
}

std::vector<Rational> classical_genocchi_numbers(int n_max) {
  require_nonnegative(n_max);
  std::vector<Rational> g(static_cast<size_t>(n_max) + 1);
  for (int n = 1; n <= n_max; ++n) {
    Rational acc;
    for (int k = 1; k <= n - 1; ++k) {
      acc += rational_binomial(n, k) * g[static_cast<size_t>(k)];
    }
    Rational rhs = -acc;
    if (n == 1) rhs += Rational(2);
    g[static_cast<size_t>(n)] = rhs / Rational(2);
  }
  return g;
}

std::vector<BiPoly> classical_polynomials(const std::vector<Rational>& numbers) {
  const int n_max = static_cast<int>(numbers.size()) - 1;
  std::vector<BiPoly> polys(numbers.size());
  for (int n = 0; n <= n_max; ++n) {
    BiPoly acc;
    for (int k = 0; k <= n; ++k) {
      acc += BiPoly::term(rational_binomial(n, k) * numbers[static_cast<size_t>(k)],
                          n - k, 0);
    }
    polys[static_cast<size_t>(n)] = std::move(acc);
  }
  return polys;
}

}  // namespace degen
