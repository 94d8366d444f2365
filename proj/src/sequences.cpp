#include "degen/sequences.hpp"

#include "degen/egf.hpp"

#include <stdexcept>

namespace degen {

namespace {

Rational rational_binomial(int n, int k) {
  return Rational(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k)));
}

// (1)_{m,λ} for m = 0..count-1, shared by all three recurrences.
std::vector<BiPoly> falling_of_one(int count) {
  std::vector<BiPoly> ones;
  ones.reserve(static_cast<size_t>(count));
  ones.emplace_back(Rational(1));
  for (int m = 1; m < count; ++m) {
    const BiPoly factor = BiPoly(Rational(1)) - BiPoly::term(Rational(m - 1), 0, 1);
    ones.push_back(ones.back() * factor);
  }
  return ones;
}

void require_nonnegative(int n_max) {
  if (n_max < 0) throw std::invalid_argument("sequences: n_max must be >= 0");
}

}  // namespace

const char* to_string(SequenceKind kind) {
  switch (kind) {
    case SequenceKind::bernoulli: return "bernoulli";
    case SequenceKind::euler: return "euler";
    case SequenceKind::genocchi: return "genocchi";
  }
  return "?";
}

std::optional<SequenceKind> sequence_kind_from(std::string_view name) {
  if (name == "bernoulli") return SequenceKind::bernoulli;
  if (name == "euler") return SequenceKind::euler;
  if (name == "genocchi") return SequenceKind::genocchi;
  return std::nullopt;
}

std::vector<BiPoly> bernoulli_numbers_recurrence(int n_max) {
  require_nonnegative(n_max);
  const auto ones = falling_of_one(n_max + 2);
  std::vector<BiPoly> beta(static_cast<size_t>(n_max) + 1);
  for (int n = 1; n <= n_max + 1; ++n) {
    BiPoly acc;
    for (int k = 0; k <= n - 2; ++k) {
      acc += ones[static_cast<size_t>(n - k)] * beta[static_cast<size_t>(k)] *
             rational_binomial(n, k);
    }
    BiPoly rhs = -acc;
    if (n == 1) rhs += BiPoly(Rational(1));
    beta[static_cast<size_t>(n - 1)] = rhs * Rational(1, n);
  }
  return beta;
}

std::vector<BiPoly> bernoulli_numbers_series(int n_max) {
  require_nonnegative(n_max);
  // e_λ(t) - 1, one order above the target so the division by t lands
  // exactly on n_max.
  const auto ones = falling_of_one(n_max + 2);
  std::vector<BiPoly> coeffs(static_cast<size_t>(n_max) + 2);
  for (int n = 1; n <= n_max + 1; ++n) coeffs[static_cast<size_t>(n)] = ones[static_cast<size_t>(n)];
  const EgfSeries divided_by_t = egf_shift_down(EgfSeries(n_max + 1, std::move(coeffs)));
  return egf_reciprocal(divided_by_t).coeffs();
}

namespace {

std::vector<BiPoly> euler_numbers_recurrence(int n_max) {
  const auto ones = falling_of_one(n_max + 1);
  std::vector<BiPoly> e(static_cast<size_t>(n_max) + 1);
  e[0] = BiPoly(Rational(1));
  for (int n = 1; n <= n_max; ++n) {
    BiPoly acc;
    for (int k = 0; k <= n - 1; ++k) {
      acc += ones[static_cast<size_t>(n - k)] * e[static_cast<size_t>(k)] *
             rational_binomial(n, k);
    }
    e[static_cast<size_t>(n)] = acc * Rational(-1, 2);
  }
  return e;
}

EgfSeries euler_series(int n_max) {
  // 2/(e_λ(t)+1)
  const auto ones = falling_of_one(n_max + 1);
  std::vector<BiPoly> coeffs(ones);
  coeffs[0] = BiPoly(Rational(2));
  return egf_scale(egf_reciprocal(EgfSeries(n_max, std::move(coeffs))), Rational(2));
}

std::vector<BiPoly> genocchi_numbers_recurrence(int n_max) {
  const auto ones = falling_of_one(n_max + 1);
  std::vector<BiPoly> g(static_cast<size_t>(n_max) + 1);
  for (int n = 1; n <= n_max; ++n) {
    BiPoly acc;
    for (int k = 1; k <= n - 1; ++k) {
      acc += ones[static_cast<size_t>(n - k)] * g[static_cast<size_t>(k)] *
             rational_binomial(n, k);
    }
    BiPoly rhs = -acc;
    if (n == 1) rhs += BiPoly(Rational(2));
    g[static_cast<size_t>(n)] = rhs * Rational(1, 2);
  }
  return g;
}

}  // namespace

std::vector<BiPoly> euler_numbers(int n_max, Route route) {
  require_nonnegative(n_max);
  if (route == Route::recurrence) return euler_numbers_recurrence(n_max);
  return euler_series(n_max).coeffs();
}

std::vector<BiPoly> genocchi_numbers(int n_max, Route route) {
  require_nonnegative(n_max);
  if (route == Route::recurrence) return genocchi_numbers_recurrence(n_max);
  // 2t/(e_λ(t)+1) = t · (2/(e_λ(t)+1))
  if (n_max == 0) return {BiPoly()};
  return egf_shift_up(euler_series(n_max - 1)).coeffs();
}

std::vector<BiPoly> sequence_numbers(SequenceKind kind, int n_max, Route route) {
  switch (kind) {
    case SequenceKind::bernoulli:
      return route == Route::recurrence ? bernoulli_numbers_recurrence(n_max)
                                        : bernoulli_numbers_series(n_max);
    case SequenceKind::euler: return euler_numbers(n_max, route);
    case SequenceKind::genocchi: return genocchi_numbers(n_max, route);
  }
  throw std::invalid_argument("sequences: unknown kind");
}

std::vector<BiPoly> polynomials_from_numbers(const std::vector<BiPoly>& numbers) {
  const int n_max = static_cast<int>(numbers.size()) - 1;
  std::vector<BiPoly> ff;
  ff.reserve(numbers.size());
  ff.emplace_back(Rational(1));
  for (int m = 1; m <= n_max; ++m) {
    ff.push_back(ff.back() * (BiPoly::x() - BiPoly::term(Rational(m - 1), 0, 1)));
  }
  std::vector<BiPoly> polys(numbers.size());
  for (int n = 0; n <= n_max; ++n) {
    BiPoly acc;
    for (int k = 0; k <= n; ++k) {
      acc += numbers[static_cast<size_t>(k)] * ff[static_cast<size_t>(n - k)] *
             rational_binomial(n, k);
    }
    polys[static_cast<size_t>(n)] = std::move(acc);
  }
  return polys;
}

std::vector<BiPoly> genocchi_from_bernoulli(const std::vector<BiPoly>& bernoulli) {
  std::vector<BiPoly> g;
  g.reserve(bernoulli.size());
  Int power_of_two(1);
  for (const BiPoly& beta : bernoulli) {
    const BiPoly halved = beta.scale_lambda(Rational(1, 2));
    g.push_back((beta - halved * Rational(power_of_two)) * Rational(2));
    power_of_two *= 2;
  }
  return g;
}

std::vector<BiPoly> classical_limit(const std::vector<BiPoly>& values) {
  std::vector<BiPoly> out;
  out.reserve(values.size());
  for (const BiPoly& v : values) out.push_back(v.eval_lambda(Rational(0)));
  return out;
}

SequenceTable classical_limit(const SequenceTable& table) {
  return {table.kind, table.n_max, table.route, classical_limit(table.numbers),
          classical_limit(table.polynomials)};
}

SequenceTable build_table(SequenceKind kind, int n_max, Route route) {
  SequenceTable table{kind, n_max, route, sequence_numbers(kind, n_max, route), {}};
  table.polynomials = polynomials_from_numbers(table.numbers);
  return table;
}

}  // namespace degen
