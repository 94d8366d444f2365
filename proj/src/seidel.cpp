#include "degen/seidel.hpp"

#include <stdexcept>

namespace degen {

namespace {

Rational rational_binomial(int n, int k) {
  return Rational(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k)));
}

void require_length(std::span<const BiPoly> values, int n, const char* what) {
  if (n < 0 || values.size() < static_cast<size_t>(n) + 1) {
    throw std::invalid_argument(std::string("seidel: ") + what + " is too short");
  }
}

BiPoly one_minus_lambda() {
  return BiPoly(Rational(1)) - BiPoly::lambda();
}

}  // namespace

SeidelMatrix SeidelMatrix::build(std::span<const BiPoly> initial, int size,
                                 SeidelMode mode) {
  require_length(initial, size, "initial sequence");
  SeidelMatrix m(size, mode);
  m.rows_.reserve(static_cast<size_t>(size) + 1);
  m.rows_.emplace_back(initial.begin(), initial.begin() + size + 1);
  for (int k = 1; k <= size; ++k) {
    const auto& prev = m.rows_.back();
    std::vector<BiPoly> row;
    row.reserve(static_cast<size_t>(size - k) + 1);
    for (int n = 0; n <= size - k; ++n) {
      if (mode == SeidelMode::classical) {
        row.push_back(prev[static_cast<size_t>(n)] + prev[static_cast<size_t>(n) + 1]);
      } else {
        const BiPoly weight =
            BiPoly(Rational(1)) + BiPoly::term(Rational(n - k), 0, 1);
        row.push_back(weight * prev[static_cast<size_t>(n)] +
                      prev[static_cast<size_t>(n) + 1]);
      }
    }
    m.rows_.push_back(std::move(row));
  }
  return m;
}

const BiPoly& SeidelMatrix::at(int k, int n) const {
  if (k < 0 || n < 0 || k + n > size_) {
    throw std::invalid_argument("seidel: entry index outside the triangle");
  }
  return rows_[static_cast<size_t>(k)][static_cast<size_t>(n)];
}

std::vector<BiPoly> SeidelMatrix::final_column() const {
  std::vector<BiPoly> column;
  column.reserve(rows_.size());
  for (const auto& row : rows_) column.push_back(row.front());
  return column;
}

SeidelMatrix SeidelMatrix::eval_lambda(const Rational& value) const {
  SeidelMatrix m(size_, mode_);
  m.rows_.reserve(rows_.size());
  for (const auto& row : rows_) {
    std::vector<BiPoly> out;
    out.reserve(row.size());
    for (const BiPoly& entry : row) out.push_back(entry.eval_lambda(value));
    m.rows_.push_back(std::move(out));
  }
  return m;
}

BiPoly final_from_initial(std::span<const BiPoly> initial, int n) {
  require_length(initial, n, "initial sequence");
  const BiPoly arg = one_minus_lambda();
  std::vector<BiPoly> weights{BiPoly(Rational(1))};  // (1-λ)_{m,λ}
  for (int m = 1; m <= n; ++m) {
    weights.push_back(falling_factorial(m).substitute_x(arg));
  }
  BiPoly acc;
  for (int k = 0; k <= n; ++k) {
    acc += initial[static_cast<size_t>(k)] * weights[static_cast<size_t>(n - k)] *
           rational_binomial(n, k);
  }
  return acc;
}

BiPoly initial_from_final(std::span<const BiPoly> final_column, int n) {
  require_length(final_column, n, "final sequence");
  const BiPoly arg = one_minus_lambda();
  std::vector<BiPoly> weights{BiPoly(Rational(1))};  // ⟨1-λ⟩_{m,λ}
  for (int m = 1; m <= n; ++m) {
    weights.push_back(rising_factorial(m).substitute_x(arg));
  }
  BiPoly acc;
  for (int k = 0; k <= n; ++k) {
    const int sign = (n - k) % 2 == 0 ? 1 : -1;
    acc += final_column[static_cast<size_t>(k)] * weights[static_cast<size_t>(n - k)] *
           (rational_binomial(n, k) * Rational(sign));
  }
  return acc;
}

std::pair<EgfSeries, EgfSeries> seidel_generating_law(std::span<const BiPoly> initial,
                                                      int order) {
  require_length(initial, order, "initial sequence");
  EgfSeries a(order, std::vector<BiPoly>(initial.begin(), initial.begin() + order + 1));
  EgfSeries a_bar = egf_mul(degenerate_exponential(one_minus_lambda(), order), a);
  return {std::move(a), std::move(a_bar)};
}

}  // namespace degen
