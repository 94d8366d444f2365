#include "degen/egf.hpp"

#include <stdexcept>
#include <utility>

namespace degen {

namespace {

void require_same_order(const EgfSeries& a, const EgfSeries& b) {
  if (a.order() != b.order()) {
    throw std::invalid_argument("egf: order mismatch");
  }
}

Rational rational_binomial(int n, int k) {
  return Rational(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k)));
}

}  // namespace

EgfSeries::EgfSeries(int order, std::vector<BiPoly> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
  if (order_ < 0 || coeffs_.size() != static_cast<size_t>(order_) + 1) {
    throw std::invalid_argument("egf: coefficient count must be order + 1");
  }
}

EgfSeries EgfSeries::constant(const Rational& value, int order) {
  std::vector<BiPoly> coeffs(static_cast<size_t>(order) + 1);
  coeffs[0] = BiPoly(value);
  return EgfSeries(order, std::move(coeffs));
}

const BiPoly& EgfSeries::coeff(int n) const {
  if (n < 0 || n > order_) {
    throw std::invalid_argument("egf: coefficient index out of range");
  }
  return coeffs_[static_cast<size_t>(n)];
}

EgfSeries egf_mul(const EgfSeries& a, const EgfSeries& b) {
  require_same_order(a, b);
  const int order = a.order();
  std::vector<BiPoly> coeffs(static_cast<size_t>(order) + 1);
  for (int n = 0; n <= order; ++n) {
    BiPoly acc;
    for (int k = 0; k <= n; ++k) {
      acc += a.coeff(k) * b.coeff(n - k) * rational_binomial(n, k);
    }
    coeffs[static_cast<size_t>(n)] = std::move(acc);
  }
  return EgfSeries(order, std::move(coeffs));
}

EgfSeries egf_scale(const EgfSeries& f, const Rational& c) {
  std::vector<BiPoly> coeffs;
  coeffs.reserve(static_cast<size_t>(f.order()) + 1);
  for (int n = 0; n <= f.order(); ++n) coeffs.push_back(f.coeff(n) * c);
  return EgfSeries(f.order(), std::move(coeffs));
}

EgfSeries egf_reciprocal(const EgfSeries& f) {
  if (!f.coeff(0).is_constant() || f.coeff(0).is_zero()) {
    throw std::invalid_argument("egf: reciprocal needs a nonzero constant term");
  }
  const Rational inv0 = Rational(1) / f.coeff(0).constant_value();
  const int order = f.order();
  std::vector<BiPoly> g(static_cast<size_t>(order) + 1);
  g[0] = BiPoly(inv0);
  for (int n = 1; n <= order; ++n) {
    BiPoly acc;
    for (int k = 1; k <= n; ++k) {
      acc += f.coeff(k) * g[static_cast<size_t>(n - k)] * rational_binomial(n, k);
    }
    g[static_cast<size_t>(n)] = acc * (-inv0);
  }
  return EgfSeries(order, std::move(g));
}

EgfSeries egf_shift_down(const EgfSeries& f) {
  if (!f.coeff(0).is_zero()) {
    throw std::invalid_argument("egf: shift-down needs a zero constant term");
  }
  if (f.order() < 1) {
    throw std::invalid_argument("egf: shift-down needs order >= 1");
  }
  std::vector<BiPoly> coeffs;
  coeffs.reserve(static_cast<size_t>(f.order()));
  for (int n = 1; n <= f.order(); ++n) {
    coeffs.push_back(f.coeff(n) * Rational(1, n));
  }
  return EgfSeries(f.order() - 1, std::move(coeffs));
}

EgfSeries egf_shift_up(const EgfSeries& f) {
  std::vector<BiPoly> coeffs(static_cast<size_t>(f.order()) + 2);
  for (int n = 0; n <= f.order(); ++n) {
    coeffs[static_cast<size_t>(n) + 1] = f.coeff(n) * Rational(n + 1);
  }
  return EgfSeries(f.order() + 1, std::move(coeffs));
}

EgfSeries egf_truncate(const EgfSeries& f, int order) {
  if (order < 0 || order > f.order()) {
    throw std::invalid_argument("egf: truncation order out of range");
  }
  std::vector<BiPoly> coeffs(f.coeffs().begin(), f.coeffs().begin() + order + 1);
  return EgfSeries(order, std::move(coeffs));
}

EgfSeries degenerate_exponential(const BiPoly& exponent, int order) {
  std::vector<BiPoly> coeffs;
  coeffs.reserve(static_cast<size_t>(order) + 1);
  coeffs.emplace_back(Rational(1));
  for (int n = 1; n <= order; ++n) {
    const BiPoly factor = exponent - BiPoly::term(Rational(n - 1), 0, 1);
    coeffs.push_back(coeffs.back() * factor);
  }
  return EgfSeries(order, std::move(coeffs));
}

}  // namespace degen
