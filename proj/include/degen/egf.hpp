#pragma once

#include "degen/bipoly.hpp"

#include <vector>

namespace degen {

/// Truncated exponential generating function Σ_{n≤N} a_n t^n/n! with
/// BiPoly coefficients. The truncation order is fixed at construction;
/// arithmetic between series of different orders is an error rather
/// than a silent truncation.
class EgfSeries {
 public:
  EgfSeries(int order, std::vector<BiPoly> coeffs);

  static EgfSeries constant(const Rational& value, int order);

  int order() const { return order_; }
  const BiPoly& coeff(int n) const;
  const std::vector<BiPoly>& coeffs() const { return coeffs_; }

  friend bool operator==(const EgfSeries&, const EgfSeries&) = default;

 private:
  int order_;
  std::vector<BiPoly> coeffs_;
};

/// Product of two series of the same order: the coefficients undergo a
/// binomial convolution, c_n = Σ_k C(n,k) a_k b_{n-k}.
EgfSeries egf_mul(const EgfSeries& a, const EgfSeries& b);

EgfSeries egf_scale(const EgfSeries& f, const Rational& c);

/// Multiplicative inverse: egf_mul(f, egf_reciprocal(f)) is the
/// constant-1 series. Requires a nonzero constant leading coefficient.
EgfSeries egf_reciprocal(const EgfSeries& f);

/// (f(t) - f(0))/t in EGF form: b_n = a_{n+1}/(n+1), order drops by one.
/// Requires a zero leading coefficient.
EgfSeries egf_shift_down(const EgfSeries& f);

/// t·f(t) in EGF form: b_0 = 0, b_n = n·a_{n-1}, order grows by one.
EgfSeries egf_shift_up(const EgfSeries& f);

/// Restriction to a smaller order.
EgfSeries egf_truncate(const EgfSeries& f, int order);

/// Degenerate exponential e_λ^s(t): coefficient n is the degenerate
/// falling factorial (s)_{n,λ} of the exponent polynomial s.
EgfSeries degenerate_exponential(const BiPoly& exponent, int order);

}  // namespace degen
