#pragma once

#include "degen/rational.hpp"

#include <map>
#include <string>

namespace degen {

/// Exponent pair of a monomial x^a λ^b.
struct Monomial {
  int x_deg = 0;
  int lambda_deg = 0;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Canonical term order: x-degree descending, then λ-degree descending.
/// Serialization and textual rendering follow this order.
struct TermOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.x_deg != b.x_deg) return a.x_deg > b.x_deg;
    return a.lambda_deg > b.lambda_deg;
  }
};

/// Sparse exact polynomial in the two formal variables x and λ over
/// Rational. Stored coefficients are never zero and terms are keyed in
/// canonical order, so equal values have identical representations and
/// the zero polynomial is the empty term map.
class BiPoly {
 public:
  using Terms = std::map<Monomial, Rational, TermOrder>;

  BiPoly() = default;
  explicit BiPoly(const Rational& constant);

  static BiPoly x();
  static BiPoly lambda();
  static BiPoly term(const Rational& coeff, int x_deg, int lambda_deg);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Value of a constant polynomial (zero polynomial included).
  Rational constant_value() const;
  int degree_x() const;
  int degree_lambda() const;
  Rational coeff(int x_deg, int lambda_deg) const;
  const Terms& terms() const { return terms_; }

  /// Exact composition: every occurrence of x is replaced by `replacement`.
  BiPoly substitute_x(const BiPoly& replacement) const;
  /// Substitutes λ := value; the result involves x only.
  BiPoly eval_lambda(const Rational& value) const;
  /// Substitutes λ := factor·λ.
  BiPoly scale_lambda(const Rational& factor) const;

  /// Plain-text form in canonical term order, e.g. "x^2 - 2*x*λ + 1/6".
  std::string str() const;

  BiPoly& operator+=(const BiPoly& rhs);
  BiPoly& operator-=(const BiPoly& rhs);
  BiPoly& operator*=(const Rational& rhs);

  friend BiPoly operator+(BiPoly a, const BiPoly& b) { a += b; return a; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { a -= b; return a; }
  friend BiPoly operator-(const BiPoly& a);
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(BiPoly a, const Rational& c) { a *= c; return a; }
  friend BiPoly operator*(const Rational& c, BiPoly a) { a *= c; return a; }
  friend bool operator==(const BiPoly&, const BiPoly&) = default;

 private:
  void add_term(const Monomial& m, const Rational& c);

  Terms terms_;
};

/// Degenerate falling factorial (x)_{n,λ} = x(x-λ)(x-2λ)⋯(x-(n-1)λ).
BiPoly falling_factorial(int n);

/// Degenerate rising factorial ⟨x⟩_{n,λ} = x(x+λ)(x+2λ)⋯(x+(n-1)λ).
BiPoly rising_factorial(int n);

}  // namespace degen
