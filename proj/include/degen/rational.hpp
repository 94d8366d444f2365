#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace degen {

using Int = mpz_class;

/// Arbitrary-precision rational number kept in canonical reduced form:
/// the denominator is always positive and coprime to the numerator, so
/// two values are equal exactly when their components are identical.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long value) : q_(value) {}  // NOLINT: implicit on purpose
  explicit Rational(const Int& value) : q_(value) {}
  Rational(const Int& num, const Int& den);
  Rational(long num, long den);

  /// Parses "p" or "p/q" with an optional leading sign. Throws
  /// std::invalid_argument on malformed input or a zero denominator.
  static Rational parse(std::string_view text);

  Int numerator() const { return q_.get_num(); }
  Int denominator() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  bool is_negative() const { return sgn(q_) < 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  /// "p" when the denominator is 1, otherwise "p/q".
  std::string str() const { return q_.get_str(); }

  Rational pow(unsigned long exponent) const;
  Rational abs() const;

  Rational& operator+=(const Rational& rhs) { q_ += rhs.q_; return *this; }
  Rational& operator-=(const Rational& rhs) { q_ -= rhs.q_; return *this; }
  Rational& operator*=(const Rational& rhs) { q_ *= rhs.q_; return *this; }
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
  friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
  friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
  friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }
  friend Rational operator-(const Rational& a) { Rational r; r.q_ = -a.q_; return r; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

 private:
  mpq_class q_;
};

/// Exact binomial coefficient C(n, k).
Int binomial(unsigned long n, unsigned long k);

}  // namespace degen
