#include "degen/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace degen {

namespace {

void require_nonzero_den(const Int& den) {
  if (den == 0) {
    throw std::invalid_argument("rational: denominator must be nonzero");
  }
}

}  // namespace

Rational::Rational(const Int& num, const Int& den) {
  require_nonzero_den(den);
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(Int(num), Int(den)) {}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) {
    throw std::invalid_argument("rational: division by zero");
  }
  q_ /= rhs.q_;
  return *this;
}

Rational Rational::parse(std::string_view text) {
  const auto fail = [&] {
    throw std::invalid_argument("rational: malformed value '" + std::string(text) + "'");
  };
  if (text.empty()) fail();

  const auto is_digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
  };
  const auto check_signed_digits = [&](std::string_view s) {
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
    if (!is_digits(s)) fail();
  };

  std::string_view num_part = text;
  std::string_view den_part = "1";
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    num_part = text.substr(0, slash);
    den_part = text.substr(slash + 1);
  }
  check_signed_digits(num_part);
  check_signed_digits(den_part);

  Int num(std::string(num_part), 10);
  Int den(std::string(den_part), 10);
  require_nonzero_den(den);
  return Rational(num, den);
}

Rational Rational::pow(unsigned long exponent) const {
  Int num, den;
  mpz_pow_ui(num.get_mpz_t(), numerator().get_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), denominator().get_mpz_t(), exponent);
  return Rational(num, den);
}

Rational Rational::abs() const { return is_negative() ? -*this : *this; }

Int binomial(unsigned long n, unsigned long k) {
  Int result;
  mpz_bin_uiui(result.get_mpz_t(), n, k);
  return result;
}

}  // namespace degen
