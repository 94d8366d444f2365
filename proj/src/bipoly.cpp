#include "degen/bipoly.hpp"

#include <stdexcept>
#include <vector>

namespace degen {

BiPoly::BiPoly(const Rational& constant) {
  add_term({0, 0}, constant);
}

BiPoly BiPoly::x() { return term(Rational(1), 1, 0); }

BiPoly BiPoly::lambda() { return term(Rational(1), 0, 1); }

BiPoly BiPoly::term(const Rational& coeff, int x_deg, int lambda_deg) {
  if (x_deg < 0 || lambda_deg < 0) {
    throw std::invalid_argument("bipoly: negative exponent");
  }
  BiPoly p;
  p.add_term({x_deg, lambda_deg}, coeff);
  return p;
}

bool BiPoly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first == Monomial{0, 0});
}

Rational BiPoly::constant_value() const {
  if (!is_constant()) {
    throw std::invalid_argument("bipoly: not a constant polynomial");
  }
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

int BiPoly::degree_x() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.x_deg);
  return d;
}

int BiPoly::degree_lambda() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.lambda_deg);
  return d;
}

Rational BiPoly::coeff(int x_deg, int lambda_deg) const {
  const auto it = terms_.find({x_deg, lambda_deg});
  return it == terms_.end() ? Rational(0) : it->second;
}

void BiPoly::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

BiPoly& BiPoly::operator+=(const BiPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

BiPoly& BiPoly::operator*=(const Rational& rhs) {
  if (rhs.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= rhs;
  return *this;
}

BiPoly operator-(const BiPoly& a) {
  BiPoly r;
  for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, -c);
  return r;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly r;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      r.add_term({ma.x_deg + mb.x_deg, ma.lambda_deg + mb.lambda_deg}, ca * cb);
    }
  }
  return r;
}

BiPoly BiPoly::substitute_x(const BiPoly& replacement) const {
  const int max_degree = degree_x();
  std::vector<BiPoly> powers{BiPoly(Rational(1))};
  powers.reserve(static_cast<size_t>(max_degree) + 1);
  for (int d = 1; d <= max_degree; ++d) powers.push_back(powers.back() * replacement);

  BiPoly result;
  for (const auto& [m, c] : terms_) {
    result += powers[static_cast<size_t>(m.x_deg)] * term(c, 0, m.lambda_deg);
  }
  return result;
}

BiPoly BiPoly::eval_lambda(const Rational& value) const {
  BiPoly result;
  for (const auto& [m, c] : terms_) {
    result.add_term({m.x_deg, 0}, c * value.pow(static_cast<unsigned long>(m.lambda_deg)));
  }
  return result;
}

BiPoly BiPoly::scale_lambda(const Rational& factor) const {
  BiPoly result;
  for (const auto& [m, c] : terms_) {
    result.add_term(m, c * factor.pow(static_cast<unsigned long>(m.lambda_deg)));
  }
  return result;
}

std::string BiPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c.is_negative();
    if (first) {
      if (negative) out += "-";
      first = false;
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational mag = c.abs();
    std::string vars;
    if (m.x_deg > 0) {
      vars += "x";
      if (m.x_deg > 1) vars += "^" + std::to_string(m.x_deg);
    }
    if (m.lambda_deg > 0) {
      if (!vars.empty()) vars += "*";
      vars += "λ";
      if (m.lambda_deg > 1) vars += "^" + std::to_string(m.lambda_deg);
    }
    if (vars.empty()) {
      out += mag.str();
    } else if (mag.is_one()) {
      out += vars;
    } else {
      out += mag.str() + "*" + vars;
    }
  }
  return out;
}

namespace {

BiPoly factorial_product(int n, bool rising) {
  if (n < 0) throw std::invalid_argument("factorial: negative index");
  BiPoly p(Rational(1));
  for (int j = 0; j < n; ++j) {
    const Rational step(rising ? j : -j);
    p = p * (BiPoly::x() + BiPoly::term(step, 0, 1));
  }
  return p;
}

}  // namespace

BiPoly falling_factorial(int n) { return factorial_product(n, false); }

BiPoly rising_factorial(int n) { return factorial_product(n, true); }

}  // namespace degen
