#pragma once

#include "degen/bipoly.hpp"

#include <array>
#include <initializer_list>
#include <random>
#include <vector>

namespace degen::test {

// {num, den, x_deg, lambda_deg}
inline BiPoly poly(std::initializer_list<std::array<long, 4>> terms) {
  BiPoly p;
  for (const auto& [num, den, x_deg, lambda_deg] : terms) {
    p += BiPoly::term(Rational(num, den), static_cast<int>(x_deg),
                      static_cast<int>(lambda_deg));
  }
  return p;
}

inline Rational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 9);
  return Rational(num(rng), den(rng));
}

inline BiPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> term_count(0, 4);
  std::uniform_int_distribution<int> degree(0, 3);
  BiPoly p;
  const int count = term_count(rng);
  for (int i = 0; i < count; ++i) {
    p += BiPoly::term(random_rational(rng), degree(rng), degree(rng));
  }
  return p;
}

inline std::vector<BiPoly> random_rational_seed(std::mt19937& rng, int length) {
  std::vector<BiPoly> seed;
  seed.reserve(static_cast<size_t>(length));
  for (int i = 0; i < length; ++i) seed.push_back(BiPoly(random_rational(rng)));
  return seed;
}

}  // namespace degen::test
