#include "degen/paper_tables.hpp"

#include <stdexcept>

namespace degen::published {

BiPoly to_poly(const std::vector<Term>& terms) {
  BiPoly p;
  for (const Term& t : terms) {
    p += BiPoly::term(Rational(t.num, t.den), t.x_deg, t.lambda_deg);
  }
  return p;
}

const std::vector<NumberEntry>& number_table(SequenceKind kind) {
  static const std::vector<NumberEntry> bernoulli{
      {0, {{1, 1, 0, 0}}},
      {1, {{-1, 2, 0, 0}, {1, 2, 0, 1}}},
      {2, {{1, 6, 0, 0}, {-1, 6, 0, 2}}},
      {3, {{-1, 4, 0, 0}, {1, 4, 0, 3}}},
      {4, {{-1, 30, 0, 0}, {2, 3, 0, 2}, {-19, 30, 0, 4}}},
      {5, {{1, 4, 0, 1}, {-5, 2, 0, 3}, {9, 4, 0, 5}}},
  };
  static const std::vector<NumberEntry> euler{
      {0, {{1, 1, 0, 0}}},
      {1, {{-1, 2, 0, 0}}},
      {2, {{1, 2, 0, 1}}},
      {3, {{1, 4, 0, 0}, {-3, 4, 0, 2}}},
      {4, {{-3, 2, 0, 1}, {3, 2, 0, 3}}},
      {5, {{-1, 2, 0, 0}, {15, 2, 0, 2}, {-15, 4, 0, 4}}},
      {6, {{15, 2, 0, 1}, {-45, 1, 0, 3}, {45, 4, 0, 5}}},
  };
  static const std::vector<NumberEntry> genocchi{
      {0, {}},
      {1, {{1, 1, 0, 0}}},
      {2, {{-1, 1, 0, 0}}},
      {3, {{3, 2, 0, 1}}},
      {4, {{1, 1, 0, 0}, {-3, 1, 0, 2}}},
      {5, {{-15, 2, 0, 1}, {15, 2, 0, 3}}},
      {6, {{-3, 1, 0, 0}, {45, 1, 0, 2}, {-45, 2, 0, 4}}},
      {7, {{105, 2, 0, 1}, {-315, 1, 0, 3}, {315, 4, 0, 5}}},
  };
  switch (kind) {
    case SequenceKind::bernoulli: return bernoulli;
    case SequenceKind::euler: return euler;
    case SequenceKind::genocchi: return genocchi;
  }
  throw std::invalid_argument("published: unknown kind");
}

const std::vector<MatrixEntry>& matrix_display(SequenceKind kind) {
  static const std::vector<MatrixEntry> bernoulli{
      {0, 0, {{1, 1, 0, 0}}},
      // x - (1-λ)/2
      {0, 1, {{1, 1, 1, 0}, {-1, 2, 0, 0}, {1, 2, 0, 1}}},
      // x + (1-λ)/2
      {1, 0, {{1, 1, 1, 0}, {1, 2, 0, 0}, {-1, 2, 0, 1}}},
      // x^2 - (λ^2 - 3λ + 2)/6
      {1, 1, {{1, 1, 2, 0}, {-1, 6, 0, 2}, {1, 2, 0, 1}, {-1, 3, 0, 0}}},
      // x^2 + (1-2λ)x + (1 - 6λ + 5λ^2)/6
      {2, 0,
       {{1, 1, 2, 0},
        {1, 1, 1, 0},
        {-2, 1, 1, 1},
        {5, 6, 0, 2},
        {-1, 1, 0, 1},
        {1, 6, 0, 0}}},
      // x^3 + (1-3λ)/2 x^2 + (6λ^2 - 5λ - 1)/2 x + (4λ^3 - 3λ^2 - 1)/6
      {2, 1,
       {{1, 1, 3, 0},
        {1, 2, 2, 0},
        {-3, 2, 2, 1},
        {3, 1, 1, 2},
        {-5, 2, 1, 1},
        {-1, 2, 1, 0},
        {2, 3, 0, 3},
        {-1, 2, 0, 2},
        {-1, 6, 0, 0}}},
  };
  static const std::vector<MatrixEntry> euler{
      {0, 0, {{1, 1, 0, 0}}},
      // x - 1/2
      {0, 1, {{1, 1, 1, 0}, {-1, 2, 0, 0}}},
      // x + 1/2 - λ
      {1, 0, {{1, 1, 1, 0}, {1, 2, 0, 0}, {-1, 1, 0, 1}}},
      // x^2 - λx + (λ-1)/2
      {1, 1, {{1, 1, 2, 0}, {-1, 1, 1, 1}, {1, 2, 0, 1}, {-1, 2, 0, 0}}},
      // x^2 + (1-3λ)x + (4λ^2 - 3λ)/2
      {2, 0,
       {{1, 1, 2, 0}, {1, 1, 1, 0}, {-3, 1, 1, 1}, {2, 1, 0, 2}, {-3, 2, 0, 1}}},
      // x^3 + (1/2 + λ)x^2 + (2λ^2 - 1)x - (1 - 6λ + 2λ^2)/4
      {2, 1,
       {{1, 1, 3, 0},
        {1, 2, 2, 0},
        {1, 1, 2, 1},
        {2, 1, 1, 2},
        {-1, 1, 1, 0},
        {-1, 2, 0, 2},
        {3, 2, 0, 1},
        {-1, 4, 0, 0}}},
  };
  static const std::vector<MatrixEntry> genocchi{
      {0, 0, {}},
      {0, 1, {{1, 1, 0, 0}}},
      // 2x - 1
      {0, 2, {{2, 1, 1, 0}, {-1, 1, 0, 0}}},
      {1, 0, {{1, 1, 0, 0}}},
      {1, 1, {{2, 1, 1, 0}}},
      // 2x + 1 - 2λ
      {2, 0, {{2, 1, 1, 0}, {1, 1, 0, 0}, {-2, 1, 0, 1}}},
      // 3x^2 + (1-3λ)x - 1 + λ/2
      {2, 1,
       {{3, 1, 2, 0}, {1, 1, 1, 0}, {-3, 1, 1, 1}, {1, 2, 0, 1}, {-1, 1, 0, 0}}},
      // 3x^2 + 3(1-3λ)x + 6λ^2 - 9λ/2
      {3, 0,
       {{3, 1, 2, 0}, {3, 1, 1, 0}, {-9, 1, 1, 1}, {6, 1, 0, 2}, {-9, 2, 0, 1}}},
  };
  switch (kind) {
    case SequenceKind::bernoulli: return bernoulli;
    case SequenceKind::euler: return euler;
    case SequenceKind::genocchi: return genocchi;
  }
  throw std::invalid_argument("published: unknown kind");
}

}  // namespace degen::published
