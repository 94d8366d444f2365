#pragma once

#include "degen/bipoly.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace degen {

enum class SequenceKind { bernoulli, euler, genocchi };
enum class Route { recurrence, series };

const char* to_string(SequenceKind kind);
std::optional<SequenceKind> sequence_kind_from(std::string_view name);

/// Degenerate Bernoulli numbers β_{n,λ} for n = 0..n_max, from the
/// boundary recurrence: the value-at-1 identity rearranges (the index-n
/// instance determines β_{n-1}, since the two β_n terms cancel) into
///   n·β_{n-1} = δ_{1,n} - Σ_{k=0}^{n-2} C(n,k)(1)_{n-k,λ} β_k.
std::vector<BiPoly> bernoulli_numbers_recurrence(int n_max);

/// Same numbers from the generating function t/(e_λ(t)-1): the series
/// e_λ(t)-1 is divided by t and inverted.
std::vector<BiPoly> bernoulli_numbers_series(int n_max);

/// Degenerate Euler numbers 𝓔_{n,λ}: recurrence route solves
/// 2𝓔_n = 2δ_{0,n} - Σ_{k<n} C(n,k)(1)_{n-k,λ}𝓔_k, series route takes
/// 2/(e_λ(t)+1).
std::vector<BiPoly> euler_numbers(int n_max, Route route);

/// Degenerate Genocchi numbers 𝓖_{n,λ}: 𝓖_0 = 0, recurrence route solves
/// 2𝓖_n = 2δ_{1,n} - Σ_{k<n} C(n,k)(1)_{n-k,λ}𝓖_k, series route takes
/// 2t/(e_λ(t)+1).
std::vector<BiPoly> genocchi_numbers(int n_max, Route route);

std::vector<BiPoly> sequence_numbers(SequenceKind kind, int n_max, Route route);

/// Polynomials by binomial convolution of the numbers with the
/// degenerate falling factorials (x)_{n-k,λ}.
std::vector<BiPoly> polynomials_from_numbers(const std::vector<BiPoly>& numbers);

/// Genocchi numbers from Bernoulli numbers at two λ scales:
/// 𝓖_n = 2(β_{n,λ} - 2^n β_{n,λ/2}).
std::vector<BiPoly> genocchi_from_bernoulli(const std::vector<BiPoly>& bernoulli);

/// Entrywise λ := 0.
std::vector<BiPoly> classical_limit(const std::vector<BiPoly>& values);

/// Numbers and polynomials of one family, built together. The numbers
/// equal the polynomials at x = 0 and involve λ only.
struct SequenceTable {
  SequenceKind kind;
  int n_max;
  Route route;
  std::vector<BiPoly> numbers;
  std::vector<BiPoly> polynomials;
};

/// The whole table with λ := 0 in every entry.
SequenceTable classical_limit(const SequenceTable& table);

SequenceTable build_table(SequenceKind kind, int n_max, Route route = Route::recurrence);

}  // namespace degen
