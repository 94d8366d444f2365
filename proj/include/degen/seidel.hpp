#pragma once

#include "degen/egf.hpp"

#include <span>
#include <utility>
#include <vector>

namespace degen {

enum class SeidelMode { classical, degenerate };

/// Finite triangular Euler-Seidel table a_{k,n}, k + n <= size. Row 0 is
/// the seed sequence; in degenerate mode the fill rule is
///   a_{k,n} = (1 - (k-n)λ)·a_{k-1,n} + a_{k-1,n+1},
/// and in classical mode the weight is 1.
class SeidelMatrix {
 public:
  static SeidelMatrix build(std::span<const BiPoly> initial, int size, SeidelMode mode);

  int size() const { return size_; }
  SeidelMode mode() const { return mode_; }
  const BiPoly& at(int k, int n) const;

  /// Row 0 (the initial sequence), length size + 1.
  std::vector<BiPoly> initial_row() const { return rows_.front(); }
  /// Column 0 (the final sequence a_{k,0}), length size + 1.
  std::vector<BiPoly> final_column() const;

  /// Entrywise λ := value.
  SeidelMatrix eval_lambda(const Rational& value) const;

  friend bool operator==(const SeidelMatrix&, const SeidelMatrix&) = default;

 private:
  SeidelMatrix(int size, SeidelMode mode) : size_(size), mode_(mode) {}

  int size_ = 0;
  SeidelMode mode_ = SeidelMode::degenerate;
  std::vector<std::vector<BiPoly>> rows_;
};

/// Closed form for the final sequence:
/// a_{n,0} = Σ_k C(n,k) (1-λ)_{n-k,λ} a_{0,k}.
BiPoly final_from_initial(std::span<const BiPoly> initial, int n);

/// Inverse transform recovering the initial sequence:
/// a_{0,n} = Σ_k C(n,k) (-1)^{n-k} ⟨1-λ⟩_{n-k,λ} a_{k,0}.
BiPoly initial_from_final(std::span<const BiPoly> final_column, int n);

/// Generating-function law: returns (A, Ā) where A collects the seed as
/// EGF coefficients and Ā = e_λ^{1-λ}(t)·A. The coefficients of Ā are
/// the final sequence.
std::pair<EgfSeries, EgfSeries> seidel_generating_law(std::span<const BiPoly> initial,
                                                      int order);

}  // namespace degen
