#pragma once

#include "degen/bipoly.hpp"

#include <vector>

namespace degen {

// Classical (λ-free) reference sequences, computed by their own
// recurrences over Rational. These are deliberately independent of the
// degenerate code paths so that λ→0 limits can be checked against a
// second implementation.

/// B_n: B_0 = 1, Σ_{k=0}^{n} C(n+1,k) B_k = 0 for n >= 1.
std::vector<Rational> classical_bernoulli_numbers(int n_max);

/// Euler polynomials at 0: e_n = δ_{0,n} - (1/2) Σ_{k<n} C(n,k) e_k.
std::vector<Rational> classical_euler_numbers(int n_max);

/// G_n: G_0 = 0, G_n = δ_{1,n} - (1/2) Σ_{k<n} C(n,k) G_k.
std::vector<Rational> classical_genocchi_numbers(int n_max);

/// Polynomials Σ_k C(n,k) c_k x^{n-k} from a classical number sequence;
/// the result involves x only.
std::vector<BiPoly> classical_polynomials(const std::vector<Rational>& numbers);

}  // namespace degen
