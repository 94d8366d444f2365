#pragma once

#include "degen/bipoly.hpp"
#include "degen/sequences.hpp"

#include <vector>

namespace degen::published {

// Transcriptions of the published number tables and Euler-Seidel matrix
// displays this engine verifies against. These are input data for the
// comparison checks, kept strictly apart from anything the engine
// computes: the verifier treats every printed entry as a claim, and
// several of them turn out not to satisfy their own recurrences (see
// the verification report with paper-table comparisons enabled).

struct Term {
  long num;
  long den;
  int x_deg;
  int lambda_deg;
};

struct NumberEntry {
  int n;
  std::vector<Term> terms;
};

struct MatrixEntry {
  int k;
  int n;
  std::vector<Term> terms;
};

BiPoly to_poly(const std::vector<Term>& terms);

/// Printed number-table entries of one family (β: n ≤ 5, 𝓔: n ≤ 6,
/// 𝓖: n ≤ 7).
const std::vector<NumberEntry>& number_table(SequenceKind kind);

/// Entries printed in full in the family's matrix display; elided
/// positions are absent.
const std::vector<MatrixEntry>& matrix_display(SequenceKind kind);

}  // namespace degen::published
