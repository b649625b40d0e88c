#pragma once

// Fraction-free (Bareiss) elimination on small integer matrices. Entries stay
// integral throughout; every intermediate is a minor of the input, so int64
// suffices for the 0/1 matrices used here. Overflow is detected and reported.

#include <cstdint>
#include <vector>

namespace hypersimplex {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

std::int64_t bareiss_determinant(IntMatrix m);

// Rank over the rationals.
int integer_rank(IntMatrix m);

// For square nonsingular M returns (A, d) with M * A = d * I, A integral
// (A is the adjugate up to the sign of d).
struct ScaledInverse {
  IntMatrix numerator;
  std::int64_t denominator = 0;
};

ScaledInverse scaled_inverse(const IntMatrix& m);

}  // namespace hypersimplex
