#pragma once
// Exact Gaussian elimination over the rationals. Enough linear algebra
// for the iteration fixpoint and the coinflip constraint solve; no
// pivot-size heuristics are needed because arithmetic is exact.

#include <vector>

#include "finstoch/rational.hpp"

namespace finstoch {

using Matrix = std::vector<std::vector<Rational>>;

// Solves A x = b for square A. Throws std::logic_error on a singular
// system (callers treat that as an internal error).
std::vector<Rational> solve_linear(Matrix a, std::vector<Rational> b);

// Solves A X = B with matrix right-hand side, column by column.
Matrix solve_linear_multi(const Matrix& a, const Matrix& b);

// Rank of a matrix by elimination; used to certify uniqueness claims.
std::size_t rank(Matrix a);

}  // namespace finstoch
