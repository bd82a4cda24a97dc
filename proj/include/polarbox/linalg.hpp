#pragma once

#include "polarbox/matrix.hpp"

namespace polarbox {

enum class SolveKind { Unique, None, InfinitelyMany };

struct LinearSolution {
  SolveKind kind = SolveKind::None;
  // Unique: the solution. InfinitelyMany: one particular solution (free
  // variables set to zero). None: empty.
  RVector point;
};

/// Exact rank over the rationals. Fraction-free forward elimination with
/// full pivoting on nonzero entries.
size_t matrix_rank(const RMatrix& m);

/// Solves M x = rhs exactly and classifies the solution set.
/// Throws DimensionMismatch when rhs length differs from the row count.
LinearSolution solve_linear_system(const RMatrix& m, const RVector& rhs);

/// Basis of {x : M x = 0}, one vector per row; a 0 x cols matrix when the
/// kernel is trivial.
RMatrix nullspace_basis(const RMatrix& m);

/// Inverse of a square nonsingular matrix. Throws Error when singular.
RMatrix inverse(const RMatrix& m);

}  // namespace polarbox
