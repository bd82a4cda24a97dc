#pragma once

#include <set>

#include "polarbox/matrix.hpp"

namespace polarbox {

enum class LpStatus { Optimal, Infeasible, Unbounded };
enum class LpSense { Minimize, Maximize };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rational value;  // meaningful when Optimal
  RVector point;   // meaningful when Optimal
};

/// min c·y subject to E y = f, y >= 0.
///
/// Two-phase primal simplex with Bland's anti-cycling rule, all pivots in
/// exact rational arithmetic. Redundant equality rows are detected and
/// dropped at the end of phase one.
LpResult simplex_standard(const RMatrix& e, const RVector& f, const RVector& c);

/// Optimize objective·x over {x : b_i + a_i·x >= 0}, with x free.
///
/// h_rows has n+1 columns, each row (b_i, a_i); rows whose index appears in
/// `equalities` hold with equality. When the optimum is finite and the
/// constraint rows have full column rank, the returned point is a basic
/// solution: it satisfies n linearly independent constraints as equations.
LpResult lp_solve(const RVector& objective, const RMatrix& h_rows,
                  const std::set<size_t>& equalities, LpSense sense);

}  // namespace polarbox
