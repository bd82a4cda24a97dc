#include "polarbox/lp.hpp"

#include <limits>

#include "polarbox/errors.hpp"
#include "polarbox/linalg.hpp"

namespace polarbox {
namespace {

constexpr size_t npos = std::numeric_limits<size_t>::max();

// Dense two-phase tableau. Columns: n structural, k artificial, 1 rhs.
// Artificial columns never enter the basis; Bland's rule everywhere.
struct Tableau {
  size_t n, k;
  std::vector<RVector> t;     // k rows
  std::vector<size_t> basis;  // basis[i] = column basic in row i
  RVector z1, z2;             // reduced-cost rows (phase 1 / phase 2), rhs cell = -value

  Tableau(const RMatrix& e, const RVector& f, const RVector& c)
      : n(e.cols()), k(e.rows()), t(e.rows()), basis(e.rows()), z1(e.cols() + e.rows() + 1),
        z2(e.cols() + e.rows() + 1) {
    for (size_t i = 0; i < k; ++i) {
      t[i].assign(n + k + 1, Rational(0));
      const bool flip = f[i].sign() < 0;
      for (size_t j = 0; j < n; ++j) t[i][j] = flip ? -e.at(i, j) : e.at(i, j);
      t[i][n + i] = Rational(1);
      t[i][n + k] = flip ? -f[i] : f[i];
      basis[i] = n + i;
    }
    // phase-1 objective: min sum of artificials, reduced against the
    // all-artificial basis
    for (size_t j = 0; j <= n + k; ++j) {
      Rational s;
      for (size_t i = 0; i < k; ++i) s += t[i][j];
      z1[j] = (j >= n && j < n + k ? Rational(1) : Rational(0)) - s;
    }
    for (size_t j = 0; j < n; ++j) z2[j] = c[j];
  }

  void pivot(size_t prow, size_t pcol) {
    const Rational p = t[prow][pcol];
    for (auto& x : t[prow]) x /= p;
    auto clear_row = [&](RVector& row) {
      const Rational factor = row[pcol];
      if (factor.is_zero()) return;
      for (size_t j = 0; j < row.size(); ++j) row[j] -= factor * t[prow][j];
    };
    for (size_t i = 0; i < t.size(); ++i)
      if (i != prow) clear_row(t[i]);
    clear_row(z1);
    clear_row(z2);
    basis[prow] = pcol;
  }

  // Bland: entering = least structural index with negative reduced cost;
  // leaving = least basic variable among the minimum-ratio rows.
  LpStatus run(bool phase_one) {
    RVector& z = phase_one ? z1 : z2;
    for (;;) {
      size_t enter = npos;
      for (size_t j = 0; j < n; ++j)
        if (z[j].sign() < 0) {
          enter = j;
          break;
        }
      if (enter == npos) return LpStatus::Optimal;
      size_t leave = npos;
      Rational best;
      for (size_t i = 0; i < t.size(); ++i) {
        if (t[i][enter].sign() <= 0) continue;
        Rational ratio = t[i][n + k] / t[i][enter];
        if (leave == npos || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          best = ratio;
          leave = i;
        }
      }
      if (leave == npos) return LpStatus::Unbounded;
      pivot(leave, enter);
    }
  }
};

}  // namespace

LpResult simplex_standard(const RMatrix& e, const RVector& f, const RVector& c) {
  if (f.size() != e.rows() || c.size() != e.cols())
    throw DimensionMismatch("simplex_standard: shape mismatch");

  Tableau tab(e, f, c);
  if (tab.run(true) == LpStatus::Unbounded)
    throw Error("simplex_standard: phase one cannot be unbounded");
  if ((-tab.z1[tab.n + tab.k]).sign() > 0) return {LpStatus::Infeasible, {}, {}};

  // Pivot degenerate artificials out of the basis; a row with no structural
  // pivot left is a redundant constraint and is dropped.
  for (size_t i = 0; i < tab.t.size();) {
    if (tab.basis[i] < tab.n) {
      ++i;
      continue;
    }
    size_t j = npos;
    for (size_t jj = 0; jj < tab.n; ++jj)
      if (!tab.t[i][jj].is_zero()) {
        j = jj;
        break;
      }
    if (j == npos) {
      tab.t.erase(tab.t.begin() + static_cast<long>(i));
      tab.basis.erase(tab.basis.begin() + static_cast<long>(i));
    } else {
      tab.pivot(i, j);
      ++i;
    }
  }

  if (tab.run(false) == LpStatus::Unbounded) return {LpStatus::Unbounded, {}, {}};

  RVector y(tab.n, Rational(0));
  for (size_t i = 0; i < tab.t.size(); ++i)
    if (tab.basis[i] < tab.n) y[tab.basis[i]] = tab.t[i][tab.n + tab.k];
  Rational value = dot(c, y);
  return {LpStatus::Optimal, value, std::move(y)};
}

LpResult lp_solve(const RVector& objective, const RMatrix& h_rows,
                  const std::set<size_t>& equalities, LpSense sense) {
  const size_t n = objective.size();
  if (h_rows.rows() > 0 && h_rows.cols() != n + 1)
    throw DimensionMismatch("lp_solve: rows must have n+1 columns");
  for (size_t i : equalities)
    if (i >= h_rows.rows()) throw DimensionMismatch("lp_solve: equality index out of range");

  // equality rows become opposing inequality pairs
  RMatrix rows(0, n + 1);
  for (size_t i = 0; i < h_rows.rows(); ++i) {
    rows.append_row(h_rows.row(i));
    if (equalities.count(i)) {
      RVector neg(n + 1);
      for (size_t j = 0; j <= n; ++j) neg[j] = -h_rows.at(i, j);
      rows.append_row(neg);
    }
  }
  const size_t m = rows.rows();

  if (m == 0) {
    if (is_zero_vector(objective)) return {LpStatus::Optimal, Rational(0), RVector(n, Rational(0))};
    return {LpStatus::Unbounded, {}, {}};
  }

  RMatrix a(m, n);
  RVector b(m);
  for (size_t i = 0; i < m; ++i) {
    b[i] = rows.at(i, 0);
    for (size_t j = 0; j < n; ++j) a.at(i, j) = rows.at(i, j + 1);
  }
  RMatrix at = a.transposed();

  // Slack reduction: s = b + A x ranges over {s >= 0, N s = N b} where the
  // rows of N span the left null space of A. The objective pulls back to a
  // linear function of s whenever it lies in the row space of A.
  RMatrix nmat = nullspace_basis(at);  // rows: {y : y^T A = 0}
  RVector f(nmat.rows());
  for (size_t i = 0; i < nmat.rows(); ++i) f[i] = dot(nmat.row(i), b);

  RVector cmax(n);
  for (size_t j = 0; j < n; ++j)
    cmax[j] = sense == LpSense::Maximize ? objective[j] : -objective[j];

  LinearSolution wsol = solve_linear_system(at, cmax);
  if (wsol.kind == SolveKind::None) {
    // objective varies along the constraint null space: unbounded if feasible
    LpResult feas = simplex_standard(nmat, f, RVector(m, Rational(0)));
    if (feas.status == LpStatus::Infeasible) return {LpStatus::Infeasible, {}, {}};
    return {LpStatus::Unbounded, {}, {}};
  }

  RVector cost(m);
  for (size_t i = 0; i < m; ++i) cost[i] = -wsol.point[i];  // maximize w·s
  LpResult res = simplex_standard(nmat, f, cost);
  if (res.status != LpStatus::Optimal) return {res.status, {}, {}};

  RVector rhs(m);
  for (size_t i = 0; i < m; ++i) rhs[i] = res.point[i] - b[i];
  LinearSolution xsol = solve_linear_system(a, rhs);
  if (xsol.kind == SolveKind::None) throw Error("lp_solve: inconsistent slack recovery");
  Rational value = dot(objective, xsol.point);
  return {LpStatus::Optimal, value, std::move(xsol.point)};
}

}  // namespace polarbox
