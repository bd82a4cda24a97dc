#include "polarbox/linalg.hpp"

#include <gmpxx.h>

#include <vector>

#include "polarbox/errors.hpp"

namespace polarbox {
namespace {

// Fraction-free (one-step Bareiss) echelon form of [A | B]. Rows are first
// scaled to integers by the lcm of their denominators. Pivoting is full:
// row and column swaps, columns restricted to the lead block. After the run,
// rows 0..rank-1 are upper triangular within the permuted lead columns and
// rows >= rank are zero throughout the lead block.
struct Echelon {
  std::vector<std::vector<mpz_class>> w;
  std::vector<size_t> col_of;  // permuted lead position -> original column
  size_t rank = 0;
  size_t lead = 0;
  size_t total = 0;
};

Echelon eliminate(const RMatrix& a, const RMatrix* b) {
  Echelon e;
  const size_t m = a.rows();
  e.lead = a.cols();
  const size_t extra = b ? b->cols() : 0;
  e.total = e.lead + extra;
  e.col_of.resize(e.lead);
  for (size_t j = 0; j < e.lead; ++j) e.col_of[j] = j;

  e.w.assign(m, std::vector<mpz_class>(e.total));
  for (size_t i = 0; i < m; ++i) {
    mpz_class scale = 1;
    for (size_t j = 0; j < e.lead; ++j) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), a.at(i, j).den().get_mpz_t());
    if (b)
      for (size_t j = 0; j < extra; ++j) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), b->at(i, j).den().get_mpz_t());
    for (size_t j = 0; j < e.total; ++j) {
      const Rational& r = j < e.lead ? a.at(i, j) : b->at(i, j - e.lead);
      e.w[i][j] = r.num() * (scale / r.den());
    }
  }

  mpz_class prev = 1;
  const size_t steps = std::min(m, e.lead);
  for (size_t step = 0; step < steps; ++step) {
    // smallest nonzero entry by absolute value, ties by position
    size_t pi = m, pj = 0;
    for (size_t i = step; i < m; ++i)
      for (size_t j = step; j < e.lead; ++j) {
        if (e.w[i][j] == 0) continue;
        if (pi == m || mpz_cmpabs(e.w[i][j].get_mpz_t(), e.w[pi][pj].get_mpz_t()) < 0) {
          pi = i;
          pj = j;
        }
      }
    if (pi == m) break;
    if (pi != step) std::swap(e.w[pi], e.w[step]);
    if (pj != step) {
      for (size_t i = 0; i < m; ++i) std::swap(e.w[i][pj], e.w[i][step]);
      std::swap(e.col_of[pj], e.col_of[step]);
    }
    const mpz_class& pivot = e.w[step][step];
    for (size_t i = step + 1; i < m; ++i) {
      for (size_t j = step + 1; j < e.total; ++j) {
        mpz_class t = pivot * e.w[i][j] - e.w[i][step] * e.w[step][j];
        mpz_divexact(e.w[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      e.w[i][step] = 0;
    }
    prev = pivot;
    ++e.rank;
  }
  return e;
}

// Back substitution over the rationals for one rhs column of the echelon
// form; free variables are fixed to zero. rhs_col indexes into the extra
// block, or equals `total` to solve the homogeneous system with the free
// variable at permuted position `free_pos` set to one.
RVector back_substitute(const Echelon& e, size_t cols, size_t rhs_col, size_t free_pos) {
  RVector x(cols, Rational(0));
  if (free_pos < e.lead) x[e.col_of[free_pos]] = Rational(1);
  for (size_t ii = e.rank; ii-- > 0;) {
    Rational s = rhs_col < e.total ? Rational(e.w[ii][rhs_col], mpz_class(1)) : Rational(0);
    for (size_t t = ii + 1; t < e.lead; ++t) {
      const Rational& xv = x[e.col_of[t]];
      if (!xv.is_zero() && e.w[ii][t] != 0) s -= Rational(e.w[ii][t], mpz_class(1)) * xv;
    }
    x[e.col_of[ii]] = s / Rational(e.w[ii][ii], mpz_class(1));
  }
  return x;
}

}  // namespace

size_t matrix_rank(const RMatrix& m) {
  if (m.rows() == 0) return 0;
  return eliminate(m, nullptr).rank;
}

LinearSolution solve_linear_system(const RMatrix& m, const RVector& rhs) {
  if (rhs.size() != m.rows())
    throw DimensionMismatch("solve_linear_system: rhs has " + std::to_string(rhs.size()) +
                            " entries for " + std::to_string(m.rows()) + " rows");
  const size_t cols = m.cols();
  if (m.rows() == 0)
    return {cols == 0 ? SolveKind::Unique : SolveKind::InfinitelyMany, RVector(cols, Rational(0))};

  RMatrix b(m.rows(), 1);
  for (size_t i = 0; i < m.rows(); ++i) b.at(i, 0) = rhs[i];
  Echelon e = eliminate(m, &b);

  for (size_t i = e.rank; i < m.rows(); ++i)
    if (e.w[i][e.lead] != 0) return {SolveKind::None, {}};

  RVector x = back_substitute(e, cols, e.lead, e.lead /* no free one */);
  return {e.rank == cols ? SolveKind::Unique : SolveKind::InfinitelyMany, std::move(x)};
}

RMatrix nullspace_basis(const RMatrix& m) {
  const size_t cols = m.cols();
  if (m.rows() == 0) return RMatrix::identity(cols);
  Echelon e = eliminate(m, nullptr);
  const size_t nullity = cols - e.rank;
  RMatrix basis(nullity, cols);
  for (size_t f = 0; f < nullity; ++f) {
    RVector v = back_substitute(e, cols, e.total /* homogeneous */, e.rank + f);
    for (size_t j = 0; j < cols; ++j) basis.at(f, j) = v[j];
  }
  return basis;
}

RMatrix inverse(const RMatrix& m) {
  const size_t d = m.cols();
  if (m.rows() != d) throw DimensionMismatch("inverse: matrix is not square");
  RMatrix id = RMatrix::identity(d);
  Echelon e = eliminate(m, &id);
  if (e.rank != d) throw Error("inverse: singular matrix");
  RMatrix inv(d, d);
  for (size_t q = 0; q < d; ++q) {
    RVector x = back_substitute(e, d, e.lead + q, e.lead);
    for (size_t i = 0; i < d; ++i) inv.at(i, q) = x[i];
  }
  return inv;
}

}  // namespace polarbox
