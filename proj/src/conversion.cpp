#include "polarbox/conversion.hpp"

#include <algorithm>
#include <gmpxx.h>
#include <numeric>

#include "polarbox/linalg.hpp"
#include "polarbox/lp.hpp"

namespace polarbox {
namespace {

bool binomial_exceeds(size_t m, size_t k, size_t cap) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(k));
  return b > static_cast<unsigned long>(cap);
}

template <class F>
void for_each_subset(size_t m, size_t k, F&& f) {
  if (k > m) return;
  std::vector<size_t> idx(k);
  std::iota(idx.begin(), idx.end(), size_t{0});
  for (;;) {
    f(static_cast<const std::vector<size_t>&>(idx));
    if (k == 0) return;
    size_t i = k;
    while (i-- > 0) {
      if (idx[i] != i + m - k) {
        ++idx[i];
        for (size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        break;
      }
      if (i == 0) return;
    }
  }
}

std::vector<RVector> canonical_sorted_rows(const RMatrix& m) {
  std::vector<RVector> rows;
  rows.reserve(m.rows());
  for (size_t i = 0; i < m.rows(); ++i) {
    RVector r = primitive_row(m.row(i));
    if (!is_zero_vector(r)) rows.push_back(std::move(r));
  }
  std::sort(rows.begin(), rows.end(),
            [](const RVector& a, const RVector& b) { return canonical_row_less(a, b); });
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  return rows;
}

RMatrix to_matrix(const std::vector<RVector>& rows, size_t cols) {
  RMatrix m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

RMatrix coordinate_block(const RMatrix& rows, size_t n) {
  RMatrix a(rows.rows(), n);
  for (size_t i = 0; i < rows.rows(); ++i)
    for (size_t j = 0; j < n; ++j) a.at(i, j) = rows.at(i, j + 1);
  return a;
}

struct DDRay {
  RVector dir;              // primitive integer direction
  std::vector<char> tight;  // per processed input row
};

// tight(a) ∩ tight(b) ⊆ tight(c) for some third ray c means a, b not adjacent
bool dd_adjacent(const std::vector<DDRay>& rays, size_t a, size_t b, size_t processed) {
  for (size_t c = 0; c < rays.size(); ++c) {
    if (c == a || c == b) continue;
    bool contains = true;
    for (size_t i = 0; i < processed && contains; ++i)
      if (rays[a].tight[i] && rays[b].tight[i] && !rays[c].tight[i]) contains = false;
    if (contains) return false;
  }
  return true;
}

}  // namespace

RMatrix expand_equalities(const HRep& h) {
  validate(h);
  RMatrix out(0, h.n + 1);
  for (size_t i = 0; i < h.rows.rows(); ++i) {
    out.append_row(h.rows.row(i));
    if (h.equality_marks.count(i)) {
      RVector neg(h.n + 1);
      for (size_t j = 0; j <= h.n; ++j) neg[j] = -h.rows.at(i, j);
      out.append_row(neg);
    }
  }
  return out;
}

RMatrix homogenize(const HRep& h) {
  RMatrix out = expand_equalities(h);
  RVector infinity(h.n + 1, Rational(0));
  infinity[0] = Rational(1);
  out.append_row(infinity);
  return out;
}

ConeRays dd_extreme_rays(const RMatrix& cone_rows, size_t* max_intermediate) {
  const size_t d = cone_rows.cols();
  std::vector<RVector> rows = canonical_sorted_rows(cone_rows);
  const size_t m = rows.size();
  RMatrix rmat = to_matrix(rows, d);
  if (matrix_rank(rmat) < d) throw NotPointed(nullspace_basis(rmat));

  // first d linearly independent rows, greedily in canonical order
  std::vector<size_t> basis;
  {
    RMatrix bm(0, d);
    for (size_t i = 0; i < m && basis.size() < d; ++i) {
      bm.append_row(rows[i]);
      if (matrix_rank(bm) == basis.size() + 1) {
        basis.push_back(i);
      } else {
        RMatrix tmp(0, d);
        for (size_t b : basis) tmp.append_row(rows[b]);
        bm = std::move(tmp);
      }
    }
  }

  // processing order: the basis rows, then the rest in canonical order
  std::vector<RVector> proc;
  proc.reserve(m);
  {
    std::vector<char> used(m, 0);
    for (size_t b : basis) {
      proc.push_back(rows[b]);
      used[b] = 1;
    }
    for (size_t i = 0; i < m; ++i)
      if (!used[i]) proc.push_back(rows[i]);
  }

  // the simplicial cone of the basis rows has the inverse's columns as rays
  std::vector<DDRay> rays;
  {
    RMatrix bm(0, d);
    for (size_t j = 0; j < d; ++j) bm.append_row(proc[j]);
    RMatrix inv = inverse(bm);
    for (size_t j = 0; j < d; ++j) {
      RVector dir(d);
      for (size_t i = 0; i < d; ++i) dir[i] = inv.at(i, j);
      DDRay r{primitive_row(dir), std::vector<char>(m, 0)};
      for (size_t i = 0; i < d; ++i) r.tight[i] = i != j;
      rays.push_back(std::move(r));
    }
  }

  size_t peak = rays.size();
  for (size_t i = d; i < m; ++i) {
    std::vector<int> side(rays.size());
    std::vector<size_t> plus, minus;
    for (size_t r = 0; r < rays.size(); ++r) {
      side[r] = dot(proc[i], rays[r].dir).sign();
      if (side[r] > 0)
        plus.push_back(r);
      else if (side[r] < 0)
        minus.push_back(r);
      else
        rays[r].tight[i] = 1;
    }
    if (!minus.empty()) {
      std::vector<DDRay> created;
      for (size_t p : plus)
        for (size_t q : minus) {
          if (!dd_adjacent(rays, p, q, i)) continue;
          const Rational vp = dot(proc[i], rays[p].dir);
          const Rational vq = dot(proc[i], rays[q].dir);
          RVector w(d);
          for (size_t j = 0; j < d; ++j) w[j] = vp * rays[q].dir[j] - vq * rays[p].dir[j];
          DDRay nr{primitive_row(w), std::vector<char>(m, 0)};
          for (size_t t = 0; t < i; ++t) nr.tight[t] = rays[p].tight[t] && rays[q].tight[t];
          nr.tight[i] = 1;
          created.push_back(std::move(nr));
        }
      std::vector<DDRay> next;
      next.reserve(rays.size() - minus.size() + created.size());
      for (size_t r = 0; r < rays.size(); ++r)
        if (side[r] >= 0) next.push_back(std::move(rays[r]));
      for (auto& c : created) next.push_back(std::move(c));
      rays = std::move(next);
    }
    peak = std::max(peak, rays.size());
  }

  std::vector<RVector> out;
  out.reserve(rays.size());
  for (auto& r : rays) out.push_back(std::move(r.dir));
  std::sort(out.begin(), out.end(),
            [](const RVector& a, const RVector& b) { return canonical_row_less(a, b); });
  for (const auto& r : out)
    for (const auto& row : proc)
      if (dot(row, r).sign() < 0) throw Error("dd_extreme_rays: infeasible output ray");

  if (max_intermediate) *max_intermediate = peak;
  return {d, to_matrix(out, d)};
}

ConeRays brute_force_rays(const RMatrix& cone_rows, size_t cap) {
  const size_t d = cone_rows.cols();
  std::vector<RVector> rows = canonical_sorted_rows(cone_rows);
  const size_t m = rows.size();
  RMatrix rmat = to_matrix(rows, d);
  if (matrix_rank(rmat) < d) throw NotPointed(nullspace_basis(rmat));
  if (binomial_exceeds(m, d - 1, cap)) throw CapExceeded(m, d - 1, cap);

  auto feasible = [&](const RVector& dir) {
    for (const auto& row : rows)
      if (dot(row, dir).sign() < 0) return false;
    return true;
  };

  std::vector<RVector> found;
  for_each_subset(m, d - 1, [&](const std::vector<size_t>& idx) {
    RMatrix sub(0, d);
    for (size_t i : idx) sub.append_row(rows[i]);
    RMatrix ns = nullspace_basis(sub);
    if (ns.rows() != 1) return;
    RVector dir = primitive_row(ns.row(0));
    if (feasible(dir)) {
      found.push_back(std::move(dir));
    } else {
      for (Rational& x : dir) x = -x;
      if (feasible(dir)) found.push_back(std::move(dir));
    }
  });

  std::sort(found.begin(), found.end(),
            [](const RVector& a, const RVector& b) { return canonical_row_less(a, b); });
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return {d, to_matrix(found, d)};
}

Pointedness is_pointed_h(const HRep& h) {
  validate(h);
  RMatrix a = coordinate_block(h.rows, h.n);
  if (matrix_rank(a) == h.n) return {true, RMatrix(0, h.n)};
  return {false, nullspace_basis(a)};
}

bool polar_is_pointed(const VRep& v) {
  validate(v);
  return matrix_rank(coordinate_block(v.rows, v.n)) == v.n;
}

VertexEnumResult vertex_enumeration(const HRep& h) {
  validate(h);
  RMatrix ineq = expand_equalities(h);
  if (ineq.rows() > 0) {
    LpResult feas = lp_solve(RVector(h.n, Rational(0)), ineq, {}, LpSense::Minimize);
    if (feas.status == LpStatus::Infeasible) throw Infeasible("vertex_enumeration: empty polyhedron");
  }
  Pointedness pt = is_pointed_h(h);
  if (!pt.pointed) throw NotPointed(pt.lineality);

  size_t peak = 0;
  ConeRays cone = dd_extreme_rays(homogenize(h), &peak);

  VRep out;
  out.n = h.n;
  out.rows = RMatrix(0, h.n + 1);
  for (size_t i = 0; i < cone.rays.rows(); ++i) {
    RVector row = cone.rays.row_copy(i);
    const Rational lead = row[0];
    if (lead.sign() > 0)
      for (Rational& x : row) x /= lead;
    out.rows.append_row(row);
  }
  out = canonicalize(out);

  ConversionReport rep;
  rep.input_rows = h.rows.rows();
  rep.output_rows = out.rows.rows();
  rep.max_intermediate_rays = peak;
  return {std::move(out), rep};
}

FacetEnumResult facet_enumeration_lifted(const VRep& v) {
  validate(v);
  const size_t d = v.n + 1;

  // cone of valid inequalities {w : V(P)·w >= 0}; its lineality (nontrivial
  // exactly when P is not full-dimensional) is pinned to zero so the double
  // description runs on a pointed cone
  RMatrix lin = nullspace_basis(v.rows);
  RMatrix cone = v.rows;
  for (size_t i = 0; i < lin.rows(); ++i) {
    cone.append_row(lin.row(i));
    RVector neg(d);
    for (size_t j = 0; j < d; ++j) neg[j] = -lin.at(i, j);
    cone.append_row(neg);
  }

  size_t peak = 0;
  ConeRays rays = dd_extreme_rays(cone, &peak);

  // representative of the always-valid inequality (1, 0_n) inside the
  // lineality complement; it is not a facet and is dropped from the output
  RVector infinity(d, Rational(0));
  infinity[0] = Rational(1);
  if (lin.rows() > 0) {
    const size_t k = lin.rows();
    RMatrix gram(k, k);
    RVector rhs(k);
    for (size_t i = 0; i < k; ++i) {
      rhs[i] = dot(lin.row(i), infinity);
      for (size_t j = 0; j < k; ++j) gram.at(i, j) = dot(lin.row(i), lin.row(j));
    }
    LinearSolution alpha = solve_linear_system(gram, rhs);
    for (size_t i = 0; i < k; ++i)
      for (size_t j = 0; j < d; ++j) infinity[j] -= alpha.point[i] * lin.at(i, j);
  }
  const RVector trivial = primitive_row(infinity);

  HRep out;
  out.n = v.n;
  out.rows = RMatrix(0, d);
  for (size_t i = 0; i < rays.rays.rows(); ++i) {
    RVector row = rays.rays.row_copy(i);
    if (row == trivial) continue;
    out.rows.append_row(row);
  }
  for (size_t i = 0; i < lin.rows(); ++i) {
    out.equality_marks.insert(out.rows.rows());
    out.rows.append_row(primitive_row_sign_fixed(lin.row(i)));
  }
  out = canonicalize(out);

  ConversionReport rep;
  rep.input_rows = v.rows.rows();
  rep.output_rows = out.rows.rows();
  rep.max_intermediate_rays = peak;
  return {std::move(out), rep};
}

FacetEnumResult facet_enumeration_direct(const VRep& v) {
  validate(v);
  if (!member_certificate(v, RVector(v.n, Rational(0)))) throw OriginNotContained();
  if (!polar_is_pointed(v))
    throw PolarNotPointed(nullspace_basis(coordinate_block(v.rows, v.n)));

  HRep polar_h;  // V(P) read as an H-representation, per the polar construction
  polar_h.n = v.n;
  polar_h.rows = v.rows;
  VertexEnumResult ver = vertex_enumeration(polar_h);

  RVector trivial(v.n + 1, Rational(0));
  trivial[0] = Rational(1);
  HRep out;
  out.n = v.n;
  out.rows = RMatrix(0, v.n + 1);
  for (size_t i = 0; i < ver.vrep.rows.rows(); ++i) {
    if (ver.vrep.rows.row_copy(i) == trivial) continue;  // 1 >= 0 is not a facet
    out.rows.append_row(ver.vrep.rows.row(i));
  }
  out = canonicalize(out);

  ConversionReport rep;
  rep.input_rows = v.rows.rows();
  rep.output_rows = out.rows.rows();
  rep.max_intermediate_rays = ver.report.max_intermediate_rays;
  return {std::move(out), rep};
}

HRep remove_redundancy_h(const HRep& h) {
  HRep c = canonicalize(h);
  const size_t n = c.n;
  const size_t m = c.rows.rows();

  {
    LpResult feas = lp_solve(RVector(n, Rational(0)), c.rows, c.equality_marks, LpSense::Minimize);
    if (feas.status == LpStatus::Infeasible) throw Infeasible("remove_redundancy_h: empty polyhedron");
  }

  // implicit equalities: a row tight on all of P has maximum value 0 over P
  std::set<size_t> marked = c.equality_marks;
  for (size_t i = 0; i < m; ++i) {
    if (marked.count(i)) continue;
    RVector obj(n);
    for (size_t j = 0; j < n; ++j) obj[j] = c.rows.at(i, j + 1);
    LpResult res = lp_solve(obj, c.rows, c.equality_marks, LpSense::Maximize);
    if (res.status == LpStatus::Optimal && res.value + c.rows.at(i, 0) == Rational(0))
      marked.insert(i);
  }

  // equality rows: keep a maximal linearly independent subset
  std::vector<size_t> kept_eq;
  {
    RMatrix em(0, n + 1);
    for (size_t i : marked) {
      em.append_row(c.rows.row(i));
      if (matrix_rank(em) == kept_eq.size() + 1) {
        kept_eq.push_back(i);
      } else {
        RMatrix tmp(0, n + 1);
        for (size_t k : kept_eq) tmp.append_row(c.rows.row(k));
        em = std::move(tmp);
      }
    }
  }

  // inequality rows: row i is redundant iff its minimum over the others
  // (bounded below by the auxiliary row g_i >= -1) is nonnegative
  std::vector<char> alive(m, 0);
  for (size_t i : kept_eq) alive[i] = 1;
  std::vector<size_t> ineq;
  for (size_t i = 0; i < m; ++i)
    if (!marked.count(i)) {
      alive[i] = 1;
      ineq.push_back(i);
    }
  for (size_t i : ineq) {
    RMatrix sys(0, n + 1);
    std::set<size_t> sys_eq;
    for (size_t k = 0; k < m; ++k) {
      if (!alive[k] || k == i) continue;
      if (marked.count(k)) sys_eq.insert(sys.rows());
      sys.append_row(c.rows.row(k));
    }
    RVector bound = c.rows.row_copy(i);
    bound[0] += Rational(1);
    sys.append_row(bound);
    RVector obj(n);
    for (size_t j = 0; j < n; ++j) obj[j] = c.rows.at(i, j + 1);
    LpResult res = lp_solve(obj, sys, sys_eq, LpSense::Minimize);
    if (res.status != LpStatus::Optimal)
      throw Error("remove_redundancy_h: bounded subproblem failed");
    if (res.value + c.rows.at(i, 0) >= Rational(0)) alive[i] = 0;
  }

  HRep out;
  out.n = n;
  out.name = c.name;
  out.rows = RMatrix(0, n + 1);
  for (size_t i = 0; i < m; ++i) {
    if (!alive[i]) continue;
    if (marked.count(i)) out.equality_marks.insert(out.rows.rows());
    out.rows.append_row(c.rows.row(i));
  }
  return canonicalize(out);
}

namespace {

// target expressible as a nonnegative combination of the alive rows (skip
// excluded), with vertex weights summing to the target's leading entry
bool representable(const VRep& v, const std::vector<char>& alive, size_t skip,
                   std::span<const Rational> target) {
  std::vector<size_t> cols;
  for (size_t k = 0; k < v.rows.rows(); ++k)
    if (alive[k] && k != skip) cols.push_back(k);
  if (cols.empty()) return false;
  RMatrix e(v.n + 1, cols.size());
  for (size_t c = 0; c < cols.size(); ++c)
    for (size_t j = 0; j <= v.n; ++j) e.at(j, c) = v.rows.at(cols[c], j);
  RVector f(target.begin(), target.end());
  LpResult res = simplex_standard(e, f, RVector(cols.size(), Rational(0)));
  return res.status == LpStatus::Optimal;
}

}  // namespace

VRep remove_redundancy_v(const VRep& v) {
  VRep c = canonicalize(v);
  const size_t m = c.rows.rows();
  std::vector<char> alive(m, 1);
  for (size_t i = 0; i < m; ++i)
    if (representable(c, alive, i, c.rows.row(i))) alive[i] = 0;

  VRep out;
  out.n = c.n;
  out.name = c.name;
  out.rows = RMatrix(0, c.n + 1);
  for (size_t i = 0; i < m; ++i)
    if (alive[i]) out.rows.append_row(c.rows.row(i));
  return canonicalize(out);
}

std::optional<MemberCertificate> member_certificate(const VRep& v, const RVector& x) {
  validate(v);
  if (x.size() != v.n) throw DimensionMismatch("member_certificate: point dimension mismatch");
  const size_t m = v.rows.rows();
  RMatrix e(v.n + 1, m);
  for (size_t k = 0; k < m; ++k)
    for (size_t j = 0; j <= v.n; ++j) e.at(j, k) = v.rows.at(k, j);
  RVector f(v.n + 1);
  f[0] = Rational(1);
  for (size_t j = 0; j < v.n; ++j) f[j + 1] = x[j];
  LpResult res = simplex_standard(e, f, RVector(m, Rational(0)));
  if (res.status != LpStatus::Optimal) return std::nullopt;
  MemberCertificate cert;
  for (size_t k = 0; k < m; ++k) {
    if (is_vertex_row(v.rows.row(k)))
      cert.lambda.push_back(res.point[k]);
    else
      cert.mu.push_back(res.point[k]);
  }
  return cert;
}

size_t count_feasible_bases(const HRep& h, size_t cap) {
  validate(h);
  if (!h.equality_marks.empty())
    throw Error("count_feasible_bases: equality-marked rows are not supported");
  const size_t m = h.rows.rows();
  const size_t n = h.n;
  if (m < n) return 0;
  if (binomial_exceeds(m, n, cap)) throw CapExceeded(m, n, cap);

  size_t count = 0;
  for_each_subset(m, n, [&](const std::vector<size_t>& idx) {
    RMatrix a(0, n);
    RVector rhs;
    for (size_t i : idx) {
      RVector coeff(n);
      for (size_t j = 0; j < n; ++j) coeff[j] = h.rows.at(i, j + 1);
      a.append_row(coeff);
      rhs.push_back(-h.rows.at(i, 0));
    }
    LinearSolution sol = solve_linear_system(a, rhs);
    if (sol.kind != SolveKind::Unique) return;
    for (size_t r = 0; r < m; ++r) {
      Rational g = h.rows.at(r, 0);
      for (size_t j = 0; j < n; ++j) g += h.rows.at(r, j + 1) * sol.point[j];
      if (g.sign() < 0) return;
    }
    ++count;
  });
  return count;
}

size_t count_feasible_cone_bases(const RMatrix& cone_rows, size_t cap) {
  const size_t d = cone_rows.cols();
  const size_t m = cone_rows.rows();
  if (m + 1 < d) return 0;
  if (binomial_exceeds(m, d - 1, cap)) throw CapExceeded(m, d - 1, cap);

  auto feasible = [&](const RVector& dir) {
    for (size_t r = 0; r < m; ++r)
      if (dot(cone_rows.row(r), dir).sign() < 0) return false;
    return true;
  };

  size_t count = 0;
  for_each_subset(m, d - 1, [&](const std::vector<size_t>& idx) {
    RMatrix sub(0, d);
    for (size_t i : idx) sub.append_row(cone_rows.row(i));
    RMatrix ns = nullspace_basis(sub);
    if (ns.rows() != 1) return;
    RVector dir = ns.row_copy(0);
    if (feasible(dir)) {
      ++count;
    } else {
      for (Rational& x : dir) x = -x;
      if (feasible(dir)) ++count;
    }
  });
  return count;
}

std::vector<std::vector<size_t>> facet_vertex_incidence(const HRep& h, const VRep& v) {
  validate(h);
  validate(v);
  if (h.n != v.n) throw DimensionMismatch("facet_vertex_incidence: dimensions differ");
  const size_t vrank = matrix_rank(v.rows);

  std::vector<std::vector<size_t>> incidence(h.rows.rows());
  for (size_t i = 0; i < h.rows.rows(); ++i) {
    for (size_t k = 0; k < v.rows.rows(); ++k) {
      const Rational val = dot(h.rows.row(i), v.rows.row(k));
      if (val.sign() < 0)
        throw InconsistentPair("generator row " + std::to_string(k) +
                               " violates inequality row " + std::to_string(i));
      if (val.is_zero()) incidence[i].push_back(k);
    }
    if (h.equality_marks.count(i)) {
      if (incidence[i].size() != v.rows.rows())
        throw InconsistentPair("equality row " + std::to_string(i) +
                               " is not tight on every generator");
      continue;
    }
    RMatrix sub(0, v.n + 1);
    for (size_t k : incidence[i]) sub.append_row(v.rows.row(k));
    if (matrix_rank(sub) + 1 != vrank)
      throw InconsistentPair("incident set of facet row " + std::to_string(i) +
                             " does not span the facet");
  }
  return incidence;
}

}  // namespace polarbox
