#include "polarbox/polarity.hpp"

#include "polarbox/linalg.hpp"

namespace polarbox {
namespace {

RMatrix coordinate_block(const RMatrix& rows, size_t n) {
  RMatrix a(rows.rows(), n);
  for (size_t i = 0; i < rows.rows(); ++i)
    for (size_t j = 0; j < n; ++j) a.at(i, j) = rows.at(i, j + 1);
  return a;
}

RVector origin_row(size_t n) {
  RVector r(n + 1, Rational(0));
  r[0] = Rational(1);
  return r;
}

// V(Q) read as an H-representation, with rows equal to the always-valid
// (1, 0_n) dropped: they appear exactly when the origin is a vertex of Q
// and are never facets of P.
HRep read_as_hrep(const VRep& vq, bool drop_trivial) {
  const RVector trivial = origin_row(vq.n);
  HRep h;
  h.n = vq.n;
  h.rows = RMatrix(0, vq.n + 1);
  for (size_t i = 0; i < vq.rows.rows(); ++i) {
    if (drop_trivial && vq.rows.row_copy(i) == trivial) continue;
    h.rows.append_row(vq.rows.row(i));
  }
  return h;
}

// Does V(Q) encode an H-representation of P? Canonical matrix comparison in
// the full-dimensional case; when P is not full-dimensional its irredundant
// H-representations are not unique, so compare the described polyhedra.
bool vq_encodes_hp(const VRep& v, const VRep& vq, const HRep& hp) {
  if (hp.equality_marks.empty()) return reps_equal(read_as_hrep(vq, true), hp);
  VertexEnumResult back = vertex_enumeration(read_as_hrep(vq, false));
  return reps_equal(back.vrep, remove_redundancy_v(v));
}

}  // namespace

HRep polar_hrep(const VRep& v) {
  validate(v);
  HRep h;
  h.n = v.n;
  h.rows = v.rows;
  h.name = v.name;
  return h;
}

VRep polar_vrep(const VRep& v) {
  validate(v);
  if (!polar_is_pointed(v))
    throw PolarNotPointed(nullspace_basis(coordinate_block(v.rows, v.n)));
  return vertex_enumeration(polar_hrep(v)).vrep;
}

OriginLocation origin_location(const HRep& h) {
  HRep red = remove_redundancy_h(h);
  bool tight = false;
  for (size_t i = 0; i < red.rows.rows(); ++i) {
    const Rational& b = red.rows.at(i, 0);
    if (red.equality_marks.count(i)) {
      if (!b.is_zero()) return OriginLocation::Outside;
      tight = true;
    } else {
      if (b.sign() < 0) return OriginLocation::Outside;
      if (b.is_zero()) tight = true;
    }
  }
  return tight ? OriginLocation::Boundary : OriginLocation::Interior;
}

VRep bipolar_vrep(const VRep& v) {
  validate(v);
  VRep with_origin = v;
  with_origin.rows.append_row(origin_row(v.n));
  return remove_redundancy_v(with_origin);
}

SymmetryVerdict is_hv_symmetric(const VRep& v) {
  validate(v);
  if (!polar_is_pointed(v)) return {false, SymmetryReason::PolarNotPointed, std::nullopt};
  VRep vq = polar_vrep(v);
  FacetEnumResult fe = facet_enumeration_lifted(v);
  const bool eq = vq_encodes_hp(v, vq, fe.hrep);
  SymmetryVerdict verdict;
  verdict.symmetric = eq;
  verdict.reason = eq ? SymmetryReason::Verified : SymmetryReason::OriginOutside;
  verdict.witness = std::make_pair(std::move(vq), std::move(fe.hrep));
  return verdict;
}

Theorem1Result verify_theorem1(const VRep& v) {
  validate(v);
  if (!polar_is_pointed(v))
    throw PolarNotPointed(nullspace_basis(coordinate_block(v.rows, v.n)));

  Theorem1Result r;
  r.origin_in_p = member_certificate(v, RVector(v.n, Rational(0))).has_value();
  r.bipolar_identity = reps_equal(bipolar_vrep(v), remove_redundancy_v(v));
  r.polar_v_encodes_h = vq_encodes_hp(v, polar_vrep(v), facet_enumeration_lifted(v).hrep);
  r.hv_symmetric = is_hv_symmetric(v).symmetric;
  return r;
}

bool is_bounded(const VRep& v) {
  validate(v);
  return ray_count(v) == 0;
}

bool origin_interior_to_polar(const VRep& v) {
  return origin_location(polar_hrep(v)) == OriginLocation::Interior;
}

}  // namespace polarbox
