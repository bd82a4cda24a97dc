#pragma once

#include <set>
#include <span>
#include <string>
#include <variant>

#include "polarbox/matrix.hpp"

namespace polarbox {

/// H-representation of a polyhedron in R^n: rows (b_i, a_i) with n+1
/// columns, each meaning b_i + a_i·x >= 0. Rows whose index appears in
/// equality_marks hold with equality; they arise for polyhedra that are
/// not full-dimensional. No row may be all zero.
struct HRep {
  size_t n = 0;
  RMatrix rows{0, 2};
  std::set<size_t> equality_marks;
  std::string name;
};

/// V-representation: rows with n+1 columns and leading entry exactly 1
/// (vertex row (1, s)) or exactly 0 (ray row (0, r)). The polyhedron is
/// conv(S) + cone(R). At least one vertex row; no zero ray.
struct VRep {
  size_t n = 0;
  RMatrix rows{0, 2};
  std::string name;
};

using Rep = std::variant<HRep, VRep>;

/// Throw Error when the structural invariants above are violated.
void validate(const HRep& h);
void validate(const VRep& v);

bool is_vertex_row(std::span<const Rational> row);
size_t vertex_count(const VRep& v);
size_t ray_count(const VRep& v);

/// Row scaled by a positive rational so the entries are coprime integers.
RVector primitive_row(std::span<const Rational> row);

/// Like primitive_row, but also flips the sign so the first nonzero entry
/// is positive. Only meaningful for equality rows, where both signs state
/// the same equation; it makes marked rows route-independent.
RVector primitive_row_sign_fixed(std::span<const Rational> row);

/// Canonical row order: leading column descending, then the remaining
/// entries ascending.
bool canonical_row_less(std::span<const Rational> a, std::span<const Rational> b);

/// Canonical form: H and ray rows scaled to coprime integers (positive
/// scaling, sign preserved; equality rows sign-fixed), vertex rows kept
/// with leading 1 and rational coordinates, duplicate rows removed, rows
/// sorted canonically. Idempotent.
HRep canonicalize(const HRep& h);
VRep canonicalize(const VRep& v);
Rep canonicalize(const Rep& r);

/// True iff the canonical forms are identical matrices (and, for H, carry
/// identical equality marks). Throws DimensionMismatch when the kinds or
/// ambient dimensions differ.
bool reps_equal(const HRep& a, const HRep& b);
bool reps_equal(const VRep& a, const VRep& b);
bool reps_equal(const Rep& a, const Rep& b);

}  // namespace polarbox
