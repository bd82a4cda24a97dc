#pragma once

#include <optional>
#include <vector>

#include "polarbox/errors.hpp"
#include "polarbox/rep.hpp"

namespace polarbox {

inline constexpr size_t kDefaultCap = 5000;

/// Statistics attached to a representation conversion.
struct ConversionReport {
  size_t input_rows = 0;
  size_t output_rows = 0;
  size_t feasible_basis_count = 0;  // 0 until a basis count is requested
  size_t max_intermediate_rays = 0;
};

/// Extreme rays of a pointed cone {y in R^dim : rows · y >= 0}, one
/// primitive-integer ray per row.
struct ConeRays {
  size_t dim = 0;
  RMatrix rays{0, 1};
};

/// Equality-marked rows expanded into opposing inequality pairs; used by
/// everything that consumes an HRep as a plain inequality system.
RMatrix expand_equalities(const HRep& h);

/// Cone rows of the homogenization in R^{n+1}: each inequality b_i + a_i·x >= 0
/// becomes b_i·x0 + a_i·x >= 0, and the hyperplane-at-infinity row (1, 0_n)
/// for x0 >= 0 is appended. Equality marks are expanded first.
RMatrix homogenize(const HRep& h);

/// Double description method: the complete irredundant set of extreme rays
/// of {y : cone_rows · y >= 0}. Rows are inserted in canonical order; two
/// rays are adjacent iff no third ray's tight set contains the intersection
/// of their tight sets. Throws NotPointed (with a lineality basis) when the
/// cone contains a line. max_intermediate, when given, receives the largest
/// ray count held at any point during the run.
ConeRays dd_extreme_rays(const RMatrix& cone_rows, size_t* max_intermediate = nullptr);

/// Independent oracle for dd_extreme_rays: enumerate all (d-1)-subsets of
/// rows, solve for the one-dimensional null space, keep feasible directions.
/// Throws NotPointed, or CapExceeded when binomial(m, d-1) exceeds cap.
ConeRays brute_force_rays(const RMatrix& cone_rows, size_t cap = kDefaultCap);

struct VertexEnumResult {
  VRep vrep;
  ConversionReport report;
};

/// H to V conversion on the homogenized cone. Extreme rays with positive
/// first coordinate are scaled to vertex rows, the rest become ray rows.
/// Throws Infeasible (exact LP pre-check) or NotPointed.
VertexEnumResult vertex_enumeration(const HRep& h);

struct FacetEnumResult {
  HRep hrep;
  ConversionReport report;
};

/// V to H conversion by lifting: the rows of V(P) are the inequalities of a
/// cone in R^{n+1} whose extreme rays are the facets of P. Lineality of that
/// cone (P not full-dimensional) comes back as equality-marked rows; the
/// always-valid row (1, 0_n) is dropped from the output.
FacetEnumResult facet_enumeration_lifted(const VRep& v);

/// V to H conversion without lifting: V(P) is read directly as an
/// H-representation and vertex-enumerated; the resulting generator rows are
/// the facets of P. Requires 0 in P (OriginNotContained otherwise) and a
/// pointed polar (PolarNotPointed otherwise).
FacetEnumResult facet_enumeration_direct(const VRep& v);

struct Pointedness {
  bool pointed = false;
  RMatrix lineality{0, 1};  // basis rows of {x : Ax = 0, Bx = 0} when not pointed
};

/// A polyhedron is pointed iff its constraint coefficients have full column
/// rank; otherwise the lineality space basis is returned.
Pointedness is_pointed_h(const HRep& h);

/// Pointedness of the polyhedron obtained by reading V(P) as an
/// H-representation: rank of the coordinate block of [S; R] equals n.
bool polar_is_pointed(const VRep& v);

/// Irredundant H-representation: one exact LP test per row, scaled
/// duplicates removed, implicit equalities detected and marked. Throws
/// Infeasible when the polyhedron is empty.
HRep remove_redundancy_h(const HRep& h);

/// Irredundant V-representation: vertex rows expressible as convex
/// combinations of the others plus conic combinations of the rays are
/// removed, likewise conically dependent ray rows.
VRep remove_redundancy_v(const VRep& v);

struct MemberCertificate {
  RVector lambda;  // one weight per vertex row, in row order; sums to 1
  RVector mu;      // one weight per ray row, in row order
};

/// Exact membership test: x in P iff [1, x] = [lambda, mu] V(P) has a
/// nonnegative solution with the lambda block summing to one. Row order of
/// v is preserved, so the weights index the rows as given.
std::optional<MemberCertificate> member_certificate(const VRep& v, const RVector& x);

/// Number of feasible bases of an inequality system: n-subsets of rows with
/// linearly independent coefficients whose unique tight point satisfies all
/// remaining inequalities. Throws CapExceeded when binomial(m, n) > cap.
/// h must carry no equality marks.
size_t count_feasible_bases(const HRep& h, size_t cap = kDefaultCap);

/// The homogeneous analogue, counted in the cone: (d-1)-subsets of rows
/// whose null space is one-dimensional and crosses the feasible side.
size_t count_feasible_cone_bases(const RMatrix& cone_rows, size_t cap = kDefaultCap);

/// Per H-row list of tight V-rows (vertex (1,s): b + a·s = 0; ray (0,r):
/// a·r = 0). Throws InconsistentPair when some generator violates some
/// inequality, or when a facet's incident set fails to span it (h is
/// expected to be irredundant).
std::vector<std::vector<size_t>> facet_vertex_incidence(const HRep& h, const VRep& v);

}  // namespace polarbox
