#pragma once

#include <optional>
#include <utility>

#include "polarbox/conversion.hpp"
#include "polarbox/rep.hpp"

namespace polarbox {

// The polar used throughout is P+ = {z : 1 + z·x >= 0 for all x in P}.
// Some texts use P° = {z : z·x <= 1 for all x in P} instead; P° = -P+.

/// H-representation of the polar P+: a pure relabeling of V(P). Vertex rows
/// (1, s) become 1 + s·z >= 0, ray rows (0, r) become r·z >= 0. The origin
/// is always a member of the result.
HRep polar_hrep(const VRep& v);

/// V-representation of the polar, via vertex enumeration of polar_hrep.
/// Throws PolarNotPointed when the polar contains a line (its
/// V-representation is then undefined).
VRep polar_vrep(const VRep& v);

enum class OriginLocation { Interior, Boundary, Outside };

/// Classifies the origin against an irredundant form of h: Outside iff the
/// origin violates some irredundant row, Interior iff it satisfies every
/// irredundant inequality strictly and no implicit equality exists,
/// Boundary otherwise. Throws Infeasible.
OriginLocation origin_location(const HRep& h);

/// The bipolar P++ = cl(conv(P ∪ {0})): append the origin row (1, 0_n) and
/// reduce. Computed at generator level as conv(S ∪ {0}) + cone(R).
VRep bipolar_vrep(const VRep& v);

enum class SymmetryReason { Verified, OriginOutside, PolarNotPointed };

struct SymmetryVerdict {
  bool symmetric = false;
  SymmetryReason reason = SymmetryReason::OriginOutside;
  // (V(Q), H(P)) pair backing the verdict, when both were computed.
  std::optional<std::pair<VRep, HRep>> witness;
};

/// Decides HV-symmetry: Q is the polyhedron with H(Q) = V(P); P is
/// HV-symmetric iff Q is pointed and V(Q), read as an H-representation,
/// describes P. The check compares canonical matrices (with the always-valid
/// row (1, 0_n) ignored) and falls back to comparing the described polyhedra
/// when P is not full-dimensional, where irredundant H-forms are not unique.
SymmetryVerdict is_hv_symmetric(const VRep& v);

struct Theorem1Result {
  bool origin_in_p = false;        // (a) 0 in P
  bool bipolar_identity = false;   // (b) P = P++
  bool polar_v_encodes_h = false;  // (c) V(P+) encodes H(P)
  bool hv_symmetric = false;       // (d) P is HV-symmetric
  bool all_equal() const {
    return origin_in_p == bipolar_identity && bipolar_identity == polar_v_encodes_h &&
           polar_v_encodes_h == hv_symmetric;
  }
};

/// Evaluates the four equivalent statements independently. Requires the
/// polar to be pointed (the equivalence is stated for pointed P and P+);
/// throws PolarNotPointed otherwise.
Theorem1Result verify_theorem1(const VRep& v);

/// A polyhedron given by generators is bounded iff it has no ray rows.
bool is_bounded(const VRep& v);

/// Cross-check for is_bounded: the polyhedron is bounded iff the origin is
/// interior to its polar.
bool origin_interior_to_polar(const VRep& v);

}  // namespace polarbox
