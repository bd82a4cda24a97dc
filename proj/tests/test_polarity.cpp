#include "doctest.h"
#include "polarbox/errors.hpp"
#include "polarbox/polarity.hpp"
#include "testutil.hpp"

using namespace polarbox;
using namespace polarbox::test;

TEST_CASE("polar H-representation is a relabeling of V(P)") {
  HRep hq = polar_hrep(example1_v());
  CHECK(hq.rows == mat({{1, 1, 1}, {0, 1, 0}, {0, 0, 1}}));
  CHECK(hq.equality_marks.empty());

  CHECK(polar_hrep(example2_v()).rows == example2_v().rows);

  // polar of {0} is the whole space
  HRep all = polar_hrep(vrep({{1, 0, 0}}));
  CHECK(all.rows == mat({{1, 0, 0}}));
}

TEST_CASE("polar V-representation: wedge") {
  VRep vq = polar_vrep(example1_v());
  CHECK(vq.rows == mat({{1, 0, 0}, {0, 0, 1}, {0, 1, 0}}));
}

TEST_CASE("polar V-representation: pyramid gives the printed facet matrix") {
  VRep vq = polar_vrep(example2_v());
  VRep expected = vrep({{1, 1, -1, -1}, {1, -1, -1, -1}, {0, 0, 0, 1}, {0, 0, 1, 0}});
  CHECK(reps_equal(vq, expected));
}

TEST_CASE("polar V-representation: cube gives the cross-polytope") {
  VRep vq = polar_vrep(cube3_v());
  VRep expected = vrep({{1, 1, 0, 0},
                        {1, -1, 0, 0},
                        {1, 0, 1, 0},
                        {1, 0, -1, 0},
                        {1, 0, 0, 1},
                        {1, 0, 0, -1}});
  CHECK(reps_equal(vq, expected));
}

TEST_CASE("polar V-representation refuses an unpointed polar") {
  CHECK_THROWS_AS(polar_vrep(vrep({{1, 0, 0}})), PolarNotPointed);
}

TEST_CASE("origin location: wedge, pyramid, centered cube") {
  CHECK(origin_location(example1_h()) == OriginLocation::Outside);
  CHECK(origin_location(example2_h()) == OriginLocation::Boundary);
  HRep cube = hrep({{1, 1, 0, 0},
                    {1, -1, 0, 0},
                    {1, 0, 1, 0},
                    {1, 0, -1, 0},
                    {1, 0, 0, 1},
                    {1, 0, 0, -1}});
  CHECK(origin_location(cube) == OriginLocation::Interior);
}

TEST_CASE("origin location: redundant rows cannot misclassify") {
  // x <= 1 twice, x >= -1: origin interior; the duplicate is harmless
  HRep h = hrep({{1, -1}, {2, -2}, {1, 1}});
  CHECK(origin_location(h) == OriginLocation::Interior);
}

TEST_CASE("origin location: empty polyhedron throws") {
  CHECK_THROWS_AS(origin_location(hrep({{-1, 1}, {0, -1}})), Infeasible);
}

TEST_CASE("bipolar: pyramid is unchanged") {
  CHECK(reps_equal(bipolar_vrep(example2_v()), example2_v()));
}

TEST_CASE("bipolar: wedge closes to the quadrant") {
  VRep bp = bipolar_vrep(example1_v());
  CHECK(reps_equal(bp, vrep({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})));
  // cross-check against the double polar
  CHECK(reps_equal(bp, polar_vrep(polar_vrep(example1_v()))));
}

TEST_CASE("bipolar: horizontal ray at height one gains the boundary") {
  VRep v = vrep({{1, 0, 1}, {0, 1, 0}});
  VRep bp = bipolar_vrep(v);
  CHECK(reps_equal(bp, vrep({{1, 0, 0}, {1, 0, 1}, {0, 1, 0}})));
  CHECK(reps_equal(bp, polar_vrep(polar_vrep(v))));
}

TEST_CASE("HV-symmetry: pyramid is symmetric") {
  SymmetryVerdict verdict = is_hv_symmetric(example2_v());
  CHECK(verdict.symmetric);
  CHECK(verdict.reason == SymmetryReason::Verified);
  REQUIRE(verdict.witness.has_value());
  CHECK(reps_equal(verdict.witness->second, example2_h()));
}

TEST_CASE("HV-symmetry: wedge is not symmetric") {
  SymmetryVerdict verdict = is_hv_symmetric(example1_v());
  CHECK_FALSE(verdict.symmetric);
  CHECK(verdict.reason == SymmetryReason::OriginOutside);
  REQUIRE(verdict.witness.has_value());
  CHECK(reps_equal(verdict.witness->first, vrep({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})));
  CHECK(reps_equal(verdict.witness->second, example1_h()));
}

TEST_CASE("HV-symmetry: pointed cones are symmetric") {
  SymmetryVerdict verdict = is_hv_symmetric(vrep({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  CHECK(verdict.symmetric);
  CHECK(verdict.reason == SymmetryReason::Verified);
}

TEST_CASE("HV-symmetry: unpointed polar is reported") {
  SymmetryVerdict verdict = is_hv_symmetric(vrep({{1, 0, 0}}));
  CHECK_FALSE(verdict.symmetric);
  CHECK(verdict.reason == SymmetryReason::PolarNotPointed);
}

TEST_CASE("theorem 1: pyramid satisfies all four statements") {
  Theorem1Result r = verify_theorem1(example2_v());
  CHECK(r.origin_in_p);
  CHECK(r.bipolar_identity);
  CHECK(r.polar_v_encodes_h);
  CHECK(r.hv_symmetric);
  CHECK(r.all_equal());
}

TEST_CASE("theorem 1: wedge fails all four statements") {
  Theorem1Result r = verify_theorem1(example1_v());
  CHECK_FALSE(r.origin_in_p);
  CHECK_FALSE(r.bipolar_identity);
  CHECK_FALSE(r.polar_v_encodes_h);
  CHECK_FALSE(r.hv_symmetric);
  CHECK(r.all_equal());
}

TEST_CASE("theorem 1: simplex with the origin as a vertex") {
  Theorem1Result r = verify_theorem1(vrep({{1, 0, 0}, {1, 1, 0}, {1, 0, 1}}));
  CHECK(r.origin_in_p);
  CHECK(r.all_equal());
  CHECK(r.hv_symmetric);
}

TEST_CASE("theorem 1: refuses an unpointed polar") {
  CHECK_THROWS_AS(verify_theorem1(vrep({{1, 0, 0}})), PolarNotPointed);
}

TEST_CASE("boundedness and the polar's origin") {
  CHECK(is_bounded(example2_v()));
  CHECK(origin_interior_to_polar(example2_v()));
  CHECK_FALSE(is_bounded(example1_v()));
  CHECK_FALSE(origin_interior_to_polar(example1_v()));
  CHECK(is_bounded(vrep({{1, 5}})));
  CHECK(origin_interior_to_polar(vrep({{1, 5}})));
}
