#include <sstream>

#include "doctest.h"
#include "polarbox/errors.hpp"
#include "polarbox/rep.hpp"
#include "polarbox/rep_io.hpp"
#include "testutil.hpp"

using namespace polarbox;
using namespace polarbox::test;

namespace {

const char* kWedgeHFile =
    "wedge\n"
    "H-representation\n"
    "begin\n"
    "2 3 rational\n"
    "-1 1 0\n"
    "-1 0 1\n"
    "end\n";

const char* kQuadrantVFile =
    "V-representation\n"
    "begin\n"
    "3 3 rational\n"
    "1 0 0\n"
    "0 1 0\n"
    "0 0 1\n"
    "end\n";

}  // namespace

TEST_CASE("parse: wedge H-file") {
  Rep r = parse_rep(kWedgeHFile);
  REQUIRE(std::holds_alternative<HRep>(r));
  const HRep& h = std::get<HRep>(r);
  CHECK(h.n == 2);
  CHECK(h.rows == mat({{-1, 1, 0}, {-1, 0, 1}}));
  CHECK(h.equality_marks.empty());
  CHECK(h.name == "wedge");
}

TEST_CASE("parse: V-file with one vertex and two rays") {
  Rep r = parse_rep(kQuadrantVFile);
  REQUIRE(std::holds_alternative<VRep>(r));
  const VRep& v = std::get<VRep>(r);
  CHECK(v.n == 2);
  CHECK(vertex_count(v) == 1);
  CHECK(ray_count(v) == 2);
}

TEST_CASE("parse: positive leading entries scale to vertices") {
  Rep r = parse_rep("V-representation\nbegin\n1 3 rational\n2 2 2\nend\n");
  const VRep& v = std::get<VRep>(r);
  CHECK(v.rows == mat({{1, 1, 1}}));
}

TEST_CASE("parse: error cases") {
  CHECK_THROWS_AS(parse_rep(""), ParseError);
  CHECK_THROWS_AS(parse_rep("name\nnonsense\nbegin\nend\n"), ParseError);
  // wrong row count
  CHECK_THROWS_AS(parse_rep("H-representation\nbegin\n2 3 rational\n-1 1 0\nend\n"), ParseError);
  // non-rational token
  CHECK_THROWS_AS(parse_rep("H-representation\nbegin\n1 3 rational\n-1 x 0\nend\n"), ParseError);
  // linearity in a V-file encodes a non-pointed input
  CHECK_THROWS_AS(
      parse_rep("V-representation\nlinearity 1 1\nbegin\n1 3 rational\n1 0 0\nend\n"),
      ParseError);
  // leading entry that positive scaling cannot bring to 0 or 1
  CHECK_THROWS_AS(parse_rep("V-representation\nbegin\n1 3 rational\n-1 2 2\nend\n"), ParseError);
  // zero ray row
  CHECK_THROWS_AS(parse_rep("V-representation\nbegin\n2 3 rational\n1 0 0\n0 0 0\nend\n"),
                  ParseError);
  // V-file without a vertex row
  CHECK_THROWS_AS(parse_rep("V-representation\nbegin\n1 3 rational\n0 1 0\nend\n"), ParseError);
  // all-zero H row
  CHECK_THROWS_AS(parse_rep("H-representation\nbegin\n1 3 rational\n0 0 0\nend\n"), ParseError);
  // linearity index out of range
  CHECK_THROWS_AS(
      parse_rep("H-representation\nlinearity 1 5\nbegin\n1 3 rational\n-1 1 0\nend\n"),
      ParseError);
}

TEST_CASE("parse: 'integer' is accepted as the number type") {
  Rep r = parse_rep("H-representation\nbegin\n1 3 integer\n-1 1 0\nend\n");
  CHECK(std::get<HRep>(r).rows == mat({{-1, 1, 0}}));
  CHECK_THROWS_AS(parse_rep("H-representation\nbegin\n1 3 real\n-1 1 0\nend\n"), ParseError);
}

TEST_CASE("parse: content after end is ignored with a warning") {
  std::vector<std::string> warnings;
  Rep r = parse_rep(std::string(kWedgeHFile) + "\nleftover\n", &warnings);
  CHECK(std::holds_alternative<HRep>(r));
  REQUIRE(warnings.size() == 1);
  CHECK(warnings[0].find("leftover") != std::string::npos);
}

TEST_CASE("emit: pyramid V(P) rows all start with 1") {
  std::string text = emit_rep(example2_v());
  Rep back = parse_rep(text);
  REQUIRE(std::holds_alternative<VRep>(back));
  const VRep& v = std::get<VRep>(back);
  CHECK(v.rows.rows() == 4);
  for (size_t i = 0; i < 4; ++i) CHECK(v.rows.at(i, 0) == Rational(1));
  CHECK(reps_equal(v, example2_v()));
}

TEST_CASE("emit: equality marks become a linearity line") {
  HRep h = hrep({{-3, 1}}, {0});
  std::string text = emit_rep(h);
  CHECK(text.find("linearity 1 1") != std::string::npos);
  Rep back = parse_rep(text);
  CHECK(std::get<HRep>(back).equality_marks == std::set<size_t>{0});
}

TEST_CASE("emit-parse round trip is bit-exact on canonical forms") {
  HRep h = canonicalize(example2_h());
  std::string text = emit_rep(h);
  Rep back = parse_rep(text);
  CHECK(std::get<HRep>(back).rows == h.rows);
  CHECK(emit_rep(std::get<HRep>(back)) == text);

  VRep v = canonicalize(example1_v());
  std::string vt = emit_rep(v);
  CHECK(std::get<VRep>(parse_rep(vt)).rows == v.rows);
}

TEST_CASE("canonicalize: ray rows become coprime integers") {
  VRep v = vrep({{1, 0, 0}, {0, 2, 4}});
  VRep c = canonicalize(v);
  CHECK(c.rows == mat({{1, 0, 0}, {0, 1, 2}}));
}

TEST_CASE("canonicalize: positive-scalar duplicate H rows collapse") {
  HRep h = hrep({{-2, 2, 0}, {-1, 1, 0}});
  HRep c = canonicalize(h);
  CHECK(c.rows == mat({{-1, 1, 0}}));
}

TEST_CASE("canonicalize: sorts rows, content unchanged") {
  VRep shuffled = vrep({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}});
  VRep c = canonicalize(shuffled);
  CHECK(c.rows == mat({{1, 0, 0}, {0, 0, 1}, {0, 1, 0}}));
  CHECK(reps_equal(shuffled, std::get<VRep>(parse_rep(kQuadrantVFile))));
}

TEST_CASE("canonicalize: idempotent") {
  HRep h = hrep({{-2, 4, 6}, {0, 0, 3}, {-1, 2, 3}});
  CHECK(canonicalize(h).rows == canonicalize(canonicalize(h)).rows);
  VRep v = vrep({{1, 2, 3}, {0, 4, 6}, {1, 2, 3}});
  CHECK(canonicalize(v).rows == canonicalize(canonicalize(v)).rows);
}

TEST_CASE("canonicalize: equality marks follow their rows and fix sign") {
  HRep h = hrep({{0, 1, 1}, {-1, 1, 0}}, {1});
  HRep c = canonicalize(h);
  // the marked row is sign-fixed to (1,-1,0) and sorts first
  CHECK(c.rows == mat({{1, -1, 0}, {0, 1, 1}}));
  CHECK(c.equality_marks == std::set<size_t>{0});
}

TEST_CASE("reps_equal: pyramid V(Q) matrix equals H(P)") {
  // the polar's generator matrix coincides with the facet matrix
  HRep vq_as_h = hrep({{1, 1, -1, -1}, {1, -1, -1, -1}, {0, 0, 0, 1}, {0, 0, 1, 0}});
  CHECK(reps_equal(vq_as_h, example2_h()));
}

TEST_CASE("reps_equal: wedge V(Q) matrix differs from H(P)") {
  HRep vq_as_h = hrep({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK_FALSE(reps_equal(vq_as_h, example1_h()));
}

TEST_CASE("reps_equal: invariant under permutation and positive scaling") {
  HRep a = example2_h();
  HRep b;
  b.n = a.n;
  b.rows = RMatrix(0, a.n + 1);
  for (size_t i = a.rows.rows(); i-- > 0;) {
    RVector r = a.rows.row_copy(i);
    for (Rational& x : r) x *= Rational(3);
    b.rows.append_row(r);
  }
  CHECK(reps_equal(a, b));
}

TEST_CASE("reps_equal: kind and dimension mismatches throw") {
  CHECK_THROWS_AS(reps_equal(Rep(example1_h()), Rep(example1_v())), DimensionMismatch);
  CHECK_THROWS_AS(reps_equal(example1_h(), example2_h()), DimensionMismatch);
}

TEST_CASE("validate: VRep structural invariants") {
  VRep bad;
  bad.n = 2;
  bad.rows = RMatrix::from_rows({{q(2), q(1), q(1)}});
  CHECK_THROWS_AS(validate(bad), Error);
  CHECK_THROWS_AS(validate(VRep{}), Error);
}
