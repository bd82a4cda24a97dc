#include "polarbox/rep.hpp"

#include <algorithm>
#include <gmpxx.h>

#include "polarbox/errors.hpp"

namespace polarbox {

void validate(const HRep& h) {
  if (h.rows.rows() > 0 && h.rows.cols() != h.n + 1)
    throw Error("HRep: rows must have n+1 columns");
  for (size_t i = 0; i < h.rows.rows(); ++i)
    if (is_zero_vector(h.rows.row(i))) throw Error("HRep: all-zero row " + std::to_string(i));
  for (size_t i : h.equality_marks)
    if (i >= h.rows.rows()) throw Error("HRep: equality mark out of range");
}

void validate(const VRep& v) {
  if (v.rows.rows() == 0) throw Error("VRep: at least one vertex row is required");
  if (v.rows.cols() != v.n + 1) throw Error("VRep: rows must have n+1 columns");
  bool has_vertex = false;
  for (size_t i = 0; i < v.rows.rows(); ++i) {
    const Rational& lead = v.rows.at(i, 0);
    if (lead == Rational(1)) {
      has_vertex = true;
    } else if (lead == Rational(0)) {
      if (is_zero_vector(v.rows.row(i))) throw Error("VRep: zero ray row " + std::to_string(i));
    } else {
      throw Error("VRep: leading entry of row " + std::to_string(i) + " is not 0 or 1");
    }
  }
  if (!has_vertex) throw Error("VRep: at least one vertex row is required");
}

bool is_vertex_row(std::span<const Rational> row) { return row[0] == Rational(1); }

size_t vertex_count(const VRep& v) {
  size_t c = 0;
  for (size_t i = 0; i < v.rows.rows(); ++i)
    if (is_vertex_row(v.rows.row(i))) ++c;
  return c;
}

size_t ray_count(const VRep& v) { return v.rows.rows() - vertex_count(v); }

RVector primitive_row(std::span<const Rational> row) {
  mpz_class den_lcm = 1, num_gcd = 0;
  for (const Rational& x : row)
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.den().get_mpz_t());
  for (const Rational& x : row) {
    mpz_class v = x.num() * (den_lcm / x.den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), v.get_mpz_t());
  }
  RVector out(row.size());
  if (num_gcd == 0) return out;  // all-zero row stays zero
  for (size_t j = 0; j < row.size(); ++j) {
    mpz_class v = row[j].num() * (den_lcm / row[j].den());
    out[j] = Rational(v / num_gcd, mpz_class(1));
  }
  return out;
}

RVector primitive_row_sign_fixed(std::span<const Rational> row) {
  RVector out = primitive_row(row);
  for (const Rational& x : out) {
    if (x.is_zero()) continue;
    if (x.sign() < 0)
      for (Rational& y : out) y = -y;
    break;
  }
  return out;
}

bool canonical_row_less(std::span<const Rational> a, std::span<const Rational> b) {
  if (a[0] != b[0]) return a[0] > b[0];
  for (size_t j = 1; j < a.size(); ++j)
    if (a[j] != b[j]) return a[j] < b[j];
  return false;
}

namespace {

struct TaggedRow {
  RVector row;
  bool equality = false;
};

bool tagged_less(const TaggedRow& a, const TaggedRow& b) {
  if (canonical_row_less(a.row, b.row)) return true;
  if (canonical_row_less(b.row, a.row)) return false;
  return a.equality && !b.equality;  // marked rows order first on full tie
}

}  // namespace

HRep canonicalize(const HRep& h) {
  validate(h);
  std::vector<TaggedRow> rows;
  rows.reserve(h.rows.rows());
  for (size_t i = 0; i < h.rows.rows(); ++i) {
    const bool eq = h.equality_marks.count(i) > 0;
    rows.push_back({eq ? primitive_row_sign_fixed(h.rows.row(i)) : primitive_row(h.rows.row(i)), eq});
  }
  std::sort(rows.begin(), rows.end(), tagged_less);
  rows.erase(std::unique(rows.begin(), rows.end(),
                         [](const TaggedRow& a, const TaggedRow& b) {
                           return a.equality == b.equality && a.row == b.row;
                         }),
             rows.end());
  HRep out;
  out.n = h.n;
  out.name = h.name;
  out.rows = RMatrix(0, h.n + 1);
  for (size_t i = 0; i < rows.size(); ++i) {
    out.rows.append_row(rows[i].row);
    if (rows[i].equality) out.equality_marks.insert(i);
  }
  return out;
}

VRep canonicalize(const VRep& v) {
  validate(v);
  std::vector<RVector> rows;
  rows.reserve(v.rows.rows());
  for (size_t i = 0; i < v.rows.rows(); ++i) {
    auto r = v.rows.row(i);
    if (is_vertex_row(r))
      rows.emplace_back(r.begin(), r.end());  // vertex rows keep rational coords
    else
      rows.push_back(primitive_row(r));
  }
  std::sort(rows.begin(), rows.end(),
            [](const RVector& a, const RVector& b) { return canonical_row_less(a, b); });
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  VRep out;
  out.n = v.n;
  out.name = v.name;
  out.rows = RMatrix(0, v.n + 1);
  for (const auto& r : rows) out.rows.append_row(r);
  return out;
}

Rep canonicalize(const Rep& r) {
  if (std::holds_alternative<HRep>(r)) return canonicalize(std::get<HRep>(r));
  return canonicalize(std::get<VRep>(r));
}

bool reps_equal(const HRep& a, const HRep& b) {
  if (a.n != b.n) throw DimensionMismatch("reps_equal: ambient dimensions differ");
  HRep ca = canonicalize(a), cb = canonicalize(b);
  return ca.rows == cb.rows && ca.equality_marks == cb.equality_marks;
}

bool reps_equal(const VRep& a, const VRep& b) {
  if (a.n != b.n) throw DimensionMismatch("reps_equal: ambient dimensions differ");
  return canonicalize(a).rows == canonicalize(b).rows;
}

bool reps_equal(const Rep& a, const Rep& b) {
  if (a.index() != b.index()) throw DimensionMismatch("reps_equal: representation kinds differ");
  if (std::holds_alternative<HRep>(a)) return reps_equal(std::get<HRep>(a), std::get<HRep>(b));
  return reps_equal(std::get<VRep>(a), std::get<VRep>(b));
}

}  // namespace polarbox
