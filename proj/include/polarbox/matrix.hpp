#pragma once

#include <cassert>
#include <initializer_list>
#include <span>
#include <vector>

#include "polarbox/rational.hpp"

namespace polarbox {

using RVector = std::vector<Rational>;

/// Dense rational matrix, row-major. Rows are constraints or generators
/// depending on context; cols >= 1 always, rows may be 0.
class RMatrix {
public:
  RMatrix() = default;
  RMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
    assert(cols >= 1);
  }

  static RMatrix from_rows(const std::vector<RVector>& rows) {
    assert(!rows.empty());
    RMatrix m(rows.size(), rows.front().size());
    for (size_t i = 0; i < rows.size(); ++i) {
      assert(rows[i].size() == m.cols_);
      for (size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
  }

  static RMatrix identity(size_t n) {
    RMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  Rational& at(size_t i, size_t j) {
    assert(i < rows_ && j < cols_);
    return data_[i * cols_ + j];
  }
  const Rational& at(size_t i, size_t j) const {
    assert(i < rows_ && j < cols_);
    return data_[i * cols_ + j];
  }

  std::span<Rational> row(size_t i) {
    assert(i < rows_);
    return {data_.data() + i * cols_, cols_};
  }
  std::span<const Rational> row(size_t i) const {
    assert(i < rows_);
    return {data_.data() + i * cols_, cols_};
  }

  RVector row_copy(size_t i) const {
    auto r = row(i);
    return RVector(r.begin(), r.end());
  }

  void append_row(std::span<const Rational> r) {
    assert(r.size() == cols_);
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
  }

  RMatrix transposed() const {
    assert(rows_ >= 1);  // cols >= 1 invariant rules out transposing an empty matrix
    RMatrix t(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  friend bool operator==(const RMatrix& a, const RMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

private:
  size_t rows_ = 0;
  size_t cols_ = 1;
  std::vector<Rational> data_;
};

inline Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  assert(a.size() == b.size());
  Rational s;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline bool is_zero_vector(std::span<const Rational> a) {
  for (const auto& x : a)
    if (!x.is_zero()) return false;
  return true;
}

}  // namespace polarbox
