#pragma once

#include <stdexcept>
#include <string>

#include "polarbox/matrix.hpp"

namespace polarbox {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
  using Error::Error;
};

class DimensionMismatch : public Error {
public:
  using Error::Error;
};

/// The polyhedron described by the input is empty.
class Infeasible : public Error {
public:
  using Error::Error;
};

/// The polyhedron (or cone) contains a line; carries a basis of its
/// lineality space, one direction per row.
class NotPointed : public Error {
public:
  explicit NotPointed(RMatrix lineality)
      : Error("not pointed: lineality space has dimension " +
              std::to_string(lineality.rows())),
        lineality_(std::move(lineality)) {}
  const RMatrix& lineality() const { return lineality_; }

private:
  RMatrix lineality_;
};

/// The polar of the given polyhedron contains a line, so its V-representation
/// is undefined; carries directions witnessing the rank deficiency.
class PolarNotPointed : public Error {
public:
  explicit PolarNotPointed(RMatrix witness)
      : Error("polar not pointed: generator coefficients have rank deficiency " +
              std::to_string(witness.rows())),
        witness_(std::move(witness)) {}
  const RMatrix& witness() const { return witness_; }

private:
  RMatrix witness_;
};

/// The direct facet enumeration route requires the origin to be a member.
class OriginNotContained : public Error {
public:
  OriginNotContained() : Error("origin is not contained in the polyhedron") {}
};

/// A brute-force enumeration would exceed the configured binomial cap.
class CapExceeded : public Error {
public:
  CapExceeded(size_t m, size_t k, size_t cap)
      : Error("binomial(" + std::to_string(m) + ", " + std::to_string(k) +
              ") exceeds cap " + std::to_string(cap)),
        m_(m), k_(k), cap_(cap) {}
  size_t m() const { return m_; }
  size_t k() const { return k_; }
  size_t cap() const { return cap_; }

private:
  size_t m_, k_, cap_;
};

/// An H-representation and V-representation handed in as a matching pair
/// do not describe the same polyhedron.
class InconsistentPair : public Error {
public:
  using Error::Error;
};

}  // namespace polarbox
