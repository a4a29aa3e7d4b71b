#pragma once

#include <stdexcept>
#include <string>

namespace trivol {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Four points that do not span R^3.
class DegenerateTetrahedron : public Error {
 public:
  explicit DegenerateTetrahedron(const std::string& what)
      : Error("degenerate tetrahedron: " + what) {}
};

class EmptyPolytope : public Error {
 public:
  EmptyPolytope() : Error("empty point set") {}
};

/// The hull of a point set is not full-dimensional.
class DegenerateHull : public Error {
 public:
  explicit DegenerateHull(const std::string& what)
      : Error("degenerate hull: " + what) {}
};

/// Box bounds violate 0 <= a_i < b_i.
class InvalidBounds : public Error {
 public:
  explicit InvalidBounds(const std::string& what)
      : Error("invalid bounds: " + what) {}
};

/// Bounds are not labeled so that O_1 <= O_2 <= O_3.
class OmegaViolated : public Error {
 public:
  explicit OmegaViolated(const std::string& what)
      : Error("ordering condition violated: " + what) {}
};

/// Two exact evaluation routes produced different values. Always a bug.
class MethodDisagreement : public Error {
 public:
  explicit MethodDisagreement(const std::string& what)
      : Error("method disagreement: " + what) {}
};

}  // namespace trivol
