#pragma once

#include <string>
#include <utility>

#include "fatpts/algebra/rational.hpp"

namespace fatpts {

/// A point [x0 : x1] of P1, normalized so the last nonzero coordinate is 1.
class ProjectivePoint {
 public:
  /// Throws InvalidInput for the zero vector.
  ProjectivePoint(Rational x0, Rational x1);

  const Rational& x0() const noexcept { return x0_; }
  const Rational& x1() const noexcept { return x1_; }

  /// Primitive integer multiple of the coordinates. Fixed for a given point,
  /// so every derivative condition built from it uses one scaling.
  std::pair<Integer, Integer> integer_coordinates() const;

  std::string to_string() const;

  friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) {
    return a.x0_ == b.x0_ && a.x1_ == b.x1_;
  }

 private:
  Rational x0_, x1_;
};

/// The point P x Q of P1 x P1.
struct PointPair {
  ProjectivePoint p;
  ProjectivePoint q;
};

}  // namespace fatpts
