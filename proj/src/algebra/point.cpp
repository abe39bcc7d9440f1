#include "fatpts/algebra/point.hpp"

#include "fatpts/core/errors.hpp"

namespace fatpts {

ProjectivePoint::ProjectivePoint(Rational x0, Rational x1) : x0_(std::move(x0)), x1_(std::move(x1)) {
  if (x0_ == 0 && x1_ == 0) throw InvalidInput("[0:0] is not a projective point");
  if (x1_ != 0) {
    x0_ /= x1_;
    x1_ = 1;
  } else {
    x0_ = 1;
  }
}

std::pair<Integer, Integer> ProjectivePoint::integer_coordinates() const {
  auto row = primitive_integer_row({x0_, x1_});
  return {row[0], row[1]};
}

std::string ProjectivePoint::to_string() const {
  return "[" + fatpts::to_string(x0_) + ":" + fatpts::to_string(x1_) + "]";
}

}  // namespace fatpts
