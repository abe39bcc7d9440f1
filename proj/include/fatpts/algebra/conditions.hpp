#pragma once

#include <cstddef>

#include "fatpts/algebra/point.hpp"
#include "fatpts/algebra/rational.hpp"
#include "fatpts/core/bidegree.hpp"

namespace fatpts {

/// Order (alpha, beta) of a mixed Taylor coefficient in the local x- and
/// y-parameters at a point.
struct DerivativeOrder {
  unsigned alpha = 0;
  unsigned beta = 0;
  unsigned total() const noexcept { return alpha + beta; }
};

/// Linear functional on the bidegree-d monomial space, as a row in the
/// monomial order of form.hpp, sending f to the coefficient of t^alpha u^beta
/// in f(p0, p1 + t; q0, q1 + u) (or f(p0 + t, p1; ...) when p0 = 0, and the
/// same for q). Up to a nonzero factor this is the mixed partial of the
/// dehomogenization at the point. f vanishes to order m at P x Q iff all
/// rows with alpha + beta < m annihilate it.
RationalVector derivative_condition(const PointPair& point, DerivativeOrder order, const Bidegree& d);

/// Same functional built from integer homogeneous coordinates. Rows built
/// from one fixed coordinate vector are mutually consistent across
/// bidegrees: for f vanishing to order n at the point, the order-n rows
/// satisfy cond(x_k f) = x_k(point) * cond(f).
IntRow derivative_condition(const std::pair<Integer, Integer>& p, const std::pair<Integer, Integer>& q,
                            DerivativeOrder order, const Bidegree& d);

}  // namespace fatpts
