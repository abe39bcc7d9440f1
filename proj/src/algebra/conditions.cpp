#include "fatpts/algebra/conditions.hpp"

#include "fatpts/algebra/form.hpp"

namespace fatpts {

namespace {

template <class T>
T int_power(const T& base, unsigned long e) {
  T r = 1;
  for (unsigned long k = 0; k < e; ++k) r *= base;
  return r;
}

// Coefficient of t^order in c0^e0 * (c1 + t)^e1 when the chart moves the
// second coordinate, or (c0 + t)^e0 * c1^e1 when c0 == 0.
template <class T>
T univariate_coefficient(const T& c0, const T& c1, unsigned e0, unsigned e1, unsigned order) {
  if (c0 != 0) {
    if (e1 < order) return T(0);
    return T(binomial(e1, order)) * int_power(c0, e0) * int_power(c1, e1 - order);
  }
  if (e0 != order) return T(0);
  return int_power(c1, e1);
}

template <class T>
std::vector<T> condition_row(const T& p0, const T& p1, const T& q0, const T& q1, DerivativeOrder order,
                             const Bidegree& d) {
  // x-part depends only on e0, y-part only on f0.
  std::vector<T> xs(d.i + 1), ys(d.j + 1);
  for (std::size_t e1 = 0; e1 <= d.i; ++e1)
    xs[e1] = univariate_coefficient(p0, p1, static_cast<unsigned>(d.i - e1), static_cast<unsigned>(e1), order.alpha);
  for (std::size_t f1 = 0; f1 <= d.j; ++f1)
    ys[f1] = univariate_coefficient(q0, q1, static_cast<unsigned>(d.j - f1), static_cast<unsigned>(f1), order.beta);
  std::vector<T> row(monomial_count(d));
  for (std::size_t e1 = 0; e1 <= d.i; ++e1) {
    if (xs[e1] == 0) continue;
    for (std::size_t f1 = 0; f1 <= d.j; ++f1)
      if (ys[f1] != 0) row[e1 * (d.j + 1) + f1] = xs[e1] * ys[f1];
  }
  return row;
}

}  // namespace

RationalVector derivative_condition(const PointPair& point, DerivativeOrder order, const Bidegree& d) {
  return condition_row<Rational>(point.p.x0(), point.p.x1(), point.q.x0(), point.q.x1(), order, d);
}

IntRow derivative_condition(const std::pair<Integer, Integer>& p, const std::pair<Integer, Integer>& q,
                            DerivativeOrder order, const Bidegree& d) {
  return condition_row<Integer>(p.first, p.second, q.first, q.second, order, d);
}

}  // namespace fatpts
