#pragma once

#include <cstddef>
#include <map>
#include <string>

#include "fatpts/algebra/point.hpp"
#include "fatpts/algebra/rational.hpp"
#include "fatpts/core/bidegree.hpp"

namespace fatpts {

/// x0^e0 x1^e1 y0^f0 y1^f1.
struct Monomial {
  unsigned e0 = 0, e1 = 0, f0 = 0, f1 = 0;

  Bidegree bidegree() const noexcept { return {std::size_t{e0} + e1, std::size_t{f0} + f1}; }
  Monomial operator*(const Monomial& o) const noexcept {
    return {e0 + o.e0, e1 + o.e1, f0 + o.f0, f1 + o.f1};
  }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Coefficient-vector order within a bidegree: e0 descending, then f0
/// descending. Index of x0^e0 x1^(i-e0) y0^f0 y1^(j-f0) is (i-e0)(j+1) + (j-f0).
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept {
    if (a.e0 != b.e0) return a.e0 > b.e0;
    if (a.f0 != b.f0) return a.f0 > b.f0;
    if (a.e1 != b.e1) return a.e1 < b.e1;
    return a.f1 < b.f1;
  }
};

std::size_t monomial_count(const Bidegree& d) noexcept;
std::size_t monomial_index(const Bidegree& d, const Monomial& m);
Monomial monomial_at(const Bidegree& d, std::size_t index);

enum class Variable { X0, X1, Y0, Y1 };

/// Bihomogeneous polynomial in x0, x1, y0, y1 with exact coefficients. Zero
/// coefficients are never stored; every stored monomial has the form's
/// bidegree.
class BihomForm {
 public:
  using Terms = std::map<Monomial, Rational, MonomialOrder>;

  explicit BihomForm(Bidegree d = {}) : degree_(d) {}

  static BihomForm constant(const Rational& c);
  static BihomForm variable(Variable v);
  static BihomForm from_coefficients(const Bidegree& d, const RationalVector& coeffs);

  const Bidegree& bidegree() const noexcept { return degree_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Rational coefficient(const Monomial& m) const;

  /// Throws InvalidInput if m has the wrong bidegree.
  void add_term(const Monomial& m, const Rational& c);

  RationalVector coefficient_vector() const;

  BihomForm& operator+=(const BihomForm& o);
  BihomForm& operator-=(const BihomForm& o);
  BihomForm& operator*=(const Rational& c);

  friend BihomForm operator+(BihomForm a, const BihomForm& b) { return a += b; }
  friend BihomForm operator-(BihomForm a, const BihomForm& b) { return a -= b; }
  friend BihomForm operator*(BihomForm a, const Rational& c) { return a *= c; }
  friend bool operator==(const BihomForm& a, const BihomForm& b) {
    return a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

  std::string to_string() const;

 private:
  Bidegree degree_;
  Terms terms_;
};

BihomForm multiply(const BihomForm& f, const BihomForm& g);
BihomForm power(const BihomForm& f, unsigned n);
inline BihomForm operator*(const BihomForm& f, const BihomForm& g) { return multiply(f, g); }

/// The (1,0)-form p1*x0 - p0*x1 vanishing on the ruling through p, scaled to
/// primitive integer coefficients with the first nonzero coefficient positive.
BihomForm line_through_first(const ProjectivePoint& p);
/// The (0,1)-form through q, normalized the same way.
BihomForm line_through_second(const ProjectivePoint& q);

}  // namespace fatpts
