#include "fatpts/algebra/form.hpp"

#include "fatpts/core/errors.hpp"

namespace fatpts {

std::size_t monomial_count(const Bidegree& d) noexcept { return (d.i + 1) * (d.j + 1); }

std::size_t monomial_index(const Bidegree& d, const Monomial& m) {
  if (m.bidegree() != d) throw InvalidInput("monomial of bidegree " + m.bidegree().to_string() +
                                            " indexed in bidegree " + d.to_string());
  return (d.i - m.e0) * (d.j + 1) + (d.j - m.f0);
}

Monomial monomial_at(const Bidegree& d, std::size_t index) {
  if (index >= monomial_count(d)) throw InvalidInput("monomial index out of range");
  const auto e1 = static_cast<unsigned>(index / (d.j + 1));
  const auto f1 = static_cast<unsigned>(index % (d.j + 1));
  return {static_cast<unsigned>(d.i) - e1, e1, static_cast<unsigned>(d.j) - f1, f1};
}

BihomForm BihomForm::constant(const Rational& c) {
  BihomForm f;
  f.add_term({}, c);
  return f;
}

BihomForm BihomForm::variable(Variable v) {
  Monomial m;
  switch (v) {
    case Variable::X0: m.e0 = 1; break;
    case Variable::X1: m.e1 = 1; break;
    case Variable::Y0: m.f0 = 1; break;
    case Variable::Y1: m.f1 = 1; break;
  }
  BihomForm f(m.bidegree());
  f.add_term(m, 1);
  return f;
}

BihomForm BihomForm::from_coefficients(const Bidegree& d, const RationalVector& coeffs) {
  if (coeffs.size() != monomial_count(d))
    throw InvalidInput("coefficient vector of length " + std::to_string(coeffs.size()) +
                       " for bidegree " + d.to_string());
  BihomForm f(d);
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    if (coeffs[k] != 0) f.terms_.emplace(monomial_at(d, k), coeffs[k]);
  return f;
}

Rational BihomForm::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void BihomForm::add_term(const Monomial& m, const Rational& c) {
  if (m.bidegree() != degree_)
    throw InvalidInput("term of bidegree " + m.bidegree().to_string() + " added to a form of bidegree " +
                       degree_.to_string());
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

RationalVector BihomForm::coefficient_vector() const {
  RationalVector v(monomial_count(degree_));
  for (const auto& [m, c] : terms_) v[monomial_index(degree_, m)] = c;
  return v;
}

BihomForm& BihomForm::operator+=(const BihomForm& o) {
  if (o.is_zero()) return *this;
  if (is_zero() && degree_ != o.degree_) degree_ = o.degree_;
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

BihomForm& BihomForm::operator-=(const BihomForm& o) { return *this += o * Rational(-1); }

BihomForm& BihomForm::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

BihomForm multiply(const BihomForm& f, const BihomForm& g) {
  BihomForm out(f.bidegree() + g.bidegree());
  for (const auto& [mf, cf] : f.terms())
    for (const auto& [mg, cg] : g.terms()) out.add_term(mf * mg, cf * cg);
  return out;
}

BihomForm power(const BihomForm& f, unsigned n) {
  BihomForm result = BihomForm::constant(1);
  BihomForm base = f;
  while (n > 0) {
    if (n & 1U) result = multiply(result, base);
    n >>= 1U;
    if (n > 0) base = multiply(base, base);
  }
  return result;
}

namespace {

BihomForm normalized_line(const Rational& a, const Rational& b, Variable first, Variable second) {
  // a*first + b*second, primitive, leading coefficient positive.
  auto row = primitive_integer_row({a, b});
  if (row[0] < 0 || (row[0] == 0 && row[1] < 0)) {
    row[0] = -row[0];
    row[1] = -row[1];
  }
  BihomForm f = BihomForm::variable(first) * Rational(row[0]);
  f += BihomForm::variable(second) * Rational(row[1]);
  return f;
}

std::string monomial_text(const Monomial& m) {
  std::string s;
  auto put = [&](const char* name, unsigned e) {
    if (e == 0) return;
    if (!s.empty()) s += "*";
    s += name;
    if (e > 1) s += "^" + std::to_string(e);
  };
  put("x0", m.e0);
  put("x1", m.e1);
  put("y0", m.f0);
  put("y1", m.f1);
  return s;
}

}  // namespace

BihomForm line_through_first(const ProjectivePoint& p) {
  return normalized_line(p.x1(), -p.x0(), Variable::X0, Variable::X1);
}

BihomForm line_through_second(const ProjectivePoint& q) {
  return normalized_line(q.x1(), -q.x0(), Variable::Y0, Variable::Y1);
}

std::string BihomForm::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first)
      s += negative ? "-" : "";
    else
      s += negative ? " - " : " + ";
    const auto mono = monomial_text(m);
    if (mono.empty())
      s += fatpts::to_string(mag);
    else if (mag == 1)
      s += mono;
    else
      s += fatpts::to_string(mag) + "*" + mono;
    first = false;
  }
  return s;
}

}  // namespace fatpts
