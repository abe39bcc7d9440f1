#include "fatpts/algebra/elimination.hpp"

#include <algorithm>

#include "fatpts/core/errors.hpp"

namespace fatpts {

namespace {

// Divides out the gcd of the entries; returns the divisor (1 if none).
Integer remove_content(IntRow& v) {
  Integer g = 0;
  for (const auto& x : v) {
    if (sgn(x) == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) return g;
  }
  if (g > 1)
    for (auto& x : v)
      if (sgn(x) != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return g == 0 ? Integer(1) : g;
}

}  // namespace

bool FractionFreeEchelon::Residual::is_zero() const {
  return std::all_of(row.begin(), row.end(), [](const Integer& x) { return sgn(x) == 0; });
}

FractionFreeEchelon::Residual FractionFreeEchelon::reduce(IntRow v) const {
  if (v.size() != cols_) throw InvalidInput("row length does not match the echelon width");
  Rational scale = 1;
  Integer g, a, b;
  for (std::size_t k = 0; k < pivots_.size(); ++k) {
    const std::size_t c = pivot_cols_[k];
    if (sgn(v[c]) == 0) continue;
    const IntRow& u = pivots_[k];
    mpz_gcd(g.get_mpz_t(), u[c].get_mpz_t(), v[c].get_mpz_t());
    mpz_divexact(a.get_mpz_t(), u[c].get_mpz_t(), g.get_mpz_t());
    mpz_divexact(b.get_mpz_t(), v[c].get_mpz_t(), g.get_mpz_t());
    if (a != 1) {
      for (auto& x : v)
        if (sgn(x) != 0) x *= a;
      scale *= a;
    }
    for (std::size_t j = c; j < cols_; ++j)
      if (sgn(u[j]) != 0) mpz_submul(v[j].get_mpz_t(), b.get_mpz_t(), u[j].get_mpz_t());
    const Integer content = remove_content(v);
    if (content != 1) scale /= content;
  }
  return {std::move(v), std::move(scale)};
}

bool FractionFreeEchelon::insert(IntRow v) {
  auto residual = reduce(std::move(v));
  auto& row = residual.row;
  for (std::size_t j = 0; j < cols_; ++j)
    if (sgn(row[j]) != 0) {
      remove_content(row);
      pivots_.push_back(std::move(row));
      pivot_cols_.push_back(j);
      return true;
    }
  return false;
}

std::vector<IntRow> FractionFreeEchelon::null_space() const {
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : pivot_cols_) is_pivot[c] = true;
  std::vector<IntRow> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    RationalVector x(cols_);
    x[free] = 1;
    // Pivot k only involves its own pivot column, free columns and pivot
    // columns of later pivots, so back-substitute in reverse insertion order.
    for (std::size_t k = pivots_.size(); k-- > 0;) {
      const IntRow& u = pivots_[k];
      const std::size_t c = pivot_cols_[k];
      Rational acc = 0;
      for (std::size_t j = c + 1; j < cols_; ++j)
        if (sgn(u[j]) != 0 && x[j] != 0) acc += Rational(u[j]) * x[j];
      x[c] = -acc / Rational(u[c]);
    }
    basis.push_back(primitive_integer_row(x));
  }
  return basis;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<RationalVector>& rows, std::size_t cols) {
  ExactMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InvalidInput("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
  return m;
}

RationalVector ExactMatrix::row(std::size_t r) const {
  return RationalVector(a_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                        a_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

namespace {

FractionFreeEchelon echelon_of(const ExactMatrix& m) {
  FractionFreeEchelon e(m.cols());
  for (std::size_t r = 0; r < m.rows() && e.rank() < m.cols(); ++r) e.insert(m.row(r));
  return e;
}

}  // namespace

std::size_t rank(const ExactMatrix& m) { return echelon_of(m).rank(); }

std::vector<RationalVector> kernel_basis(const ExactMatrix& m) {
  std::vector<RationalVector> out;
  for (const auto& v : echelon_of(m).null_space()) {
    RationalVector q(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) q[k] = v[k];
    out.push_back(std::move(q));
  }
  return out;
}

std::size_t rank(const std::vector<IntRow>& rows, std::size_t cols) {
  FractionFreeEchelon e(cols);
  for (const auto& r : rows) {
    if (e.rank() == cols) break;
    e.insert(r);
  }
  return e.rank();
}

std::vector<RationalVector> canonical_basis(std::vector<RationalVector> vectors, std::size_t cols) {
  std::vector<RationalVector> basis;  // kept in RREF, sorted by pivot column
  std::vector<std::size_t> pivots;
  for (auto& v : vectors) {
    if (v.size() != cols) throw InvalidInput("vector length does not match");
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const Rational f = v[pivots[k]];
      if (f == 0) continue;
      for (std::size_t j = 0; j < cols; ++j)
        if (basis[k][j] != 0) v[j] -= f * basis[k][j];
    }
    auto lead = std::find_if(v.begin(), v.end(), [](const Rational& x) { return x != 0; });
    if (lead == v.end()) continue;
    const std::size_t c = static_cast<std::size_t>(lead - v.begin());
    const Rational inv = 1 / v[c];
    for (auto& x : v) x *= inv;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const Rational f = basis[k][c];
      if (f == 0) continue;
      for (std::size_t j = 0; j < cols; ++j)
        if (v[j] != 0) basis[k][j] -= f * v[j];
    }
    auto pos = std::lower_bound(pivots.begin(), pivots.end(), c) - pivots.begin();
    pivots.insert(pivots.begin() + pos, c);
    basis.insert(basis.begin() + pos, std::move(v));
  }
  return basis;
}

}  // namespace fatpts
