#pragma once

#include <cstddef>
#include <vector>

#include "fatpts/algebra/rational.hpp"

namespace fatpts {

/// Row echelon form over the integers, built one row at a time.
///
/// Reduction is fraction-free: v <- a*v - b*u with a, b the cofactors of the
/// pivot entries, followed by removal of the row content. Pivot row k has a
/// zero in the pivot column of every earlier pivot, so reducing a row
/// against the pivots in insertion order clears all pivot columns.
class FractionFreeEchelon {
 public:
  explicit FractionFreeEchelon(std::size_t cols) : cols_(cols) {}

  std::size_t cols() const noexcept { return cols_; }
  std::size_t rank() const noexcept { return pivots_.size(); }
  const std::vector<IntRow>& pivot_rows() const noexcept { return pivots_; }
  const std::vector<std::size_t>& pivot_columns() const noexcept { return pivot_cols_; }

  /// Reduced form of a row: `row` == scale * (v - w) for some w in the span
  /// of the pivots, and `row` vanishes on every pivot column.
  struct Residual {
    IntRow row;
    Rational scale;
    bool is_zero() const;
  };

  Residual reduce(IntRow v) const;

  /// Adds v if it is independent of the current pivots.
  bool insert(IntRow v);
  bool insert(const RationalVector& v) { return insert(primitive_integer_row(v)); }

  /// Basis of {x : p.x = 0 for every pivot row p}, one primitive integer
  /// vector per non-pivot column.
  std::vector<IntRow> null_space() const;

 private:
  std::size_t cols_;
  std::vector<IntRow> pivots_;
  std::vector<std::size_t> pivot_cols_;
};

/// Dense rectangular matrix over the rationals.
class ExactMatrix {
 public:
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  /// Throws InvalidInput on ragged input.
  static ExactMatrix from_rows(const std::vector<RationalVector>& rows, std::size_t cols);
  static ExactMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  RationalVector row(std::size_t r) const;

  ExactMatrix transpose() const;

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> a_;
};

std::size_t rank(const ExactMatrix& m);
/// Spans the right null space; rank(m) + kernel size == m.cols().
std::vector<RationalVector> kernel_basis(const ExactMatrix& m);

/// Rank of a list of integer rows of common length.
std::size_t rank(const std::vector<IntRow>& rows, std::size_t cols);

/// Reduced row echelon basis of the span of the given vectors over Q.
/// Two spans are equal iff their canonical bases are equal.
std::vector<RationalVector> canonical_basis(std::vector<RationalVector> vectors, std::size_t cols);

}  // namespace fatpts
