#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fatpts/algebra/form.hpp"
#include "fatpts/algebra/point.hpp"
#include "fatpts/core/grid.hpp"

namespace fatpts {

/// One fat point P_row x Q_col of multiplicity m.
struct FatPoint {
  std::size_t row = 0;
  std::size_t col = 0;
  PointPair point;
  Multiplicity multiplicity = 0;
};

/// A fat point scheme as a flat list; unlike a grid it may be empty and may
/// leave rulings unused (e.g. after lowering a reduced point to zero).
using FatPointSet = std::vector<FatPoint>;

/// A multiplicity grid together with concrete coordinates for its rulings.
class Scheme {
 public:
  /// Coordinates P_i = [1 : i-1], Q_j = [1 : j-1] (1-based labels).
  explicit Scheme(MultiplicityGrid grid);
  /// Throws InvalidInput on a length mismatch or repeated coordinates.
  Scheme(MultiplicityGrid grid, std::vector<ProjectivePoint> row_points,
         std::vector<ProjectivePoint> col_points);

  const MultiplicityGrid& grid() const noexcept { return grid_; }
  const std::vector<ProjectivePoint>& row_points() const noexcept { return row_points_; }
  const std::vector<ProjectivePoint>& col_points() const noexcept { return col_points_; }

  PointPair point(std::size_t i, std::size_t j) const { return {row_points_.at(i), col_points_.at(j)}; }
  /// L_{P_i}, the (1,0)-form of the ruling through P_i.
  BihomForm row_line(std::size_t i) const { return line_through_first(row_points_.at(i)); }
  /// L_{Q_j}, the (0,1)-form of the ruling through Q_j.
  BihomForm col_line(std::size_t j) const { return line_through_second(col_points_.at(j)); }

  FatPointSet fat_points() const;
  /// Z' : the scheme with m_ij lowered by one. Throws PointNotInSupport.
  FatPointSet fat_points_dropping(std::size_t i, std::size_t j) const;

 private:
  MultiplicityGrid grid_;
  std::vector<ProjectivePoint> row_points_;
  std::vector<ProjectivePoint> col_points_;
};

std::vector<ProjectivePoint> default_coordinates(std::size_t n);

/// Sum of m(m+1)/2, the length of the scheme (its eventual Hilbert value).
std::size_t scheme_length(const FatPointSet& points);

}  // namespace fatpts
