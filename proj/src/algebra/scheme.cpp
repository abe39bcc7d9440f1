#include "fatpts/algebra/scheme.hpp"

#include "fatpts/core/errors.hpp"

namespace fatpts {

std::vector<ProjectivePoint> default_coordinates(std::size_t n) {
  std::vector<ProjectivePoint> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) out.emplace_back(Rational(1), Rational(static_cast<long>(k)));
  return out;
}

Scheme::Scheme(MultiplicityGrid grid)
    : Scheme(grid, default_coordinates(grid.rows()), default_coordinates(grid.cols())) {}

namespace {

void check_distinct(const std::vector<ProjectivePoint>& pts, const char* what) {
  for (std::size_t a = 0; a < pts.size(); ++a)
    for (std::size_t b = a + 1; b < pts.size(); ++b)
      if (pts[a] == pts[b])
        throw InvalidInput(std::string(what) + " " + std::to_string(a + 1) + " and " + std::to_string(b + 1) +
                           " coincide at " + pts[a].to_string());
}

}  // namespace

Scheme::Scheme(MultiplicityGrid grid, std::vector<ProjectivePoint> row_points,
               std::vector<ProjectivePoint> col_points)
    : grid_(std::move(grid)), row_points_(std::move(row_points)), col_points_(std::move(col_points)) {
  if (row_points_.size() != grid_.rows())
    throw InvalidInput("expected " + std::to_string(grid_.rows()) + " row points, got " +
                       std::to_string(row_points_.size()));
  if (col_points_.size() != grid_.cols())
    throw InvalidInput("expected " + std::to_string(grid_.cols()) + " column points, got " +
                       std::to_string(col_points_.size()));
  check_distinct(row_points_, "row points");
  check_distinct(col_points_, "column points");
}

FatPointSet Scheme::fat_points() const {
  FatPointSet out;
  for (auto [i, j] : grid_.support()) out.push_back({i, j, point(i, j), grid_.at(i, j)});
  return out;
}

FatPointSet Scheme::fat_points_dropping(std::size_t i, std::size_t j) const {
  if (!grid_.supports(i, j))
    throw PointNotInSupport("point (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                            ") is not in the support");
  FatPointSet out;
  for (auto& fp : fat_points()) {
    if (fp.row == i && fp.col == j && --fp.multiplicity == 0) continue;
    out.push_back(std::move(fp));
  }
  return out;
}

std::size_t scheme_length(const FatPointSet& points) {
  std::size_t n = 0;
  for (const auto& fp : points) n += std::size_t{fp.multiplicity} * (fp.multiplicity + 1) / 2;
  return n;
}

}  // namespace fatpts
