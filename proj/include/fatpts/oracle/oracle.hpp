#pragma once

// Brute-force ground truth for fat point schemes: bigraded pieces of the
// ideal by exact linear algebra, Hilbert functions, separator membership and
// minimal generator degrees of I_{Z'}/I_Z. Nothing here consults the closed
// formulas of the separators module.

#include <cstddef>
#include <optional>
#include <vector>

#include "fatpts/algebra/form.hpp"
#include "fatpts/algebra/rational.hpp"
#include "fatpts/algebra/scheme.hpp"
#include "fatpts/core/bidegree.hpp"
#include "fatpts/core/hilbert_table.hpp"

namespace fatpts::oracle {

struct IdealPieceBasis {
  Bidegree bidegree;
  /// Linearly independent coefficient vectors (monomial order of form.hpp).
  std::vector<IntRow> basis;
};

/// Stacked derivative conditions of every point, orders alpha + beta < m.
std::vector<IntRow> condition_rows(const FatPointSet& points, const Bidegree& d);

std::size_t ideal_piece_dim(const FatPointSet& points, const Bidegree& d);
IdealPieceBasis ideal_piece_basis(const FatPointSet& points, const Bidegree& d);

/// Basis of ((L_P, L_Q)^m)_d spanned by L_P^u L_Q^v times all monomials of
/// bidegree d - (u, v), u + v = m. Independent of the derivative encoding.
IdealPieceBasis ideal_piece_basis_by_span(const PointPair& point, Multiplicity m, const Bidegree& d);

HilbertTable hilbert_function(const FatPointSet& points, const Bidegree& window);
inline HilbertTable hilbert_function(const Scheme& scheme, const Bidegree& window) {
  return hilbert_function(scheme.fat_points(), window);
}

/// F vanishes to order m_ef at every other supported point and to order
/// exactly m_ij - 1 at P_i x Q_j. Throws InvalidInput for F = 0.
bool is_separator(const Scheme& scheme, std::size_t i, std::size_t j, const BihomForm& f);

enum class GeneratorMethod {
  /// Project I_{Z'} onto the order-(m-1) Taylor coefficients at the point.
  Projected,
  /// Explicit kernels of I_{Z'} and I_Z, multiplied by x0, x1, y0, y1.
  Direct,
};

struct GeneratorOptions {
  /// Search window; defaults to default_generator_window.
  std::optional<Bidegree> window;
  GeneratorMethod method = GeneratorMethod::Projected;
};

/// (sum of row maxima + 1, sum of column maxima + 1).
Bidegree default_generator_window(const MultiplicityGrid& grid);

struct PointGenerators {
  std::size_t row = 0;
  std::size_t col = 0;
  Multiplicity multiplicity = 0;
  /// Minimal generator degrees of I_{Z'}/I_Z with repetition, sorted.
  BidegreeList degrees;
  /// H_{Z'} on the recount window, Z' = Z with this point lowered by one
  /// (Projected method only).
  std::optional<HilbertTable> dropped_hilbert;
};

struct GeneratorScan {
  Bidegree window;
  /// The window actually computed: `window` enlarged by 2 in each direction.
  Bidegree recount_window;
  std::vector<PointGenerators> points;
  /// H_Z on the recount window (Projected method only).
  std::optional<HilbertTable> hilbert;
};

/// Generator degrees for every supported point. Throws WindowError if the
/// recount on the enlarged window finds generators outside `window`.
GeneratorScan scan_generators(const Scheme& scheme, const GeneratorOptions& options = {});
/// Restricted to the listed (row, col) points. Throws PointNotInSupport.
GeneratorScan scan_generators(const Scheme& scheme, const std::vector<std::pair<std::size_t, std::size_t>>& points,
                              const GeneratorOptions& options = {});

/// Same for one point. Throws PointNotInSupport, WindowError.
PointGenerators minimal_generator_degrees(const Scheme& scheme, std::size_t i, std::size_t j,
                                          const GeneratorOptions& options = {});

/// Points sharing one first coordinate with multiplicities `mults`: true iff
/// d dominates no (l, c_l), c_l = sum_p (m_p - l)+, l = 0..max. The last
/// term (max, 0) accounts for L_P^max.
bool ruling_zero_predicate(const std::vector<Multiplicity>& mults, const Bidegree& d);

/// Coefficient vector of v * var, moving from bidegree `from` up by var's degree.
IntRow multiply_by_variable(const IntRow& v, const Bidegree& from, Variable var);

}  // namespace fatpts::oracle
