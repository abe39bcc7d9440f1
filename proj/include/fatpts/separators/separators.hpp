#pragma once

// Minimal separators of a fat point in an ACM scheme on P1 x P1, read off
// the multiplicity grid: degrees, explicit forms, and the resulting update
// of the Hilbert function when the point's multiplicity drops by one.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fatpts/algebra/form.hpp"
#include "fatpts/algebra/scheme.hpp"
#include "fatpts/core/bidegree.hpp"
#include "fatpts/core/grid.hpp"
#include "fatpts/core/hilbert_table.hpp"

namespace fatpts {

struct TruncatedSums {
  /// a_l = sum_s (m_sj - l)+ down column j, l = 0..m_ij - 1.
  std::vector<std::size_t> a_seq;
  /// b_l = sum_p (m_ip - l)+ along row i, l = 0..m_ij - 1.
  std::vector<std::size_t> b_seq;
  /// c_l = sum_p (m_ip - l)+ along row i for l up to the row maximum.
  std::vector<std::size_t> c_seq;
};

/// Throws PointNotInSupport when m_ij = 0.
TruncatedSums truncated_sums(const MultiplicityGrid& grid, std::size_t i, std::size_t j);

struct SeparatorDegreeSet {
  std::size_t row = 0;
  std::size_t col = 0;
  Multiplicity multiplicity = 0;
  /// Sorted by first coordinate ascending; second coordinates then descend.
  BidegreeList degrees;

  std::string to_string() const;
};

/// The bidegrees (a_{m-1-l} - 1, b_l - 1), l = 0..m-1, of the minimal
/// separators of P_i x Q_j of multiplicity m = m_ij.
/// Throws NotAcm or PointNotInSupport.
SeparatorDegreeSet separator_degrees(const MultiplicityGrid& grid, std::size_t i, std::size_t j);

/// Points sharing one first coordinate with multiplicities `mults`: degrees
/// (l, b_l - 1) for the point at index i.
SeparatorDegreeSet ruling_separator_degrees(const std::vector<Multiplicity>& mults, std::size_t i);

/// F_l = A_l * B_l as a product of ruling lines.
struct SeparatorForm {
  std::size_t ell = 0;
  /// Exponent of L_{P_s} for each row s.
  std::vector<unsigned> row_exponents;
  /// Exponent of L_{Q_p} for each column p.
  std::vector<unsigned> col_exponents;
  Bidegree degree;
  BihomForm form;

  /// e.g. "L_P1^4 L_P2^3 L_Q1^2"; "1" for the empty product.
  std::string factored() const;
};

/// One form per l = 0..m_ij - 1, in the order of separator_degrees.
/// Throws NotAcm or PointNotInSupport.
std::vector<SeparatorForm> separator_forms(const Scheme& scheme, std::size_t i, std::size_t j);

/// H_{Z'}(r,s) = H_Z(r,s) - #{(c,d) in degs : (c,d) <= (r,s)} on `window`
/// (defaults to the input window). Throws WindowError if the input table does
/// not cover the requested window.
HilbertTable hilbert_update(const HilbertTable& hz, const SeparatorDegreeSet& degs,
                            std::optional<Bidegree> window = std::nullopt);

}  // namespace fatpts
