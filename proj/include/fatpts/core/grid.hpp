#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fatpts {

using Multiplicity = unsigned;
using RowTuple = std::vector<Multiplicity>;

/// The a x b matrix of multiplicities m_ij of a fat point scheme on P1 x P1.
/// Row i stands for the first coordinate P_i, column j for Q_j; a zero entry
/// means P_i x Q_j is not in the support. Indices are 0-based here.
class MultiplicityGrid {
 public:
  /// Throws InvalidInput on ragged rows, an empty grid, or an all-zero
  /// row/column (such a label would not be a projection of the support).
  explicit MultiplicityGrid(std::vector<RowTuple> rows);

  std::size_t rows() const noexcept { return m_.size(); }
  std::size_t cols() const noexcept { return m_.front().size(); }

  Multiplicity at(std::size_t i, std::size_t j) const { return m_.at(i).at(j); }
  const RowTuple& row(std::size_t i) const { return m_.at(i); }
  RowTuple column(std::size_t j) const;
  const std::vector<RowTuple>& data() const noexcept { return m_; }

  bool supports(std::size_t i, std::size_t j) const {
    return i < rows() && j < cols() && m_[i][j] > 0;
  }
  /// Supported (i, j) pairs in row-major order.
  std::vector<std::pair<std::size_t, std::size_t>> support() const;

  MultiplicityGrid transpose() const;
  /// result(r, c) = this(row_perm[r], col_perm[c]).
  MultiplicityGrid permuted(const std::vector<std::size_t>& row_perm,
                            const std::vector<std::size_t>& col_perm) const;
  /// Copy with m_ij replaced; throws InvalidInput if that empties a row/column.
  MultiplicityGrid with_entry(std::size_t i, std::size_t j, Multiplicity value) const;

  Multiplicity max_entry() const;
  /// Sum over rows of the row maximum.
  std::size_t sum_of_row_maxima() const;
  /// Sum over columns of the column maximum.
  std::size_t sum_of_column_maxima() const;

  friend bool operator==(const MultiplicityGrid&, const MultiplicityGrid&) = default;

 private:
  std::vector<RowTuple> m_;
};

/// u dominates v coordinatewise. Throws InvalidInput on a length mismatch.
bool tuple_geq(const RowTuple& u, const RowTuple& v);

/// One element of S_Z: the tuple ((m_i1 - h)+, ..., (m_ib - h)+) of row i.
struct SzEntry {
  std::size_t row = 0;
  Multiplicity h = 0;
  RowTuple tuple;
};

/// The multiset S_Z, listed row by row and by increasing h. All-zero tuples
/// are omitted.
using SzSet = std::vector<SzEntry>;

SzSet build_sz(const MultiplicityGrid& grid);

struct AcmVerdict {
  bool acm = false;
  /// Two incomparable tuples of S_Z when the scheme is not ACM.
  std::optional<std::pair<RowTuple, RowTuple>> witness;

  explicit operator bool() const noexcept { return acm; }
};

AcmVerdict is_acm(const MultiplicityGrid& grid);

struct CanonicalizationResult {
  MultiplicityGrid grid;
  /// grid(r, c) == input(row_permutation[r], col_permutation[c]).
  std::vector<std::size_t> row_permutation;
  std::vector<std::size_t> col_permutation;
};

/// Sorts rows and columns into weakly decreasing dominance order (stable in
/// the original index). Throws NotAcm when the input is not ACM.
CanonicalizationResult canonicalize(const MultiplicityGrid& grid);

/// True when row i dominates row k for i < k and column j dominates column l
/// for j < l.
bool is_canonical(const MultiplicityGrid& grid);

struct BoundViolation {
  enum class Kind { FourPoints, ThreePoints };
  Kind kind = Kind::FourPoints;
  std::size_t i = 0, k = 0, j = 0, l = 0;
  /// The inequality lhs <= rhs that failed.
  long lhs = 0;
  long rhs = 0;

  std::string describe() const;
};

/// Scans all i < k, j < l for violations of the relative multiplicity bounds
/// that every ACM scheme satisfies once canonicalized:
///   all four points present: m_ij <= m_il + m_kj - m_kl + 1,
///   m_kl absent:             m_il <= m_ij - m_kl + 1.
std::vector<BoundViolation> check_multiplicity_bounds(const MultiplicityGrid& grid);

std::string format_tuple(const RowTuple& t);

}  // namespace fatpts
