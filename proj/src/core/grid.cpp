#include "fatpts/core/grid.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "fatpts/core/errors.hpp"

namespace fatpts {

MultiplicityGrid::MultiplicityGrid(std::vector<RowTuple> rows) : m_(std::move(rows)) {
  if (m_.empty() || m_.front().empty()) throw InvalidInput("grid must have at least one row and one column");
  const std::size_t b = m_.front().size();
  for (std::size_t i = 0; i < m_.size(); ++i) {
    if (m_[i].size() != b)
      throw InvalidInput("ragged grid: row " + std::to_string(i + 1) + " has " +
                         std::to_string(m_[i].size()) + " entries, expected " + std::to_string(b));
    if (std::all_of(m_[i].begin(), m_[i].end(), [](Multiplicity x) { return x == 0; }))
      throw InvalidInput("row " + std::to_string(i + 1) +
                         " is all zero; remove it (the label is not a projection of the support)");
  }
  for (std::size_t j = 0; j < b; ++j) {
    bool any = false;
    for (const auto& r : m_) any = any || r[j] > 0;
    if (!any)
      throw InvalidInput("column " + std::to_string(j + 1) +
                         " is all zero; remove it (the label is not a projection of the support)");
  }
}

RowTuple MultiplicityGrid::column(std::size_t j) const {
  RowTuple c;
  c.reserve(rows());
  for (const auto& r : m_) c.push_back(r.at(j));
  return c;
}

std::vector<std::pair<std::size_t, std::size_t>> MultiplicityGrid::support() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j)
      if (m_[i][j] > 0) out.emplace_back(i, j);
  return out;
}

MultiplicityGrid MultiplicityGrid::transpose() const {
  std::vector<RowTuple> t(cols(), RowTuple(rows()));
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j) t[j][i] = m_[i][j];
  return MultiplicityGrid(std::move(t));
}

MultiplicityGrid MultiplicityGrid::permuted(const std::vector<std::size_t>& row_perm,
                                            const std::vector<std::size_t>& col_perm) const {
  auto is_perm = [](std::vector<std::size_t> p, std::size_t n) {
    if (p.size() != n) return false;
    std::sort(p.begin(), p.end());
    for (std::size_t k = 0; k < n; ++k)
      if (p[k] != k) return false;
    return true;
  };
  if (!is_perm(row_perm, rows()) || !is_perm(col_perm, cols()))
    throw InvalidInput("not a permutation of the grid's rows/columns");
  std::vector<RowTuple> out(rows(), RowTuple(cols()));
  for (std::size_t r = 0; r < rows(); ++r)
    for (std::size_t c = 0; c < cols(); ++c) out[r][c] = m_[row_perm[r]][col_perm[c]];
  return MultiplicityGrid(std::move(out));
}

MultiplicityGrid MultiplicityGrid::with_entry(std::size_t i, std::size_t j, Multiplicity value) const {
  auto copy = m_;
  copy.at(i).at(j) = value;
  return MultiplicityGrid(std::move(copy));
}

Multiplicity MultiplicityGrid::max_entry() const {
  Multiplicity best = 0;
  for (const auto& r : m_) best = std::max(best, *std::max_element(r.begin(), r.end()));
  return best;
}

std::size_t MultiplicityGrid::sum_of_row_maxima() const {
  std::size_t s = 0;
  for (const auto& r : m_) s += *std::max_element(r.begin(), r.end());
  return s;
}

std::size_t MultiplicityGrid::sum_of_column_maxima() const {
  std::size_t s = 0;
  for (std::size_t j = 0; j < cols(); ++j) {
    Multiplicity best = 0;
    for (const auto& r : m_) best = std::max(best, r[j]);
    s += best;
  }
  return s;
}

bool tuple_geq(const RowTuple& u, const RowTuple& v) {
  if (u.size() != v.size())
    throw InvalidInput("tuple length mismatch: " + std::to_string(u.size()) + " vs " +
                       std::to_string(v.size()));
  for (std::size_t k = 0; k < u.size(); ++k)
    if (u[k] < v[k]) return false;
  return true;
}

SzSet build_sz(const MultiplicityGrid& grid) {
  SzSet out;
  for (std::size_t i = 0; i < grid.rows(); ++i) {
    const auto& row = grid.row(i);
    const Multiplicity top = *std::max_element(row.begin(), row.end());
    for (Multiplicity h = 0; h < top; ++h) {
      RowTuple t(row.size());
      for (std::size_t j = 0; j < row.size(); ++j) t[j] = row[j] > h ? row[j] - h : 0;
      out.push_back({i, h, std::move(t)});
    }
  }
  return out;
}

namespace {

Multiplicity weight(const RowTuple& t) { return std::accumulate(t.begin(), t.end(), Multiplicity{0}); }

}  // namespace

AcmVerdict is_acm(const MultiplicityGrid& grid) {
  std::vector<RowTuple> tuples;
  for (auto& e : build_sz(grid)) tuples.push_back(std::move(e.tuple));
  std::sort(tuples.begin(), tuples.end());
  tuples.erase(std::unique(tuples.begin(), tuples.end()), tuples.end());
  // Heaviest first. Neighbours of equal weight are distinct, hence
  // incomparable; otherwise the chain test on neighbours decides everything.
  std::stable_sort(tuples.begin(), tuples.end(), [](const RowTuple& x, const RowTuple& y) {
    const auto wx = weight(x), wy = weight(y);
    return wx != wy ? wx > wy : x > y;
  });
  for (std::size_t k = 0; k + 1 < tuples.size(); ++k)
    if (!tuple_geq(tuples[k], tuples[k + 1])) return {false, std::make_pair(tuples[k], tuples[k + 1])};
  return {true, std::nullopt};
}

namespace {

std::vector<std::size_t> dominance_order(const std::vector<RowTuple>& lines) {
  std::vector<std::size_t> idx(lines.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) {
    return tuple_geq(lines[x], lines[y]) && !tuple_geq(lines[y], lines[x]);
  });
  return idx;
}

}  // namespace

bool is_canonical(const MultiplicityGrid& grid) {
  for (std::size_t i = 0; i + 1 < grid.rows(); ++i)
    if (!tuple_geq(grid.row(i), grid.row(i + 1))) return false;
  for (std::size_t j = 0; j + 1 < grid.cols(); ++j)
    if (!tuple_geq(grid.column(j), grid.column(j + 1))) return false;
  return true;
}

CanonicalizationResult canonicalize(const MultiplicityGrid& grid) {
  if (!is_acm(grid)) throw NotAcm("cannot canonicalize: the scheme is not ACM");
  auto row_perm = dominance_order(grid.data());
  std::vector<RowTuple> columns;
  for (std::size_t j = 0; j < grid.cols(); ++j) columns.push_back(grid.column(j));
  auto col_perm = dominance_order(columns);
  auto out = grid.permuted(row_perm, col_perm);
  return {std::move(out), std::move(row_perm), std::move(col_perm)};
}

std::string BoundViolation::describe() const {
  std::ostringstream os;
  os << (kind == Kind::FourPoints ? "four-point" : "three-point") << " bound violated at rows "
     << i + 1 << "," << k + 1 << " columns " << j + 1 << "," << l + 1 << ": " << lhs << " > " << rhs;
  return os.str();
}

std::vector<BoundViolation> check_multiplicity_bounds(const MultiplicityGrid& grid) {
  std::vector<BoundViolation> out;
  for (std::size_t i = 0; i < grid.rows(); ++i)
    for (std::size_t k = i + 1; k < grid.rows(); ++k)
      for (std::size_t j = 0; j < grid.cols(); ++j)
        for (std::size_t l = j + 1; l < grid.cols(); ++l) {
          const long mij = grid.at(i, j), mil = grid.at(i, l), mkj = grid.at(k, j), mkl = grid.at(k, l);
          if (mij == 0 || mil == 0 || mkj == 0) continue;
          if (mkl > 0) {
            const long rhs = mil + mkj - mkl + 1;
            if (mij > rhs) out.push_back({BoundViolation::Kind::FourPoints, i, k, j, l, mij, rhs});
          } else {
            // Taken literally with m_kl = 0.
            const long rhs = mij - mkl + 1;
            if (mil > rhs) out.push_back({BoundViolation::Kind::ThreePoints, i, k, j, l, mil, rhs});
          }
        }
  return out;
}

std::string format_tuple(const RowTuple& t) {
  std::string s = "(";
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(t[k]);
  }
  return s + ")";
}

}  // namespace fatpts
