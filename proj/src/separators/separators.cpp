#include "fatpts/separators/separators.hpp"

#include <algorithm>

#include "fatpts/core/errors.hpp"

namespace fatpts {

namespace {

std::size_t truncated_sum(const RowTuple& line, std::size_t ell) {
  std::size_t s = 0;
  for (auto m : line)
    if (m > ell) s += m - ell;
  return s;
}

void require_support(const MultiplicityGrid& grid, std::size_t i, std::size_t j) {
  if (!grid.supports(i, j))
    throw PointNotInSupport("point (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                            ") is not in the support");
}

void require_acm(const MultiplicityGrid& grid) {
  if (!is_acm(grid)) throw NotAcm("theorem hypothesis violated: not ACM");
}

}  // namespace

TruncatedSums truncated_sums(const MultiplicityGrid& grid, std::size_t i, std::size_t j) {
  require_support(grid, i, j);
  const auto m = grid.at(i, j);
  const auto column = grid.column(j);
  const auto& row = grid.row(i);
  TruncatedSums out;
  for (std::size_t ell = 0; ell < m; ++ell) {
    out.a_seq.push_back(truncated_sum(column, ell));
    out.b_seq.push_back(truncated_sum(row, ell));
  }
  const auto top = *std::max_element(row.begin(), row.end());
  for (std::size_t ell = 0; ell < top; ++ell) out.c_seq.push_back(truncated_sum(row, ell));
  return out;
}

std::string SeparatorDegreeSet::to_string() const {
  std::string s;
  for (const auto& d : degrees) {
    if (!s.empty()) s += ' ';
    s += d.to_string();
  }
  return s;
}

SeparatorDegreeSet separator_degrees(const MultiplicityGrid& grid, std::size_t i, std::size_t j) {
  require_support(grid, i, j);
  require_acm(grid);
  const auto sums = truncated_sums(grid, i, j);
  const std::size_t m = grid.at(i, j);
  SeparatorDegreeSet out{i, j, grid.at(i, j), {}};
  for (std::size_t ell = 0; ell < m; ++ell)
    out.degrees.push_back({sums.a_seq[m - 1 - ell] - 1, sums.b_seq[ell] - 1});
  // a_seq strictly decreases, so this is already ascending in the first
  // coordinate.
  return out;
}

SeparatorDegreeSet ruling_separator_degrees(const std::vector<Multiplicity>& mults, std::size_t i) {
  const MultiplicityGrid grid({mults});
  require_support(grid, 0, i);
  SeparatorDegreeSet out{0, i, mults[i], {}};
  for (std::size_t ell = 0; ell < mults[i]; ++ell) out.degrees.push_back({ell, truncated_sum(mults, ell) - 1});
  return out;
}

std::string SeparatorForm::factored() const {
  std::string s;
  auto put = [&](const std::string& name, unsigned e) {
    if (e == 0) return;
    if (!s.empty()) s += ' ';
    s += name;
    if (e > 1) s += "^" + std::to_string(e);
  };
  for (std::size_t r = 0; r < row_exponents.size(); ++r) put("L_P" + std::to_string(r + 1), row_exponents[r]);
  for (std::size_t c = 0; c < col_exponents.size(); ++c) put("L_Q" + std::to_string(c + 1), col_exponents[c]);
  return s.empty() ? "1" : s;
}

std::vector<SeparatorForm> separator_forms(const Scheme& scheme, std::size_t i, std::size_t j) {
  const auto& grid = scheme.grid();
  require_support(grid, i, j);
  require_acm(grid);
  const unsigned m = grid.at(i, j);
  auto positive_part = [](long v) { return static_cast<unsigned>(std::max(v, 0L)); };

  std::vector<BihomForm> row_lines, col_lines;
  for (std::size_t s = 0; s < grid.rows(); ++s) row_lines.push_back(scheme.row_line(s));
  for (std::size_t p = 0; p < grid.cols(); ++p) col_lines.push_back(scheme.col_line(p));

  std::vector<SeparatorForm> out;
  for (unsigned ell = 0; ell < m; ++ell) {
    SeparatorForm f;
    f.ell = ell;
    // A_l: L_{P_s}^{(m_sj - (m - l - 1))+}, one less on the point's own row.
    const long shift = static_cast<long>(m) - ell - 1;
    for (std::size_t s = 0; s < grid.rows(); ++s)
      f.row_exponents.push_back(positive_part(static_cast<long>(grid.at(s, j)) - shift) - (s == i ? 1 : 0));
    // B_l: L_{Q_p}^{(m_ip - l)+}, one less on the point's own column.
    for (std::size_t p = 0; p < grid.cols(); ++p)
      f.col_exponents.push_back(positive_part(static_cast<long>(grid.at(i, p)) - ell) - (p == j ? 1 : 0));

    BihomForm form = BihomForm::constant(1);
    for (std::size_t s = 0; s < grid.rows(); ++s)
      if (f.row_exponents[s]) form = form * power(row_lines[s], f.row_exponents[s]);
    for (std::size_t p = 0; p < grid.cols(); ++p)
      if (f.col_exponents[p]) form = form * power(col_lines[p], f.col_exponents[p]);
    f.degree = form.bidegree();
    f.form = std::move(form);
    out.push_back(std::move(f));
  }
  return out;
}

HilbertTable hilbert_update(const HilbertTable& hz, const SeparatorDegreeSet& degs, std::optional<Bidegree> window) {
  const Bidegree w = window.value_or(hz.window());
  if (!hz.covers(w))
    throw WindowError("input table window " + hz.window().to_string() + " smaller than requested " + w.to_string());
  HilbertTable out(w);
  for (std::size_t r = 0; r <= w.i; ++r)
    for (std::size_t s = 0; s <= w.j; ++s) {
      const auto below = static_cast<std::size_t>(
          std::count_if(degs.degrees.begin(), degs.degrees.end(),
                        [&](const Bidegree& d) { return Bidegree{r, s}.dominates(d); }));
      const auto h = hz.at(r, s);
      if (below > h)
        throw InvalidInput("degree set removes more than H_Z" + Bidegree{r, s}.to_string() +
                           "; it does not belong to this scheme");
      out.at(r, s) = h - below;
    }
  return out;
}

}  // namespace fatpts
