#include "fatpts/oracle/enumerate.hpp"

#include <algorithm>

namespace fatpts::oracle {

namespace {

bool valid(const std::vector<RowTuple>& rows) {
  for (const auto& r : rows)
    if (std::all_of(r.begin(), r.end(), [](Multiplicity m) { return m == 0; })) return false;
  for (std::size_t j = 0; j < rows.front().size(); ++j)
    if (std::all_of(rows.begin(), rows.end(), [&](const RowTuple& r) { return r[j] == 0; })) return false;
  return true;
}

}  // namespace

std::vector<MultiplicityGrid> all_grids(std::size_t max_rows, std::size_t max_cols, Multiplicity max_mult) {
  std::vector<MultiplicityGrid> out;
  const std::size_t base = std::size_t{max_mult} + 1;
  for (std::size_t a = 1; a <= max_rows; ++a)
    for (std::size_t b = 1; b <= max_cols; ++b) {
      std::vector<RowTuple> rows(a, RowTuple(b, 0));
      // Odometer over all entries.
      while (true) {
        if (valid(rows)) out.emplace_back(rows);
        std::size_t k = 0;
        for (; k < a * b; ++k) {
          auto& cell = rows[k / b][k % b];
          if (++cell < base) break;
          cell = 0;
        }
        if (k == a * b) break;
      }
    }
  return out;
}

MultiplicityGrid random_acm_grid(std::mt19937_64& rng, std::size_t max_rows, std::size_t max_cols,
                                 Multiplicity max_mult) {
  std::uniform_int_distribution<std::size_t> rows_dist(1, max_rows), cols_dist(1, max_cols);
  std::uniform_int_distribution<Multiplicity> entry(0, max_mult);
  while (true) {
    const auto a = rows_dist(rng), b = cols_dist(rng);
    std::vector<RowTuple> rows(a, RowTuple(b));
    for (auto& r : rows)
      for (auto& x : r) x = entry(rng);
    if (!valid(rows)) continue;
    MultiplicityGrid g(std::move(rows));
    if (is_acm(g)) return g;
  }
}

}  // namespace fatpts::oracle
