#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "fatpts/core/grid.hpp"

namespace fatpts::oracle {

/// Every valid grid with 1..max_rows rows, 1..max_cols columns and entries
/// in 0..max_mult, shapes in increasing order.
std::vector<MultiplicityGrid> all_grids(std::size_t max_rows, std::size_t max_cols, Multiplicity max_mult);

/// Rejection sample: uniform shape, uniform entries, kept once valid and ACM.
MultiplicityGrid random_acm_grid(std::mt19937_64& rng, std::size_t max_rows, std::size_t max_cols,
                                 Multiplicity max_mult);

}  // namespace fatpts::oracle
