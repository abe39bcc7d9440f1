#pragma once

#include "fatpts/core/grid.hpp"

namespace fixtures {

inline fatpts::MultiplicityGrid example_grid() {
  return fatpts::MultiplicityGrid({{5, 4, 2, 2}, {5, 3, 2, 1}, {4, 3, 1, 0}, {2, 1, 0, 0}, {1, 0, 0, 0}});
}

/// Same multiplicities as example_grid with rows and columns shuffled.
inline fatpts::MultiplicityGrid shuffled_grid() {
  return fatpts::MultiplicityGrid({{1, 2, 0, 0}, {3, 4, 1, 0}, {4, 5, 2, 2}, {3, 5, 2, 1}, {0, 1, 0, 0}});
}

}  // namespace fixtures
