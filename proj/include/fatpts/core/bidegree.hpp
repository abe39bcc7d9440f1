#pragma once

#include <compare>
#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

namespace fatpts {

/// Bidegree (i, j) in the x- and y-variables.
struct Bidegree {
  std::size_t i = 0;
  std::size_t j = 0;

  friend auto operator<=>(const Bidegree&, const Bidegree&) = default;

  /// Componentwise order: (i,j) dominates (i',j') iff i >= i' and j >= j'.
  bool dominates(const Bidegree& other) const noexcept {
    return i >= other.i && j >= other.j;
  }

  Bidegree operator+(const Bidegree& o) const noexcept { return {i + o.i, j + o.j}; }

  std::string to_string() const {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
  }
};

inline std::ostream& operator<<(std::ostream& os, const Bidegree& d) {
  return os << d.to_string();
}

using BidegreeList = std::vector<Bidegree>;

}  // namespace fatpts
