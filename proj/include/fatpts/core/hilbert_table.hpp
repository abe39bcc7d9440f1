#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fatpts/core/bidegree.hpp"

namespace fatpts {

/// Values H(i, j) for 0 <= i <= window.i, 0 <= j <= window.j.
class HilbertTable {
 public:
  explicit HilbertTable(Bidegree window)
      : window_(window), values_((window.i + 1) * (window.j + 1), 0) {}

  const Bidegree& window() const noexcept { return window_; }
  bool covers(const Bidegree& d) const noexcept { return window_.dominates(d); }

  std::size_t& at(std::size_t i, std::size_t j) { return values_.at(i * (window_.j + 1) + j); }
  std::size_t at(std::size_t i, std::size_t j) const { return values_.at(i * (window_.j + 1) + j); }

  /// Restriction to a smaller window. Throws WindowError if not covered.
  HilbertTable restricted(const Bidegree& window) const;

  /// Rows i = 0..window.i, one line each, columns separated by spaces.
  std::string to_string() const;

  friend bool operator==(const HilbertTable&, const HilbertTable&) = default;

 private:
  Bidegree window_;
  std::vector<std::size_t> values_;
};

}  // namespace fatpts
