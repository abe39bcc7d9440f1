#include "fatpts/core/hilbert_table.hpp"

#include <algorithm>
#include <sstream>

#include "fatpts/core/errors.hpp"

namespace fatpts {

HilbertTable HilbertTable::restricted(const Bidegree& window) const {
  if (!covers(window))
    throw WindowError("table window " + window_.to_string() + " does not cover " + window.to_string());
  HilbertTable out(window);
  for (std::size_t i = 0; i <= window.i; ++i)
    for (std::size_t j = 0; j <= window.j; ++j) out.at(i, j) = at(i, j);
  return out;
}

std::string HilbertTable::to_string() const {
  std::size_t width = 1;
  for (auto v : values_) width = std::max(width, std::to_string(v).size());
  std::ostringstream os;
  for (std::size_t i = 0; i <= window_.i; ++i) {
    for (std::size_t j = 0; j <= window_.j; ++j) {
      auto s = std::to_string(at(i, j));
      if (j) os << ' ';
      os << std::string(width - s.size(), ' ') << s;
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace fatpts
