#pragma once

#include <cstddef>
#include <vector>

namespace waring::detail {

inline std::vector<std::size_t> first_combination(std::size_t s) {
  std::vector<std::size_t> c(s);
  for (std::size_t i = 0; i < s; ++i) c[i] = i;
  return c;
}

/// Advances c to the next s-subset of {0..n-1} in lexicographic order.
inline bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t s = c.size();
  for (std::size_t i = s; i-- > 0;) {
    if (c[i] < n - s + i) {
      ++c[i];
      for (std::size_t k = i + 1; k < s; ++k) c[k] = c[k - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace waring::detail
