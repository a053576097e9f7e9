#pragma once

#include <cstdint>
#include <string>

namespace semiheap {

template <class Visit>
void for_each_map(std::size_t n, std::size_t m, std::uint64_t max_maps, Visit&& visit) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (m == 0) { total = 0; break; }
    if (total > max_maps / m) {
      throw BudgetExceeded("map enumeration: " + std::to_string(m) + "^" + std::to_string(n) +
                           " exceeds budget of " + std::to_string(max_maps) + " maps");
    }
    total *= m;
  }
  if (total == 0) return;
  IndexMap map(n, 0);
  while (true) {
    visit(static_cast<const IndexMap&>(map));
    std::size_t pos = n;
    while (pos > 0) {
      --pos;
      if (++map[pos] < m) break;
      map[pos] = 0;
      if (pos == 0) return;
    }
    if (n == 0) return;
  }
}

}  // namespace semiheap
