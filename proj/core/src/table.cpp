#include "semiheap/table.hpp"

#include <sstream>

namespace semiheap {

TernaryTable::TernaryTable(std::size_t n, Index fill) : n_(n), entries_(n * n * n, fill) {
  if (n > 0 && fill >= n) throw ValidationError("TernaryTable: fill value out of range");
}

TernaryTable::TernaryTable(std::size_t n, std::vector<Index> entries)
    : n_(n), entries_(std::move(entries)) {
  if (entries_.size() != n * n * n) {
    throw ValidationError("TernaryTable: expected " + std::to_string(n * n * n) +
                          " entries, got " + std::to_string(entries_.size()));
  }
  for (std::size_t c = 0; c < entries_.size(); ++c) {
    if (entries_[c] >= n) {
      throw ValidationError("TernaryTable: entry " + std::to_string(c) + " = " +
                            std::to_string(entries_[c]) + " out of range for n=" +
                            std::to_string(n));
    }
  }
}

void TernaryTable::set(Index i, Index j, Index k, Index value) {
  if (i >= n_ || j >= n_ || k >= n_ || value >= n_)
    throw ValidationError("TernaryTable::set: index out of range");
  entries_[(static_cast<std::size_t>(i) * n_ + j) * n_ + k] = value;
}

TernaryTable TernaryTable::swapped_outer() const {
  return from_function(n_, [this](Index i, Index j, Index k) { return (*this)(k, j, i); });
}

void validate_map(std::span<const Index> map, std::size_t domain, std::size_t codomain,
                  const char* what) {
  if (map.size() != domain) {
    throw ValidationError(std::string(what) + ": expected " + std::to_string(domain) +
                          " values, got " + std::to_string(map.size()));
  }
  for (std::size_t i = 0; i < map.size(); ++i) {
    if (map[i] >= codomain) {
      throw ValidationError(std::string(what) + ": value " + std::to_string(map[i]) +
                            " at position " + std::to_string(i) + " out of range for size " +
                            std::to_string(codomain));
    }
  }
}

void validate_bijection(std::span<const Index> map, std::size_t n, const char* what) {
  validate_map(map, n, n, what);
  std::vector<bool> hit(n, false);
  for (Index v : map) {
    if (hit[v]) throw ValidationError(std::string(what) + ": not injective at value " +
                                      std::to_string(v));
    hit[v] = true;
  }
}

IndexMap invert_bijection(std::span<const Index> map) {
  IndexMap inv(map.size());
  for (std::size_t i = 0; i < map.size(); ++i) inv[map[i]] = static_cast<Index>(i);
  return inv;
}

std::string join_indices(std::span<const Index> values) {
  std::ostringstream os;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) os << ',';
    os << values[i];
  }
  return os.str();
}

}  // namespace semiheap
