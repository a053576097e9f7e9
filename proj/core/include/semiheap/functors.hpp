#pragma once

// Heapification (groups -> pointed heaps) and groupification (pointed
// heaps -> groups) on finite structures.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "semiheap/group.hpp"
#include "semiheap/semiheap.hpp"

namespace semiheap {

/// [x,y,z] = x y^-1 z, pointed at the identity. Always a heap.
PointedSemiheap heapify(const FiniteGroup& g);

/// m(x,y) = [x,e,y], x^-1 = [e,x,e] with e the basepoint. The basepoint can
/// be any element of the heap. Throws ValidationError if h is not a heap.
FiniteGroup groupify(const PointedSemiheap& h);

/// Same construction without requiring a heap: returns the group, or the
/// first group axiom the construction violates.
std::variant<FiniteGroup, GroupAxiomFailure> groupify_diagnostic(const PointedSemiheap& h);

struct FullyFaithfulReport {
  std::uint64_t maps_enumerated = 0;
  std::vector<IndexMap> group_homs;
  std::vector<IndexMap> pointed_heap_homs;
  /// Semiheap homs between the heapifications with no basepoint condition.
  std::vector<IndexMap> semiheap_homs;
  /// Pointed heap homs and group homs are the same set of maps.
  bool coincide = false;
};

/// Enumerates every map G -> G'. Throws BudgetExceeded if |G'|^|G| > max_maps.
FullyFaithfulReport check_fully_faithful(const FiniteGroup& g, const FiniteGroup& g_prime,
                                         std::uint64_t max_maps = 1u << 24);

/// Calls visit(map) for every map {0..n-1} -> {0..m-1} in lexicographic
/// order. Throws BudgetExceeded if m^n > max_maps.
template <class Visit>
void for_each_map(std::size_t n, std::size_t m, std::uint64_t max_maps, Visit&& visit);

}  // namespace semiheap

#include "semiheap/detail/for_each_map.hpp"
