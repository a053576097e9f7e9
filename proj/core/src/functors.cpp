#include "semiheap/functors.hpp"

#include <algorithm>

namespace semiheap {

PointedSemiheap heapify(const FiniteGroup& g) {
  auto table = TernaryTable::from_function(g.order(), [&](Index x, Index y, Index z) {
    return g.mul(g.mul(x, g.inverse(y)), z);
  });
  return PointedSemiheap(detail::assume_certified(std::move(table)), g.identity());
}

namespace {

std::vector<Index> groupified_table(const PointedSemiheap& h) {
  const auto n = static_cast<Index>(h.size());
  const Index e = h.basepoint();
  std::vector<Index> mul(static_cast<std::size_t>(n) * n);
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y) mul[x * n + y] = h.semiheap()(x, e, y);
  return mul;
}

}  // namespace

FiniteGroup groupify(const PointedSemiheap& h) {
  if (!is_heap(h.semiheap())) throw ValidationError("groupify: input is not a heap");
  FiniteGroup g(h.size(), groupified_table(h), h.basepoint());
  // On a heap the inverse is [e,x,e]; FiniteGroup derives it from the table.
  for (Index x = 0; x < h.size(); ++x)
    if (g.inverse(x) != h.semiheap()(h.basepoint(), x, h.basepoint()))
      throw std::logic_error("groupify: [e,x,e] is not the inverse on a heap");
  return g;
}

std::variant<FiniteGroup, GroupAxiomFailure> groupify_diagnostic(const PointedSemiheap& h) {
  auto mul = groupified_table(h);
  const Index e = h.basepoint();
  if (auto r = validate_group(h.size(), mul, e); !r) return r.witness();
  // The group must also use [e,x,e] as its inverse.
  for (Index x = 0; x < h.size(); ++x) {
    const Index inv = h.semiheap()(e, x, e);
    if (mul[x * h.size() + inv] != e || mul[inv * h.size() + x] != e)
      return GroupAxiomFailure{GroupAxiom::inverse, {x}};
  }
  return FiniteGroup(h.size(), std::move(mul), e);
}

FullyFaithfulReport check_fully_faithful(const FiniteGroup& g, const FiniteGroup& g_prime,
                                         std::uint64_t max_maps) {
  const PointedSemiheap s = heapify(g);
  const PointedSemiheap s_prime = heapify(g_prime);
  FullyFaithfulReport report;
  for_each_map(g.order(), g_prime.order(), max_maps, [&](const IndexMap& map) {
    ++report.maps_enumerated;
    if (is_group_homomorphism(map, g, g_prime)) report.group_homs.push_back(map);
    if (is_homomorphism(map, s.semiheap(), s_prime.semiheap())) {
      report.semiheap_homs.push_back(map);
      if (map[s.basepoint()] == s_prime.basepoint()) report.pointed_heap_homs.push_back(map);
    }
  });
  // Both lists are produced in the same lexicographic order.
  report.coincide = report.group_homs == report.pointed_heap_homs;
  return report;
}

}  // namespace semiheap
