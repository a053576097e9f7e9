#pragma once

// Seeded generators and brute-force oracles shared by the test suites. The
// oracles deliberately avoid the library's own checkers.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "semiheap/corpus.hpp"
#include "semiheap/functors.hpp"
#include "semiheap/group.hpp"
#include "semiheap/semiheap.hpp"

namespace semiheap::testing {

using Gen = std::mt19937_64;

inline Index pick(Gen& g, std::size_t n) {
  return static_cast<Index>(std::uniform_int_distribution<std::size_t>(0, n - 1)(g));
}

inline TernaryTable random_table(Gen& g, std::size_t n) {
  return TernaryTable::from_function(n, [&](Index, Index, Index) { return pick(g, n); });
}

inline IndexMap random_permutation(Gen& g, std::size_t n) {
  IndexMap p(n);
  std::iota(p.begin(), p.end(), Index{0});
  std::shuffle(p.begin(), p.end(), g);
  return p;
}

inline IndexMap random_map(Gen& g, std::size_t n, std::size_t m) {
  IndexMap f(n);
  for (auto& v : f) v = pick(g, m);
  return f;
}

/// Independent para-associativity oracle: plain nested loops over all n^5.
inline bool oracle_para_associative(const TernaryTable& t) {
  const auto n = static_cast<Index>(t.size());
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      for (Index c = 0; c < n; ++c)
        for (Index d = 0; d < n; ++d)
          for (Index e = 0; e < n; ++e) {
            const Index l = t(t(a, b, c), d, e);
            if (l != t(a, t(d, c, b), e) || l != t(a, b, t(c, d, e))) return false;
          }
  return true;
}

inline bool oracle_heap(const TernaryTable& t) {
  for (Index x = 0; x < t.size(); ++x)
    for (Index y = 0; y < t.size(); ++y)
      if (t(y, x, x) != y || t(x, x, y) != y) return false;
  return true;
}

/// Semiheap hom oracle on raw tables.
inline bool oracle_hom(const IndexMap& f, const TernaryTable& s, const TernaryTable& t) {
  for (Index a = 0; a < s.size(); ++a)
    for (Index b = 0; b < s.size(); ++b)
      for (Index c = 0; c < s.size(); ++c)
        if (f[s(a, b, c)] != t(f[a], f[b], f[c])) return false;
  return true;
}

/// g1 g2^-1 g3 computed from the Cayley table without the library.
inline TernaryTable oracle_heapify(const FiniteGroup& g) {
  const std::size_t n = g.order();
  const auto& mul = g.cayley_table();
  std::vector<Index> inv(n);
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      if (mul[a * n + b] == g.identity()) inv[a] = b;
  return TernaryTable::from_function(
      n, [&](Index a, Index b, Index c) { return mul[mul[a * n + inv[b]] * n + c]; });
}

/// A stock of certified semiheaps: heapified bundled groups, their relabelings,
/// products, opposites, plus some non-heap semiheaps.
inline std::vector<FiniteSemiheap> semiheap_zoo(std::uint64_t seed, std::size_t max_order = 8) {
  Gen g(seed);
  std::vector<FiniteSemiheap> out;
  for (const auto& named : bundled_groups()) {
    if (named.group.order() > max_order) continue;
    const auto h = heapify(named.group).semiheap();
    out.push_back(h);
    out.push_back(FiniteSemiheap::certify(relabel(h.table(), random_permutation(g, h.size()))));
  }
  // [x,y,z] = x, [x,y,z] = z, and a constant product.
  for (std::size_t n : {1u, 2u, 3u}) {
    out.push_back(FiniteSemiheap::certify(TernaryTable::from_function(n, [](Index x, Index, Index) { return x; })));
    out.push_back(FiniteSemiheap::certify(TernaryTable::from_function(n, [](Index, Index, Index z) { return z; })));
    out.push_back(FiniteSemiheap::certify(TernaryTable::from_function(n, [](Index, Index, Index) { return Index{0}; })));
  }
  const auto z2 = heapify(bundled_group("Z2")).semiheap();
  const auto z3 = heapify(bundled_group("Z3")).semiheap();
  out.push_back(product(z2, z3));
  out.push_back(opposite(heapify(bundled_group("S3")).semiheap()));
  return out;
}

}  // namespace semiheap::testing
