#pragma once

// Enumeration of semiheap and heap tables on small labeled carriers, with
// reduction up to relabeling.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "semiheap/group.hpp"
#include "semiheap/table.hpp"

namespace semiheap {

struct EnumerationOptions {
  bool up_to_iso = false;
  /// Wall-clock limit; when hit the report is partial (complete = false).
  std::optional<double> budget_seconds;
  unsigned jobs = 1;
};

enum class StructureKind { semiheap, heap };

struct EnumerationReport {
  std::size_t n = 0;
  StructureKind kind = StructureKind::semiheap;
  /// Sorted by (canonical form, table). With up_to_iso only the canonical
  /// representative of each class is kept.
  std::vector<TernaryTable> tables;
  std::uint64_t count = 0;      ///< labeled tables found
  std::uint64_t iso_count = 0;  ///< isomorphism classes among them
  bool complete = true;

  /// `n=<k> kind=<semiheap|heap> count=<c> iso_count=<ci> complete=<bool>`
  [[nodiscard]] std::string summary() const;
};

/// Every one of the n^(n^3) tables tested by the verifier. n <= 2.
std::vector<TernaryTable> brute_force_semiheaps(std::size_t n);

/// Backtracking over cells in (i,j,k) order; after each assignment every
/// para-associativity comparison whose cells are all assigned is checked.
EnumerationReport enumerate_semiheaps(std::size_t n, const EnumerationOptions& options = {});

/// Heap tables by two independent routes: the semiheap search with the
/// biunitarity cells pre-seeded, and heapification of every labeled group
/// table. Throws std::logic_error if the two routes disagree.
EnumerationReport enumerate_heaps(std::size_t n, const EnumerationOptions& options = {});

/// All group structures on the labeled set {0..n-1}, any identity.
std::vector<FiniteGroup> labeled_groups(std::size_t n);

/// Deduplicated heapifications of labeled_groups(n), sorted.
std::vector<TernaryTable> heaps_from_groups(std::size_t n);

/// Lexicographically least relabeling over all n! permutations. n <= 8.
TernaryTable canonical_form(const TernaryTable& t);
bool are_isomorphic(const TernaryTable& a, const TernaryTable& b);
/// Number of permutations p with relabel(t, p) = t.
std::size_t automorphism_count(const TernaryTable& t);

}  // namespace semiheap
