#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "semiheap/table.hpp"

namespace semiheap {

enum class GroupAxiom { closure, associativity, identity, inverse };

const char* to_string(GroupAxiom a) noexcept;

/// Which axiom failed and at which elements (1 to 3 of them).
struct GroupAxiomFailure {
  GroupAxiom axiom = GroupAxiom::closure;
  std::vector<Index> elements;
};

std::string describe(const GroupAxiomFailure& f);

class InvalidGroup : public std::domain_error {
 public:
  explicit InvalidGroup(GroupAxiomFailure f);
  const GroupAxiomFailure& failure() const noexcept { return failure_; }

 private:
  GroupAxiomFailure failure_;
};

/// Checks a Cayley table (n*n, row-major) with claimed identity e.
/// Associativity is checked before identity and inverses.
CheckResult<GroupAxiomFailure> validate_group(std::size_t n, const std::vector<Index>& mul,
                                              Index e);

class FiniteGroup {
 public:
  /// Validates and derives the inverse table; throws InvalidGroup or ValidationError.
  FiniteGroup(std::size_t n, std::vector<Index> mul, Index identity);

  [[nodiscard]] std::size_t order() const noexcept { return n_; }
  [[nodiscard]] Index identity() const noexcept { return e_; }
  Index mul(Index a, Index b) const noexcept { return mul_[a * n_ + b]; }
  Index inverse(Index a) const noexcept { return inv_[a]; }
  [[nodiscard]] const std::vector<Index>& cayley_table() const noexcept { return mul_; }
  [[nodiscard]] const std::vector<Index>& inverse_table() const noexcept { return inv_; }

  friend bool operator==(const FiniteGroup&, const FiniteGroup&) = default;

 private:
  std::size_t n_;
  std::vector<Index> mul_;
  Index e_;
  std::vector<Index> inv_;
};

/// Pair-encoded direct product, index = g * |H| + h.
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

FiniteGroup cyclic_group(std::size_t n);

struct GroupHomFailure {
  Index a = 0, b = 0;
};

/// map(ab) = map(a) map(b) for all a, b.
CheckResult<GroupHomFailure> is_group_homomorphism(const std::vector<Index>& map,
                                                   const FiniteGroup& g, const FiniteGroup& h);

/// Brute-force search over all bijections; n <= 8 is instant.
std::optional<IndexMap> find_group_isomorphism(const FiniteGroup& g, const FiniteGroup& h);

bool is_commutative(const FiniteGroup& g);

}  // namespace semiheap
