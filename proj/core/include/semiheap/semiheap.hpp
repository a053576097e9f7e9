#pragma once

// Certified finite semiheaps and heaps, and the structural constructions
// on them (opposite, products, homomorphisms, images, induced structures).
//
// A FiniteSemiheap can only be obtained from the para-associativity
// verifier or from a construction that preserves the law, so holding one is
// the certificate. Mutating the table means copying it out as a
// TernaryTable, which carries no certificate.

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "semiheap/table.hpp"

namespace semiheap {

/// First failing quintuple, lexicographic in (x1..x5), with the three
/// bracketings evaluated.
struct ParaAssociativityFailure {
  std::array<Index, 5> args{};
  Index left = 0;    ///< [[x1,x2,x3],x4,x5]
  Index middle = 0;  ///< [x1,[x4,x3,x2],x5]
  Index right = 0;   ///< [x1,x2,[x3,x4,x5]]

  friend bool operator==(const ParaAssociativityFailure&,
                         const ParaAssociativityFailure&) = default;
};

/// Exhaustive check over all n^5 quintuples. `jobs` > 1 splits the x1 range
/// across threads; the reported failure is still the lexicographic minimum.
CheckResult<ParaAssociativityFailure> verify_para_associative(const TernaryTable& table,
                                                              unsigned jobs = 1);

class NotASemiheap : public std::domain_error {
 public:
  explicit NotASemiheap(const ParaAssociativityFailure& f);
  const ParaAssociativityFailure& failure() const noexcept { return failure_; }

 private:
  ParaAssociativityFailure failure_;
};

class FiniteSemiheap;

namespace detail {
// Wraps a table produced by a law-preserving construction. Library-internal.
FiniteSemiheap assume_certified(TernaryTable table);
}  // namespace detail

class FiniteSemiheap {
 public:
  /// Verifies and wraps; throws NotASemiheap with the first failing quintuple.
  static FiniteSemiheap certify(TernaryTable table, unsigned jobs = 1);

  /// The empty semiheap (n = 0).
  FiniteSemiheap() = default;

  [[nodiscard]] std::size_t size() const noexcept { return table_.size(); }
  [[nodiscard]] const TernaryTable& table() const noexcept { return table_; }
  Index operator()(Index x, Index y, Index z) const noexcept { return table_(x, y, z); }

  friend bool operator==(const FiniteSemiheap&, const FiniteSemiheap&) = default;

 private:
  explicit FiniteSemiheap(TernaryTable t) : table_(std::move(t)) {}
  friend FiniteSemiheap detail::assume_certified(TernaryTable table);

  TernaryTable table_;
};

class PointedSemiheap {
 public:
  /// Requires a non-empty semiheap and basepoint < n.
  PointedSemiheap(FiniteSemiheap s, Index basepoint);

  [[nodiscard]] const FiniteSemiheap& semiheap() const noexcept { return semiheap_; }
  [[nodiscard]] Index basepoint() const noexcept { return basepoint_; }
  [[nodiscard]] std::size_t size() const noexcept { return semiheap_.size(); }

  friend bool operator==(const PointedSemiheap&, const PointedSemiheap&) = default;

 private:
  FiniteSemiheap semiheap_;
  Index basepoint_;
};

/// A semiheap in which every element is biunitary.
class FiniteHeap {
 public:
  /// Throws ValidationError if some element is not biunitary.
  explicit FiniteHeap(FiniteSemiheap s);

  [[nodiscard]] const FiniteSemiheap& semiheap() const noexcept { return semiheap_; }
  [[nodiscard]] std::size_t size() const noexcept { return semiheap_.size(); }

 private:
  FiniteSemiheap semiheap_;
};

/// [y,x,x] = y = [x,x,y] for every y. Throws ValidationError if x >= n.
bool is_biunitary(const FiniteSemiheap& s, Index x);
bool is_heap(const FiniteSemiheap& s);
/// The table equals its s13-conjugate.
bool is_abelian(const FiniteSemiheap& s);

/// [x,y,z]^op := [z,y,x]. Involutive.
FiniteSemiheap opposite(const FiniteSemiheap& s);

/// Componentwise product on pair-encoded carrier, index = x * n' + y.
FiniteSemiheap product(const FiniteSemiheap& s, const FiniteSemiheap& t);
IndexMap product_projection_first(std::size_t n, std::size_t n_prime);
IndexMap product_projection_second(std::size_t n, std::size_t n_prime);
/// The map T -> S x S' induced by a pair of maps T -> S, T -> S'.
IndexMap product_pairing(std::span<const Index> to_first, std::span<const Index> to_second,
                         std::size_t n_prime);

struct HomomorphismFailure {
  std::array<Index, 3> args{};
  Index image_of_product = 0;  ///< phi[x1,x2,x3]
  Index product_of_images = 0; ///< [phi x1, phi x2, phi x3]'

  friend bool operator==(const HomomorphismFailure&, const HomomorphismFailure&) = default;
};

/// phi[x1,x2,x3] = [phi x1, phi x2, phi x3]' for all triples.
/// Throws ValidationError for a malformed map.
CheckResult<HomomorphismFailure> is_homomorphism(std::span<const Index> map,
                                                 const FiniteSemiheap& source,
                                                 const FiniteSemiheap& target);

class SemiheapHom {
 public:
  /// Throws ValidationError if the map is malformed or not a homomorphism.
  SemiheapHom(FiniteSemiheap source, FiniteSemiheap target, IndexMap map);

  [[nodiscard]] const FiniteSemiheap& source() const noexcept { return source_; }
  [[nodiscard]] const FiniteSemiheap& target() const noexcept { return target_; }
  [[nodiscard]] const IndexMap& map() const noexcept { return map_; }
  Index operator()(Index x) const { return map_[x]; }

 private:
  FiniteSemiheap source_;
  FiniteSemiheap target_;
  IndexMap map_;
};

/// The image subset with its induced structure, re-indexed in increasing
/// order of target index: elements[k] is the target element with new index k.
struct HomomorphicImage {
  FiniteSemiheap semiheap;
  std::vector<Index> elements;
};

HomomorphicImage homomorphic_image(const SemiheapHom& h);

struct SubsemiheapFailure {
  std::array<Index, 3> args{};
  Index value = 0;
};

/// Closure of `subset` under the ternary product; the witness is the
/// lexicographically first triple (in carrier order) leaving the subset.
CheckResult<SubsemiheapFailure> is_subsemiheap(std::span<const Index> subset,
                                               const FiniteSemiheap& s);

/// Restriction of s to a closed subset, re-indexed in increasing order.
/// Throws ValidationError if the subset is not closed.
FiniteSemiheap restrict_to(std::span<const Index> subset, const FiniteSemiheap& s);

/// [m1,m2,m3]_phi := phi^-1 [phi m1, phi m2, phi m3] for a bijection
/// phi : M -> S (phi[m] is the S-element of m).
FiniteSemiheap induce_via_bijection(std::span<const Index> phi, const FiniteSemiheap& s);

/// Pointed variant: the induced basepoint is phi^-1(pt).
PointedSemiheap induce_via_bijection(std::span<const Index> phi, const PointedSemiheap& s);

/// psi^-1 o phi, the canonical isomorphism between the two induced structures.
IndexMap induced_isomorphism(std::span<const Index> phi, std::span<const Index> psi);

/// Relabels by a permutation p: result(p i, p j, p k) = p(T(i, j, k)).
TernaryTable relabel(const TernaryTable& t, std::span<const Index> perm);

std::string describe(const ParaAssociativityFailure& f);
std::string describe(const HomomorphismFailure& f);

}  // namespace semiheap
