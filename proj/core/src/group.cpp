#include "semiheap/group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace semiheap {

const char* to_string(GroupAxiom a) noexcept {
  switch (a) {
    case GroupAxiom::closure: return "closure";
    case GroupAxiom::associativity: return "associativity";
    case GroupAxiom::identity: return "identity";
    case GroupAxiom::inverse: return "inverse";
  }
  return "unknown";
}

std::string describe(const GroupAxiomFailure& f) {
  std::ostringstream os;
  os << "axiom=" << to_string(f.axiom) << " x=" << join_indices(f.elements);
  return os.str();
}

InvalidGroup::InvalidGroup(GroupAxiomFailure f)
    : std::domain_error("not a group: " + describe(f)), failure_(std::move(f)) {}

CheckResult<GroupAxiomFailure> validate_group(std::size_t n, const std::vector<Index>& mul,
                                              Index e) {
  using R = CheckResult<GroupAxiomFailure>;
  if (n == 0) return R::fail({GroupAxiom::identity, {}});
  if (mul.size() != n * n)
    throw ValidationError("validate_group: expected " + std::to_string(n * n) + " entries");
  for (std::size_t c = 0; c < mul.size(); ++c)
    if (mul[c] >= n)
      return R::fail({GroupAxiom::closure,
                      {static_cast<Index>(c / n), static_cast<Index>(c % n)}});
  if (e >= n) throw ValidationError("validate_group: identity index out of range");

  const auto m = [&](Index a, Index b) { return mul[a * n + b]; };
  const auto N = static_cast<Index>(n);
  for (Index a = 0; a < N; ++a)
    for (Index b = 0; b < N; ++b)
      for (Index c = 0; c < N; ++c)
        if (m(m(a, b), c) != m(a, m(b, c))) return R::fail({GroupAxiom::associativity, {a, b, c}});
  for (Index a = 0; a < N; ++a)
    if (m(e, a) != a || m(a, e) != a) return R::fail({GroupAxiom::identity, {a}});
  for (Index a = 0; a < N; ++a) {
    bool found = false;
    for (Index b = 0; b < N && !found; ++b) found = m(a, b) == e && m(b, a) == e;
    if (!found) return R::fail({GroupAxiom::inverse, {a}});
  }
  return R::pass();
}

FiniteGroup::FiniteGroup(std::size_t n, std::vector<Index> mul, Index identity)
    : n_(n), mul_(std::move(mul)), e_(identity), inv_(n) {
  if (auto r = validate_group(n_, mul_, e_); !r) throw InvalidGroup(r.witness());
  for (Index a = 0; a < n_; ++a)
    for (Index b = 0; b < n_; ++b)
      if (this->mul(a, b) == e_) inv_[a] = b;
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const std::size_t n = g.order(), m = h.order();
  std::vector<Index> mul(n * m * n * m);
  for (Index p = 0; p < n * m; ++p)
    for (Index q = 0; q < n * m; ++q)
      mul[p * n * m + q] =
          static_cast<Index>(g.mul(p / m, q / m) * m + h.mul(p % m, q % m));
  return FiniteGroup(n * m, std::move(mul), static_cast<Index>(g.identity() * m + h.identity()));
}

FiniteGroup cyclic_group(std::size_t n) {
  std::vector<Index> mul(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) mul[a * n + b] = static_cast<Index>((a + b) % n);
  return FiniteGroup(n, std::move(mul), 0);
}

CheckResult<GroupHomFailure> is_group_homomorphism(const std::vector<Index>& map,
                                                   const FiniteGroup& g, const FiniteGroup& h) {
  validate_map(map, g.order(), h.order(), "is_group_homomorphism");
  for (Index a = 0; a < g.order(); ++a)
    for (Index b = 0; b < g.order(); ++b)
      if (map[g.mul(a, b)] != h.mul(map[a], map[b]))
        return CheckResult<GroupHomFailure>::fail({a, b});
  return CheckResult<GroupHomFailure>::pass();
}

std::optional<IndexMap> find_group_isomorphism(const FiniteGroup& g, const FiniteGroup& h) {
  if (g.order() != h.order()) return std::nullopt;
  IndexMap perm(g.order());
  std::iota(perm.begin(), perm.end(), Index{0});
  do {
    if (perm[g.identity()] == h.identity() && is_group_homomorphism(perm, g, h)) return perm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

bool is_commutative(const FiniteGroup& g) {
  for (Index a = 0; a < g.order(); ++a)
    for (Index b = a + 1; b < g.order(); ++b)
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

}  // namespace semiheap
