#include "semiheap/semiheap.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

namespace semiheap {

namespace {

// Scans x1 in [lo, hi); returns the first failure in lexicographic order.
std::optional<ParaAssociativityFailure> scan_para_associative(const TernaryTable& t, Index lo,
                                                              Index hi) {
  const auto n = static_cast<Index>(t.size());
  for (Index x1 = lo; x1 < hi; ++x1)
    for (Index x2 = 0; x2 < n; ++x2)
      for (Index x3 = 0; x3 < n; ++x3) {
        const Index a = t(x1, x2, x3);
        for (Index x4 = 0; x4 < n; ++x4) {
          const Index b = t(x4, x3, x2);
          for (Index x5 = 0; x5 < n; ++x5) {
            const Index left = t(a, x4, x5);
            const Index middle = t(x1, b, x5);
            const Index right = t(x1, x2, t(x3, x4, x5));
            if (left != middle || middle != right)
              return ParaAssociativityFailure{{x1, x2, x3, x4, x5}, left, middle, right};
          }
        }
      }
  return std::nullopt;
}

}  // namespace

CheckResult<ParaAssociativityFailure> verify_para_associative(const TernaryTable& table,
                                                              unsigned jobs) {
  const auto n = static_cast<Index>(table.size());
  jobs = std::clamp<unsigned>(jobs, 1u, std::max<unsigned>(n, 1u));
  if (jobs == 1) {
    if (auto f = scan_para_associative(table, 0, n)) return CheckResult<ParaAssociativityFailure>::fail(*f);
    return CheckResult<ParaAssociativityFailure>::pass();
  }

  // Contiguous x1 blocks; the lowest block with a failure holds the minimum.
  std::vector<std::optional<ParaAssociativityFailure>> found(jobs);
  {
    std::vector<std::jthread> workers;
    workers.reserve(jobs);
    for (unsigned w = 0; w < jobs; ++w) {
      const Index lo = static_cast<Index>(static_cast<std::size_t>(n) * w / jobs);
      const Index hi = static_cast<Index>(static_cast<std::size_t>(n) * (w + 1) / jobs);
      workers.emplace_back([&, w, lo, hi] { found[w] = scan_para_associative(table, lo, hi); });
    }
  }
  for (auto& f : found)
    if (f) return CheckResult<ParaAssociativityFailure>::fail(*f);
  return CheckResult<ParaAssociativityFailure>::pass();
}

NotASemiheap::NotASemiheap(const ParaAssociativityFailure& f)
    : std::domain_error("not para-associative: " + describe(f)), failure_(f) {}

FiniteSemiheap detail::assume_certified(TernaryTable table) {
  return FiniteSemiheap(std::move(table));
}

FiniteSemiheap FiniteSemiheap::certify(TernaryTable table, unsigned jobs) {
  auto r = verify_para_associative(table, jobs);
  if (!r) throw NotASemiheap(r.witness());
  return FiniteSemiheap(std::move(table));
}

PointedSemiheap::PointedSemiheap(FiniteSemiheap s, Index basepoint)
    : semiheap_(std::move(s)), basepoint_(basepoint) {
  if (semiheap_.size() == 0) throw ValidationError("PointedSemiheap: empty carrier has no point");
  if (basepoint_ >= semiheap_.size())
    throw ValidationError("PointedSemiheap: basepoint " + std::to_string(basepoint_) +
                          " out of range");
}

FiniteHeap::FiniteHeap(FiniteSemiheap s) : semiheap_(std::move(s)) {
  if (!is_heap(semiheap_)) throw ValidationError("FiniteHeap: some element is not biunitary");
}

bool is_biunitary(const FiniteSemiheap& s, Index x) {
  if (x >= s.size()) throw ValidationError("is_biunitary: index out of range");
  const auto n = static_cast<Index>(s.size());
  for (Index y = 0; y < n; ++y)
    if (s(y, x, x) != y || s(x, x, y) != y) return false;
  return true;
}

bool is_heap(const FiniteSemiheap& s) {
  const auto n = static_cast<Index>(s.size());
  for (Index x = 0; x < n; ++x)
    if (!is_biunitary(s, x)) return false;
  return true;
}

bool is_abelian(const FiniteSemiheap& s) { return s.table() == s.table().swapped_outer(); }

FiniteSemiheap opposite(const FiniteSemiheap& s) {
  return detail::assume_certified(s.table().swapped_outer());
}

FiniteSemiheap product(const FiniteSemiheap& s, const FiniteSemiheap& t) {
  const std::size_t n = s.size(), m = t.size();
  const auto split = [m](Index p) { return std::pair<Index, Index>{p / m, p % m}; };
  auto table = TernaryTable::from_function(n * m, [&](Index p, Index q, Index r) {
    auto [x1, y1] = split(p);
    auto [x2, y2] = split(q);
    auto [x3, y3] = split(r);
    return static_cast<Index>(s(x1, x2, x3) * m + t(y1, y2, y3));
  });
  return detail::assume_certified(std::move(table));
}

IndexMap product_projection_first(std::size_t n, std::size_t n_prime) {
  IndexMap out(n * n_prime);
  for (std::size_t p = 0; p < out.size(); ++p) out[p] = static_cast<Index>(p / n_prime);
  return out;
}

IndexMap product_projection_second(std::size_t n, std::size_t n_prime) {
  IndexMap out(n * n_prime);
  for (std::size_t p = 0; p < out.size(); ++p) out[p] = static_cast<Index>(p % n_prime);
  return out;
}

IndexMap product_pairing(std::span<const Index> to_first, std::span<const Index> to_second,
                         std::size_t n_prime) {
  if (to_first.size() != to_second.size())
    throw ValidationError("product_pairing: maps have different domains");
  IndexMap out(to_first.size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = static_cast<Index>(to_first[i] * n_prime + to_second[i]);
  return out;
}

CheckResult<HomomorphismFailure> is_homomorphism(std::span<const Index> map,
                                                 const FiniteSemiheap& source,
                                                 const FiniteSemiheap& target) {
  validate_map(map, source.size(), target.size(), "is_homomorphism");
  const auto n = static_cast<Index>(source.size());
  for (Index x1 = 0; x1 < n; ++x1)
    for (Index x2 = 0; x2 < n; ++x2)
      for (Index x3 = 0; x3 < n; ++x3) {
        const Index lhs = map[source(x1, x2, x3)];
        const Index rhs = target(map[x1], map[x2], map[x3]);
        if (lhs != rhs) return CheckResult<HomomorphismFailure>::fail({{x1, x2, x3}, lhs, rhs});
      }
  return CheckResult<HomomorphismFailure>::pass();
}

SemiheapHom::SemiheapHom(FiniteSemiheap source, FiniteSemiheap target, IndexMap map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
  auto r = is_homomorphism(map_, source_, target_);
  if (!r) throw ValidationError("SemiheapHom: not a homomorphism: " + describe(r.witness()));
}

HomomorphicImage homomorphic_image(const SemiheapHom& h) {
  std::vector<Index> elems(h.map().begin(), h.map().end());
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  if (!is_subsemiheap(elems, h.target()))
    throw std::logic_error("homomorphic_image: image of a verified hom is not closed");
  return {restrict_to(elems, h.target()), std::move(elems)};
}

CheckResult<SubsemiheapFailure> is_subsemiheap(std::span<const Index> subset,
                                               const FiniteSemiheap& s) {
  std::vector<bool> member(s.size(), false);
  for (Index x : subset) {
    if (x >= s.size()) throw ValidationError("is_subsemiheap: element out of range");
    member[x] = true;
  }
  std::vector<Index> sorted;
  for (Index x = 0; x < s.size(); ++x)
    if (member[x]) sorted.push_back(x);
  for (Index a : sorted)
    for (Index b : sorted)
      for (Index c : sorted)
        if (!member[s(a, b, c)])
          return CheckResult<SubsemiheapFailure>::fail({{a, b, c}, s(a, b, c)});
  return CheckResult<SubsemiheapFailure>::pass();
}

FiniteSemiheap restrict_to(std::span<const Index> subset, const FiniteSemiheap& s) {
  if (auto r = is_subsemiheap(subset, s); !r)
    throw ValidationError("restrict_to: subset is not closed");
  std::vector<Index> elems(subset.begin(), subset.end());
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  std::vector<Index> local(s.size(), 0);
  for (std::size_t k = 0; k < elems.size(); ++k) local[elems[k]] = static_cast<Index>(k);
  auto table = TernaryTable::from_function(elems.size(), [&](Index a, Index b, Index c) {
    return local[s(elems[a], elems[b], elems[c])];
  });
  return detail::assume_certified(std::move(table));
}

FiniteSemiheap induce_via_bijection(std::span<const Index> phi, const FiniteSemiheap& s) {
  validate_bijection(phi, s.size(), "induce_via_bijection");
  const IndexMap inv = invert_bijection(phi);
  auto table = TernaryTable::from_function(s.size(), [&](Index a, Index b, Index c) {
    return inv[s(phi[a], phi[b], phi[c])];
  });
  return detail::assume_certified(std::move(table));
}

PointedSemiheap induce_via_bijection(std::span<const Index> phi, const PointedSemiheap& s) {
  auto induced = induce_via_bijection(phi, s.semiheap());
  return PointedSemiheap(std::move(induced), invert_bijection(phi)[s.basepoint()]);
}

IndexMap induced_isomorphism(std::span<const Index> phi, std::span<const Index> psi) {
  validate_bijection(phi, phi.size(), "induced_isomorphism(phi)");
  validate_bijection(psi, phi.size(), "induced_isomorphism(psi)");
  const IndexMap psi_inv = invert_bijection(psi);
  IndexMap out(phi.size());
  for (std::size_t m = 0; m < phi.size(); ++m) out[m] = psi_inv[phi[m]];
  return out;
}

TernaryTable relabel(const TernaryTable& t, std::span<const Index> perm) {
  validate_bijection(perm, t.size(), "relabel");
  const IndexMap inv = invert_bijection(perm);
  return TernaryTable::from_function(t.size(), [&](Index i, Index j, Index k) {
    return perm[t(inv[i], inv[j], inv[k])];
  });
}

std::string describe(const ParaAssociativityFailure& f) {
  std::ostringstream os;
  os << "x=" << join_indices(f.args) << " left=" << f.left << " middle=" << f.middle
     << " right=" << f.right;
  return os.str();
}

std::string describe(const HomomorphismFailure& f) {
  std::ostringstream os;
  os << "x=" << join_indices(f.args) << " image_of_product=" << f.image_of_product
     << " product_of_images=" << f.product_of_images;
  return os.str();
}

}  // namespace semiheap
