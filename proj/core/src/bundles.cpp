#include "semiheap/bundles.hpp"

#include <algorithm>
#include <sstream>

#include "semiheap/functors.hpp"

namespace semiheap {

namespace {

void validate_chart_shape(const BundleChart& c, std::size_t base, std::size_t total,
                          std::size_t fiber_size, std::size_t idx) {
  const std::string where = "chart " + std::to_string(idx);
  std::vector<bool> in_cover(base, false);
  for (Index m : c.cover) {
    if (m >= base) throw ValidationError(where + ": cover point " + std::to_string(m) + " out of range");
    if (in_cover[m]) throw ValidationError(where + ": cover point " + std::to_string(m) + " repeated");
    in_cover[m] = true;
  }
  std::vector<bool> seen(total, false);
  for (auto [p, q] : c.assignment) {
    if (p >= total) throw ValidationError(where + ": total-space point " + std::to_string(p) + " out of range");
    if (q >= base * fiber_size)
      throw ValidationError(where + ": product point " + std::to_string(q) + " out of range");
    if (seen[p]) throw ValidationError(where + ": point " + std::to_string(p) + " assigned twice");
    seen[p] = true;
  }
}

// lookup[p] = q, or npos when p is outside the chart's domain.
constexpr Index npos = static_cast<Index>(-1);

std::vector<Index> chart_lookup(const BundleChart& c, std::size_t total) {
  std::vector<Index> t(total, npos);
  for (auto [p, q] : c.assignment) t[p] = q;
  return t;
}

using BundleResult = CheckResult<BundleFailure>;

// Shared by semiheap and principal bundles: surjectivity, cover, chart
// bijectivity and the triangle. Fiber size is n.
std::optional<BundleFailure> check_charts(std::size_t base, const IndexMap& projection,
                                          std::size_t n, const std::vector<BundleChart>& charts) {
  const std::size_t total = projection.size();
  std::vector<bool> covered(base, false);
  for (const auto& c : charts)
    for (Index m : c.cover) covered[m] = true;
  for (Index m = 0; m < base; ++m)
    if (!covered[m]) return BundleFailure{BundleAxiom::cover_complete, std::nullopt, {m}};

  for (std::size_t i = 0; i < charts.size(); ++i) {
    const auto& c = charts[i];
    std::vector<bool> in_cover(base, false);
    for (Index m : c.cover) in_cover[m] = true;
    const auto t = chart_lookup(c, total);
    for (Index p = 0; p < total; ++p) {
      const bool should = in_cover[projection[p]];
      const bool has = t[p] != npos;
      if (should != has) return BundleFailure{BundleAxiom::chart_bijective, i, {p}};
    }
    std::vector<bool> hit(base * n, false);
    for (auto [p, q] : c.assignment) {
      if (hit[q]) return BundleFailure{BundleAxiom::chart_bijective, i, {q}};
      hit[q] = true;
    }
    for (Index m : c.cover)
      for (Index s = 0; s < n; ++s)
        if (!hit[m * n + s])
          return BundleFailure{BundleAxiom::chart_bijective, i, {static_cast<Index>(m * n + s)}};
    for (auto [p, q] : c.assignment)
      if (q / n != projection[p]) return BundleFailure{BundleAxiom::chart_triangle, i, {p}};
  }
  return std::nullopt;
}

}  // namespace

DiscreteSemiheapBundle::DiscreteSemiheapBundle(std::size_t base_size, IndexMap projection,
                                               FiniteSemiheap structure, ActionTable action,
                                               std::vector<BundleChart> charts)
    : base_size_(base_size),
      projection_(std::move(projection)),
      structure_(std::move(structure)),
      action_(std::move(action)),
      charts_(std::move(charts)) {
  if (structure_.size() == 0)
    throw ValidationError("bundle: the structure semiheap must be non-empty");
  validate_map(projection_, projection_.size(), base_size_, "bundle projection");
  if (action_.space_size() != projection_.size() || action_.semiheap_size() != structure_.size())
    throw ValidationError("bundle: action table shape does not match total space and semiheap");
  for (std::size_t i = 0; i < charts_.size(); ++i)
    validate_chart_shape(charts_[i], base_size_, projection_.size(), structure_.size(), i);
}

DiscreteSemiheapBundle DiscreteSemiheapBundle::with_action_entry(Index p, Index x, Index y,
                                                                 Index value) const {
  auto copy = *this;
  copy.action_.set(p, x, y, value);
  return copy;
}

const char* to_string(BundleAxiom a) noexcept {
  switch (a) {
    case BundleAxiom::projection_surjective: return "projection-surjective";
    case BundleAxiom::fiber_preserving: return "fiber-preserving";
    case BundleAxiom::cover_complete: return "cover-complete";
    case BundleAxiom::chart_bijective: return "chart-bijective";
    case BundleAxiom::chart_triangle: return "chart-triangle";
    case BundleAxiom::chart_equivariant: return "chart-equivariant";
    case BundleAxiom::action_compatible: return "action-compatible";
    case BundleAxiom::action_free: return "action-free";
    case BundleAxiom::fiber_transitive: return "fiber-transitive";
  }
  return "unknown";
}

std::string describe(const BundleFailure& f) {
  std::ostringstream os;
  os << "axiom=" << to_string(f.axiom);
  if (f.chart) os << " chart=" << *f.chart;
  os << " witness=" << join_indices(f.witness);
  return os.str();
}

CheckResult<BundleFailure> verify_bundle(const DiscreteSemiheapBundle& b) {
  const auto total = static_cast<Index>(b.total_size());
  const auto n = static_cast<Index>(b.structure().size());
  const auto& pi = b.projection();
  const auto& act = b.action();
  const auto& s = b.structure();

  std::vector<bool> hit(b.base_size(), false);
  for (Index p = 0; p < total; ++p) hit[pi[p]] = true;
  for (Index m = 0; m < b.base_size(); ++m)
    if (!hit[m]) return BundleResult::fail({BundleAxiom::projection_surjective, std::nullopt, {m}});

  for (Index p = 0; p < total; ++p)
    for (Index x = 0; x < n; ++x)
      for (Index y = 0; y < n; ++y)
        if (pi[act(p, x, y)] != pi[p])
          return BundleResult::fail({BundleAxiom::fiber_preserving, std::nullopt, {p, x, y}});

  if (auto f = check_charts(b.base_size(), pi, n, b.charts())) return BundleResult::fail(*f);

  for (std::size_t i = 0; i < b.charts().size(); ++i) {
    const auto t = chart_lookup(b.charts()[i], total);
    for (Index p = 0; p < total; ++p) {
      if (t[p] == npos) continue;
      const Index m = t[p] / n, sp = t[p] % n;
      for (Index x = 0; x < n; ++x)
        for (Index y = 0; y < n; ++y) {
          const Index moved = t[act(p, x, y)];
          if (moved != m * n + s(sp, x, y))
            return BundleResult::fail({BundleAxiom::chart_equivariant, i, {p, x, y}});
        }
    }
  }

  if (auto r = verify_action(act, s); !r) {
    const auto& w = r.witness();
    return BundleResult::fail({BundleAxiom::action_compatible, std::nullopt,
                               {w.point, w.params[0], w.params[1], w.params[2], w.params[3]}});
  }
  return BundleResult::pass();
}

DiscreteSemiheapBundle trivial_bundle(std::size_t base_size, const FiniteSemiheap& s) {
  const std::size_t n = s.size(), total = base_size * n;
  IndexMap pi(total);
  std::vector<Index> act;
  act.reserve(total * n * n);
  BundleChart chart;
  for (Index m = 0; m < base_size; ++m) chart.cover.push_back(m);
  for (Index p = 0; p < total; ++p) {
    pi[p] = static_cast<Index>(p / n);
    chart.assignment.emplace_back(p, p);
    for (Index x = 0; x < n; ++x)
      for (Index y = 0; y < n; ++y) act.push_back(static_cast<Index>(pi[p] * n + s(p % n, x, y)));
  }
  return DiscreteSemiheapBundle(base_size, std::move(pi), s, ActionTable(total, n, std::move(act)),
                                {std::move(chart)});
}

FiberStructure fiber_semiheap(const DiscreteSemiheapBundle& b, Index m, std::size_t chart) {
  if (chart >= b.charts().size()) throw ValidationError("fiber_semiheap: no such chart");
  const auto& c = b.charts()[chart];
  if (std::find(c.cover.begin(), c.cover.end(), m) == c.cover.end())
    throw ValidationError("fiber_semiheap: base point " + std::to_string(m) + " is not in chart " +
                          std::to_string(chart));
  const auto n = static_cast<Index>(b.structure().size());
  FiberStructure out;
  for (Index p = 0; p < b.total_size(); ++p)
    if (b.projection()[p] == m) out.fiber.push_back(p);
  if (out.fiber.size() != n)
    throw ValidationError("fiber_semiheap: fiber size differs from the structure semiheap");

  // Fiber coordinate of each fiber point under a chart, as a map fiber -> S.
  const auto coordinates = [&](const BundleChart& ch) {
    const auto t = chart_lookup(ch, b.total_size());
    IndexMap phi(out.fiber.size());
    for (std::size_t k = 0; k < out.fiber.size(); ++k) {
      const Index q = t[out.fiber[k]];
      if (q == npos || q / n != m) throw ValidationError("fiber_semiheap: chart is not a bijection on the fiber");
      phi[k] = q % n;
    }
    validate_bijection(phi, n, "fiber_semiheap");
    return phi;
  };

  const IndexMap phi = coordinates(c);
  out.semiheap = induce_via_bijection(phi, b.structure());
  for (std::size_t j = 0; j < b.charts().size(); ++j) {
    if (j == chart) continue;
    const auto& cj = b.charts()[j];
    if (std::find(cj.cover.begin(), cj.cover.end(), m) == cj.cover.end()) continue;
    const IndexMap psi = coordinates(cj);
    const auto induced_j = induce_via_bijection(psi, b.structure());
    IndexMap iso = induced_isomorphism(phi, psi);
    const bool hom = static_cast<bool>(is_homomorphism(iso, out.semiheap, induced_j));
    out.cross_charts.push_back({j, std::move(iso), hom});
  }
  return out;
}

CheckResult<BundleFailure> verify_principal(const PrincipalBundle& pb) {
  const auto& a = pb.action;
  const auto& g = a.group();
  const auto total = static_cast<Index>(pb.projection.size());
  const auto n = static_cast<Index>(g.order());
  const auto& pi = pb.projection;
  if (a.space_size() != total) throw ValidationError("principal bundle: action is on the wrong space");
  validate_map(pi, total, pb.base_size, "principal bundle projection");
  for (std::size_t i = 0; i < pb.charts.size(); ++i)
    validate_chart_shape(pb.charts[i], pb.base_size, total, n, i);

  std::vector<bool> hit(pb.base_size, false);
  for (Index p = 0; p < total; ++p) hit[pi[p]] = true;
  for (Index m = 0; m < pb.base_size; ++m)
    if (!hit[m]) return BundleResult::fail({BundleAxiom::projection_surjective, std::nullopt, {m}});

  for (Index p = 0; p < total; ++p)
    for (Index h = 0; h < n; ++h) {
      if (pi[a(p, h)] != pi[p])
        return BundleResult::fail({BundleAxiom::fiber_preserving, std::nullopt, {p, h}});
      if (a(p, h) == p && h != g.identity())
        return BundleResult::fail({BundleAxiom::action_free, std::nullopt, {p, h}});
    }
  for (Index p = 0; p < total; ++p)
    for (Index q = 0; q < total; ++q) {
      if (pi[p] != pi[q]) continue;
      bool reached = false;
      for (Index h = 0; h < n && !reached; ++h) reached = a(p, h) == q;
      if (!reached) return BundleResult::fail({BundleAxiom::fiber_transitive, std::nullopt, {p, q}});
    }

  if (auto f = check_charts(pb.base_size, pi, n, pb.charts)) return BundleResult::fail(*f);

  for (std::size_t i = 0; i < pb.charts.size(); ++i) {
    const auto t = chart_lookup(pb.charts[i], total);
    for (Index p = 0; p < total; ++p) {
      if (t[p] == npos) continue;
      const Index m = t[p] / n, sp = t[p] % n;
      for (Index h = 0; h < n; ++h)
        if (t[a(p, h)] != m * n + g.mul(sp, h))
          return BundleResult::fail({BundleAxiom::chart_equivariant, i, {p, h}});
    }
  }
  return BundleResult::pass();
}

DiscreteSemiheapBundle heapify_principal(const PrincipalBundle& pb) {
  if (auto r = verify_principal(pb); !r)
    throw ValidationError("heapify_principal: not a principal bundle: " + describe(r.witness()));
  const auto& g = pb.action.group();
  const auto total = pb.projection.size();
  const auto n = g.order();
  std::vector<Index> act;
  act.reserve(total * n * n);
  for (Index p = 0; p < total; ++p)
    for (Index g1 = 0; g1 < n; ++g1)
      for (Index g2 = 0; g2 < n; ++g2) act.push_back(pb.action(p, g.mul(g.inverse(g1), g2)));
  DiscreteSemiheapBundle out(pb.base_size, pb.projection, heapify(g).semiheap(),
                             ActionTable(total, n, std::move(act)), pb.charts);
  if (auto r = verify_bundle(out); !r)
    throw std::logic_error("heapify_principal: heapified bundle fails " + describe(r.witness()));
  return out;
}

PrincipalBundle trivial_principal_bundle(std::size_t base_size, const FiniteGroup& g) {
  const std::size_t n = g.order(), total = base_size * n;
  IndexMap pi(total);
  std::vector<Index> act(total * n);
  BundleChart chart;
  for (Index m = 0; m < base_size; ++m) chart.cover.push_back(m);
  for (Index p = 0; p < total; ++p) {
    pi[p] = static_cast<Index>(p / n);
    chart.assignment.emplace_back(p, p);
    for (Index h = 0; h < n; ++h) act[p * n + h] = static_cast<Index>(pi[p] * n + g.mul(p % n, h));
  }
  return {base_size, std::move(pi), RightGroupAction(g, total, std::move(act)), {std::move(chart)}};
}

PrincipalBundle twisted_principal_bundle(std::size_t base_size, const FiniteGroup& g, Index twist) {
  if (base_size == 0) throw ValidationError("twisted_principal_bundle: empty base");
  if (twist >= g.order()) throw ValidationError("twisted_principal_bundle: twist out of range");
  auto pb = trivial_principal_bundle(base_size, g);
  const auto n = static_cast<Index>(g.order());
  BundleChart second = pb.charts.front();
  const auto last = static_cast<Index>(base_size - 1);
  for (auto& [p, q] : second.assignment)
    if (q / n == last) q = last * n + g.mul(twist, q % n);
  pb.charts.push_back(std::move(second));
  return pb;
}

std::string describe(const BundleHomFailure& f) {
  const char* name = "equivariant";
  if (f.axiom == BundleHomAxiom::structure_hom) name = "structure-hom";
  if (f.axiom == BundleHomAxiom::covers_base_map) name = "covers-base-map";
  return std::string("axiom=") + name + " witness=" + join_indices(f.witness);
}

CheckResult<BundleHomFailure> verify_bundle_hom(const BundleHom& h, const DiscreteSemiheapBundle& b,
                                                const DiscreteSemiheapBundle& bp) {
  using R = CheckResult<BundleHomFailure>;
  validate_map(h.total, b.total_size(), bp.total_size(), "bundle hom (total)");
  validate_map(h.base, b.base_size(), bp.base_size(), "bundle hom (base)");
  if (auto r = is_homomorphism(h.structure, b.structure(), bp.structure()); !r)
    return R::fail({BundleHomAxiom::structure_hom,
                    {r.witness().args[0], r.witness().args[1], r.witness().args[2]}});
  for (Index p = 0; p < b.total_size(); ++p)
    if (bp.projection()[h.total[p]] != h.base[b.projection()[p]])
      return R::fail({BundleHomAxiom::covers_base_map, {p}});
  const auto n = static_cast<Index>(b.structure().size());
  for (Index p = 0; p < b.total_size(); ++p)
    for (Index x = 0; x < n; ++x)
      for (Index y = 0; y < n; ++y)
        if (h.total[b.action()(p, x, y)] != bp.action()(h.total[p], h.structure[x], h.structure[y]))
          return R::fail({BundleHomAxiom::equivariant, {p, x, y}});
  return R::pass();
}

bool is_principal_hom(const BundleHom& h, const PrincipalBundle& p, const PrincipalBundle& pp) {
  const auto& g = p.action.group();
  validate_map(h.total, p.projection.size(), pp.projection.size(), "principal hom (total)");
  validate_map(h.base, p.base_size, pp.base_size, "principal hom (base)");
  if (!is_group_homomorphism(h.structure, g, pp.action.group())) return false;
  for (Index q = 0; q < p.projection.size(); ++q) {
    if (pp.projection[h.total[q]] != h.base[p.projection[q]]) return false;
    for (Index a = 0; a < g.order(); ++a)
      if (h.total[p.action(q, a)] != pp.action(h.total[q], h.structure[a])) return false;
  }
  return true;
}

BundleHom heapify_principal_hom(const BundleHom& h) { return h; }

BundleHom compose(const BundleHom& second, const BundleHom& first) {
  const auto after = [](const IndexMap& f, const IndexMap& g) {
    IndexMap out(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) out[i] = f[g[i]];
    return out;
  };
  return {after(second.total, first.total), after(second.base, first.base),
          after(second.structure, first.structure)};
}

}  // namespace semiheap
