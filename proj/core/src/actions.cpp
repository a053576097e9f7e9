#include "semiheap/actions.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "semiheap/corpus.hpp"
#include "semiheap/functors.hpp"

namespace semiheap {

ActionTable::ActionTable(std::size_t m, std::size_t n, std::vector<Index> entries)
    : m_(m), n_(n), entries_(std::move(entries)) {
  if (entries_.size() != m * n * n)
    throw ValidationError("ActionTable: expected " + std::to_string(m * n * n) + " entries, got " +
                          std::to_string(entries_.size()));
  for (std::size_t c = 0; c < entries_.size(); ++c)
    if (entries_[c] >= m)
      throw ValidationError("ActionTable: entry " + std::to_string(c) + " out of range");
}

void ActionTable::set(Index p, Index x, Index y, Index value) {
  if (p >= m_ || x >= n_ || y >= n_ || value >= m_)
    throw ValidationError("ActionTable::set: index out of range");
  entries_[(static_cast<std::size_t>(p) * n_ + x) * n_ + y] = value;
}

std::string describe(const ActionFailure& f) {
  std::ostringstream os;
  os << "p=" << f.point << " x=" << join_indices(f.params) << " composed=" << f.composed
     << " direct=" << f.direct;
  return os.str();
}

CheckResult<ActionFailure> verify_action(const ActionTable& t, const FiniteSemiheap& s) {
  if (t.semiheap_size() != s.size())
    throw ValidationError("verify_action: action table is for a semiheap of size " +
                          std::to_string(t.semiheap_size()));
  const auto m = static_cast<Index>(t.space_size());
  const auto n = static_cast<Index>(s.size());
  for (Index p = 0; p < m; ++p)
    for (Index x1 = 0; x1 < n; ++x1)
      for (Index x2 = 0; x2 < n; ++x2) {
        const Index q = t(p, x1, x2);
        for (Index x3 = 0; x3 < n; ++x3)
          for (Index x4 = 0; x4 < n; ++x4) {
            const Index composed = t(q, x3, x4);
            const Index direct = t(p, x1, s(x2, x3, x4));
            if (composed != direct)
              return CheckResult<ActionFailure>::fail({p, {x1, x2, x3, x4}, composed, direct});
          }
      }
  return CheckResult<ActionFailure>::pass();
}

NotAnAction::NotAnAction(const ActionFailure& f)
    : std::domain_error("action compatibility fails: " + describe(f)), failure_(f) {}

FiniteAction FiniteAction::certify(FiniteSemiheap s, ActionTable table) {
  if (auto r = verify_action(table, s); !r) throw NotAnAction(r.witness());
  return FiniteAction(std::move(s), std::move(table));
}

namespace {

template <class F>
ActionTable tabulate(std::size_t m, std::size_t n, F&& f) {
  std::vector<Index> e;
  e.reserve(m * n * n);
  for (Index p = 0; p < m; ++p)
    for (Index x = 0; x < n; ++x)
      for (Index y = 0; y < n; ++y) e.push_back(f(p, x, y));
  return ActionTable(m, n, std::move(e));
}

}  // namespace

FiniteAction trivial_action(const FiniteSemiheap& s, std::size_t m) {
  return FiniteAction::certify(s, tabulate(m, s.size(), [](Index p, Index, Index) { return p; }));
}

FiniteAction translation_action(const FiniteSemiheap& s) {
  return FiniteAction::certify(
      s, tabulate(s.size(), s.size(), [&](Index p, Index x, Index y) { return s(p, x, y); }));
}

FiniteAction action_from_hom(const SemiheapHom& psi) {
  const auto& target = psi.target();
  return FiniteAction::certify(
      psi.source(), tabulate(target.size(), psi.source().size(), [&](Index y, Index a, Index b) {
        return target(y, psi(a), psi(b));
      }));
}

RightGroupAction::RightGroupAction(FiniteGroup g, std::size_t m, std::vector<Index> table)
    : group_(std::move(g)), m_(m), table_(std::move(table)) {
  validate_map(table_, m_ * group_.order(), m_, "RightGroupAction");
  const auto k = static_cast<Index>(group_.order());
  for (Index p = 0; p < m_; ++p) {
    if ((*this)(p, group_.identity()) != p)
      throw ValidationError("RightGroupAction: identity does not fix point " + std::to_string(p));
    for (Index a = 0; a < k; ++a)
      for (Index b = 0; b < k; ++b)
        if ((*this)((*this)(p, a), b) != (*this)(p, group_.mul(a, b)))
          throw ValidationError("RightGroupAction: a(a(p,g),h) != a(p,gh) at p=" +
                                std::to_string(p) + " g=" + std::to_string(a) +
                                " h=" + std::to_string(b));
  }
}

FiniteAction action_from_group_action(const RightGroupAction& a) {
  const auto& g = a.group();
  return FiniteAction::certify(
      heapify(g).semiheap(),
      tabulate(a.space_size(), g.order(), [&](Index p, Index g1, Index g2) {
        return a(p, g.mul(g.inverse(g1), g2));
      }));
}

FiniteAction discretized_flow_action(std::size_t k, std::size_t m, std::vector<Index> flow) {
  // The flow axioms are exactly the right-action axioms for Z/k.
  RightGroupAction as_group_action(cyclic_group(k), m, std::move(flow));
  return action_from_group_action(as_group_action);
}

std::vector<Index> cycle_rotation_flow(std::size_t k) {
  std::vector<Index> flow(k * k);
  for (std::size_t p = 0; p < k; ++p)
    for (std::size_t t = 0; t < k; ++t) flow[p * k + t] = static_cast<Index>((p + t) % k);
  return flow;
}

CheckResult<EquivarianceFailure> is_equivariant(std::span<const Index> psi,
                                                const FiniteAction& on_m,
                                                const FiniteAction& on_n) {
  if (!(on_m.semiheap() == on_n.semiheap()))
    throw ValidationError("is_equivariant: actions are by different semiheaps");
  validate_map(psi, on_m.space_size(), on_n.space_size(), "is_equivariant");
  const auto n = static_cast<Index>(on_m.semiheap().size());
  for (Index p = 0; p < on_m.space_size(); ++p)
    for (Index x = 0; x < n; ++x)
      for (Index y = 0; y < n; ++y) {
        const Index lhs = psi[on_m(p, x, y)];
        const Index rhs = on_n(psi[p], x, y);
        if (lhs != rhs) return CheckResult<EquivarianceFailure>::fail({p, x, y, lhs, rhs});
      }
  return CheckResult<EquivarianceFailure>::pass();
}

bool is_group_equivariant(std::span<const Index> psi, const RightGroupAction& a,
                          const RightGroupAction& b) {
  validate_map(psi, a.space_size(), b.space_size(), "is_group_equivariant");
  for (Index p = 0; p < a.space_size(); ++p)
    for (Index g = 0; g < a.group().order(); ++g)
      if (psi[a(p, g)] != b(psi[p], g)) return false;
  return true;
}

namespace {

std::vector<bool> reachable(const FiniteAction& a, Index p) {
  std::vector<bool> hit(a.space_size(), false);
  const auto n = static_cast<Index>(a.semiheap().size());
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y) hit[a(p, x, y)] = true;
  return hit;
}

}  // namespace

OrbitReport orbit(const FiniteAction& a, Index p) {
  if (p >= a.space_size()) throw ValidationError("orbit: point out of range");
  OrbitReport report;
  const auto hit = reachable(a, p);
  for (Index q = 0; q < hit.size(); ++q)
    if (hit[q]) report.points.push_back(q);
  for (Index q : report.points) {
    if (!reachable(a, q)[p]) {
      report.asymmetric_witness = q;
      break;
    }
  }
  return report;
}

namespace {

std::vector<Index> regular_action_table(const FiniteGroup& g) {
  std::vector<Index> t(g.order() * g.order());
  for (Index p = 0; p < g.order(); ++p)
    for (Index h = 0; h < g.order(); ++h) t[p * g.order() + h] = g.mul(p, h);
  return t;
}

// S3 element k is the k-th permutation of {0,1,2} in lexicographic order;
// the right action is p . s = s^-1(p).
std::vector<Index> s3_on_points() {
  std::array<Index, 3> perm{0, 1, 2};
  std::vector<Index> t(3 * 6);
  Index k = 0;
  do {
    for (Index p = 0; p < 3; ++p) {
      const auto pos = std::find(perm.begin(), perm.end(), p) - perm.begin();
      t[p * 6 + k] = static_cast<Index>(pos);
    }
    ++k;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return t;
}

}  // namespace

const std::vector<NamedGroupAction>& bundled_group_actions() {
  static const std::vector<NamedGroupAction> actions = [] {
    std::vector<NamedGroupAction> out;
    const auto& z3 = bundled_group("Z3");
    const auto& z4 = bundled_group("Z4");
    const auto& v4 = bundled_group("V4");
    const auto& s3 = bundled_group("S3");
    const auto& d4 = bundled_group("D4");
    const auto& q8 = bundled_group("Q8");

    std::vector<Index> z4_on_z2(2 * 4), v4_on_z2(2 * 4), d4_trivial(3 * 8);
    for (Index p = 0; p < 2; ++p)
      for (Index g = 0; g < 4; ++g) {
        z4_on_z2[p * 4 + g] = (p + g) % 2;
        v4_on_z2[p * 4 + g] = p ^ (g >> 1);
      }
    for (Index p = 0; p < 3; ++p)
      for (Index g = 0; g < 8; ++g) d4_trivial[p * 8 + g] = p;

    out.push_back({"Z4-regular", RightGroupAction(z4, 4, regular_action_table(z4))});
    out.push_back({"Z4-on-Z2", RightGroupAction(z4, 2, z4_on_z2)});
    out.push_back({"S3-regular", RightGroupAction(s3, 6, regular_action_table(s3))});
    out.push_back({"S3-on-points", RightGroupAction(s3, 3, s3_on_points())});
    out.push_back({"D4-trivial", RightGroupAction(d4, 3, d4_trivial)});
    out.push_back({"Q8-regular", RightGroupAction(q8, 8, regular_action_table(q8))});
    out.push_back({"V4-on-Z2", RightGroupAction(v4, 2, v4_on_z2)});
    out.push_back({"V4-regular", RightGroupAction(v4, 4, regular_action_table(v4))});
    out.push_back({"Z3-regular", RightGroupAction(z3, 3, regular_action_table(z3))});
    return out;
  }();
  return actions;
}

const std::vector<EquivariantPair>& bundled_equivariant_maps() {
  static const std::vector<EquivariantPair> pairs = [] {
    const auto& acts = bundled_group_actions();
    // From a regular action, g -> b(q, g) is equivariant for any point q of b.
    const auto orbit_map = [&](std::size_t to, Index q) {
      const auto& b = acts[to].action;
      IndexMap map(b.group().order());
      for (Index g = 0; g < map.size(); ++g) map[g] = b(q, g);
      return map;
    };
    const auto& q8 = bundled_group("Q8");
    IndexMap left_by_i(8);
    for (Index p = 0; p < 8; ++p) left_by_i[p] = q8.mul(2, p);

    std::vector<EquivariantPair> out;
    out.push_back({0, 1, orbit_map(1, 0)});
    out.push_back({0, 1, orbit_map(1, 1)});
    out.push_back({2, 3, orbit_map(3, 0)});
    out.push_back({2, 3, orbit_map(3, 2)});
    out.push_back({4, 4, IndexMap{1, 1, 0}});
    out.push_back({5, 5, left_by_i});
    out.push_back({7, 6, orbit_map(6, 1)});
    out.push_back({0, 0, IndexMap{2, 3, 0, 1}});
    return out;
  }();
  return pairs;
}

}  // namespace semiheap
