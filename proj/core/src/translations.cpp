#include "semiheap/translations.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace semiheap {

IndexMap endomap(const FiniteSemiheap& s, Translation t) {
  if (t.a >= s.size() || t.b >= s.size()) throw ValidationError("endomap: parameter out of range");
  IndexMap out(s.size());
  for (Index x = 0; x < s.size(); ++x) {
    switch (t.kind) {
      case TranslationKind::right: out[x] = s(x, t.a, t.b); break;
      case TranslationKind::left: out[x] = s(t.a, t.b, x); break;
      case TranslationKind::centric: out[x] = s(t.a, x, t.b); break;
    }
  }
  return out;
}

IndexMap compose(std::span<const Index> f, std::span<const Index> g) {
  IndexMap out(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) out[x] = f[g[x]];
  return out;
}

IndexMap identity_map(std::size_t n) {
  IndexMap out(n);
  std::iota(out.begin(), out.end(), Index{0});
  return out;
}

std::string describe(const TranslationLawFailure& f) {
  std::ostringstream os;
  os << "law=" << f.law << " params=" << join_indices(f.params) << " lhs=" << join_indices(f.lhs)
     << " rhs=" << join_indices(f.rhs);
  return os.str();
}

namespace {

using LawResult = CheckResult<TranslationLawFailure>;

// All n^2 endomaps of one kind, indexed a * n + b.
std::vector<IndexMap> all_translations(const FiniteSemiheap& s, TranslationKind kind) {
  const auto n = static_cast<Index>(s.size());
  std::vector<IndexMap> out;
  out.reserve(static_cast<std::size_t>(n) * n);
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) out.push_back(endomap(s, {kind, a, b}));
  return out;
}

}  // namespace

CheckResult<TranslationLawFailure> right_compose_law(const FiniteSemiheap& s) {
  const auto n = static_cast<Index>(s.size());
  const auto R = all_translations(s, TranslationKind::right);
  const auto at = [&](Index a, Index b) -> const IndexMap& { return R[a * n + b]; };
  for (Index x1 = 0; x1 < n; ++x1)
    for (Index x2 = 0; x2 < n; ++x2)
      for (Index x3 = 0; x3 < n; ++x3)
        for (Index x4 = 0; x4 < n; ++x4) {
          auto lhs = compose(at(x3, x4), at(x1, x2));
          const auto& rhs = at(x1, s(x2, x3, x4));
          if (lhs != rhs)
            return LawResult::fail({"right-composition", {x1, x2, x3, x4}, std::move(lhs), rhs});
        }
  for (Index x1 = 0; x1 < n; ++x1)
    for (Index x2 = 0; x2 < n; ++x2)
      for (Index x3 = 0; x3 < n; ++x3)
        for (Index x4 = 0; x4 < n; ++x4)
          for (Index x5 = 0; x5 < n; ++x5)
            for (Index x6 = 0; x6 < n; ++x6) {
              const auto& lhs = at(x1, s(x2, x3, s(x4, x5, x6)));
              const auto& rhs = at(x1, s(s(x2, x3, x4), x5, x6));
              if (lhs != rhs)
                return LawResult::fail(
                    {"right-associativity", {x1, x2, x3, x4, x5, x6}, lhs, rhs});
            }
  return LawResult::pass();
}

CheckResult<TranslationLawFailure> left_compose_law(const FiniteSemiheap& s) {
  const auto n = static_cast<Index>(s.size());
  const auto L = all_translations(s, TranslationKind::left);
  const auto at = [&](Index a, Index b) -> const IndexMap& { return L[a * n + b]; };
  for (Index x1 = 0; x1 < n; ++x1)
    for (Index x2 = 0; x2 < n; ++x2)
      for (Index x3 = 0; x3 < n; ++x3)
        for (Index x4 = 0; x4 < n; ++x4) {
          auto lhs = compose(at(x1, x2), at(x3, x4));
          const auto& rhs = at(s(x1, x2, x3), x4);
          if (lhs != rhs)
            return LawResult::fail({"left-composition", {x1, x2, x3, x4}, std::move(lhs), rhs});
        }
  // (L12 o L34) o L56 = L_{[[x1,x2,x3],x4,x5],x6}; L12 o (L34 o L56) = L_{[x1,x2,[x3,x4,x5]],x6}.
  for (Index x1 = 0; x1 < n; ++x1)
    for (Index x2 = 0; x2 < n; ++x2)
      for (Index x3 = 0; x3 < n; ++x3)
        for (Index x4 = 0; x4 < n; ++x4)
          for (Index x5 = 0; x5 < n; ++x5)
            for (Index x6 = 0; x6 < n; ++x6) {
              const auto& lhs = at(s(s(x1, x2, x3), x4, x5), x6);
              const auto& rhs = at(s(x1, x2, s(x3, x4, x5)), x6);
              if (lhs != rhs)
                return LawResult::fail(
                    {"left-associativity", {x1, x2, x3, x4, x5, x6}, lhs, rhs});
            }
  return LawResult::pass();
}

CheckResult<TranslationLawFailure> lr_commute(const FiniteSemiheap& s) {
  const auto n = static_cast<Index>(s.size());
  const auto L = all_translations(s, TranslationKind::left);
  const auto R = all_translations(s, TranslationKind::right);
  for (Index x1 = 0; x1 < n; ++x1)
    for (Index x2 = 0; x2 < n; ++x2)
      for (Index x3 = 0; x3 < n; ++x3)
        for (Index x4 = 0; x4 < n; ++x4) {
          auto lhs = compose(L[x1 * n + x2], R[x3 * n + x4]);
          auto rhs = compose(R[x3 * n + x4], L[x1 * n + x2]);
          if (lhs != rhs)
            return LawResult::fail({"lr-commute", {x1, x2, x3, x4}, std::move(lhs), std::move(rhs)});
        }
  return LawResult::pass();
}

std::optional<CentricWitness> centric_closure_failure(const FiniteSemiheap& s) {
  const auto n = static_cast<Index>(s.size());
  const auto C = all_translations(s, TranslationKind::centric);
  const std::set<IndexMap> centrics(C.begin(), C.end());
  for (Index x1 = 0; x1 < n; ++x1)
    for (Index x2 = 0; x2 < n; ++x2)
      for (Index x3 = 0; x3 < n; ++x3)
        for (Index x4 = 0; x4 < n; ++x4) {
          auto composite = compose(C[x1 * n + x2], C[x3 * n + x4]);
          if (!centrics.contains(composite))
            return CentricWitness{0, {x1, x2, x3, x4}, std::move(composite)};
        }
  return std::nullopt;
}

std::optional<CentricWitness> centric_nonclosure_witness(
    std::span<const FiniteSemiheap> search_space, std::uint64_t max_checks) {
  std::uint64_t total = 0;
  for (const auto& s : search_space) {
    const std::uint64_t n = s.size();
    total += n * n * n * n;
    if (total > max_checks)
      throw BudgetExceeded("centric_nonclosure_witness: search space needs more than " +
                           std::to_string(max_checks) + " compositions");
  }
  for (std::size_t i = 0; i < search_space.size(); ++i) {
    if (auto w = centric_closure_failure(search_space[i])) {
      w->semiheap_index = i;
      return w;
    }
  }
  return std::nullopt;
}

bool is_biunital(const PointedSemiheap& p) { return is_biunitary(p.semiheap(), p.basepoint()); }

namespace {

CheckResult<TranslationLawFailure> monoid_check(const PointedSemiheap& p, TranslationKind kind) {
  const auto& s = p.semiheap();
  const auto n = static_cast<Index>(s.size());
  const Index x0 = p.basepoint();
  const bool left = kind == TranslationKind::left;
  const std::string name = left ? "left" : "right";
  const auto unit = endomap(s, {kind, x0, x0});
  const auto id = identity_map(n);
  if (unit != id) return LawResult::fail({name + "-unit-is-identity", {x0, x0}, unit, id});
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) {
      const auto t = endomap(s, {kind, a, b});
      if (auto lhs = compose(unit, t); lhs != t)
        return LawResult::fail({name + "-unit-left", {a, b}, std::move(lhs), t});
      if (auto rhs = compose(t, unit); rhs != t)
        return LawResult::fail({name + "-unit-right", {a, b}, std::move(rhs), t});
      // The composition law must also produce the unit's own parameters.
      if (left && endomap(s, {kind, s(x0, x0, a), b}) != t)
        return LawResult::fail({"left-unit-parameters", {a, b},
                                endomap(s, {kind, s(x0, x0, a), b}), t});
      if (!left && endomap(s, {kind, a, s(b, x0, x0)}) != t)
        return LawResult::fail({"right-unit-parameters", {a, b},
                                endomap(s, {kind, a, s(b, x0, x0)}), t});
    }
  return LawResult::pass();
}

}  // namespace

CheckResult<TranslationLawFailure> left_monoid_check(const PointedSemiheap& p) {
  return monoid_check(p, TranslationKind::left);
}

CheckResult<TranslationLawFailure> right_monoid_check(const PointedSemiheap& p) {
  return monoid_check(p, TranslationKind::right);
}

CheckResult<Index> reachability_check(const PointedSemiheap& p) {
  const Index x0 = p.basepoint();
  for (Index x = 0; x < p.size(); ++x)
    if (endomap(p.semiheap(), {TranslationKind::left, x, x0})[x0] != x)
      return CheckResult<Index>::fail(x);
  return CheckResult<Index>::pass();
}

InvariantFunctionSpace left_invariant_functions(const FiniteSemiheap& s) {
  const auto n = static_cast<Index>(s.size());
  std::vector<Index> parent(n);
  std::iota(parent.begin(), parent.end(), Index{0});
  const auto find = [&](Index x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      for (Index x = 0; x < n; ++x) {
        Index r1 = find(x), r2 = find(s(a, b, x));
        if (r1 != r2) parent[std::max(r1, r2)] = std::min(r1, r2);
      }
  std::map<Index, std::vector<Index>> by_root;
  for (Index x = 0; x < n; ++x) by_root[find(x)].push_back(x);
  InvariantFunctionSpace out;
  for (auto& [root, members] : by_root) out.classes.push_back(std::move(members));
  out.dimension = out.classes.size();
  return out;
}

}  // namespace semiheap
