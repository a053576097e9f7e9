#include <gtest/gtest.h>

#include <set>

#include "semiheap/enumeration.hpp"
#include "semiheap/translations.hpp"
#include "support.hpp"

namespace semiheap {
namespace {

std::vector<FiniteSemiheap> law_suite() {
  auto out = testing::semiheap_zoo(17);
  for (std::size_t n : {1u, 2u})
    for (const auto& t : enumerate_semiheaps(n).tables) out.push_back(FiniteSemiheap::certify(t));
  return out;
}

TEST(Translations, EndomapsMatchDefinition) {
  const auto s = heapify(bundled_group("S3")).semiheap();
  for (Index a = 0; a < 6; ++a)
    for (Index b = 0; b < 6; ++b) {
      const auto l = endomap(s, {TranslationKind::left, a, b});
      const auto r = endomap(s, {TranslationKind::right, a, b});
      const auto c = endomap(s, {TranslationKind::centric, a, b});
      for (Index x = 0; x < 6; ++x) {
        EXPECT_EQ(l[x], s(a, b, x));
        EXPECT_EQ(r[x], s(x, a, b));
        EXPECT_EQ(c[x], s(a, x, b));
      }
    }
}

TEST(Translations, ComposeAndIdentity) {
  const IndexMap f{1, 2, 0};
  const IndexMap g{0, 0, 2};
  EXPECT_EQ(compose(f, g), (IndexMap{1, 1, 0}));
  EXPECT_EQ(compose(f, identity_map(3)), f);
}

TEST(Translations, LawsHoldOnEverySuiteMember) {
  for (const auto& s : law_suite()) {
    EXPECT_TRUE(right_compose_law(s));
    EXPECT_TRUE(left_compose_law(s));
    EXPECT_TRUE(lr_commute(s));
  }
}

TEST(Translations, RightLawMatchesDirectComposition) {
  // Independent restatement of the right law on Q8.
  const auto s = heapify(bundled_group("Q8")).semiheap();
  const Index n = 8;
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      for (Index c = 0; c < n; ++c)
        for (Index d = 0; d < n; ++d)
          for (Index x = 0; x < n; ++x) ASSERT_EQ(s(s(x, a, b), c, d), s(x, a, s(b, c, d)));
}

TEST(Translations, LawsFailOnNonSemiheap) {
  // The middle projection is not para-associative; right law must notice.
  const auto t = TernaryTable::from_function(2, [](Index, Index y, Index) { return y; });
  const auto s = detail::assume_certified(t);
  const auto r = right_compose_law(s);
  ASSERT_FALSE(r);
  EXPECT_FALSE(describe(r.witness()).empty());
}

TEST(Centric, AbelianOddOrderIsNotClosed) {
  const auto z3 = heapify(bundled_group("Z3")).semiheap();
  const auto w = centric_closure_failure(z3);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->params, (std::array<Index, 4>{0, 0, 0, 0}));
  // C_{00} o C_{00} is the identity, and x -> c - x is never the identity in Z/3.
  EXPECT_EQ(w->composite, identity_map(3));
  std::set<IndexMap> centrics;
  for (Index a = 0; a < 3; ++a)
    for (Index b = 0; b < 3; ++b) centrics.insert(endomap(z3, {TranslationKind::centric, a, b}));
  EXPECT_FALSE(centrics.contains(w->composite));
}

TEST(Centric, ElementaryAbelianTwoGroupIsClosed) {
  EXPECT_FALSE(centric_closure_failure(heapify(bundled_group("Z2")).semiheap()));
  EXPECT_FALSE(centric_closure_failure(heapify(bundled_group("V4")).semiheap()));
}

TEST(Centric, SearchReportsIndex) {
  const std::vector<FiniteSemiheap> space{heapify(bundled_group("Z2")).semiheap(),
                                          heapify(bundled_group("Z3")).semiheap()};
  const auto w = centric_nonclosure_witness(space);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->semiheap_index, 1u);
  EXPECT_THROW(centric_nonclosure_witness(space, 10), BudgetExceeded);
}

TEST(Biunital, HeapifiedGroupsSatisfyMonoidAndReachability) {
  for (const auto& named : bundled_groups()) {
    SCOPED_TRACE(std::string(named.name));
    const auto h = heapify(named.group);
    EXPECT_TRUE(is_biunital(h));
    EXPECT_EQ(endomap(h.semiheap(), {TranslationKind::left, h.basepoint(), h.basepoint()}),
              identity_map(h.size()));
    EXPECT_TRUE(left_monoid_check(h));
    EXPECT_TRUE(right_monoid_check(h));
    EXPECT_TRUE(reachability_check(h));
    const auto inv = left_invariant_functions(h.semiheap());
    EXPECT_EQ(inv.dimension, 1u);
    EXPECT_TRUE(inv.constants_only());
  }
}

TEST(Biunital, NonBiunitalBasepoint) {
  const auto konst = FiniteSemiheap::certify(
      TernaryTable::from_function(2, [](Index, Index, Index) { return Index{0}; }));
  const PointedSemiheap p(konst, 0);
  EXPECT_FALSE(is_biunital(p));
  EXPECT_FALSE(left_monoid_check(p));
  const auto r = reachability_check(p);
  ASSERT_FALSE(r);
  EXPECT_EQ(r.witness(), 1u);
}

TEST(InvariantFunctions, DimensionMatchesClassCount) {
  const auto z_proj = FiniteSemiheap::certify(
      TernaryTable::from_function(3, [](Index, Index, Index z) { return z; }));
  // f([a,b,x]) = f(x) is vacuous, so every function is invariant.
  EXPECT_EQ(left_invariant_functions(z_proj).dimension, 3u);
  const auto x_proj = FiniteSemiheap::certify(
      TernaryTable::from_function(3, [](Index x, Index, Index) { return x; }));
  EXPECT_EQ(left_invariant_functions(x_proj).dimension, 1u);
  const auto prod = product(z_proj, heapify(bundled_group("Z2")).semiheap());
  const auto inv = left_invariant_functions(prod);
  EXPECT_EQ(inv.dimension, 3u);
  for (const auto& cls : inv.classes) EXPECT_TRUE(std::is_sorted(cls.begin(), cls.end()));
}

TEST(InvariantFunctions, IndicatorsAreInvariant) {
  for (const auto& s : testing::semiheap_zoo(2, 4)) {
    const auto inv = left_invariant_functions(s);
    std::vector<std::size_t> cls(s.size());
    std::size_t covered = 0;
    for (std::size_t c = 0; c < inv.classes.size(); ++c)
      for (Index x : inv.classes[c]) {
        cls[x] = c;
        ++covered;
      }
    ASSERT_EQ(covered, s.size());
    for (Index a = 0; a < s.size(); ++a)
      for (Index b = 0; b < s.size(); ++b)
        for (Index x = 0; x < s.size(); ++x) EXPECT_EQ(cls[s(a, b, x)], cls[x]);
  }
}

}  // namespace
}  // namespace semiheap
