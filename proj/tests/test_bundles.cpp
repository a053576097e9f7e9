#include <gtest/gtest.h>

#include "semiheap/bundles.hpp"
#include "support.hpp"

namespace semiheap {
namespace {

std::size_t surviving_mutations(const DiscreteSemiheapBundle& b) {
  std::size_t survivors = 0;
  const auto& a = b.action();
  for (Index p = 0; p < a.space_size(); ++p)
    for (Index x = 0; x < a.semiheap_size(); ++x)
      for (Index y = 0; y < a.semiheap_size(); ++y)
        for (Index v = 0; v < b.total_size(); ++v) {
          if (v == a(p, x, y)) continue;
          if (verify_bundle(b.with_action_entry(p, x, y, v))) ++survivors;
        }
  return survivors;
}

TEST(Bundle, TrivialBundlesPass) {
  for (const auto& s : testing::semiheap_zoo(5, 4)) {
    for (std::size_t base : {1u, 3u}) {
      const auto b = trivial_bundle(base, s);
      EXPECT_TRUE(verify_bundle(b));
      EXPECT_EQ(b.total_size(), base * s.size());
    }
  }
}

TEST(Bundle, HeapifiedPrincipalBundlesPass) {
  const auto twisted = twisted_principal_bundle(2, bundled_group("Z2"), 1);
  const auto plain = trivial_principal_bundle(3, bundled_group("Z3"));
  ASSERT_TRUE(verify_principal(twisted));
  ASSERT_TRUE(verify_principal(plain));
  const auto bt = heapify_principal(twisted);
  const auto bp = heapify_principal(plain);
  EXPECT_EQ(bt.charts().size(), 2u);
  EXPECT_TRUE(verify_bundle(bt));
  EXPECT_TRUE(verify_bundle(bp));
  // sigma(p, g1, g2) = a(p, g1^-1 g2).
  const auto& g = plain.action.group();
  for (Index p = 0; p < bp.total_size(); ++p)
    for (Index x = 0; x < 3; ++x)
      for (Index y = 0; y < 3; ++y) EXPECT_EQ(bp.action()(p, x, y), plain.action(p, g.mul(g.inverse(x), y)));
}

TEST(Bundle, CrossChartFibersAreIsomorphic) {
  const auto b = heapify_principal(twisted_principal_bundle(2, bundled_group("Z2"), 1));
  for (Index m = 0; m < b.base_size(); ++m)
    for (std::size_t c = 0; c < b.charts().size(); ++c) {
      const auto f = fiber_semiheap(b, m, c);
      EXPECT_EQ(f.fiber.size(), 2u);
      ASSERT_EQ(f.cross_charts.size(), 1u);
      EXPECT_TRUE(f.cross_charts.front().is_homomorphism);
      EXPECT_TRUE(testing::oracle_hom(f.cross_charts.front().isomorphism, f.semiheap.table(),
                                      fiber_semiheap(b, m, f.cross_charts.front().chart).semiheap.table()));
    }
  // The transition over the twisted point is the swap.
  EXPECT_EQ(fiber_semiheap(b, 1, 0).cross_charts.front().isomorphism, (IndexMap{1, 0}));
  EXPECT_EQ(fiber_semiheap(b, 0, 0).cross_charts.front().isomorphism, (IndexMap{0, 1}));
  EXPECT_THROW(fiber_semiheap(b, 2, 0), ValidationError);
  EXPECT_THROW(fiber_semiheap(b, 0, 2), ValidationError);
}

TEST(Bundle, EverySingleEntryMutationIsCaught) {
  EXPECT_EQ(surviving_mutations(heapify_principal(twisted_principal_bundle(2, bundled_group("Z2"), 1))), 0u);
  EXPECT_EQ(surviving_mutations(heapify_principal(trivial_principal_bundle(2, bundled_group("Z3")))), 0u);
  EXPECT_EQ(surviving_mutations(trivial_bundle(2, heapify(bundled_group("Z3")).semiheap())), 0u);
}

TEST(Bundle, MutationsReportSpecificAxioms) {
  const auto b = trivial_bundle(2, heapify(bundled_group("Z2")).semiheap());
  // Moving p = 0 into the other fiber.
  auto r = verify_bundle(b.with_action_entry(0, 0, 0, 2));
  ASSERT_FALSE(r);
  EXPECT_EQ(r.witness().axiom, BundleAxiom::fiber_preserving);
  // Staying in the fiber but at the wrong point.
  r = verify_bundle(b.with_action_entry(0, 0, 0, 1));
  ASSERT_FALSE(r);
  EXPECT_EQ(r.witness().axiom, BundleAxiom::chart_equivariant);
  EXPECT_NE(describe(r.witness()).find("axiom=chart-equivariant"), std::string::npos);
}

TEST(Bundle, ShapeAndChartFailures) {
  const auto s = heapify(bundled_group("Z2")).semiheap();
  const auto good = trivial_bundle(2, s);
  EXPECT_THROW(DiscreteSemiheapBundle(2, IndexMap{0, 0, 1, 2}, s, good.action(), good.charts()),
               ValidationError);

  // Projection not surjective.
  const DiscreteSemiheapBundle lonely(3, good.projection(), s, good.action(), good.charts());
  auto r = verify_bundle(lonely);
  ASSERT_FALSE(r);
  EXPECT_EQ(r.witness().axiom, BundleAxiom::projection_surjective);

  // A chart that misses the second fiber leaves the cover incomplete.
  BundleChart partial;
  partial.cover = {0};
  partial.assignment = {{0, 0}, {1, 1}};
  r = verify_bundle(DiscreteSemiheapBundle(2, good.projection(), s, good.action(), {partial}));
  ASSERT_FALSE(r);
  EXPECT_EQ(r.witness().axiom, BundleAxiom::cover_complete);

  // A chart that sends fiber 0 over base point 1.
  BundleChart crossed = good.charts().front();
  crossed.assignment = {{0, 2}, {1, 3}, {2, 0}, {3, 1}};
  r = verify_bundle(DiscreteSemiheapBundle(2, good.projection(), s, good.action(), {crossed}));
  ASSERT_FALSE(r);
  EXPECT_EQ(r.witness().axiom, BundleAxiom::chart_triangle);
}

TEST(Principal, NonFreeActionIsRejected) {
  auto pb = trivial_principal_bundle(1, bundled_group("Z2"));
  pb.action = RightGroupAction(bundled_group("Z2"), 2, std::vector<Index>{0, 0, 1, 1});
  const auto r = verify_principal(pb);
  ASSERT_FALSE(r);
  EXPECT_EQ(r.witness().axiom, BundleAxiom::action_free);
  EXPECT_THROW(heapify_principal(pb), ValidationError);
}

TEST(BundleHom, HeapifiedPrincipalHomsAreBundleHoms) {
  const auto& z4 = bundled_group("Z4");
  const auto& z2 = bundled_group("Z2");
  const auto p = trivial_principal_bundle(2, z4);
  const auto q = trivial_principal_bundle(1, z2);
  BundleHom h;
  h.base = {0, 0};
  h.structure = {0, 1, 0, 1};
  for (Index x = 0; x < 8; ++x) h.total.push_back(x % 2);
  ASSERT_TRUE(is_principal_hom(h, p, q));
  const auto hh = heapify_principal_hom(h);
  EXPECT_EQ(hh.total, h.total);
  EXPECT_TRUE(verify_bundle_hom(hh, heapify_principal(p), heapify_principal(q)));

  const auto id = BundleHom{{0, 1}, {0}, {0, 1}};
  ASSERT_TRUE(is_principal_hom(id, q, q));
  const auto c = compose(id, h);
  EXPECT_EQ(c.total, h.total);
  EXPECT_TRUE(is_principal_hom(c, p, q));
}

TEST(BundleHom, FaithfulButNotFull) {
  // Phi constant, psi = constant 1: a semiheap bundle hom of the heapified
  // Z/2 bundle over a point that is not a principal hom.
  const auto q = trivial_principal_bundle(1, bundled_group("Z2"));
  const BundleHom h{{0, 0}, {0}, {1, 1}};
  EXPECT_TRUE(verify_bundle_hom(h, heapify_principal(q), heapify_principal(q)));
  EXPECT_FALSE(is_principal_hom(h, q, q));
}

TEST(BundleHom, FailuresNameTheAxiom) {
  const auto b = trivial_bundle(2, heapify(bundled_group("Z2")).semiheap());
  const auto z3 = trivial_bundle(1, heapify(bundled_group("Z3")).semiheap());
  auto r = verify_bundle_hom({{0, 0, 0, 0}, {0, 0}, {0, 1}}, b, z3);
  ASSERT_FALSE(r);
  EXPECT_EQ(r.witness().axiom, BundleHomAxiom::structure_hom);
  r = verify_bundle_hom({{0, 1, 0, 1}, {1, 0}, {0, 1}}, b, b);
  ASSERT_FALSE(r);
  EXPECT_EQ(r.witness().axiom, BundleHomAxiom::covers_base_map);
  r = verify_bundle_hom({{0, 0, 2, 2}, {0, 1}, {0, 1}}, b, b);
  ASSERT_FALSE(r);
  EXPECT_EQ(r.witness().axiom, BundleHomAxiom::equivariant);
  EXPECT_NE(describe(r.witness()).find("equivariant"), std::string::npos);
}

}  // namespace
}  // namespace semiheap
