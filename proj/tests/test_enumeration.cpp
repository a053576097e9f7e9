#include <gtest/gtest.h>

#include <set>

#include "semiheap/enumeration.hpp"
#include "support.hpp"

namespace semiheap {
namespace {

// All 256 tables on two points, filtered by the independent oracle.
std::set<TernaryTable> oracle_semiheaps_n2() {
  std::set<TernaryTable> out;
  for (unsigned bits = 0; bits < 256; ++bits) {
    std::vector<Index> e(8);
    for (unsigned c = 0; c < 8; ++c) e[c] = (bits >> c) & 1u;
    TernaryTable t(2, e);
    if (testing::oracle_para_associative(t)) out.insert(t);
  }
  return out;
}

// Independent exhaustive search for n = 3: plain cell-by-cell backtracking
// that rejects a partial table as soon as two fully evaluable bracketings of
// some quintuple disagree.
class NaiveSearch {
 public:
  explicit NaiveSearch(std::size_t n) : n_(n), cells_(n * n * n, kUnknown) {}

  std::set<TernaryTable> run() {
    fill(0);
    return found_;
  }

 private:
  static constexpr int kUnknown = -1;

  int at(int i, int j, int k) const {
    if (i < 0 || j < 0 || k < 0) return kUnknown;
    return cells_[(static_cast<std::size_t>(i) * n_ + j) * n_ + k];
  }

  bool consistent() const {
    const int n = static_cast<int>(n_);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          for (int d = 0; d < n; ++d)
            for (int e = 0; e < n; ++e) {
              const int v[3] = {at(at(a, b, c), d, e), at(a, at(d, c, b), e), at(a, b, at(c, d, e))};
              int seen = kUnknown;
              for (int x : v) {
                if (x == kUnknown) continue;
                if (seen != kUnknown && seen != x) return false;
                seen = x;
              }
            }
    return true;
  }

  void fill(std::size_t cell) {
    if (cell == cells_.size()) {
      found_.insert(TernaryTable(n_, std::vector<Index>(cells_.begin(), cells_.end())));
      return;
    }
    for (int v = 0; v < static_cast<int>(n_); ++v) {
      cells_[cell] = v;
      if (consistent()) fill(cell + 1);
    }
    cells_[cell] = kUnknown;
  }

  std::size_t n_;
  std::vector<int> cells_;
  std::set<TernaryTable> found_;
};

std::set<TernaryTable> as_set(const std::vector<TernaryTable>& v) { return {v.begin(), v.end()}; }

TEST(Enumeration, TrivialCarriers) {
  const auto r0 = enumerate_semiheaps(0);
  EXPECT_EQ(r0.count, 1u);
  EXPECT_EQ(r0.iso_count, 1u);
  ASSERT_EQ(r0.tables.size(), 1u);
  EXPECT_TRUE(r0.tables.front().empty());
  const auto r1 = enumerate_semiheaps(1);
  EXPECT_EQ(r1.count, 1u);
  EXPECT_EQ(r1.tables.front(), TernaryTable(1));
  EXPECT_EQ(enumerate_heaps(1).count, 1u);
}

TEST(Enumeration, BacktrackingEqualsOracleAtTwo) {
  const auto oracle = oracle_semiheaps_n2();
  const auto search = enumerate_semiheaps(2);
  EXPECT_TRUE(search.complete);
  EXPECT_EQ(as_set(search.tables), oracle);
  EXPECT_EQ(search.tables.size(), oracle.size());
  EXPECT_EQ(as_set(brute_force_semiheaps(2)), oracle);
  EXPECT_EQ(search.count, oracle.size());
}

TEST(Enumeration, PinnedCounts) {
  // Regression values produced by the oracle routes above.
  EXPECT_EQ(enumerate_semiheaps(2).count, 8u);
  EXPECT_EQ(enumerate_semiheaps(2).iso_count, 6u);
  EXPECT_EQ(enumerate_heaps(2).count, 1u);
  EXPECT_EQ(enumerate_heaps(3).count, 1u);
  EXPECT_EQ(enumerate_heaps(4).count, 4u);
  EXPECT_EQ(enumerate_heaps(4).iso_count, 2u);
  // n = 3 values confirmed against NaiveSearch below.
  const auto r3 = enumerate_semiheaps(3);
  ASSERT_TRUE(r3.complete);
  EXPECT_EQ(r3.count, 135u);
  EXPECT_EQ(r3.iso_count, 31u);
}

TEST(Enumeration, BacktrackingEqualsNaiveSearchAtThree) {
  const auto naive = NaiveSearch(3).run();
  for (const auto& t : naive) ASSERT_TRUE(testing::oracle_para_associative(t));
  EXPECT_EQ(as_set(enumerate_semiheaps(3).tables), naive);
  std::set<TernaryTable> classes;
  for (const auto& t : naive) classes.insert(canonical_form(t));
  EXPECT_EQ(naive.size(), 135u);
  EXPECT_EQ(classes.size(), 31u);
  EXPECT_EQ(NaiveSearch(2).run(), oracle_semiheaps_n2());
}

TEST(Enumeration, UpToIsoKeepsCanonicalRepresentatives) {
  const auto full = enumerate_semiheaps(2);
  EnumerationOptions o;
  o.up_to_iso = true;
  const auto reps = enumerate_semiheaps(2, o);
  EXPECT_EQ(reps.tables.size(), full.iso_count);
  EXPECT_EQ(reps.count, full.count);
  std::set<TernaryTable> classes;
  for (const auto& t : full.tables) classes.insert(canonical_form(t));
  EXPECT_EQ(as_set(reps.tables), classes);
}

TEST(Enumeration, SemiheapSearchAtThreeMatchesSampledOracle) {
  const auto found = as_set(enumerate_semiheaps(3).tables);
  for (const auto& t : found) EXPECT_TRUE(testing::oracle_para_associative(t));
  // Relabeling-closed.
  testing::Gen g(12);
  for (const auto& t : found) EXPECT_TRUE(found.contains(relabel(t, testing::random_permutation(g, 3))));
}

TEST(Heaps, DualRouteAgreesUpToThree) {
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto search = enumerate_heaps(n);
    EXPECT_EQ(as_set(search.tables), as_set(heaps_from_groups(n)));
    // Independent filter of the semiheap enumeration.
    std::set<TernaryTable> filtered;
    for (const auto& t : enumerate_semiheaps(n).tables)
      if (testing::oracle_heap(t)) filtered.insert(t);
    EXPECT_EQ(as_set(search.tables), filtered);
    EXPECT_EQ(labeled_groups(n).size(), n * search.tables.size());
  }
}

TEST(Heaps, ThreePointHeapsAreCyclic) {
  const auto tables = heaps_from_groups(3);
  ASSERT_EQ(tables.size(), 1u);
  EXPECT_EQ(tables.front(), testing::oracle_heapify(bundled_group("Z3")));
}

TEST(Canonical, IdempotentAndRelabelingInvariant) {
  testing::Gen g(2024);
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto pool = enumerate_semiheaps(n).tables;
    for (int rep = 0; rep < 1000; ++rep) {
      const auto& t = pool[testing::pick(g, pool.size())];
      const auto c = canonical_form(t);
      ASSERT_EQ(canonical_form(c), c);
      ASSERT_EQ(canonical_form(relabel(t, testing::random_permutation(g, n))), c);
      ASSERT_LE(c, t);
    }
  }
}

TEST(Canonical, IsomorphismExamples) {
  const auto z4 = testing::oracle_heapify(bundled_group("Z4"));
  const auto v4 = testing::oracle_heapify(bundled_group("V4"));
  EXPECT_TRUE(are_isomorphic(z4, z4));
  EXPECT_FALSE(are_isomorphic(z4, v4));
  testing::Gen g(6);
  const auto s3 = testing::oracle_heapify(bundled_group("S3"));
  EXPECT_TRUE(are_isomorphic(s3, relabel(s3, testing::random_permutation(g, 6))));
  EXPECT_FALSE(are_isomorphic(s3, testing::oracle_heapify(bundled_group("Z6"))));
  EXPECT_FALSE(are_isomorphic(TernaryTable(1), TernaryTable(2)));
  // The heap of a group has |G| |Aut G| automorphisms.
  EXPECT_EQ(automorphism_count(testing::oracle_heapify(bundled_group("Z3"))), 6u);
  EXPECT_EQ(automorphism_count(v4), 24u);
}

TEST(Enumeration, DeterministicAcrossWorkerCounts) {
  EnumerationOptions one, three;
  three.jobs = 3;
  for (std::size_t n : {2u, 3u}) {
    EXPECT_EQ(enumerate_semiheaps(n, one).tables, enumerate_semiheaps(n, three).tables);
    EXPECT_EQ(enumerate_heaps(n + 1, one).tables, enumerate_heaps(n + 1, three).tables);
  }
}

TEST(Enumeration, OutputIsSortedByCanonicalForm) {
  const auto tables = enumerate_semiheaps(3).tables;
  for (std::size_t i = 1; i < tables.size(); ++i) {
    const auto a = std::pair(canonical_form(tables[i - 1]), tables[i - 1]);
    const auto b = std::pair(canonical_form(tables[i]), tables[i]);
    EXPECT_LT(a, b);
  }
}

TEST(Enumeration, BudgetGivesPartialReport) {
  EnumerationOptions o;
  o.budget_seconds = 0.0;
  const auto r = enumerate_semiheaps(4, o);
  EXPECT_FALSE(r.complete);
  EXPECT_NE(r.summary().find("complete=false"), std::string::npos);
}

TEST(Enumeration, SizeCaps) {
  EXPECT_THROW(brute_force_semiheaps(3), ValidationError);
  EXPECT_THROW(enumerate_semiheaps(5), ValidationError);
  EXPECT_THROW(canonical_form(TernaryTable(9)), ValidationError);
}

TEST(Enumeration, SummaryFormat) {
  EXPECT_EQ(enumerate_semiheaps(1).summary(), "n=1 kind=semiheap count=1 iso_count=1 complete=true");
  EXPECT_EQ(enumerate_heaps(3).summary(), "n=3 kind=heap count=1 iso_count=1 complete=true");
}

}  // namespace
}  // namespace semiheap
