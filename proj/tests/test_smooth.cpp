#include <gtest/gtest.h>

#include <cmath>

#include "semiheap/smooth_checks.hpp"

namespace semiheap {
namespace {

constexpr std::uint64_t kSeed = 42;

const std::vector<std::string> kMatrixCharts{"SO2", "SO3", "UT2", "Rx"};

TEST(Chart, NamesAndDimensions) {
  EXPECT_EQ(MatrixHeapChart::by_name("SO3").dimension(), 3u);
  EXPECT_EQ(MatrixHeapChart::by_name("SO2").dimension(), 1u);
  EXPECT_EQ(MatrixHeapChart::by_name("UT2").dimension(), 3u);
  EXPECT_EQ(MatrixHeapChart::by_name("Rx").dimension(), 1u);
  EXPECT_EQ(MatrixHeapChart::by_name("R3").dimension(), 3u);
  EXPECT_TRUE(MatrixHeapChart::by_name("R2").is_affine());
  EXPECT_THROW(MatrixHeapChart::by_name("SO4"), ValidationError);
}

TEST(Chart, SamplesAreMembers) {
  for (const auto& name : MatrixHeapChart::names()) {
    const auto chart = MatrixHeapChart::by_name(name);
    Rng rng(kSeed);
    for (int i = 0; i < 50; ++i) {
      const Matrix g = chart.sample(rng);
      EXPECT_LT(chart.membership_residual(g), 1e-12) << name;
      EXPECT_LT(chart.tangent_residual(g, chart.sample_tangent(g, rng)), 1e-12) << name;
    }
  }
}

TEST(Chart, SO3BasisStructureConstants) {
  const auto chart = MatrixHeapChart::by_name("SO3");
  const auto& e = chart.tangent_basis();
  EXPECT_LT((chart.algebra_bracket(e[0], e[1]) - e[2]).norm(), 1e-15);
  EXPECT_LT((chart.algebra_bracket(e[1], e[2]) - e[0]).norm(), 1e-15);
  EXPECT_LT((chart.algebra_bracket(e[2], e[0]) - e[1]).norm(), 1e-15);
}

TEST(Chart, LeftDivideGuardsSingularMatrices) {
  const auto chart = MatrixHeapChart::by_name("UT2");
  Matrix singular = Matrix::Zero(2, 2);
  singular(0, 0) = 1.0;
  EXPECT_THROW((void)chart.left_divide(singular, Matrix::Identity(2, 2)), ValidationError);
}

TEST(Chart, ExpOfSkewIsRotation) {
  const auto chart = MatrixHeapChart::by_name("SO3");
  const Matrix r = expm(0.7 * chart.tangent_basis()[2]);
  EXPECT_LT(chart.membership_residual(r), 1e-14);
  EXPECT_NEAR(r(0, 0), std::cos(0.7), 1e-15);
}

TEST(Numeric, MembershipAndParaAssociativity) {
  for (const auto& name : MatrixHeapChart::names()) {
    const auto chart = MatrixHeapChart::by_name(name);
    EXPECT_TRUE(mu_membership_check(chart, 100, kSeed).pass) << name;
    const auto r = check_para_associative_numeric(chart, 200, kSeed);
    EXPECT_TRUE(r.pass) << r.line();
    EXPECT_LT(r.max_residual, 1e-9);
  }
}

TEST(Numeric, ReportsAreReproducible) {
  const auto chart = MatrixHeapChart::by_name("SO3");
  EXPECT_EQ(check_para_associative_numeric(chart, 50, 7).line(),
            check_para_associative_numeric(chart, 50, 7).line());
  const auto line = pushforward_check(chart, 10, 9).line();
  EXPECT_EQ(line.rfind("check=pushforward max_residual=", 0), 0u);
  EXPECT_NE(line.find(" seed=9 pass=true"), std::string::npos);
}

TEST(Numeric, PushforwardAgreesWithFiniteDifferences) {
  for (const auto& name : kMatrixCharts) {
    const auto chart = MatrixHeapChart::by_name(name);
    EXPECT_TRUE(pushforward_check(chart, 100, kSeed).pass) << name;
  }
}

TEST(Numeric, PushforwardRejectsNonTangentVectors) {
  const auto chart = MatrixHeapChart::by_name("SO3");
  const Matrix i = Matrix::Identity(3, 3);
  EXPECT_THROW(dL(chart, i, i, i, i, 1e-5), ValidationError);
}

TEST(Numeric, SecondOrderConvergence) {
  for (const auto& name : kMatrixCharts) {
    const auto chart = MatrixHeapChart::by_name(name);
    const auto c = pushforward_convergence(chart, 50, kSeed);
    EXPECT_TRUE(c.report.pass) << name << " ratio=" << c.ratio;
    EXPECT_GE(c.ratio, 3.5);
    EXPECT_LE(c.ratio, 4.5);
  }
}

TEST(Numeric, LeftInvariantFields) {
  for (const auto& name : kMatrixCharts) {
    const auto chart = MatrixHeapChart::by_name(name);
    for (const auto& v : chart.tangent_basis()) {
      EXPECT_TRUE(left_invariant_check(chart, v, 50, kSeed).pass) << name;
      const auto cmp = compare_group_vs_heap_invariance(chart, v, 50, kSeed);
      EXPECT_TRUE(cmp.pass) << name;
    }
  }
}

TEST(Numeric, InvariantFieldAtBasepoint) {
  const auto chart = MatrixHeapChart::by_name("SO3");
  const auto field = left_invariant_field(chart, chart.tangent_basis()[0]);
  const Matrix x0 = chart.basepoint();
  const Matrix v = field(x0);
  EXPECT_LT((v - chart.tangent_basis()[0]).norm(), 1e-15);
}

TEST(Numeric, BracketClosureOnSO3) {
  const auto chart = MatrixHeapChart::by_name("SO3");
  const auto& e = chart.tangent_basis();
  const auto r = bracket_closure(chart, e[0], e[1], 50, kSeed);
  EXPECT_TRUE(r.report.pass) << r.report.line();
  EXPECT_LT(r.report.max_residual, 1e-4);
  EXPECT_EQ(r.min_frame_rank, 3u);
}

TEST(Numeric, BracketClosureOnAbelianCharts) {
  for (const auto& name : {"SO2", "Rx", "R2"}) {
    const auto chart = MatrixHeapChart::by_name(name);
    const auto& e = chart.tangent_basis();
    EXPECT_TRUE(bracket_closure(chart, e[0], e.back(), 20, kSeed).report.pass) << name;
  }
}

TEST(Numeric, MultiplicativeFunctions) {
  const auto r1 = MatrixHeapChart::by_name("R1");
  Eigen::VectorXd w(1);
  w << 2.5;
  EXPECT_TRUE(multiplicative_function_check(r1, ScalarField::linear(w), 200, kSeed).pass);

  const auto r3 = MatrixHeapChart::by_name("R3");
  Eigen::VectorXd w3(3);
  w3 << 1.0, -2.0, 0.5;
  const auto lin = multiplicative_function_check(r3, ScalarField::linear(w3), 200, kSeed);
  EXPECT_TRUE(lin.pass);
  EXPECT_LT(lin.max_residual, 1e-12);

  const auto sq = ScalarField::polynomial(1, {{1.0, {2}}});
  const auto bad = multiplicative_function_check(r1, sq, 200, kSeed);
  EXPECT_FALSE(bad.pass);
  ASSERT_EQ(bad.witness_points.size(), 3u);
  EXPECT_EQ(bad.witness_points[0](0, 0), 1.0);
  EXPECT_EQ(bad.witness_points[1](0, 0), 0.0);
  EXPECT_EQ(bad.witness_points[2](0, 0), 1.0);

  // log|det| is multiplicative on the matrix heaps with x0 = I.
  const auto rx = MatrixHeapChart::by_name("Rx");
  const ScalarField log_abs(1, [](const Eigen::VectorXd& c) { return std::log(std::abs(c(0))); }, "log|x|");
  EXPECT_TRUE(multiplicative_function_check(rx, log_abs, 200, kSeed, 1e-12).pass);

  // Unpointed: a constant shift still satisfies f[x,y,z] = f x - f y + f z.
  const auto shifted = ScalarField::linear(w) + ScalarField::constant(1, 3.0);
  EXPECT_FALSE(multiplicative_function_check(r1, shifted, 50, kSeed).pass);
  EXPECT_TRUE(multiplicative_function_check(r1, shifted, 50, kSeed, 1e-12, false).pass);
}

TEST(Numeric, FlowsAndMultiplicativeFields) {
  const auto so3 = MatrixHeapChart::by_name("SO3");
  const auto& e = so3.tangent_basis();
  // Right-invariant fields x -> v x generate left multiplication flows, which
  // are heap automorphisms.
  const VectorFieldRule right_inv = [&](const Matrix& x) -> Matrix { return e[0] * x; };
  EXPECT_TRUE(multiplicative_vector_field_check(so3, right_inv, 10, kSeed).pass);
  // x -> x v generates right multiplication, also an automorphism of the heap.
  EXPECT_TRUE(multiplicative_vector_field_check(so3, left_invariant_field(so3, e[1]), 10, kSeed).pass);

  const auto r1 = MatrixHeapChart::by_name("R1");
  const VectorFieldRule linear = [](const Matrix& x) -> Matrix { return 0.7 * x; };
  EXPECT_TRUE(multiplicative_vector_field_check(r1, linear, 20, kSeed).pass);
  const VectorFieldRule square = [](const Matrix& x) -> Matrix { return x.cwiseProduct(x); };
  EXPECT_FALSE(multiplicative_vector_field_check(r1, square, 20, kSeed).pass);

  // Exact flow of x' = a x.
  Matrix start(1, 1);
  start << 0.3;
  EXPECT_NEAR(integrate_flow(linear, start, 0.5)(0, 0), 0.3 * std::exp(0.35), 1e-12);
}

TEST(Numeric, TangentSemiheap) {
  for (const auto& name : kMatrixCharts) {
    const auto chart = MatrixHeapChart::by_name(name);
    EXPECT_TRUE(tangent_semiheap_check(chart, 50, kSeed).pass) << name;
  }
  EXPECT_TRUE(tangent_semiheap_check(MatrixHeapChart::by_name("R3"), 50, kSeed).pass);
}

TEST(Numeric, Coalgebra) {
  for (const auto& name : {"SO3", "R3"}) {
    const auto chart = MatrixHeapChart::by_name(name);
    Rng rng(kSeed);
    const auto f1 = ScalarField::random_polynomial(chart.coordinate_count(), 3, rng);
    const auto f2 = ScalarField::random_polynomial(chart.coordinate_count(), 3, rng);
    const auto r = coassociativity_check(chart, f1, f2, 100, kSeed);
    EXPECT_TRUE(r.report.pass) << r.report.line();
    EXPECT_LT(r.linearity, 1e-10);
    EXPECT_LT(r.multiplicativity, 1e-10);
    EXPECT_LT(r.unit, 1e-10);
    EXPECT_LT(r.para_coassociativity, 1e-10);
  }
}

TEST(Numeric, EuclideanSemiheap) {
  for (std::size_t n : {1u, 2u, 3u, 5u}) {
    const auto r = euclidean_semiheap_check(n, 300, kSeed);
    EXPECT_TRUE(r.pass) << r.line();
  }
  Eigen::VectorXd x(2), y(2), z(2);
  x << 1, 2;
  y << 3, 4;
  z << 5, 6;
  const auto m = euclidean_mu(x, y, z);
  EXPECT_DOUBLE_EQ(m(0), 39.0);
  EXPECT_DOUBLE_EQ(m(1), 78.0);
}

TEST(Numeric, ExpIsAHeapMorphism) {
  const auto r = exp_hom_check(1000, kSeed);
  EXPECT_TRUE(r.pass) << r.line();
  EXPECT_LT(r.max_residual, 1e-12);
}

TEST(ScalarFieldAlgebra, Operations) {
  const auto x = ScalarField::coordinate(2, 0);
  const auto y = ScalarField::coordinate(2, 1);
  const auto f = 2.0 * (x * y) + ScalarField::constant(2, 1.0);
  Eigen::VectorXd c(2);
  c << 3.0, -1.0;
  EXPECT_DOUBLE_EQ(f(c), -5.0);
  const auto p = ScalarField::polynomial(2, {{1.5, {2, 1}}, {-1.0, {0, 0}}});
  EXPECT_DOUBLE_EQ(p(c), 1.5 * 9 * -1 - 1.0);
}

}  // namespace
}  // namespace semiheap
