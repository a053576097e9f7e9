#pragma once

// Sampled verification of smooth heap identities. Every stochastic check
// takes an explicit seed, draws all of its samples from Rng(seed) and echoes
// the seed in its report. Residuals are relative: |a - b| / max(1, |a|).

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "semiheap/heap_chart.hpp"
#include "semiheap/scalar_field.hpp"

namespace semiheap {

struct NumericReport {
  std::string check;
  double max_residual = 0.0;
  std::uint64_t seed = 0;
  bool pass = false;
  /// First failing input, when the check failed on a specific one.
  std::vector<Matrix> witness_points;
  std::string witness;

  /// `check=<name> max_residual=<val> seed=<val> pass=<bool>`
  [[nodiscard]] std::string line() const;
};

/// Membership of mu outputs, tolerance 1e-12.
NumericReport mu_membership_check(const MatrixHeapChart& chart, std::size_t samples, std::uint64_t seed,
                                  double tol = 1e-12);

/// The three para-associative rebracketings on sampled quintuples.
NumericReport check_para_associative_numeric(const MatrixHeapChart& chart, std::size_t samples,
                                             std::uint64_t seed, double tol = 1e-9);

struct Pushforward {
  Matrix analytic;           ///< x y^-1 V
  Matrix finite_difference;  ///< central difference along curve(z, V, .)
  double residual;           ///< between the two
};

/// (dL_{xy})_z V. Throws ValidationError if V is not tangent at z (1e-9).
Pushforward dL(const MatrixHeapChart& chart, const Matrix& x, const Matrix& y, const Matrix& z, const Matrix& v,
               double h);

/// Analytic against finite-difference pushforwards on sampled (x, y, z, V).
NumericReport pushforward_check(const MatrixHeapChart& chart, std::size_t samples, std::uint64_t seed,
                                double h = 1e-5, double tol = 1e-6);

struct ConvergenceReport {
  double residual_h = 0.0;     ///< summed over samples
  double residual_half = 0.0;  ///< same samples, step h / 2
  double ratio = 0.0;
  NumericReport report;        ///< pass iff ratio is in [3.5, 4.5]
};

/// Second-order convergence of the central-difference pushforward.
ConvergenceReport pushforward_convergence(const MatrixHeapChart& chart, std::size_t samples, std::uint64_t seed,
                                          double h = 1e-2);

using VectorFieldRule = std::function<Matrix(const Matrix&)>;

/// x -> (dL_{x x0})_{x0} v.
VectorFieldRule left_invariant_field(const MatrixHeapChart& chart, const Matrix& v);

/// V(x0) = v exactly, and dL(x,y; z, V(z)) = V([x,y,z]) both analytically and
/// by central differences on sampled triples.
NumericReport left_invariant_check(const MatrixHeapChart& chart, const Matrix& v, std::size_t samples,
                                   std::uint64_t seed, double h = 1e-5, double tol = 1e-6);

/// The heap form x x0^-1 v and the group form x v must be identical matrices;
/// with y = x0 the sampled heap condition must match group invariance.
NumericReport compare_group_vs_heap_invariance(const MatrixHeapChart& chart, const Matrix& v,
                                               std::size_t samples, std::uint64_t seed, double h = 1e-5,
                                               double tol = 1e-6);

struct BracketReport {
  NumericReport report;
  std::size_t min_frame_rank = 0;  ///< over sampled points
};

/// Commutator of the invariant fields of u and v from the symmetric flow
/// commutator ((C(t) + C(-t)) / 2 - p) / t^2, against the invariant field of
/// the algebra bracket [u, v]; plus a full-rank check of the frame E_alpha.
BracketReport bracket_closure(const MatrixHeapChart& chart, const Matrix& u, const Matrix& v,
                              std::size_t samples, std::uint64_t seed, double t = 1e-3, double tol = 1e-4);

/// f([x,y,z]) = f(x) - f(y) + f(z), probing (p, x0, p) with p = curve(x0, e_alpha, 1)
/// first and then sampled triples. When pointed, f(x0) = 0 is required too.
NumericReport multiplicative_function_check(const MatrixHeapChart& chart, const ScalarField& f,
                                            std::size_t samples, std::uint64_t seed, double tol = 1e-12,
                                            bool pointed = true);

/// Fixed-step RK4 flow of X up to time t.
Matrix integrate_flow(const VectorFieldRule& x, const Matrix& start, double t, double step = 1e-3);

/// Phi_t[x,y,z] = [Phi_t x, Phi_t y, Phi_t z] for t in {-0.5, -0.1, 0.1, 0.5}.
NumericReport multiplicative_vector_field_check(const MatrixHeapChart& chart, const VectorFieldRule& x,
                                                std::size_t samples, std::uint64_t seed, double tol = 1e-6);

/// Para-associativity of the tangent product (mu, dmu) on sampled tangent
/// quintuples, and dmu against central differences.
NumericReport tangent_semiheap_check(const MatrixHeapChart& chart, std::size_t samples, std::uint64_t seed,
                                     double h = 1e-5, double tol = 1e-6);

struct CoalgebraReport {
  double linearity = 0.0;
  double multiplicativity = 0.0;
  double unit = 0.0;
  double para_coassociativity = 0.0;
  NumericReport report;
};

/// With Delta f = f o mu: linearity, Delta(f1 f2) = Delta f1 Delta f2,
/// Delta 1 = 1 and agreement of the three para-coassociative composites.
CoalgebraReport coassociativity_check(const MatrixHeapChart& chart, const ScalarField& f1, const ScalarField& f2,
                                      std::size_t samples, std::uint64_t seed, double tol = 1e-10);

/// [X,Y,Z] = X g(Y,Z) on R^n.
Eigen::VectorXd euclidean_mu(const Eigen::VectorXd& x, const Eigen::VectorXd& y, const Eigen::VectorXd& z);

/// Scalar identity g(W,X)g(Y,Z) = g(W, X g(Y,Z)) = g(Y, g(X,W) Z), para-
/// associativity of X g(Y,Z), and v d(x1,x2) d(x3,x4) = v d(x1, x2 d(x3,x4)).
NumericReport euclidean_semiheap_check(std::size_t n, std::size_t samples, std::uint64_t seed,
                                       double tol = 1e-12);

/// exp(x - y + z) = e^x (e^y)^-1 e^z and exp(0) = 1.
NumericReport exp_hom_check(std::size_t samples, std::uint64_t seed, double tol = 1e-12);

}  // namespace semiheap
