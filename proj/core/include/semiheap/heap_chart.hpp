#pragma once

// Matrix Lie groups viewed as Lie heaps, [g1,g2,g3] = g1 g2^-1 g3, and the
// affine heaps (R^n, x - y + z) with points stored as n x 1 columns.

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "semiheap/table.hpp"

namespace semiheap {

using Matrix = Eigen::MatrixXd;
using Rng = std::mt19937_64;

enum class ChartKind { so2, so3, upper_triangular2, nonzero_reals, euclidean };

class MatrixHeapChart {
 public:
  /// euclidean_dim is only used for ChartKind::euclidean (1, 2 or 3).
  explicit MatrixHeapChart(ChartKind kind, std::size_t euclidean_dim = 1);

  /// "SO2", "SO3", "UT2", "Rx", "R1", "R2", "R3". Throws ValidationError.
  static MatrixHeapChart by_name(std::string_view name);
  static std::vector<std::string> names();

  [[nodiscard]] const std::string& name() const noexcept { return name_; }
  [[nodiscard]] ChartKind kind() const noexcept { return kind_; }
  [[nodiscard]] bool is_affine() const noexcept { return kind_ == ChartKind::euclidean; }
  [[nodiscard]] bool is_abelian() const noexcept { return kind_ != ChartKind::so3 && kind_ != ChartKind::upper_triangular2; }
  [[nodiscard]] Eigen::Index rows() const noexcept { return rows_; }
  [[nodiscard]] Eigen::Index cols() const noexcept { return cols_; }
  [[nodiscard]] std::size_t dimension() const noexcept { return basis_.size(); }

  /// x0: the identity matrix, or the origin for affine charts.
  [[nodiscard]] const Matrix& basepoint() const noexcept { return basepoint_; }
  /// Basis e_alpha of the tangent space at x0.
  [[nodiscard]] const std::vector<Matrix>& tangent_basis() const noexcept { return basis_; }

  [[nodiscard]] Matrix sample(Rng& rng) const;
  /// A tangent vector at g: g times a random Lie algebra element.
  [[nodiscard]] Matrix sample_tangent(const Matrix& g, Rng& rng) const;

  /// Relative violation of the defining relations; 0 for exact members.
  [[nodiscard]] double membership_residual(const Matrix& g) const;
  /// Violation of the linearized relations for V at g.
  [[nodiscard]] double tangent_residual(const Matrix& g, const Matrix& v) const;

  /// g2^-1 b by partial-pivot LU. Throws ValidationError when the reciprocal
  /// 1-norm condition number of g2 is below 1e-10.
  [[nodiscard]] Matrix left_divide(const Matrix& g2, const Matrix& b) const;

  /// g1 g2^-1 g3, or g1 - g2 + g3 for affine charts.
  [[nodiscard]] Matrix mu(const Matrix& g1, const Matrix& g2, const Matrix& g3) const;

  /// Analytic (dL_{xy})_z V: x y^-1 V, or V for affine charts.
  [[nodiscard]] Matrix push_left(const Matrix& x, const Matrix& y, const Matrix& v) const;

  /// Curve through z with velocity V: z exp(t z^-1 V), or z + t V.
  [[nodiscard]] Matrix curve(const Matrix& z, const Matrix& v, double t) const;

  /// Analytic differential of mu at (g1,g2,g3) applied to (V1,V2,V3).
  [[nodiscard]] Matrix dmu(const Matrix& g1, const Matrix& g2, const Matrix& g3, const Matrix& v1,
                           const Matrix& v2, const Matrix& v3) const;

  /// Lie algebra bracket at x0: uv - vu, zero for affine charts.
  [[nodiscard]] Matrix algebra_bracket(const Matrix& u, const Matrix& v) const;

  /// Column-major entries, the coordinates scalar fields are written in.
  [[nodiscard]] Eigen::VectorXd coordinates(const Matrix& g) const;
  [[nodiscard]] std::size_t coordinate_count() const noexcept {
    return static_cast<std::size_t>(rows_ * cols_);
  }

 private:
  ChartKind kind_;
  std::string name_;
  Eigen::Index rows_;
  Eigen::Index cols_;
  Matrix basepoint_;
  std::vector<Matrix> basis_;
};

/// Matrix exponential.
Matrix expm(const Matrix& a);

}  // namespace semiheap
