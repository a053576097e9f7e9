#include "semiheap/heap_chart.hpp"

#include <cmath>
#include <numbers>

#include <unsupported/Eigen/MatrixFunctions>

#include "semiheap/table.hpp"

namespace semiheap {

namespace {

Matrix unit(Eigen::Index r, Eigen::Index c, Eigen::Index i, Eigen::Index j) {
  Matrix m = Matrix::Zero(r, c);
  m(i, j) = 1.0;
  return m;
}

Matrix skew(Eigen::Index i, Eigen::Index j) {
  Matrix m = Matrix::Zero(3, 3);
  m(i, j) = -1.0;
  m(j, i) = 1.0;
  return m;
}

}  // namespace

Matrix expm(const Matrix& a) { return a.exp(); }

MatrixHeapChart::MatrixHeapChart(ChartKind kind, std::size_t euclidean_dim) : kind_(kind) {
  switch (kind) {
    case ChartKind::so2:
      name_ = "SO2";
      rows_ = cols_ = 2;
      basis_ = {(Matrix(2, 2) << 0, -1, 1, 0).finished()};
      break;
    case ChartKind::so3:
      name_ = "SO3";
      rows_ = cols_ = 3;
      // Infinitesimal rotations about x, y, z: [e1, e2] = e3 and cyclically.
      basis_ = {skew(1, 2), skew(2, 0), skew(0, 1)};
      break;
    case ChartKind::upper_triangular2:
      name_ = "UT2";
      rows_ = cols_ = 2;
      basis_ = {unit(2, 2, 0, 0), unit(2, 2, 0, 1), unit(2, 2, 1, 1)};
      break;
    case ChartKind::nonzero_reals:
      name_ = "Rx";
      rows_ = cols_ = 1;
      basis_ = {Matrix::Ones(1, 1)};
      break;
    case ChartKind::euclidean:
      if (euclidean_dim < 1 || euclidean_dim > 3)
        throw ValidationError("euclidean chart dimension must be 1, 2 or 3");
      name_ = "R" + std::to_string(euclidean_dim);
      rows_ = static_cast<Eigen::Index>(euclidean_dim);
      cols_ = 1;
      for (Eigen::Index i = 0; i < rows_; ++i) basis_.push_back(unit(rows_, 1, i, 0));
      break;
  }
  basepoint_ = is_affine() ? Matrix(Matrix::Zero(rows_, cols_)) : Matrix(Matrix::Identity(rows_, cols_));
}

MatrixHeapChart MatrixHeapChart::by_name(std::string_view name) {
  if (name == "SO2") return MatrixHeapChart(ChartKind::so2);
  if (name == "SO3") return MatrixHeapChart(ChartKind::so3);
  if (name == "UT2") return MatrixHeapChart(ChartKind::upper_triangular2);
  if (name == "Rx") return MatrixHeapChart(ChartKind::nonzero_reals);
  if (name == "R1") return MatrixHeapChart(ChartKind::euclidean, 1);
  if (name == "R2") return MatrixHeapChart(ChartKind::euclidean, 2);
  if (name == "R3") return MatrixHeapChart(ChartKind::euclidean, 3);
  throw ValidationError("unknown chart '" + std::string(name) + "'");
}

std::vector<std::string> MatrixHeapChart::names() { return {"SO2", "SO3", "UT2", "Rx", "R1", "R2", "R3"}; }

Matrix MatrixHeapChart::sample(Rng& rng) const {
  std::uniform_real_distribution<double> sym(-1.0, 1.0);
  std::uniform_real_distribution<double> mag(0.5, 2.0);
  const auto sign = [&] { return sym(rng) < 0 ? -1.0 : 1.0; };
  switch (kind_) {
    case ChartKind::so2: {
      const double a = std::numbers::pi * sym(rng);
      return (Matrix(2, 2) << std::cos(a), -std::sin(a), std::sin(a), std::cos(a)).finished();
    }
    case ChartKind::so3: {
      std::normal_distribution<double> normal;
      Eigen::Quaterniond q(normal(rng), normal(rng), normal(rng), normal(rng));
      q.normalize();
      return q.toRotationMatrix();
    }
    case ChartKind::upper_triangular2: {
      Matrix g = Matrix::Zero(2, 2);
      g(0, 0) = sign() * mag(rng);
      g(0, 1) = sym(rng);
      g(1, 1) = sign() * mag(rng);
      return g;
    }
    case ChartKind::nonzero_reals:
      return Matrix::Constant(1, 1, sign() * mag(rng));
    case ChartKind::euclidean: {
      // Kept small so that polynomial flows stay bounded over |t| <= 0.5.
      Matrix g(rows_, 1);
      for (Eigen::Index i = 0; i < rows_; ++i) g(i, 0) = 0.5 * sym(rng);
      return g;
    }
  }
  return basepoint_;
}

Matrix MatrixHeapChart::sample_tangent(const Matrix& g, Rng& rng) const {
  std::uniform_real_distribution<double> sym(-1.0, 1.0);
  Matrix a = Matrix::Zero(rows_, cols_);
  for (const auto& e : basis_) a += sym(rng) * e;
  return is_affine() ? a : Matrix(g * a);
}

double MatrixHeapChart::membership_residual(const Matrix& g) const {
  if (g.rows() != rows_ || g.cols() != cols_ || !g.allFinite()) return INFINITY;
  switch (kind_) {
    case ChartKind::so2:
    case ChartKind::so3: {
      const Matrix id = Matrix::Identity(rows_, rows_);
      return (g.transpose() * g - id).norm() / id.norm() + std::abs(g.determinant() - 1.0);
    }
    case ChartKind::upper_triangular2:
      if (g(0, 0) == 0.0 || g(1, 1) == 0.0) return INFINITY;
      return std::abs(g(1, 0)) / g.norm();
    case ChartKind::nonzero_reals:
      return g(0, 0) == 0.0 ? INFINITY : 0.0;
    case ChartKind::euclidean:
      return 0.0;
  }
  return INFINITY;
}

double MatrixHeapChart::tangent_residual(const Matrix& g, const Matrix& v) const {
  if (v.rows() != rows_ || v.cols() != cols_) return INFINITY;
  switch (kind_) {
    case ChartKind::so2:
    case ChartKind::so3:
      // g^T g = I differentiates to g^T V + V^T g = 0.
      return (g.transpose() * v + v.transpose() * g).norm() / std::max(1.0, v.norm());
    case ChartKind::upper_triangular2:
      return std::abs(v(1, 0)) / std::max(1.0, v.norm());
    default:
      return 0.0;
  }
}

Matrix MatrixHeapChart::left_divide(const Matrix& g2, const Matrix& b) const {
  Eigen::PartialPivLU<Matrix> lu(g2);
  // Eigen's rcond() estimate reports 1 on an exact zero pivot, so the
  // condition number is computed outright; these matrices are at most 3x3.
  const auto one_norm = [](const Matrix& m) { return m.cwiseAbs().colwise().sum().maxCoeff(); };
  const bool zero_pivot = (lu.matrixLU().diagonal().array() == 0.0).any();
  const double rcond = zero_pivot ? 0.0 : 1.0 / (one_norm(g2) * one_norm(lu.inverse()));
  if (!(rcond >= 1e-10)) throw ValidationError("mu: middle argument is numerically singular");
  return lu.solve(b);
}

Matrix MatrixHeapChart::mu(const Matrix& g1, const Matrix& g2, const Matrix& g3) const {
  if (is_affine()) return g1 - g2 + g3;
  return g1 * left_divide(g2, g3);
}

Matrix MatrixHeapChart::push_left(const Matrix& x, const Matrix& y, const Matrix& v) const {
  if (is_affine()) return v;
  return x * left_divide(y, v);
}

Matrix MatrixHeapChart::curve(const Matrix& z, const Matrix& v, double t) const {
  if (is_affine()) return z + t * v;
  return z * expm(t * left_divide(z, v));
}

Matrix MatrixHeapChart::dmu(const Matrix& g1, const Matrix& g2, const Matrix& g3, const Matrix& v1,
                            const Matrix& v2, const Matrix& v3) const {
  if (is_affine()) return v1 - v2 + v3;
  const Matrix inv_g3 = left_divide(g2, g3);  // g2^-1 g3
  const Matrix inv_v2 = left_divide(g2, v2);  // g2^-1 V2
  const Matrix inv_v3 = left_divide(g2, v3);  // g2^-1 V3
  return v1 * inv_g3 - g1 * inv_v2 * inv_g3 + g1 * inv_v3;
}

Matrix MatrixHeapChart::algebra_bracket(const Matrix& u, const Matrix& v) const {
  if (is_affine()) return Matrix::Zero(rows_, cols_);
  return u * v - v * u;
}

Eigen::VectorXd MatrixHeapChart::coordinates(const Matrix& g) const {
  return Eigen::Map<const Eigen::VectorXd>(g.data(), g.size());
}

}  // namespace semiheap
