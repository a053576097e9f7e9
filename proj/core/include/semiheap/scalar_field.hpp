#pragma once

// Real-valued functions on a chart, written in its coordinates.

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "semiheap/heap_chart.hpp"

namespace semiheap {

struct Monomial {
  double coefficient = 0.0;
  std::vector<unsigned> exponents;  ///< one per coordinate
};

class ScalarField {
 public:
  using Rule = std::function<double(const Eigen::VectorXd&)>;

  /// Arbitrary deterministic rule over `coordinate_count` coordinates.
  ScalarField(std::size_t coordinate_count, Rule rule, std::string name);

  static ScalarField polynomial(std::size_t coordinate_count, std::vector<Monomial> terms);
  static ScalarField constant(std::size_t coordinate_count, double c);
  static ScalarField coordinate(std::size_t coordinate_count, std::size_t i);
  static ScalarField linear(const Eigen::VectorXd& weights);
  /// Dense random polynomial of total degree <= degree, coefficients in [-1, 1].
  static ScalarField random_polynomial(std::size_t coordinate_count, unsigned degree, Rng& rng);

  [[nodiscard]] std::size_t coordinate_count() const noexcept { return count_; }
  [[nodiscard]] const std::string& name() const noexcept { return name_; }

  [[nodiscard]] double operator()(const Eigen::VectorXd& coords) const;
  [[nodiscard]] double at(const MatrixHeapChart& chart, const Matrix& g) const {
    return (*this)(chart.coordinates(g));
  }

  friend ScalarField operator+(const ScalarField& a, const ScalarField& b);
  friend ScalarField operator*(const ScalarField& a, const ScalarField& b);
  friend ScalarField operator*(double s, const ScalarField& a);

 private:
  std::size_t count_;
  std::shared_ptr<const Rule> rule_;
  std::string name_;
};

}  // namespace semiheap
