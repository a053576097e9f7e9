#include "semiheap/scalar_field.hpp"

#include <cmath>
#include <sstream>

#include "semiheap/table.hpp"

namespace semiheap {

ScalarField::ScalarField(std::size_t coordinate_count, Rule rule, std::string name)
    : count_(coordinate_count), rule_(std::make_shared<const Rule>(std::move(rule))), name_(std::move(name)) {}

ScalarField ScalarField::polynomial(std::size_t coordinate_count, std::vector<Monomial> terms) {
  for (const auto& m : terms)
    if (m.exponents.size() != coordinate_count)
      throw ValidationError("ScalarField: monomial has the wrong number of exponents");
  std::ostringstream name;
  name << "polynomial(" << terms.size() << " terms)";
  return ScalarField(
      coordinate_count,
      [terms = std::move(terms)](const Eigen::VectorXd& x) {
        double sum = 0.0;
        for (const auto& m : terms) {
          double term = m.coefficient;
          for (std::size_t i = 0; i < m.exponents.size(); ++i)
            for (unsigned k = 0; k < m.exponents[i]; ++k) term *= x(static_cast<Eigen::Index>(i));
          sum += term;
        }
        return sum;
      },
      name.str());
}

ScalarField ScalarField::constant(std::size_t coordinate_count, double c) {
  return ScalarField(coordinate_count, [c](const Eigen::VectorXd&) { return c; }, "constant");
}

ScalarField ScalarField::coordinate(std::size_t coordinate_count, std::size_t i) {
  if (i >= coordinate_count) throw ValidationError("ScalarField: coordinate out of range");
  return ScalarField(
      coordinate_count, [i](const Eigen::VectorXd& x) { return x(static_cast<Eigen::Index>(i)); },
      "x" + std::to_string(i));
}

ScalarField ScalarField::linear(const Eigen::VectorXd& weights) {
  return ScalarField(
      static_cast<std::size_t>(weights.size()), [weights](const Eigen::VectorXd& x) { return weights.dot(x); },
      "linear");
}

ScalarField ScalarField::random_polynomial(std::size_t coordinate_count, unsigned degree, Rng& rng) {
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  std::vector<Monomial> terms;
  std::vector<unsigned> e(coordinate_count, 0);
  // Odometer over exponent vectors, keeping those of total degree <= degree.
  while (true) {
    unsigned total = 0;
    for (unsigned v : e) total += v;
    if (total <= degree) terms.push_back({coef(rng), e});
    std::size_t i = 0;
    while (i < coordinate_count && ++e[i] > degree) e[i++] = 0;
    if (i == coordinate_count) break;
  }
  return polynomial(coordinate_count, std::move(terms));
}

double ScalarField::operator()(const Eigen::VectorXd& coords) const {
  if (static_cast<std::size_t>(coords.size()) != count_)
    throw ValidationError("ScalarField: expected " + std::to_string(count_) + " coordinates");
  return (*rule_)(coords);
}

ScalarField operator+(const ScalarField& a, const ScalarField& b) {
  if (a.count_ != b.count_) throw ValidationError("ScalarField: coordinate counts differ");
  return ScalarField(
      a.count_, [ra = a.rule_, rb = b.rule_](const Eigen::VectorXd& x) { return (*ra)(x) + (*rb)(x); },
      "(" + a.name_ + " + " + b.name_ + ")");
}

ScalarField operator*(const ScalarField& a, const ScalarField& b) {
  if (a.count_ != b.count_) throw ValidationError("ScalarField: coordinate counts differ");
  return ScalarField(
      a.count_, [ra = a.rule_, rb = b.rule_](const Eigen::VectorXd& x) { return (*ra)(x) * (*rb)(x); },
      "(" + a.name_ + " * " + b.name_ + ")");
}

ScalarField operator*(double s, const ScalarField& a) {
  return ScalarField(
      a.count_, [s, ra = a.rule_](const Eigen::VectorXd& x) { return s * (*ra)(x); },
      std::to_string(s) + " * " + a.name_);
}

}  // namespace semiheap
