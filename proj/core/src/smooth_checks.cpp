#include "semiheap/smooth_checks.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "semiheap/table.hpp"

namespace semiheap {

namespace {

double rel(const Matrix& a, const Matrix& b) {
  if (!a.allFinite() || !b.allFinite()) return INFINITY;
  return (a - b).norm() / std::max(1.0, a.norm());
}

double rel(double a, double b) {
  if (!std::isfinite(a) || !std::isfinite(b)) return INFINITY;
  return std::abs(a - b) / std::max(1.0, std::abs(a));
}

std::string format_matrix(const Matrix& m) {
  std::ostringstream os;
  os.precision(17);
  os << '[';
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if (i) os << ';';
    for (Eigen::Index j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j);
  }
  os << ']';
  return os.str();
}

// Tracks the maximum residual and the first input on which it exceeded tol.
class Tally {
 public:
  Tally(std::string check, std::uint64_t seed, double tol) : tol_(tol) {
    report_.check = std::move(check);
    report_.seed = seed;
  }

  void add(double residual, std::initializer_list<const Matrix*> inputs = {}, const char* label = nullptr) {
    if (!(residual <= report_.max_residual)) report_.max_residual = residual;
    if (!(residual < tol_) && !failed_) {
      failed_ = true;
      std::ostringstream os;
      if (label) os << label << ' ';
      const char* names[] = {"x", "y", "z", "u", "w"};
      std::size_t k = 0;
      for (const Matrix* m : inputs) {
        report_.witness_points.push_back(*m);
        os << (k ? " " : "") << (k < 5 ? names[k] : "p") << '=' << format_matrix(*m);
        ++k;
      }
      report_.witness = os.str();
    }
  }

  void fail(std::string why) {
    if (!failed_) report_.witness = std::move(why);
    failed_ = true;
  }

  NumericReport finish() {
    report_.pass = !failed_ && report_.max_residual < tol_;
    return report_;
  }

 private:
  double tol_;
  bool failed_ = false;
  NumericReport report_;
};

std::array<Matrix, 5> sample5(const MatrixHeapChart& chart, Rng& rng) {
  return {chart.sample(rng), chart.sample(rng), chart.sample(rng), chart.sample(rng), chart.sample(rng)};
}

}  // namespace

std::string NumericReport::line() const {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3e", max_residual);
  std::ostringstream os;
  os << "check=" << check << " max_residual=" << buf << " seed=" << seed << " pass=" << (pass ? "true" : "false");
  return os.str();
}

NumericReport mu_membership_check(const MatrixHeapChart& chart, std::size_t samples, std::uint64_t seed,
                                  double tol) {
  Rng rng(seed);
  Tally tally("membership", seed, tol);
  for (std::size_t s = 0; s < samples; ++s) {
    const Matrix x = chart.sample(rng), y = chart.sample(rng), z = chart.sample(rng);
    tally.add(chart.membership_residual(x));
    tally.add(chart.membership_residual(chart.mu(x, y, z)), {&x, &y, &z});
  }
  return tally.finish();
}

NumericReport check_para_associative_numeric(const MatrixHeapChart& chart, std::size_t samples,
                                             std::uint64_t seed, double tol) {
  Rng rng(seed);
  Tally tally("para-associative", seed, tol);
  for (std::size_t s = 0; s < samples; ++s) {
    const auto x = sample5(chart, rng);
    const Matrix a = chart.mu(chart.mu(x[0], x[1], x[2]), x[3], x[4]);
    const Matrix b = chart.mu(x[0], chart.mu(x[3], x[2], x[1]), x[4]);
    const Matrix c = chart.mu(x[0], x[1], chart.mu(x[2], x[3], x[4]));
    tally.add(std::max({rel(a, b), rel(a, c), rel(b, c)}), {&x[0], &x[1], &x[2], &x[3], &x[4]});
  }
  return tally.finish();
}

Pushforward dL(const MatrixHeapChart& chart, const Matrix& x, const Matrix& y, const Matrix& z, const Matrix& v,
               double h) {
  if (!(chart.tangent_residual(z, v) <= 1e-9)) throw ValidationError("dL: V is not tangent at z");
  Pushforward out;
  out.analytic = chart.push_left(x, y, v);
  out.finite_difference =
      (chart.mu(x, y, chart.curve(z, v, h)) - chart.mu(x, y, chart.curve(z, v, -h))) / (2.0 * h);
  out.residual = rel(out.analytic, out.finite_difference);
  return out;
}

NumericReport pushforward_check(const MatrixHeapChart& chart, std::size_t samples, std::uint64_t seed, double h,
                                double tol) {
  Rng rng(seed);
  Tally tally("pushforward", seed, tol);
  for (std::size_t s = 0; s < samples; ++s) {
    const Matrix x = chart.sample(rng), y = chart.sample(rng), z = chart.sample(rng);
    const Matrix v = chart.sample_tangent(z, rng);
    tally.add(dL(chart, x, y, z, v, h).residual, {&x, &y, &z, &v});
  }
  return tally.finish();
}

ConvergenceReport pushforward_convergence(const MatrixHeapChart& chart, std::size_t samples, std::uint64_t seed,
                                          double h) {
  Rng rng(seed);
  ConvergenceReport out;
  for (std::size_t s = 0; s < samples; ++s) {
    const Matrix x = chart.sample(rng), y = chart.sample(rng), z = chart.sample(rng);
    const Matrix v = chart.sample_tangent(z, rng);
    out.residual_h += dL(chart, x, y, z, v, h).residual;
    out.residual_half += dL(chart, x, y, z, v, h / 2).residual;
  }
  out.ratio = out.residual_half > 0 ? out.residual_h / out.residual_half : 0.0;
  out.report.check = "convergence";
  out.report.seed = seed;
  // Reported residual is the distance of the ratio from 4.
  out.report.max_residual = std::abs(out.ratio - 4.0);
  out.report.pass = out.ratio >= 3.5 && out.ratio <= 4.5;
  if (!out.report.pass) out.report.witness = "ratio=" + std::to_string(out.ratio);
  return out;
}

VectorFieldRule left_invariant_field(const MatrixHeapChart& chart, const Matrix& v) {
  return [&chart, v](const Matrix& x) { return chart.push_left(x, chart.basepoint(), v); };
}

NumericReport left_invariant_check(const MatrixHeapChart& chart, const Matrix& v, std::size_t samples,
                                   std::uint64_t seed, double h, double tol) {
  Rng rng(seed);
  Tally tally("left-invariant", seed, tol);
  const auto field = left_invariant_field(chart, v);
  if (field(chart.basepoint()) != v) tally.fail("V(x0) differs from v");
  for (std::size_t s = 0; s < samples; ++s) {
    const Matrix x = chart.sample(rng), y = chart.sample(rng), z = chart.sample(rng);
    const Matrix expected = field(chart.mu(x, y, z));
    const auto push = dL(chart, x, y, z, field(z), h);
    tally.add(std::max(rel(expected, push.analytic), rel(expected, push.finite_difference)), {&x, &y, &z});
  }
  return tally.finish();
}

NumericReport compare_group_vs_heap_invariance(const MatrixHeapChart& chart, const Matrix& v,
                                               std::size_t samples, std::uint64_t seed, double h, double tol) {
  Rng rng(seed);
  Tally tally("group-vs-heap", seed, tol);
  const auto heap_field = left_invariant_field(chart, v);
  // Group-sense invariant fields: x v, or the constant v on (R^n, +).
  const auto group_field = [&](const Matrix& x) -> Matrix { return chart.is_affine() ? v : Matrix(x * v); };
  for (std::size_t s = 0; s < samples; ++s) {
    const Matrix x = chart.sample(rng), z = chart.sample(rng);
    if (heap_field(x) != group_field(x)) {
      tally.add(INFINITY, {&x}, "forms-differ");
      continue;
    }
    // With y = x0 the heap condition is (dL_x)_z V(z) = V(x z).
    const auto push = dL(chart, x, chart.basepoint(), z, heap_field(z), h);
    const Matrix group_expected = group_field(chart.mu(x, chart.basepoint(), z));
    tally.add(rel(group_expected, push.finite_difference), {&x, &z});
  }
  return tally.finish();
}

BracketReport bracket_closure(const MatrixHeapChart& chart, const Matrix& u, const Matrix& v, std::size_t samples,
                              std::uint64_t seed, double t, double tol) {
  Rng rng(seed);
  Tally tally("bracket", seed, tol);
  const auto fu = left_invariant_field(chart, u);
  const auto fv = left_invariant_field(chart, v);
  const auto fb = left_invariant_field(chart, chart.algebra_bracket(u, v));
  // Flows of invariant fields are curves through p with velocity X(p).
  const auto flow = [&](const VectorFieldRule& f, const Matrix& p, double s) { return chart.curve(p, f(p), s); };
  const auto commutator = [&](const Matrix& p, double s) {
    Matrix q = flow(fu, p, s);
    q = flow(fv, q, s);
    q = flow(fu, q, -s);
    return flow(fv, q, -s);
  };
  BracketReport out;
  out.min_frame_rank = chart.dimension();
  for (std::size_t k = 0; k < samples; ++k) {
    const Matrix p = chart.sample(rng);
    const Matrix estimate = ((commutator(p, t) + commutator(p, -t)) / 2.0 - p) / (t * t);
    tally.add(rel(fb(p), estimate), {&p});

    Matrix frame(static_cast<Eigen::Index>(chart.coordinate_count()), static_cast<Eigen::Index>(chart.dimension()));
    for (std::size_t a = 0; a < chart.dimension(); ++a)
      frame.col(static_cast<Eigen::Index>(a)) = chart.coordinates(chart.push_left(p, chart.basepoint(), chart.tangent_basis()[a]));
    Eigen::FullPivLU<Matrix> lu(frame);
    lu.setThreshold(1e-10);
    out.min_frame_rank = std::min<std::size_t>(out.min_frame_rank, static_cast<std::size_t>(lu.rank()));
  }
  if (out.min_frame_rank != chart.dimension()) tally.fail("frame rank " + std::to_string(out.min_frame_rank));
  out.report = tally.finish();
  return out;
}

NumericReport multiplicative_function_check(const MatrixHeapChart& chart, const ScalarField& f, std::size_t samples,
                                            std::uint64_t seed, double tol, bool pointed) {
  if (f.coordinate_count() != chart.coordinate_count())
    throw ValidationError("multiplicative_function_check: field has the wrong number of coordinates");
  Rng rng(seed);
  Tally tally("multiplicative-function", seed, tol);
  const Matrix& x0 = chart.basepoint();
  if (pointed) tally.add(std::abs(f.at(chart, x0)), {&x0}, "pointed");
  const auto check = [&](const Matrix& x, const Matrix& y, const Matrix& z) {
    const double fx = f.at(chart, x), fy = f.at(chart, y), fz = f.at(chart, z);
    const double lhs = f.at(chart, chart.mu(x, y, z));
    const double rhs = fx - fy + fz;
    const double scale = std::max({1.0, std::abs(fx), std::abs(fy), std::abs(fz)});
    tally.add(std::isfinite(lhs) ? std::abs(lhs - rhs) / scale : INFINITY, {&x, &y, &z});
  };
  for (const auto& e : chart.tangent_basis()) {
    const Matrix p = chart.curve(x0, e, 1.0);
    check(p, x0, p);
  }
  for (std::size_t s = 0; s < samples; ++s) {
    const Matrix x = chart.sample(rng), y = chart.sample(rng), z = chart.sample(rng);
    check(x, y, z);
  }
  return tally.finish();
}

Matrix integrate_flow(const VectorFieldRule& x, const Matrix& start, double t, double step) {
  const auto steps = static_cast<long>(std::ceil(std::abs(t) / step - 1e-9));
  if (steps == 0) return start;
  const double dt = t / static_cast<double>(steps);
  Matrix p = start;
  for (long k = 0; k < steps; ++k) {
    const Matrix k1 = x(p);
    const Matrix k2 = x(p + 0.5 * dt * k1);
    const Matrix k3 = x(p + 0.5 * dt * k2);
    const Matrix k4 = x(p + dt * k3);
    p += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return p;
}

NumericReport multiplicative_vector_field_check(const MatrixHeapChart& chart, const VectorFieldRule& x,
                                                std::size_t samples, std::uint64_t seed, double tol) {
  Rng rng(seed);
  Tally tally("multiplicative-vector-field", seed, tol);
  constexpr std::array<double, 4> times{-0.5, -0.1, 0.1, 0.5};
  for (std::size_t s = 0; s < samples; ++s) {
    const Matrix a = chart.sample(rng), b = chart.sample(rng), c = chart.sample(rng);
    const Matrix m = chart.mu(a, b, c);
    for (double t : times) {
      const Matrix lhs = integrate_flow(x, m, t);
      const Matrix fa = integrate_flow(x, a, t), fb = integrate_flow(x, b, t), fc = integrate_flow(x, c, t);
      double residual = INFINITY;
      if (lhs.allFinite() && fa.allFinite() && fb.allFinite() && fc.allFinite())
        residual = rel(lhs, chart.mu(fa, fb, fc));
      const std::string label = "t=" + std::to_string(t);
      tally.add(residual, {&a, &b, &c}, label.c_str());
    }
  }
  return tally.finish();
}

NumericReport tangent_semiheap_check(const MatrixHeapChart& chart, std::size_t samples, std::uint64_t seed,
                                     double h, double tol) {
  Rng rng(seed);
  Tally tally("tangent-semiheap", seed, tol);
  struct Tangent {
    Matrix g, v;
  };
  const auto lift = [&](const Tangent& a, const Tangent& b, const Tangent& c) {
    return Tangent{chart.mu(a.g, b.g, c.g), chart.dmu(a.g, b.g, c.g, a.v, b.v, c.v)};
  };
  for (std::size_t s = 0; s < samples; ++s) {
    std::array<Tangent, 5> x;
    for (auto& t : x) {
      t.g = chart.sample(rng);
      t.v = chart.sample_tangent(t.g, rng);
    }
    const Tangent a = lift(lift(x[0], x[1], x[2]), x[3], x[4]);
    const Tangent b = lift(x[0], lift(x[3], x[2], x[1]), x[4]);
    const Tangent c = lift(x[0], x[1], lift(x[2], x[3], x[4]));
    const double para = std::max({rel(a.g, b.g), rel(a.g, c.g), rel(a.v, b.v), rel(a.v, c.v)});

    const auto at = [&](double t) {
      return chart.mu(chart.curve(x[0].g, x[0].v, t), chart.curve(x[1].g, x[1].v, t),
                      chart.curve(x[2].g, x[2].v, t));
    };
    const Matrix fd = (at(h) - at(-h)) / (2.0 * h);
    const Matrix analytic = chart.dmu(x[0].g, x[1].g, x[2].g, x[0].v, x[1].v, x[2].v);
    tally.add(std::max(para, rel(analytic, fd)), {&x[0].g, &x[1].g, &x[2].g, &x[3].g, &x[4].g});
  }
  return tally.finish();
}

CoalgebraReport coassociativity_check(const MatrixHeapChart& chart, const ScalarField& f1, const ScalarField& f2,
                                      std::size_t samples, std::uint64_t seed, double tol) {
  if (f1.coordinate_count() != chart.coordinate_count() || f2.coordinate_count() != chart.coordinate_count())
    throw ValidationError("coassociativity_check: field has the wrong number of coordinates");
  Rng rng(seed);
  std::uniform_real_distribution<double> coef(-2.0, 2.0);
  Tally tally("coassociativity", seed, tol);
  CoalgebraReport out;
  const auto one = ScalarField::constant(chart.coordinate_count(), 1.0);
  const auto product = f1 * f2;
  const auto delta = [&](const ScalarField& f, const Matrix& x, const Matrix& y, const Matrix& z) {
    return f.at(chart, chart.mu(x, y, z));
  };
  for (std::size_t s = 0; s < samples; ++s) {
    const auto x = sample5(chart, rng);
    const double a = coef(rng), b = coef(rng);
    const auto combo = a * f1 + b * f2;

    const double d1 = delta(f1, x[0], x[1], x[2]), d2 = delta(f2, x[0], x[1], x[2]);
    const double lin = rel(delta(combo, x[0], x[1], x[2]), a * d1 + b * d2);
    const double mult = rel(delta(product, x[0], x[1], x[2]), d1 * d2);
    const double unit = rel(delta(one, x[0], x[1], x[2]), 1.0);
    const double p = f1.at(chart, chart.mu(chart.mu(x[0], x[1], x[2]), x[3], x[4]));
    const double q = f1.at(chart, chart.mu(x[0], chart.mu(x[3], x[2], x[1]), x[4]));
    const double r = f1.at(chart, chart.mu(x[0], x[1], chart.mu(x[2], x[3], x[4])));
    const double coassoc = std::max({rel(p, q), rel(p, r), rel(q, r)});

    out.linearity = std::max(out.linearity, lin);
    out.multiplicativity = std::max(out.multiplicativity, mult);
    out.unit = std::max(out.unit, unit);
    out.para_coassociativity = std::max(out.para_coassociativity, coassoc);
    tally.add(std::max({lin, mult, unit, coassoc}), {&x[0], &x[1], &x[2], &x[3], &x[4]});
  }
  out.report = tally.finish();
  return out;
}

Eigen::VectorXd euclidean_mu(const Eigen::VectorXd& x, const Eigen::VectorXd& y, const Eigen::VectorXd& z) {
  return x * y.dot(z);
}

NumericReport euclidean_semiheap_check(std::size_t n, std::size_t samples, std::uint64_t seed, double tol) {
  if (n == 0) throw ValidationError("euclidean_semiheap_check: n must be positive");
  Rng rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const auto vec = [&] {
    Eigen::VectorXd v(static_cast<Eigen::Index>(n));
    for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = u(rng);
    return v;
  };
  Tally tally("euclidean-semiheap", seed, tol);
  for (std::size_t s = 0; s < samples; ++s) {
    const Eigen::VectorXd w = vec(), x = vec(), y = vec(), z = vec(), v = vec();
    // Scalar driver identity.
    const double s1 = w.dot(x) * y.dot(z);
    const double s2 = w.dot(x * y.dot(z));
    const double s3 = y.dot(x.dot(w) * z);
    // Para-associativity of [X,Y,Z] = X g(Y,Z) on (w, x, y, z, v).
    const Matrix a = euclidean_mu(euclidean_mu(w, x, y), z, v);
    const Matrix b = euclidean_mu(w, euclidean_mu(z, y, x), v);
    const Matrix c = euclidean_mu(w, x, euclidean_mu(y, z, v));
    // Fiberwise action of the semiheap on a vector v.
    const Matrix act_twice = v * w.dot(x) * y.dot(z);
    const Matrix act_once = v * w.dot(x * y.dot(z));
    const Matrix wm = w, xm = x, ym = y, zm = z, vm = v;
    tally.add(std::max({rel(s1, s2), rel(s1, s3), rel(a, b), rel(a, c), rel(b, c), rel(act_twice, act_once)}),
              {&wm, &xm, &ym, &zm, &vm});
  }
  return tally.finish();
}

NumericReport exp_hom_check(std::size_t samples, std::uint64_t seed, double tol) {
  Rng rng(seed);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  const MatrixHeapChart target(ChartKind::nonzero_reals);
  Tally tally("exp-hom", seed, tol);
  if (std::exp(0.0) != 1.0) tally.fail("exp(0) != 1");
  const auto e = [](double t) { return Matrix::Constant(1, 1, std::exp(t)); };
  for (std::size_t s = 0; s < samples; ++s) {
    const double x = u(rng), y = u(rng), z = u(rng);
    const Matrix lhs = e(x - y + z);
    const Matrix rhs = target.mu(e(x), e(y), e(z));
    const Matrix mx = Matrix::Constant(1, 1, x), my = Matrix::Constant(1, 1, y), mz = Matrix::Constant(1, 1, z);
    tally.add(rel(lhs, rhs), {&mx, &my, &mz});
  }
  return tally.finish();
}

}  // namespace semiheap
