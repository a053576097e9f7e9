#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <cmath>
#include <map>
#include <optional>
#include <sstream>

#include "semiheap/actions.hpp"
#include "semiheap/bundles.hpp"
#include "semiheap/enumeration.hpp"
#include "semiheap/formats.hpp"
#include "semiheap/functors.hpp"
#include "semiheap/heap_chart.hpp"
#include "semiheap/scalar_field.hpp"
#include "semiheap/semiheap.hpp"
#include "semiheap/smooth_checks.hpp"
#include "semiheap/translations.hpp"

namespace semiheap::cli {

namespace {

const char* tf(bool b) { return b ? "true" : "false"; }

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ValidationError("cannot open '" + path + "'");
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

struct Options {
  unsigned jobs = 1;
  std::uint64_t seed = 42;
  std::optional<double> budget;
  std::string in_path;
  std::string out_path;

  // verb options
  std::optional<Index> pt;
  bool diagnostic = false;
  std::string law;
  std::string semiheap_path;
  Index point = 0;
  std::size_t n = 0;
  bool heaps = false;
  bool up_to_iso = false;

  // numeric options
  std::string chart = "SO3";
  std::size_t samples = 100;
  std::optional<double> h;
  std::optional<double> tol;
  std::size_t direction = 0;
  std::size_t u = 0;
  std::size_t v = 1;
  std::string function = "linear";
  std::string field = "invariant";
  std::size_t dim = 3;
};

// A semiheap from an SHF1 table, or a failure line on `o`.
std::optional<FiniteSemiheap> certify_or_report(const TernaryTable& t, unsigned jobs, std::ostream& o) {
  if (auto r = verify_para_associative(t, jobs); !r) {
    o << "fail para-associative=false " << describe(r.witness()) << '\n';
    return std::nullopt;
  }
  return detail::assume_certified(t);
}

int run_check(const Options& opt, const std::string& input, std::ostream& o) {
  const auto doc = parse_shf(input);
  const auto s = certify_or_report(doc.table, opt.jobs, o);
  if (!s) return law_failure;
  o << "pass para-associative=true heap=" << tf(is_heap(*s)) << " abelian=" << tf(is_abelian(*s)) << '\n';
  return pass;
}

int run_heapify(const std::string& input, std::ostream& o) {
  const auto g = parse_grp(input);
  o << write_shf(heapify(g).semiheap().table(), g.identity());
  return pass;
}

int run_groupify(const Options& opt, const std::string& input, std::ostream& o) {
  const auto doc = parse_shf(input);
  const auto pt = opt.pt ? opt.pt : doc.basepoint;
  if (!pt) throw ValidationError("groupify needs a basepoint: pass --pt or put pt= in the header");
  const auto s = certify_or_report(doc.table, opt.jobs, o);
  if (!s) return law_failure;
  const PointedSemiheap p(*s, *pt);
  if (is_heap(*s)) {
    o << write_grp(groupify(p));
    return pass;
  }
  if (opt.diagnostic) {
    auto r = groupify_diagnostic(p);
    if (auto* g = std::get_if<FiniteGroup>(&r)) {
      o << write_grp(*g);
      return pass;
    }
    o << "fail group=false " << describe(std::get<GroupAxiomFailure>(r)) << '\n';
    return law_failure;
  }
  Index x = 0;
  while (is_biunitary(*s, x)) ++x;
  o << "fail heap=false witness=" << x << '\n';
  return law_failure;
}

int run_translations(const Options& opt, const std::string& input, std::ostream& o) {
  const auto s = certify_or_report(parse_shf(input).table, opt.jobs, o);
  if (!s) return law_failure;
  if (opt.law == "centric") {
    if (auto w = centric_closure_failure(*s)) {
      o << "fail law=centric closed=false params=" << join_indices(w->params)
        << " composite=" << join_indices(w->composite) << '\n';
      return law_failure;
    }
    o << "pass law=centric closed=true\n";
    return pass;
  }
  const auto r = opt.law == "right" ? right_compose_law(*s) : opt.law == "left" ? left_compose_law(*s) : lr_commute(*s);
  if (!r) {
    o << "fail " << describe(r.witness()) << '\n';
    return law_failure;
  }
  o << "pass law=" << opt.law << '\n';
  return pass;
}

int run_action_check(const Options& opt, const std::string& input, std::ostream& o) {
  const auto table = parse_act(input);
  const auto s = certify_or_report(parse_shf(read_file(opt.semiheap_path)).table, opt.jobs, o);
  if (!s) return law_failure;
  if (auto r = verify_action(table, *s); !r) {
    o << "fail action=false " << describe(r.witness()) << '\n';
    return law_failure;
  }
  o << "pass action=true m=" << table.space_size() << " n=" << table.semiheap_size() << '\n';
  return pass;
}

int run_orbit(const Options& opt, const std::string& input, std::ostream& o) {
  const auto table = parse_act(input);
  const auto s = certify_or_report(parse_shf(read_file(opt.semiheap_path)).table, opt.jobs, o);
  if (!s) return law_failure;
  if (auto r = verify_action(table, *s); !r) {
    o << "fail action=false " << describe(r.witness()) << '\n';
    return law_failure;
  }
  const auto rep = orbit(FiniteAction::certify(*s, table), opt.point);
  o << "orbit point=" << opt.point << " size=" << rep.points.size() << " points=" << join_indices(rep.points)
    << " symmetric=" << tf(!rep.asymmetric_witness);
  if (rep.asymmetric_witness) o << " witness=" << *rep.asymmetric_witness;
  o << '\n';
  return pass;
}

int run_bundle_check(const std::string& input, std::ostream& o) {
  const auto b = parse_bnd(input);
  if (auto r = verify_bundle(b); !r) {
    o << "fail bundle=false " << describe(r.witness()) << '\n';
    return law_failure;
  }
  for (std::size_t i = 0; i < b.charts().size(); ++i)
    for (Index m : b.charts()[i].cover)
      for (const auto& cross : fiber_semiheap(b, m, i).cross_charts)
        if (!cross.is_homomorphism) {
          o << "fail fibers_isomorphic=false base=" << m << " charts=" << i << ',' << cross.chart << '\n';
          return law_failure;
        }
  o << "pass bundle=true charts=" << b.charts().size() << " fibers_isomorphic=true\n";
  return pass;
}

int run_enumerate(const Options& opt, std::ostream& o) {
  EnumerationOptions e{opt.up_to_iso, opt.budget, opt.jobs};
  const auto rep = opt.heaps ? enumerate_heaps(opt.n, e) : enumerate_semiheaps(opt.n, e);
  for (const auto& t : rep.tables) o << write_shf(t);
  o << rep.summary() << '\n';
  return pass;
}

const Matrix& basis_element(const MatrixHeapChart& chart, std::size_t k) {
  if (k >= chart.dimension())
    throw ValidationError("basis index " + std::to_string(k) + " out of range for " + chart.name());
  return chart.tangent_basis()[k];
}

ScalarField named_function(const MatrixHeapChart& chart, const std::string& name) {
  const std::size_t c = chart.coordinate_count();
  if (name == "zero") return ScalarField::constant(c, 0.0);
  if (name == "linear") return ScalarField::linear(Eigen::VectorXd::Ones(static_cast<Eigen::Index>(c)));
  if (name == "square") {
    std::vector<Monomial> terms;
    for (std::size_t i = 0; i < c; ++i) {
      std::vector<unsigned> e(c, 0);
      e[i] = 2;
      terms.push_back({1.0, e});
    }
    return ScalarField::polynomial(c, std::move(terms));
  }
  if (name == "log-abs-det") {
    if (chart.is_affine()) throw ValidationError("log-abs-det needs a matrix group chart");
    const auto rows = chart.rows();
    return ScalarField(
        c,
        [rows](const Eigen::VectorXd& x) {
          return std::log(std::abs(Eigen::Map<const Matrix>(x.data(), rows, rows).determinant()));
        },
        "log-abs-det");
  }
  throw ValidationError("unknown function '" + name + "' (zero, linear, square, log-abs-det)");
}

VectorFieldRule named_field(const MatrixHeapChart& chart, const Options& opt) {
  const Matrix e = basis_element(chart, opt.direction);
  if (opt.field == "invariant") return left_invariant_field(chart, e);
  if (opt.field == "linear") {
    // Euler field on R^n; the infinitesimal conjugation e x - x e otherwise.
    if (chart.is_affine()) return [](const Matrix& x) { return x; };
    return [e](const Matrix& x) -> Matrix { return e * x - x * e; };
  }
  if (opt.field == "square") return [](const Matrix& x) -> Matrix { return x.cwiseProduct(x); };
  throw ValidationError("unknown field '" + opt.field + "' (invariant, linear, square)");
}

int run_numeric(const Options& opt, const std::string& check, std::ostream& o) {
  const auto chart = MatrixHeapChart::by_name(opt.chart);
  const auto s = opt.samples;
  const auto seed = opt.seed;
  NumericReport r;
  std::string detail;
  if (check == "para-associative") {
    r = check_para_associative_numeric(chart, s, seed, opt.tol.value_or(1e-9));
  } else if (check == "membership") {
    r = mu_membership_check(chart, s, seed, opt.tol.value_or(1e-12));
  } else if (check == "pushforward") {
    r = pushforward_check(chart, s, seed, opt.h.value_or(1e-5), opt.tol.value_or(1e-6));
  } else if (check == "convergence") {
    const auto c = pushforward_convergence(chart, s, seed, opt.h.value_or(1e-2));
    r = c.report;
    std::ostringstream d;
    d << "detail ratio=" << c.ratio;
    detail = d.str();
  } else if (check == "left-invariant") {
    r = left_invariant_check(chart, basis_element(chart, opt.direction), s, seed, opt.h.value_or(1e-5),
                             opt.tol.value_or(1e-6));
  } else if (check == "group-vs-heap") {
    r = compare_group_vs_heap_invariance(chart, basis_element(chart, opt.direction), s, seed,
                                         opt.h.value_or(1e-5), opt.tol.value_or(1e-6));
  } else if (check == "bracket") {
    const auto b = bracket_closure(chart, basis_element(chart, opt.u), basis_element(chart, opt.v), s, seed,
                                   opt.h.value_or(1e-3), opt.tol.value_or(1e-4));
    r = b.report;
    detail = "detail frame_rank=" + std::to_string(b.min_frame_rank);
  } else if (check == "tangent") {
    r = tangent_semiheap_check(chart, s, seed, opt.h.value_or(1e-5), opt.tol.value_or(1e-6));
  } else if (check == "coassociativity") {
    Rng rng(seed);
    const auto f1 = ScalarField::random_polynomial(chart.coordinate_count(), 3, rng);
    const auto f2 = ScalarField::random_polynomial(chart.coordinate_count(), 3, rng);
    r = coassociativity_check(chart, f1, f2, s, seed, opt.tol.value_or(1e-10)).report;
  } else if (check == "multiplicative-function") {
    r = multiplicative_function_check(chart, named_function(chart, opt.function), s, seed,
                                      opt.tol.value_or(1e-12));
  } else if (check == "multiplicative-vector-field") {
    r = multiplicative_vector_field_check(chart, named_field(chart, opt), s, seed, opt.tol.value_or(1e-6));
  } else if (check == "euclidean") {
    r = euclidean_semiheap_check(opt.dim, s, seed, opt.tol.value_or(1e-12));
  } else if (check == "exp-hom") {
    r = exp_hom_check(s, seed, opt.tol.value_or(1e-12));
  }
  o << r.line() << '\n';
  if (!detail.empty()) o << detail << '\n';
  if (!r.pass) o << "witness " << (r.witness.empty() ? "none" : r.witness) << '\n';
  return r.pass ? pass : law_failure;
}

const std::vector<std::string> numeric_checks{
    "para-associative", "membership",      "pushforward",
    "convergence",      "left-invariant",  "group-vs-heap",
    "bracket",          "tangent",         "coassociativity",
    "multiplicative-function", "multiplicative-vector-field", "euclidean",
    "exp-hom"};

}  // namespace

int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Verification toolkit for semiheaps, heaps and their actions", "semiheap"};
  app.require_subcommand(1);
  Options opt;
  double budget = -1.0;
  app.add_option("--jobs", opt.jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--seed", opt.seed, "seed for stochastic checks");
  app.add_option("--budget", budget, "time budget in seconds")->check(CLI::NonNegativeNumber);
  app.add_option("--in", opt.in_path, "read input from a file instead of stdin");
  app.add_option("--out", opt.out_path, "write output to a file instead of stdout");

  auto* check = app.add_subcommand("check", "verify the semiheap laws of an SHF1 table")->fallthrough();
  auto* heapify_cmd = app.add_subcommand("heapify", "GRP1 group to pointed SHF1 heap")->fallthrough();
  auto* groupify_cmd = app.add_subcommand("groupify", "pointed SHF1 heap to GRP1 group")->fallthrough();
  Index pt = 0;
  auto* pt_opt = groupify_cmd->add_option("--pt", pt, "basepoint");
  groupify_cmd->add_flag("--diagnostic", opt.diagnostic, "report the first failing group axiom");
  auto* translations = app.add_subcommand("translations", "translation laws of an SHF1 semiheap")->fallthrough();
  translations->add_option("--law", opt.law)
      ->required()
      ->check(CLI::IsMember({"right", "left", "commute", "centric"}));
  auto* action_check = app.add_subcommand("action-check", "compatibility law of an ACT1 action")->fallthrough();
  action_check->add_option("--semiheap", opt.semiheap_path, "SHF1 file of the acting semiheap")->required();
  auto* orbit_cmd = app.add_subcommand("orbit", "reachable set of a point under an ACT1 action")->fallthrough();
  orbit_cmd->add_option("--semiheap", opt.semiheap_path, "SHF1 file of the acting semiheap")->required();
  orbit_cmd->add_option("--point", opt.point)->required();
  auto* bundle = app.add_subcommand("bundle-check", "bundle axioms of a BND1 bundle")->fallthrough();
  auto* enumerate = app.add_subcommand("enumerate", "enumerate semiheap or heap tables")->fallthrough();
  enumerate->add_option("--n", opt.n, "carrier size")->required();
  enumerate->add_flag("--heaps", opt.heaps);
  enumerate->add_flag("--up-to-iso", opt.up_to_iso);
  enumerate->add_option("--budget", budget, "time budget in seconds")->check(CLI::NonNegativeNumber);
  auto* numeric = app.add_subcommand("numeric", "sampled checks on matrix heaps")->fallthrough();
  numeric->require_subcommand(1);
  numeric->add_option("--chart", opt.chart)->check(CLI::IsMember(MatrixHeapChart::names()));
  numeric->add_option("--samples", opt.samples);
  numeric->add_option("--step", opt.h, "finite-difference or flow step");
  numeric->add_option("--tol", opt.tol);
  numeric->add_option("--direction", opt.direction, "tangent basis index");
  numeric->add_option("--u", opt.u, "first basis index for bracket");
  numeric->add_option("--v", opt.v, "second basis index for bracket");
  numeric->add_option("--function", opt.function, "zero, linear, square, log-abs-det");
  numeric->add_option("--field", opt.field, "invariant, linear, square");
  numeric->add_option("--dim", opt.dim, "dimension for the euclidean check");
  for (const auto& name : numeric_checks) numeric->add_subcommand(name)->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return input_error;
  }
  if (*pt_opt) opt.pt = pt;
  if (budget >= 0) opt.budget = budget;

  std::ostringstream report;
  int code = input_error;
  try {
    const auto input = [&] {
      if (!opt.in_path.empty()) return read_file(opt.in_path);
      std::ostringstream os;
      os << in.rdbuf();
      return os.str();
    };
    if (check->parsed()) code = run_check(opt, input(), report);
    else if (heapify_cmd->parsed()) code = run_heapify(input(), report);
    else if (groupify_cmd->parsed()) code = run_groupify(opt, input(), report);
    else if (translations->parsed()) code = run_translations(opt, input(), report);
    else if (action_check->parsed()) code = run_action_check(opt, input(), report);
    else if (orbit_cmd->parsed()) code = run_orbit(opt, input(), report);
    else if (bundle->parsed()) code = run_bundle_check(input(), report);
    else if (enumerate->parsed()) code = run_enumerate(opt, report);
    else if (numeric->parsed()) code = run_numeric(opt, numeric->get_subcommands().front()->get_name(), report);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return input_error;
  }

  if (opt.out_path.empty()) {
    out << report.str();
  } else {
    std::ofstream f(opt.out_path, std::ios::binary);
    if (!(f << report.str())) {
      err << "error: cannot write '" << opt.out_path << "'\n";
      return input_error;
    }
  }
  return code;
}

}  // namespace semiheap::cli
