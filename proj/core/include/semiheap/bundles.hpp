#pragma once

// Semiheap bundles over finite bases.
//
// A chart t_i : pi^-1(U_i) -> U_i x S is stored as (p, q) pairs with the
// product point (m, s) encoded as q = m * n + s, the same pair encoding used
// for semiheap products.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "semiheap/actions.hpp"
#include "semiheap/group.hpp"
#include "semiheap/semiheap.hpp"

namespace semiheap {

struct BundleChart {
  std::vector<Index> cover;                        ///< U_i, a subset of the base
  std::vector<std::pair<Index, Index>> assignment; ///< (p, m * n + s)

  friend bool operator==(const BundleChart&, const BundleChart&) = default;
};

class DiscreteSemiheapBundle {
 public:
  /// Shape validation only: sizes, index ranges, charts being functions.
  /// Throws ValidationError. The axioms are checked by verify_bundle.
  DiscreteSemiheapBundle(std::size_t base_size, IndexMap projection, FiniteSemiheap structure,
                         ActionTable action, std::vector<BundleChart> charts);

  [[nodiscard]] std::size_t base_size() const noexcept { return base_size_; }
  [[nodiscard]] std::size_t total_size() const noexcept { return projection_.size(); }
  [[nodiscard]] const IndexMap& projection() const noexcept { return projection_; }
  [[nodiscard]] const FiniteSemiheap& structure() const noexcept { return structure_; }
  [[nodiscard]] const ActionTable& action() const noexcept { return action_; }
  [[nodiscard]] const std::vector<BundleChart>& charts() const noexcept { return charts_; }

  /// Copy with one action entry replaced; used for mutation testing.
  [[nodiscard]] DiscreteSemiheapBundle with_action_entry(Index p, Index x, Index y,
                                                         Index value) const;

  friend bool operator==(const DiscreteSemiheapBundle&, const DiscreteSemiheapBundle&) = default;

 private:
  std::size_t base_size_;
  IndexMap projection_;
  FiniteSemiheap structure_;
  ActionTable action_;
  std::vector<BundleChart> charts_;
};

enum class BundleAxiom {
  projection_surjective,
  fiber_preserving,
  cover_complete,
  chart_bijective,
  chart_triangle,
  chart_equivariant,
  action_compatible,
  // principal bundles only
  action_free,
  fiber_transitive,
};

const char* to_string(BundleAxiom a) noexcept;

struct BundleFailure {
  BundleAxiom axiom;
  std::optional<std::size_t> chart;
  std::vector<Index> witness;
};

std::string describe(const BundleFailure& f);

/// Checks, in order: surjectivity of pi, pi(p <| (x,y)) = pi(p), the cover
/// exhausting M, each chart being a bijection onto U_i x S, prj1 o t_i = pi,
/// t_i(p <| (x,y)) = (m, [s,x,y]) where t_i(p) = (m,s), and finally the
/// action compatibility law. Transitivity of the fiber action is not required.
CheckResult<BundleFailure> verify_bundle(const DiscreteSemiheapBundle& b);

/// M x S with right translation on the S factor, one chart with t = id.
DiscreteSemiheapBundle trivial_bundle(std::size_t base_size, const FiniteSemiheap& s);

/// Fiber pi^-1(m) with the structure induced through chart i:
/// [p,q,r]_i := t_i^-1 [t_i p, t_i q, t_i r].
struct FiberStructure {
  std::vector<Index> fiber;  ///< total-space points; local index k is fiber[k]
  FiniteSemiheap semiheap;
  struct CrossChart {
    std::size_t chart;
    IndexMap isomorphism;  ///< t_j^-1 o t_i in local fiber indices
    bool is_homomorphism;
  };
  std::vector<CrossChart> cross_charts;  ///< every other chart containing m
};

/// Throws ValidationError if m is not in chart i or the chart is not a
/// bijection on this fiber.
FiberStructure fiber_semiheap(const DiscreteSemiheapBundle& b, Index m, std::size_t chart);

/// Finite principal G-bundle: right action of G on P, charts into U_i x G
/// with the same pair encoding.
struct PrincipalBundle {
  std::size_t base_size;
  IndexMap projection;
  RightGroupAction action;
  std::vector<BundleChart> charts;
};

/// Principal axioms: surjective pi, fiber-preserving action, freeness,
/// transitivity on fibers, bijective charts with prj1 o t_i = pi and
/// G-equivariance t_i(a_g p) = (m, s g).
CheckResult<BundleFailure> verify_principal(const PrincipalBundle& p);

/// (P, M, G) -> (P, M, S_G) with p <| (g1, g2) := a_{g1^-1 g2}(p), same charts.
/// Throws ValidationError (with the failing axiom) if p is not principal.
DiscreteSemiheapBundle heapify_principal(const PrincipalBundle& p);

/// M x G with right multiplication and the identity chart.
PrincipalBundle trivial_principal_bundle(std::size_t base_size, const FiniteGroup& g);

/// M x G covered twice by U = M. Chart 0 is the identity; chart 1 agrees with
/// it except over the last base point, where it left-multiplies the fiber
/// coordinate by `twist`. The transition function is e on all but one point.
PrincipalBundle twisted_principal_bundle(std::size_t base_size, const FiniteGroup& g, Index twist);

struct BundleHom {
  IndexMap total;      ///< Phi : P -> P'
  IndexMap base;       ///< phi : M -> M'
  IndexMap structure;  ///< psi : S -> S'
};

enum class BundleHomAxiom { structure_hom, covers_base_map, equivariant };

struct BundleHomFailure {
  BundleHomAxiom axiom;
  std::vector<Index> witness;
};

std::string describe(const BundleHomFailure& f);

/// psi is a semiheap hom, pi' o Phi = phi o pi, and
/// Phi(p <| (x,y)) = Phi(p) <| (psi x, psi y).
CheckResult<BundleHomFailure> verify_bundle_hom(const BundleHom& h, const DiscreteSemiheapBundle& b,
                                                const DiscreteSemiheapBundle& b_prime);

/// Principal bundle hom: psi a group hom, pi' o Phi = phi o pi,
/// Phi(a_g p) = a'_{psi g}(Phi p).
bool is_principal_hom(const BundleHom& h, const PrincipalBundle& p, const PrincipalBundle& p_prime);

/// Heapification acts as the identity on the underlying maps.
BundleHom heapify_principal_hom(const BundleHom& h);

/// Componentwise composition second o first.
BundleHom compose(const BundleHom& second, const BundleHom& first);

}  // namespace semiheap
