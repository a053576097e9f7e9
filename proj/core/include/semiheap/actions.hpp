#pragma once

// Right semiheap actions sigma : M x S^(2) -> M on finite sets, written
// p <| (x, y) = sigma(p, x, y), with compatibility
//   sigma_{x3x4} o sigma_{x1x2} = sigma_{x1,[x2,x3,x4]}.

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "semiheap/group.hpp"
#include "semiheap/semiheap.hpp"

namespace semiheap {

/// Dense m * n^2 table, row-major in (point, x, y). Shape-validated only.
class ActionTable {
 public:
  ActionTable() = default;
  ActionTable(std::size_t m, std::size_t n, std::vector<Index> entries);

  [[nodiscard]] std::size_t space_size() const noexcept { return m_; }
  [[nodiscard]] std::size_t semiheap_size() const noexcept { return n_; }
  Index operator()(Index p, Index x, Index y) const noexcept {
    return entries_[(static_cast<std::size_t>(p) * n_ + x) * n_ + y];
  }
  void set(Index p, Index x, Index y, Index value);
  [[nodiscard]] std::span<const Index> entries() const noexcept { return entries_; }

  friend bool operator==(const ActionTable&, const ActionTable&) = default;

 private:
  std::size_t m_ = 0;
  std::size_t n_ = 0;
  std::vector<Index> entries_;
};

struct ActionFailure {
  Index point = 0;
  std::array<Index, 4> params{};
  Index composed = 0;  ///< sigma_{x3x4}(sigma_{x1x2}(p))
  Index direct = 0;    ///< sigma_{x1,[x2,x3,x4]}(p)
};

std::string describe(const ActionFailure& f);

/// Exhaustive over all m * n^4 tuples. Throws ValidationError on a shape mismatch.
CheckResult<ActionFailure> verify_action(const ActionTable& table, const FiniteSemiheap& s);

class NotAnAction : public std::domain_error {
 public:
  explicit NotAnAction(const ActionFailure& f);
  const ActionFailure& failure() const noexcept { return failure_; }

 private:
  ActionFailure failure_;
};

/// An action table together with its compatibility certificate.
class FiniteAction {
 public:
  /// Throws NotAnAction with the first failing tuple.
  static FiniteAction certify(FiniteSemiheap s, ActionTable table);

  [[nodiscard]] const FiniteSemiheap& semiheap() const noexcept { return semiheap_; }
  [[nodiscard]] const ActionTable& table() const noexcept { return table_; }
  [[nodiscard]] std::size_t space_size() const noexcept { return table_.space_size(); }
  Index operator()(Index p, Index x, Index y) const noexcept { return table_(p, x, y); }

 private:
  FiniteAction(FiniteSemiheap s, ActionTable t) : semiheap_(std::move(s)), table_(std::move(t)) {}

  FiniteSemiheap semiheap_;
  ActionTable table_;
};

/// sigma(p, x, y) = p for all p.
FiniteAction trivial_action(const FiniteSemiheap& s, std::size_t m);

/// S acting on itself by right translation: sigma(p, x, y) = [p, x, y].
FiniteAction translation_action(const FiniteSemiheap& s);

/// S acting on S' through psi: sigma(y, x1, x2) = [y, psi x1, psi x2]'.
FiniteAction action_from_hom(const SemiheapHom& psi);

/// A right group action a : M x G -> M, table m * |G| row-major (point, g).
/// Validated: a(p, e) = p and a(a(p, g), h) = a(p, g h).
class RightGroupAction {
 public:
  RightGroupAction(FiniteGroup g, std::size_t m, std::vector<Index> table);

  [[nodiscard]] const FiniteGroup& group() const noexcept { return group_; }
  [[nodiscard]] std::size_t space_size() const noexcept { return m_; }
  Index operator()(Index p, Index g) const noexcept { return table_[p * group_.order() + g]; }

 private:
  FiniteGroup group_;
  std::size_t m_;
  std::vector<Index> table_;
};

/// Action of heapify(G) on M: sigma(p, g1, g2) = a(p, g1^-1 g2).
FiniteAction action_from_group_action(const RightGroupAction& a);

/// Flow phi : M x Z/k -> M given as an m * k table, with phi(p, 0) = p and
/// phi(phi(p, s), t) = phi(p, s + t). Returns the action of the
/// (Z/k, t1 - t2 + t3) heap: sigma(p, t1, t2) = phi(p, -t1 + t2).
FiniteAction discretized_flow_action(std::size_t k, std::size_t m, std::vector<Index> flow);

/// Rotation of a k-cycle: phi(p, t) = p + t mod k.
std::vector<Index> cycle_rotation_flow(std::size_t k);

struct EquivarianceFailure {
  Index point = 0, x = 0, y = 0;
  Index image_of_action = 0;  ///< psi(p <| (x,y))
  Index action_on_image = 0;  ///< psi(p) <| (x,y)
};

/// psi(p <| (x,y)) = psi(p) <| (x,y). Both actions must be by the same semiheap.
CheckResult<EquivarianceFailure> is_equivariant(std::span<const Index> psi, const FiniteAction& on_m,
                                                const FiniteAction& on_n);

/// Group-level equivariance psi(a(p, g)) = b(psi(p), g).
bool is_group_equivariant(std::span<const Index> psi, const RightGroupAction& a,
                          const RightGroupAction& b);

/// The reachable set p <| S^(2). No quotient is formed: reachability is in
/// general not symmetric, and the report says whether it is for this start point.
struct OrbitReport {
  std::vector<Index> points;  ///< sorted
  /// Some q in the orbit of p whose own orbit misses p.
  std::optional<Index> asymmetric_witness;
};

OrbitReport orbit(const FiniteAction& a, Index p);

struct NamedGroupAction {
  std::string name;
  RightGroupAction action;
};

/// Right actions of bundled groups used throughout the test suites:
/// regular actions, quotient actions, S3 on three points, a trivial action.
const std::vector<NamedGroupAction>& bundled_group_actions();

/// A G-equivariant map between two bundled actions (indices into the list above).
struct EquivariantPair {
  std::size_t from;
  std::size_t to;
  IndexMap map;
};

const std::vector<EquivariantPair>& bundled_equivariant_maps();

}  // namespace semiheap
