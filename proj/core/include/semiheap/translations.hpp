#pragma once

// Left, right and centric translations as explicit endomap tables, and
// exhaustive checks of their composition laws.
//
//   R_{ab}(x) = [x,a,b]    L_{ab}(x) = [a,b,x]    C_{ab}(x) = [a,x,b]

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "semiheap/semiheap.hpp"

namespace semiheap {

enum class TranslationKind { left, right, centric };

struct Translation {
  TranslationKind kind;
  Index a;
  Index b;
};

/// Endomap table of length n.
IndexMap endomap(const FiniteSemiheap& s, Translation t);

/// (f o g)(x) = f(g(x)).
IndexMap compose(std::span<const Index> f, std::span<const Index> g);

IndexMap identity_map(std::size_t n);

/// A translation law failing at the given parameters. `law` names the
/// identity that failed; lhs/rhs are the two endomaps compared.
struct TranslationLawFailure {
  std::string law;
  std::vector<Index> params;
  IndexMap lhs;
  IndexMap rhs;
};

std::string describe(const TranslationLawFailure& f);

/// R_{x3x4} o R_{x1x2} = R_{x1,[x2,x3,x4]}, plus associativity of the
/// parameter composition R_{x1,[x2,x3,[x4,x5,x6]]} = R_{x1,[[x2,x3,x4],x5,x6]}.
CheckResult<TranslationLawFailure> right_compose_law(const FiniteSemiheap& s);

/// L_{x1x2} o L_{x3x4} = L_{[x1,x2,x3],x4}, plus the matching associativity
/// L_{[[x1,x2,x3],x4,x5],x6} = L_{[x1,x2,[x3,x4,x5]],x6}.
CheckResult<TranslationLawFailure> left_compose_law(const FiniteSemiheap& s);

/// L_{x1x2} o R_{x3x4} = R_{x3x4} o L_{x1x2}.
CheckResult<TranslationLawFailure> lr_commute(const FiniteSemiheap& s);

/// C_{x1x2} o C_{x3x4} is not equal to any centric translation of s.
struct CentricWitness {
  std::size_t semiheap_index = 0;  ///< position in the search space
  std::array<Index, 4> params{};
  IndexMap composite;
};

/// Lexicographically first (x1..x4) whose centric composite is not centric.
std::optional<CentricWitness> centric_closure_failure(const FiniteSemiheap& s);

/// Scans the search space in order and returns the first witness. Throws
/// BudgetExceeded if the total number of compositions exceeds max_checks.
std::optional<CentricWitness> centric_nonclosure_witness(
    std::span<const FiniteSemiheap> search_space, std::uint64_t max_checks = 1u << 26);

/// [x,x0,x0] = x = [x0,x0,x] for all x.
bool is_biunital(const PointedSemiheap& s);

/// L_{x0x0} = id and it is a two-sided unit for left composition.
CheckResult<TranslationLawFailure> left_monoid_check(const PointedSemiheap& s);

/// R_{x0x0} = id and it is a two-sided unit for right composition.
CheckResult<TranslationLawFailure> right_monoid_check(const PointedSemiheap& s);

/// L_{x x0}(x0) = x for every x; the witness is the first unreachable x.
CheckResult<Index> reachability_check(const PointedSemiheap& s);

/// Functions f : S -> Q with f o L = f for all left translations L.
/// The constraints f([a,b,x]) = f(x) identify points; the solution space is
/// spanned by indicator functions of the resulting classes.
struct InvariantFunctionSpace {
  std::size_t dimension = 0;
  std::vector<std::vector<Index>> classes;  ///< each sorted, ordered by least element
  [[nodiscard]] bool constants_only() const { return dimension <= 1; }
};

InvariantFunctionSpace left_invariant_functions(const FiniteSemiheap& s);

}  // namespace semiheap
