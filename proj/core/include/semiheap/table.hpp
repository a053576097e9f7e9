#pragma once

// Dense ternary operation tables on carriers {0, ..., n-1}.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace semiheap {

using Index = std::uint32_t;

/// A map between finite carriers, stored as its value table.
using IndexMap = std::vector<Index>;

/// Malformed input: out-of-range entries, wrong sizes, non-bijections.
/// Distinct from a law failure, which is reported through CheckResult.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An enumeration or search would exceed its configured budget. Thrown
/// instead of returning a partial answer.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Outcome of an exhaustive law check: either a pass, or the
/// lexicographically first failing tuple with its evaluated values.
template <class Witness>
class CheckResult {
 public:
  CheckResult() = default;

  static CheckResult pass() { return CheckResult{}; }
  static CheckResult fail(Witness w) {
    CheckResult r;
    r.witness_ = std::move(w);
    return r;
  }

  [[nodiscard]] bool passed() const noexcept { return !witness_.has_value(); }
  explicit operator bool() const noexcept { return passed(); }

  const Witness& witness() const {
    if (!witness_) throw std::logic_error("CheckResult: no witness on a passing check");
    return *witness_;
  }
  const std::optional<Witness>& failure() const noexcept { return witness_; }

 private:
  std::optional<Witness> witness_;
};

class TernaryTable {
 public:
  TernaryTable() = default;

  /// Constant table with every entry equal to `fill`. Requires fill < n when n > 0.
  explicit TernaryTable(std::size_t n, Index fill = 0);

  /// Row-major entries in (i, j, k) with i outermost; validated.
  TernaryTable(std::size_t n, std::vector<Index> entries);

  template <class F>
  static TernaryTable from_function(std::size_t n, F&& f) {
    std::vector<Index> e;
    e.reserve(n * n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          e.push_back(static_cast<Index>(f(static_cast<Index>(i), static_cast<Index>(j),
                                           static_cast<Index>(k))));
    return TernaryTable(n, std::move(e));
  }

  [[nodiscard]] std::size_t size() const noexcept { return n_; }
  [[nodiscard]] bool empty() const noexcept { return n_ == 0; }

  Index operator()(Index i, Index j, Index k) const noexcept {
    return entries_[(static_cast<std::size_t>(i) * n_ + j) * n_ + k];
  }

  /// Checked mutation.
  void set(Index i, Index j, Index k, Index value);

  [[nodiscard]] std::span<const Index> entries() const noexcept { return entries_; }

  /// The s13-conjugate table: (i, j, k) -> T(k, j, i).
  [[nodiscard]] TernaryTable swapped_outer() const;

  friend bool operator==(const TernaryTable&, const TernaryTable&) = default;
  friend auto operator<=>(const TernaryTable& a, const TernaryTable& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.entries_ <=> b.entries_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Index> entries_;
};

/// Throws ValidationError unless every value of `map` is < codomain and map.size() == domain.
void validate_map(std::span<const Index> map, std::size_t domain, std::size_t codomain,
                  const char* what);

/// Throws ValidationError unless `map` is a bijection of {0..n-1} onto itself.
void validate_bijection(std::span<const Index> map, std::size_t n, const char* what);

[[nodiscard]] IndexMap invert_bijection(std::span<const Index> map);

/// Comma-joined indices, e.g. "0,1,0".
[[nodiscard]] std::string join_indices(std::span<const Index> values);

}  // namespace semiheap
