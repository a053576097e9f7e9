#include "semiheap/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include "semiheap/functors.hpp"
#include "semiheap/semiheap.hpp"

namespace semiheap {

namespace {

using Clock = std::chrono::steady_clock;

std::vector<IndexMap> all_permutations(std::size_t n) {
  IndexMap p(n);
  std::iota(p.begin(), p.end(), Index{0});
  std::vector<IndexMap> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= k;
  return f;
}

// Depth-first search over a partially filled cube. A cell is free or holds a
// value; `assigned` marks the fixed ones. All searches share this engine.
class CubeSearch {
 public:
  CubeSearch(std::size_t n, bool seed_heap_cells, bool canonical_pruning)
      : n_(n), vals_(n * n * n, 0), assigned_(n * n * n, false), canonical_(canonical_pruning) {
    if (seed_heap_cells) {
      for (Index x = 0; x < n; ++x)
        for (Index y = 0; y < n; ++y) {
          fix(cell(y, x, x), y);
          fix(cell(x, x, y), y);
        }
    }
    for (std::size_t c = 0; c < vals_.size(); ++c)
      if (!assigned_[c]) free_.push_back(c);
    if (canonical_) {
      for (auto& p : all_permutations(n)) {
        if (std::is_sorted(p.begin(), p.end())) continue;
        inverses_.push_back(invert_bijection(p));
        perms_.push_back(std::move(p));
      }
    }
  }

  [[nodiscard]] const std::vector<std::size_t>& free_cells() const { return free_; }
  [[nodiscard]] bool seeds_consistent() const { return consistent(); }

  /// Visits every complete table extending the current state whose first free
  /// cell takes a value in `first_values`. Returns false if stopped early.
  template <class Visit>
  bool run(const std::vector<Index>& first_values, const std::atomic<bool>& stop,
           std::optional<Clock::time_point> deadline, Visit&& visit) {
    if (free_.empty()) {
      if (consistent()) visit(vals_);
      return true;
    }
    return descend(0, &first_values, stop, deadline, visit);
  }

 private:
  std::size_t cell(Index i, Index j, Index k) const { return (static_cast<std::size_t>(i) * n_ + j) * n_ + k; }

  void fix(std::size_t c, Index v) {
    // (x,x,x) is seeded twice with the same value; no other cell is.
    vals_[c] = v;
    assigned_[c] = true;
  }

  // Value of [i,j,k] or n when unknown.
  Index at(Index i, Index j, Index k) const {
    const auto c = cell(i, j, k);
    return assigned_[c] ? vals_[c] : static_cast<Index>(n_);
  }

  bool consistent() const {
    const auto n = static_cast<Index>(n_);
    for (Index x1 = 0; x1 < n; ++x1)
      for (Index x2 = 0; x2 < n; ++x2)
        for (Index x3 = 0; x3 < n; ++x3) {
          const Index a = at(x1, x2, x3);
          for (Index x4 = 0; x4 < n; ++x4) {
            const Index b = at(x4, x3, x2);
            for (Index x5 = 0; x5 < n; ++x5) {
              const Index c = at(x3, x4, x5);
              const Index lhs = a < n ? at(a, x4, x5) : n;
              const Index mid = b < n ? at(x1, b, x5) : n;
              const Index rhs = c < n ? at(x1, x2, c) : n;
              if (lhs < n && mid < n && lhs != mid) return false;
              if (lhs < n && rhs < n && lhs != rhs) return false;
              if (mid < n && rhs < n && mid != rhs) return false;
            }
          }
        }
    return true;
  }

  // False if some relabeling is already known to be lexicographically smaller
  // than every completion of the current state.
  bool may_be_canonical() const {
    const auto n = static_cast<Index>(n_);
    for (std::size_t q = 0; q < perms_.size(); ++q) {
      const auto& p = perms_[q];
      const auto& inv = inverses_[q];
      for (Index a = 0, done = 0; a < n && !done; ++a)
        for (Index b = 0; b < n && !done; ++b)
          for (Index c = 0; c < n && !done; ++c) {
            const auto pos = cell(a, b, c);
            const auto src = cell(inv[a], inv[b], inv[c]);
            if (!assigned_[pos] || !assigned_[src]) {
              done = 1;
              break;
            }
            const Index relabeled = p[vals_[src]];
            if (relabeled < vals_[pos]) return false;
            if (relabeled > vals_[pos]) done = 1;
          }
    }
    return true;
  }

  template <class Visit>
  bool descend(std::size_t depth, const std::vector<Index>* restrict_values, const std::atomic<bool>& stop,
               std::optional<Clock::time_point> deadline, Visit& visit) {
    if ((++nodes_ & 1023) == 0 && deadline && Clock::now() > *deadline) return false;
    if (stop.load(std::memory_order_relaxed)) return false;
    const std::size_t c = free_[depth];
    assigned_[c] = true;
    bool finished = true;
    for (Index v = 0; v < n_ && finished; ++v) {
      if (restrict_values &&
          std::find(restrict_values->begin(), restrict_values->end(), v) == restrict_values->end())
        continue;
      vals_[c] = v;
      if (!consistent() || (canonical_ && !may_be_canonical())) continue;
      if (depth + 1 == free_.size())
        visit(vals_);
      else
        finished = descend(depth + 1, nullptr, stop, deadline, visit);
    }
    assigned_[c] = false;
    vals_[c] = 0;
    return finished;
  }

  std::size_t n_;
  std::vector<Index> vals_;
  std::vector<bool> assigned_;
  std::vector<std::size_t> free_;
  bool canonical_;
  std::vector<IndexMap> perms_;
  std::vector<IndexMap> inverses_;
  std::uint64_t nodes_ = 0;
};

struct SearchResult {
  std::vector<TernaryTable> tables;
  bool complete = true;
};

SearchResult search(std::size_t n, bool heaps, const EnumerationOptions& options) {
  const bool canonical = options.up_to_iso && n >= 2;
  std::optional<Clock::time_point> deadline;
  if (options.budget_seconds)
    deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                  std::chrono::duration<double>(*options.budget_seconds));

  CubeSearch probe(n, heaps, canonical);
  if (!probe.seeds_consistent()) return {};
  const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(std::max<std::size_t>(n, 1))));

  // Workers split the values of the first free cell round-robin.
  std::vector<std::vector<TernaryTable>> found(jobs);
  std::vector<char> finished(jobs, 1);
  std::atomic<bool> stop{false};
  const auto work = [&](unsigned w) {
    CubeSearch s(n, heaps, canonical);
    std::vector<Index> values;
    for (Index v = w; v < n; v += jobs) values.push_back(v);
    if (s.free_cells().empty() && w != 0) return;
    finished[w] = s.run(values, stop, deadline, [&](const std::vector<Index>& cells) {
      found[w].emplace_back(n, cells);
    });
    if (!finished[w]) stop = true;
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::jthread> threads;
    for (unsigned w = 0; w < jobs; ++w) threads.emplace_back(work, w);
  }

  SearchResult out;
  for (unsigned w = 0; w < jobs; ++w) {
    out.complete = out.complete && finished[w];
    out.tables.insert(out.tables.end(), std::make_move_iterator(found[w].begin()),
                      std::make_move_iterator(found[w].end()));
  }
  return out;
}

// Sorts by (canonical form, table), reduces to representatives if asked and
// fills the counts.
EnumerationReport finish(std::size_t n, StructureKind kind, std::vector<TernaryTable> tables, bool complete,
                         bool up_to_iso, bool already_reduced) {
  EnumerationReport r;
  r.n = n;
  r.kind = kind;
  r.complete = complete;
  std::vector<std::pair<TernaryTable, TernaryTable>> keyed;
  keyed.reserve(tables.size());
  for (auto& t : tables) {
    auto key = canonical_form(t);
    if (already_reduced && !(key == t)) continue;  // partial pruning lets some through
    keyed.emplace_back(std::move(key), std::move(t));
  }
  std::sort(keyed.begin(), keyed.end());
  for (std::size_t i = 0; i < keyed.size(); ++i) {
    const bool new_class = i == 0 || !(keyed[i].first == keyed[i - 1].first);
    if (new_class) ++r.iso_count;
    if (already_reduced)
      r.count += factorial(n) / automorphism_count(keyed[i].second);
    else
      ++r.count;
    if (!up_to_iso || new_class) r.tables.push_back(std::move(keyed[i].second));
  }
  return r;
}

}  // namespace

std::string EnumerationReport::summary() const {
  std::ostringstream os;
  os << "n=" << n << " kind=" << (kind == StructureKind::heap ? "heap" : "semiheap") << " count=" << count
     << " iso_count=" << iso_count << " complete=" << (complete ? "true" : "false");
  return os.str();
}

std::vector<TernaryTable> brute_force_semiheaps(std::size_t n) {
  if (n > 2) throw ValidationError("brute_force_semiheaps: n must be at most 2");
  const std::size_t cells = n * n * n;
  std::uint64_t total = 1;
  for (std::size_t c = 0; c < cells; ++c) total *= n;
  std::vector<TernaryTable> out;
  std::vector<Index> e(cells);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t rest = code;
    for (std::size_t c = cells; c-- > 0;) {
      e[c] = static_cast<Index>(rest % n);
      rest /= n;
    }
    TernaryTable t(n, e);
    if (verify_para_associative(t)) out.push_back(std::move(t));
  }
  return out;
}

EnumerationReport enumerate_semiheaps(std::size_t n, const EnumerationOptions& options) {
  if (n > 4) throw ValidationError("enumerate_semiheaps: n must be at most 4");
  auto found = search(n, false, options);
  const bool reduced = options.up_to_iso && n >= 2;
  return finish(n, StructureKind::semiheap, std::move(found.tables), found.complete, options.up_to_iso, reduced);
}

std::vector<FiniteGroup> labeled_groups(std::size_t n) {
  if (n > 6) throw ValidationError("labeled_groups: n must be at most 6");
  std::vector<FiniteGroup> out;
  const auto N = static_cast<Index>(n);
  constexpr Index unset = static_cast<Index>(-1);
  for (Index e = 0; e < N; ++e) {
    std::vector<Index> mul(n * n, unset);
    for (Index x = 0; x < N; ++x) mul[e * n + x] = mul[x * n + e] = x;
    std::vector<std::size_t> free;
    for (std::size_t c = 0; c < mul.size(); ++c)
      if (mul[c] == unset) free.push_back(c);
    const auto fits = [&](std::size_t c, Index v) {
      const std::size_t a = c / n, b = c % n;
      for (Index k = 0; k < N; ++k)
        if (mul[a * n + k] == v || mul[k * n + b] == v) return false;
      return true;
    };
    const auto associative = [&] {
      for (Index a = 0; a < N; ++a)
        for (Index b = 0; b < N; ++b) {
          const Index ab = mul[a * n + b];
          if (ab == unset) continue;
          for (Index c = 0; c < N; ++c) {
            const Index bc = mul[b * n + c];
            if (bc == unset) continue;
            const Index l = mul[ab * n + c], r = mul[a * n + bc];
            if (l != unset && r != unset && l != r) return false;
          }
        }
      return true;
    };
    const auto rec = [&](auto& self, std::size_t depth) -> void {
      if (depth == free.size()) {
        out.emplace_back(n, mul, e);
        return;
      }
      const std::size_t c = free[depth];
      for (Index v = 0; v < N; ++v) {
        if (!fits(c, v)) continue;
        mul[c] = v;
        if (associative()) self(self, depth + 1);
        mul[c] = unset;
      }
    };
    rec(rec, 0);
  }
  return out;
}

std::vector<TernaryTable> heaps_from_groups(std::size_t n) {
  std::set<TernaryTable> tables;
  for (const auto& g : labeled_groups(n)) tables.insert(heapify(g).semiheap().table());
  return {tables.begin(), tables.end()};
}

EnumerationReport enumerate_heaps(std::size_t n, const EnumerationOptions& options) {
  if (n > 5) throw ValidationError("enumerate_heaps: n must be at most 5");
  // Route one: the semiheap search, filtered (n <= 2) or seeded (n >= 3).
  std::vector<TernaryTable> search_route;
  bool complete = true;
  if (n <= 2) {
    for (auto& t : enumerate_semiheaps(n, {false, options.budget_seconds, options.jobs}).tables)
      if (is_heap(FiniteSemiheap::certify(t))) search_route.push_back(std::move(t));
  } else {
    auto found = search(n, true, {false, options.budget_seconds, options.jobs});
    complete = found.complete;
    search_route = std::move(found.tables);
  }
  std::sort(search_route.begin(), search_route.end());

  // Route two: heapified labeled groups. The empty heap has no group.
  if (complete && n >= 1) {
    const auto groups = labeled_groups(n);
    const auto group_route = heaps_from_groups(n);
    if (group_route != search_route)
      throw std::logic_error("enumerate_heaps: search found " + std::to_string(search_route.size()) +
                             " heaps but the group route found " + std::to_string(group_route.size()));
    if (groups.size() != n * group_route.size())
      throw std::logic_error("enumerate_heaps: expected one group per heap and basepoint");
  }
  return finish(n, StructureKind::heap, std::move(search_route), complete, options.up_to_iso, false);
}

TernaryTable canonical_form(const TernaryTable& t) {
  const std::size_t n = t.size();
  if (n > 8) throw ValidationError("canonical_form: n must be at most 8");
  if (n <= 1) return t;
  const auto src = t.entries();
  std::vector<Index> best(src.begin(), src.end()), cur(src.size());
  for (const auto& p : all_permutations(n)) {
    const auto inv = invert_bijection(p);
    // Compare while building so most permutations stop after a few cells.
    bool smaller = false, decided = false;
    std::size_t pos = 0;
    for (Index a = 0; a < n; ++a)
      for (Index b = 0; b < n; ++b)
        for (Index c = 0; c < n; ++c, ++pos) {
          cur[pos] = p[t(inv[a], inv[b], inv[c])];
          if (!decided && cur[pos] != best[pos]) {
            decided = true;
            smaller = cur[pos] < best[pos];
            if (!smaller) goto next;
          }
        }
    if (smaller) best = cur;
  next:;
  }
  return TernaryTable(n, std::move(best));
}

bool are_isomorphic(const TernaryTable& a, const TernaryTable& b) {
  return a.size() == b.size() && canonical_form(a) == canonical_form(b);
}

std::size_t automorphism_count(const TernaryTable& t) {
  if (t.size() > 8) throw ValidationError("automorphism_count: n must be at most 8");
  std::size_t count = 0;
  for (const auto& p : all_permutations(t.size()))
    if (relabel(t, p) == t) ++count;
  return count;
}

}  // namespace semiheap
