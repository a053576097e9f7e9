#pragma once

// Line-oriented text formats. Every document starts with a header line of the
// form `<keyword> key=value ...`; the payload is whitespace-separated integers.
//
//   SHF1  semiheap n=<n> [pt=<idx>]      then n^3 entries, (i,j,k) row-major
//   GRP1  group n=<n> e=<idx>            then n^2 entries
//   HOM1  hom n=<n> m=<m>                then n entries in 0..m-1
//   ACT1  action m=<m> n=<n>             then m*n^2 entries, (p,x,y) row-major
//   BND1  bundle charts=<c>
//         base m=<M>
//         projection p=<P>               then P entries in 0..M-1
//         <embedded SHF1>
//         <embedded ACT1 with m=P>
//         cover i=<k> size=<s>           then s base points       (c times)
//         chart i=<k> size=<s>           then s pairs `p:q`       (c times)
//
// Parsers reject missing or unknown keys, out-of-range values, short payloads
// and trailing garbage, reporting the 1-based line and column.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "semiheap/actions.hpp"
#include "semiheap/bundles.hpp"
#include "semiheap/group.hpp"
#include "semiheap/table.hpp"

namespace semiheap {

class ParseError : public ValidationError {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  [[nodiscard]] std::size_t line() const noexcept { return line_; }
  [[nodiscard]] std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

struct ShfDocument {
  TernaryTable table;
  std::optional<Index> basepoint;
};

struct HomDocument {
  std::size_t source_size = 0;
  std::size_t target_size = 0;
  IndexMap map;
};

ShfDocument parse_shf(std::string_view text);
/// Zero or more concatenated SHF1 documents.
std::vector<ShfDocument> parse_shf_stream(std::string_view text);
FiniteGroup parse_grp(std::string_view text);  ///< also throws InvalidGroup
HomDocument parse_hom(std::string_view text);
ActionTable parse_act(std::string_view text);
DiscreteSemiheapBundle parse_bnd(std::string_view text);  ///< also throws NotASemiheap

std::string write_shf(const TernaryTable& t, std::optional<Index> basepoint = std::nullopt);
std::string write_grp(const FiniteGroup& g);
std::string write_hom(std::span<const Index> map, std::size_t target_size);
std::string write_act(const ActionTable& a);
std::string write_bnd(const DiscreteSemiheapBundle& b);

}  // namespace semiheap
