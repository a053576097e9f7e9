#pragma once

// Bundled group corpus: Z/1..Z/8, Klein four, S3, D4, Q8 as literal
// Cayley tables. Element 0 is the identity in every table.
//
//   S3: permutations of {0,1,2} in lexicographic order, (st)(i) = s(t(i)).
//   D4: index a + 4b encodes r^a s^b, with s r s = r^-1.
//   Q8: 1, -1, i, -i, j, -j, k, -k.
//   V4: Z/2 x Z/2 pair-encoded (xor).

#include <span>
#include <string_view>

#include "semiheap/group.hpp"

namespace semiheap {

struct NamedGroup {
  std::string_view name;
  FiniteGroup group;
};

/// All 12 bundled groups, in the order listed above.
std::span<const NamedGroup> bundled_groups();

/// Throws std::out_of_range for an unknown name.
const FiniteGroup& bundled_group(std::string_view name);

}  // namespace semiheap
