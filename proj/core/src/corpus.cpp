#include "semiheap/corpus.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace semiheap {

namespace {

struct GroupLiteral {
  const char* name;
  std::size_t order;
  Index identity;
  std::vector<Index> table;
};

// clang-format off
const std::vector<GroupLiteral>& literals() {
  static const std::vector<GroupLiteral> data = {
    {"Z1", 1, 0,
     {
      0}},
    {"Z2", 2, 0,
     {
      0, 1,
      1, 0}},
    {"Z3", 3, 0,
     {
      0, 1, 2,
      1, 2, 0,
      2, 0, 1}},
    {"Z4", 4, 0,
     {
      0, 1, 2, 3,
      1, 2, 3, 0,
      2, 3, 0, 1,
      3, 0, 1, 2}},
    {"Z5", 5, 0,
     {
      0, 1, 2, 3, 4,
      1, 2, 3, 4, 0,
      2, 3, 4, 0, 1,
      3, 4, 0, 1, 2,
      4, 0, 1, 2, 3}},
    {"Z6", 6, 0,
     {
      0, 1, 2, 3, 4, 5,
      1, 2, 3, 4, 5, 0,
      2, 3, 4, 5, 0, 1,
      3, 4, 5, 0, 1, 2,
      4, 5, 0, 1, 2, 3,
      5, 0, 1, 2, 3, 4}},
    {"Z7", 7, 0,
     {
      0, 1, 2, 3, 4, 5, 6,
      1, 2, 3, 4, 5, 6, 0,
      2, 3, 4, 5, 6, 0, 1,
      3, 4, 5, 6, 0, 1, 2,
      4, 5, 6, 0, 1, 2, 3,
      5, 6, 0, 1, 2, 3, 4,
      6, 0, 1, 2, 3, 4, 5}},
    {"Z8", 8, 0,
     {
      0, 1, 2, 3, 4, 5, 6, 7,
      1, 2, 3, 4, 5, 6, 7, 0,
      2, 3, 4, 5, 6, 7, 0, 1,
      3, 4, 5, 6, 7, 0, 1, 2,
      4, 5, 6, 7, 0, 1, 2, 3,
      5, 6, 7, 0, 1, 2, 3, 4,
      6, 7, 0, 1, 2, 3, 4, 5,
      7, 0, 1, 2, 3, 4, 5, 6}},
    {"V4", 4, 0,
     {
      0, 1, 2, 3,
      1, 0, 3, 2,
      2, 3, 0, 1,
      3, 2, 1, 0}},
    {"S3", 6, 0,
     {
      0, 1, 2, 3, 4, 5,
      1, 0, 4, 5, 2, 3,
      2, 3, 0, 1, 5, 4,
      3, 2, 5, 4, 0, 1,
      4, 5, 1, 0, 3, 2,
      5, 4, 3, 2, 1, 0}},
    {"D4", 8, 0,
     {
      0, 1, 2, 3, 4, 5, 6, 7,
      1, 2, 3, 0, 5, 6, 7, 4,
      2, 3, 0, 1, 6, 7, 4, 5,
      3, 0, 1, 2, 7, 4, 5, 6,
      4, 7, 6, 5, 0, 3, 2, 1,
      5, 4, 7, 6, 1, 0, 3, 2,
      6, 5, 4, 7, 2, 1, 0, 3,
      7, 6, 5, 4, 3, 2, 1, 0}},
    {"Q8", 8, 0,
     {
      0, 1, 2, 3, 4, 5, 6, 7,
      1, 0, 3, 2, 5, 4, 7, 6,
      2, 3, 1, 0, 6, 7, 5, 4,
      3, 2, 0, 1, 7, 6, 4, 5,
      4, 5, 7, 6, 1, 0, 2, 3,
      5, 4, 6, 7, 0, 1, 3, 2,
      6, 7, 4, 5, 3, 2, 1, 0,
      7, 6, 5, 4, 2, 3, 0, 1}}  };
  return data;
}
// clang-format on

}  // namespace

std::span<const NamedGroup> bundled_groups() {
  static const std::vector<NamedGroup> groups = [] {
    std::vector<NamedGroup> out;
    for (const auto& lit : literals())
      out.push_back({lit.name, FiniteGroup(lit.order, lit.table, lit.identity)});
    return out;
  }();
  return groups;
}

const FiniteGroup& bundled_group(std::string_view name) {
  for (const auto& g : bundled_groups())
    if (g.name == name) return g.group;
  throw std::out_of_range("unknown bundled group: " + std::string(name));
}

}  // namespace semiheap
