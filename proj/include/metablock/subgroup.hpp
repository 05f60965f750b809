#pragma once

// Structural value types shared by the closed-form and enumeration routes.

#include <algorithm>
#include <vector>

#include "metablock/element.hpp"

namespace metablock {

struct Subgroup {
  std::vector<Element> generators;
  u128 order = 1;
  // Cyclic factor orders for abelian subgroups, largest first; empty when the
  // subgroup is non-abelian (order and generators still reported). Subgroups
  // here have rank <= 2, so two entries at most; trivial factors are kept
  // when a closed form presents the group as a named two-factor product.
  std::vector<u64> cyclic_decomposition;
};

// Drops trivial C_1 factors so decompositions from different routes compare
// as multisets of non-trivial factors.
inline std::vector<u64> normalized_decomposition(const std::vector<u64>& d) {
  std::vector<u64> out;
  for (u64 v : d)
    if (v > 1) out.push_back(v);
  std::sort(out.rbegin(), out.rend());
  return out;
}

struct ConjClass {
  Element representative;  // lexicographically least (a, b) in the class
  u64 size = 1;
  std::vector<Element> members;  // sorted; filled by both modes at desk scale
};

}  // namespace metablock
