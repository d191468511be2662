#pragma once
//------------------------------------------------------------------------------
//
//   Copyright 2026 The Vickrey Engine Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------

#include "vickrey/core.hpp"

#include <cstddef>
#include <vector>

namespace vickrey {

/// Enumeration entry points refuse ground sets above this size; the number
/// of partitions beyond it is out of desk scale.
inline constexpr std::size_t kMaxEnumerationGoods = 12;

/// A partition of a goods set: non-empty, pairwise disjoint blocks whose
/// union is the ground set. Blocks are kept in creation order of the
/// enumeration; equality treats them as a set.
struct Partition
{
  std::vector<Bundle> blocks;

  /// Blocks sorted canonically, for set-semantics comparison.
  std::vector<Bundle> canonical_blocks() const;

  /// "{A,B} {C}"; "(empty)" for the partition of the empty set.
  std::string str() const;

  bool operator==(Partition const &other) const;
  bool operator<(Partition const &other) const;
};

/// Sorted duplicate-free sequence of the elements of `goods`. Equal input
/// sets (in any order, with any duplication) yield identical sequences.
std::vector<Good> canonical_order(std::vector<Good> goods);

/// Every partition of `goods`, each exactly once, in a deterministic order:
/// recursing over canonical_order(goods), the partitions of the first k+1
/// elements are obtained from each partition of the first k elements by
/// inserting the new element into each existing block in creation order and
/// then as a new singleton block. The empty set has the single empty
/// partition. Throws TooLarge above kMaxEnumerationGoods.
std::vector<Partition> all_partitions(std::vector<Good> const &goods);

/// True iff `candidate`'s blocks are non-empty, pairwise disjoint, and
/// their union equals `goods`.
bool is_partition_of(std::vector<Bundle> const &candidate,
                     std::vector<Good> const   &goods);

}  // namespace vickrey
