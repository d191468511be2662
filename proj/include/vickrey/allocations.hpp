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
#include "vickrey/exec.hpp"

#include <set>
#include <vector>

namespace vickrey {

/// Every injective partial map from a subset of `blocks` to `bidders`,
/// each exactly once, in deterministic order: recursing over the blocks in
/// sequence order, a block is first left unassigned and then assigned each
/// still-free bidder in sequence order. Blocks must be non-empty and
/// pairwise disjoint; bidders must be sorted and unique.
std::vector<Allocation> injective_functions(
    std::vector<Bundle> const &blocks, std::vector<BidderId> const &bidders);

/// The set of all valid allocations, built by generate-and-filter: for each
/// partition of `goods`, every map from its blocks to bidder-or-unassigned
/// is screened through is_valid_allocation and the survivors are collected
/// as a set. The empty allocation is always a member. This is the ground
/// truth the algorithmic enumeration is checked against.
std::set<Allocation> possible_allocations_oracle(
    std::vector<Good> const &goods, std::vector<BidderId> const &bidders);

/// The list-producing enumeration: concatenation of injective_functions
/// over each partition from all_partitions(goods), in that order. The raw
/// sequence contains duplicates across partitions (an allocation that
/// leaves blocks unassigned arises from several partitions); viewed as a
/// set after deduplication it equals possible_allocations_oracle.
std::vector<Allocation> possible_allocations_alg(
    std::vector<Good> const &goods, std::vector<BidderId> const &bidders,
    Exec exec = Exec::Parallel);

}  // namespace vickrey
