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

#include "vickrey/allocations.hpp"
#include "vickrey/core.hpp"
#include "vickrey/exec.hpp"

#include <cstddef>
#include <set>

namespace vickrey {

/// Bit width guard for the subset dynamic program.
inline constexpr std::size_t kMaxDpGoods = 20;

enum class Solver
{
  Oracle,
  Dp,
};

char const *to_string(Solver solver);

/// The maximum attainable bid value together with the complete argmax set.
struct WdpResult
{
  Amount               max_value;
  std::set<Allocation> winners;

  bool operator==(WdpResult const &) const = default;
};

/// The kernel behind the exhaustive solver: evaluates every allocation in
/// `space` and keeps the maximisers. `space` must be non-empty and contain
/// only allocations valid for the instance.
WdpResult scan_allocations(AuctionInstance const         &instance,
                           std::vector<Allocation> const &space,
                           Exec                           exec = Exec::Parallel);

/// Exhaustive solver: scans possible_allocations_oracle and keeps every
/// value-maximising allocation. The winner set is never empty (the empty
/// allocation is always feasible), so max_value >= 0.
WdpResult winning_allocations_oracle(AuctionInstance const &instance,
                                     Exec exec = Exec::Parallel);

/// Subset-DP solver over goods indexed into bit positions by canonical
/// order. Produces a WdpResult identical to the oracle's, including the
/// complete winner set, reconstructed by backtracking every tie at every
/// table cell. Admits up to kMaxDpGoods goods.
WdpResult winning_allocations_dp(AuctionInstance const &instance,
                                 Exec exec = Exec::Parallel);

/// The optimum of the winner determination problem; the solver choice does
/// not affect the value.
Amount max_value(AuctionInstance const &instance, Solver solver = Solver::Dp,
                 Exec exec = Exec::Parallel);

WdpResult solve_wdp(AuctionInstance const &instance, Solver solver,
                    Exec exec = Exec::Parallel);

}  // namespace vickrey
