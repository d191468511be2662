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
#include "vickrey/wdp.hpp"

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

namespace vickrey {

/// Seed for the deterministic tie-break weights. Two runs with equal
/// (instance, seed, solver) produce identical outcomes.
struct TieBreakSeed
{
  std::uint64_t value = 0;

  bool operator==(TieBreakSeed const &) const = default;
};

/// The auction result: one chosen winner, the payment vector, and the
/// evidence behind it. Payment maps are sorted by bidder and cover every
/// bidder of the instance, winners or not.
struct Outcome
{
  Allocation                                 chosen;
  std::vector<std::pair<BidderId, Amount>>   payments;
  std::vector<std::pair<BidderId, Amount>>   alphas;
  Amount                                     max_value;
  bool                                       tie_break_applied = false;

  bool operator==(Outcome const &) const = default;
};

/// alpha_n: the optimum of the instance with bidder n's bids removed.
/// 0 when n is the only bidder (the reduced problem can only allocate
/// nothing).
Amount alpha(AuctionInstance const &instance, BidderId bidder,
             Solver solver = Solver::Dp, Exec exec = Exec::Parallel);

/// VCG payments p_n = alpha_n - sum over m != n of b_m(X*_m), for every
/// bidder of the instance. `chosen` must be value-maximising; otherwise
/// NotAWinner is thrown.
std::vector<std::pair<BidderId, Amount>> payments(
    AuctionInstance const &instance, Allocation const &chosen,
    Solver solver = Solver::Dp, Exec exec = Exec::Parallel);

/// Keyed pseudo-random weight r_n(X): the splitmix64 finalizer chain folded
/// over the concatenation of the seed, the bidder id, and the canonical
/// byte encoding of the bundle (length-prefixed sorted good identifiers).
/// Platform-independent and stable across runs.
std::uint64_t bundle_weight(TieBreakSeed seed, BidderId bidder,
                            Bundle const &bundle);

/// Second argmax over the candidate set: each candidate is scored by the
/// sum of bundle_weight over all bidders of the instance (the empty bundle
/// included for bidders left out of the candidate). Residual weight ties
/// fall back to the least candidate in canonical allocation order. Throws
/// EmptyCandidates on an empty set.
Allocation tie_break(std::set<Allocation> const &candidates,
                     AuctionInstance const &instance, TieBreakSeed seed);

/// End-to-end auction: validate, solve the WDP with the chosen solver,
/// tie-break, and price. Total on admissible inputs and deterministic given
/// (instance, seed).
Outcome run_auction(AuctionInstance const &instance, TieBreakSeed seed,
                    Solver solver = Solver::Dp, Exec exec = Exec::Parallel);

}  // namespace vickrey
