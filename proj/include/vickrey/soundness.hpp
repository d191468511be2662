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
#include "vickrey/vcg.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace vickrey {

enum class Goal
{
  Totality,
  WellDefinedness,
  Uniqueness,
  Equivalence,
  Truthfulness,
};

char const *to_string(Goal goal);

/// Deliberate corruption switch for checker self-tests: a checker given its
/// own goal here must flag at least one failure on any non-empty input,
/// guarding against vacuous passes. Production callers pass None.
enum class Mutation
{
  None,
  Totality,
  WellDefinedness,
  Uniqueness,
  Equivalence,
  Truthfulness,
};

struct CheckFailure
{
  AuctionInstance instance;
  std::string     diagnostic;
};

struct SoundnessReport
{
  Goal                      goal = Goal::Totality;
  std::size_t               instances_checked = 0;
  std::vector<CheckFailure> failures;

  bool passed() const
  {
    return failures.empty();
  }
};

struct FuzzSpec
{
  std::size_t         max_goods = 3;    // <= kMaxEnumerationGoods
  std::size_t         max_bidders = 3;
  std::vector<Amount> bid_grid;         // non-negative amounts
  std::size_t         instance_count = 200;
  std::uint64_t       rng_seed = 0;
};

/// Deterministic sequence of `instance_count` validated instances drawn
/// from the spec's bounds with the same splitmix64 generator family the
/// tie-break weights use. Equal specs yield identical sequences.
std::vector<AuctionInstance> fuzz_instances(FuzzSpec const &spec);

/// Well-definedness predicate on a single outcome: returns a diagnostic
/// when the chosen allocation over-allocates (overlapping bundles, goods
/// outside the endowment, empty or duplicate bundles, unknown bidders) or
/// any payment is negative; nullopt when the outcome is clean.
std::optional<std::string> outcome_defect(AuctionInstance const &instance,
                                          Outcome const         &outcome);

/// Goal: every admissible instance yields an outcome (no error other than a
/// size guard escapes run_auction).
SoundnessReport check_totality(std::vector<AuctionInstance> const &instances,
                               TieBreakSeed seed, Exec exec = Exec::Parallel,
                               Mutation mutation = Mutation::None);

/// Goal: outcomes never over-allocate and payments are non-negative.
SoundnessReport check_well_defined(
    std::vector<AuctionInstance> const &instances, TieBreakSeed seed,
    Exec exec = Exec::Parallel, Mutation mutation = Mutation::None);

/// Goal: repeated runs and both solvers agree byte-for-byte at fixed seed.
SoundnessReport check_uniqueness(
    std::vector<AuctionInstance> const &instances, TieBreakSeed seed,
    Exec exec = Exec::Parallel, Mutation mutation = Mutation::None);

/// Equivalence obligations, exhaustive over every goods-set size
/// 1..max_goods x bidder-set size 1..max_bidders (both <= 4): the
/// algorithmic allocation enumeration matches the oracle set, and the DP
/// solver matches the oracle solver on `tables_per_shape` fuzzed bid tables
/// per shape.
SoundnessReport check_equivalence(std::size_t max_goods,
                                  std::size_t max_bidders,
                                  std::size_t tables_per_shape = 200,
                                  std::uint64_t rng_seed = 0,
                                  Exec exec = Exec::Parallel,
                                  Mutation mutation = Mutation::None);

/// Single-good dominance desk check: for every valuation profile over the
/// grid, every bidder, every grid deviation and every seed, truthful
/// bidding earns at least the deviation's utility when the others bid
/// truthfully.
SoundnessReport check_truthfulness_single_good(
    std::size_t n_bidders, std::vector<Amount> const &grid,
    std::vector<TieBreakSeed> const &seeds, Exec exec = Exec::Parallel,
    Mutation mutation = Mutation::None);

}  // namespace vickrey
