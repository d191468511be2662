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

#include "vickrey/soundness.hpp"

#include "vickrey/allocations.hpp"
#include "vickrey/detail/splitmix.hpp"
#include "vickrey/partitions.hpp"
#include "vickrey/serialization.hpp"
#include "vickrey/wdp.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>

namespace vickrey {

namespace {

template <typename Fn>
void for_each_indexed(std::size_t count, Exec exec, Fn &&fn)
{
  if (exec == Exec::Parallel)
  {
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < count; ++i)
    {
      fn(i);
    }
  }
  else
  {
    for (std::size_t i = 0; i < count; ++i)
    {
      fn(i);
    }
  }
}

// Failures are collected into per-index slots and merged in instance order,
// so reports are identical under both execution policies.
SoundnessReport merge_report(Goal goal, std::size_t checked,
                             std::vector<std::optional<CheckFailure>> &slots)
{
  SoundnessReport report;
  report.goal = goal;
  report.instances_checked = checked;
  for (auto &slot : slots)
  {
    if (slot)
    {
      report.failures.push_back(std::move(*slot));
    }
  }
  return report;
}

std::vector<Good> letter_goods(std::size_t count)
{
  std::vector<Good> goods;
  goods.reserve(count);
  for (std::size_t i = 0; i < count; ++i)
  {
    goods.push_back(Good{std::string(1, static_cast<char>('A' + i))});
  }
  return goods;
}

std::vector<BidderId> numbered_bidders(std::size_t count)
{
  std::vector<BidderId> bidders;
  bidders.reserve(count);
  for (std::size_t i = 0; i < count; ++i)
  {
    bidders.push_back(BidderId{static_cast<std::uint32_t>(i + 1)});
  }
  return bidders;
}

Bundle bundle_from_mask(std::vector<Good> const &goods, std::uint64_t mask)
{
  std::vector<Good> members;
  for (std::size_t bit = 0; bit < goods.size(); ++bit)
  {
    if (mask & (std::uint64_t{1} << bit))
    {
      members.push_back(goods[bit]);
    }
  }
  return Bundle(std::move(members));
}

// One fuzzed instance of an exact shape. Small shapes flip a coin per
// non-empty bundle per bidder; larger ones subsample bundle masks.
AuctionInstance gen_instance(detail::SplitMix &rng, std::size_t n_goods,
                             std::size_t                n_bidders,
                             std::vector<Amount> const &grid)
{
  std::vector<Good> const     goods = letter_goods(n_goods);
  std::vector<BidderId> const bidders = numbered_bidders(n_bidders);
  std::vector<BidEntry>       entries;
  if (!grid.empty())
  {
    std::uint64_t const top = (std::uint64_t{1} << n_goods) - 1;
    if (n_goods <= 6)
    {
      for (BidderId const &bidder : bidders)
      {
        for (std::uint64_t mask = 1; mask <= top; ++mask)
        {
          if (rng.below(2) == 1)
          {
            entries.push_back(BidEntry{bidder, bundle_from_mask(goods, mask),
                                       grid[rng.below(grid.size())]});
          }
        }
      }
    }
    else
    {
      std::set<std::pair<std::uint32_t, std::uint64_t>> used;
      std::size_t const draws = 2 * n_goods * n_bidders;
      for (std::size_t d = 0; d < draws; ++d)
      {
        std::uint32_t const bidder = 1 + static_cast<std::uint32_t>(
                                             rng.below(n_bidders));
        std::uint64_t const mask = 1 + rng.below(top);
        if (used.emplace(bidder, mask).second)
        {
          entries.push_back(BidEntry{BidderId{bidder},
                                     bundle_from_mask(goods, mask),
                                     grid[rng.below(grid.size())]});
        }
      }
    }
  }
  AuctionInstance instance(goods, bidders, std::move(entries));
  validate_instance(instance);
  return instance;
}

Outcome corrupted_negative_payment(Outcome outcome)
{
  if (!outcome.payments.empty())
  {
    outcome.payments.front().second = Amount(-1);
  }
  return outcome;
}

}  // namespace

char const *to_string(Goal goal)
{
  switch (goal)
  {
  case Goal::Totality:
    return "totality";
  case Goal::WellDefinedness:
    return "well-definedness";
  case Goal::Uniqueness:
    return "uniqueness";
  case Goal::Equivalence:
    return "equivalence";
  case Goal::Truthfulness:
    return "truthfulness";
  }
  return "unknown";
}

std::vector<AuctionInstance> fuzz_instances(FuzzSpec const &spec)
{
  if (spec.max_goods == 0 || spec.max_bidders == 0)
  {
    throw std::invalid_argument("fuzz_instances: empty shape bounds");
  }
  if (spec.max_goods > kMaxEnumerationGoods)
  {
    throw_error(Errc::TooLarge,
                "fuzz shapes admit at most " +
                    std::to_string(kMaxEnumerationGoods) + " goods");
  }
  for (Amount const &amount : spec.bid_grid)
  {
    if (amount.is_negative())
    {
      throw_error(Errc::NegativeBid, "fuzz grid contains " + amount.str());
    }
  }

  detail::SplitMix             rng(spec.rng_seed);
  std::vector<AuctionInstance> instances;
  instances.reserve(spec.instance_count);
  for (std::size_t i = 0; i < spec.instance_count; ++i)
  {
    std::size_t const n_goods = 1 + rng.below(spec.max_goods);
    std::size_t const n_bidders = 1 + rng.below(spec.max_bidders);
    instances.push_back(gen_instance(rng, n_goods, n_bidders, spec.bid_grid));
  }
  return instances;
}

std::optional<std::string> outcome_defect(AuctionInstance const &instance,
                                          Outcome const         &outcome)
{
  std::set<Good>     seen_goods;
  std::set<BidderId> seen_bidders;
  for (auto const &[bundle, bidder] : outcome.chosen.items())
  {
    if (bundle.empty())
    {
      return "chosen allocation assigns an empty bundle";
    }
    if (!instance.has_bidder(bidder))
    {
      return "chosen allocation names unknown bidder " +
             std::to_string(bidder.id);
    }
    if (!seen_bidders.insert(bidder).second)
    {
      return "bidder " + std::to_string(bidder.id) +
             " receives more than one bundle";
    }
    for (Good const &good : bundle.goods())
    {
      if (!std::binary_search(instance.goods().begin(),
                              instance.goods().end(), good))
      {
        return "good " + good.id + " is outside the endowment";
      }
      if (!seen_goods.insert(good).second)
      {
        return "good " + good.id + " is allocated more than once";
      }
    }
  }

  if (outcome.payments.size() != instance.bidders().size())
  {
    return "payment vector does not cover every bidder";
  }
  for (std::size_t i = 0; i < outcome.payments.size(); ++i)
  {
    auto const &[bidder, payment] = outcome.payments[i];
    if (bidder != instance.bidders()[i])
    {
      return "payment vector does not cover every bidder";
    }
    if (payment.is_negative())
    {
      return "negative payment " + payment.str() + " for bidder " +
             std::to_string(bidder.id);
    }
  }
  return std::nullopt;
}

SoundnessReport check_totality(std::vector<AuctionInstance> const &instances,
                               TieBreakSeed seed, Exec exec,
                               Mutation mutation)
{
  std::vector<std::optional<CheckFailure>> slots(instances.size());
  for_each_indexed(instances.size(), exec, [&](std::size_t i) {
    AuctionInstance instance = instances[i];
    if (mutation == Mutation::Totality && i == 0)
    {
      // An inadmissible instance must surface as a reported failure.
      instance = AuctionInstance(instance.goods(), {}, {});
    }
    try
    {
      (void)run_auction(instance, seed, Solver::Dp, Exec::Serial);
    }
    catch (AuctionError const &error)
    {
      if (error.code() != Errc::TooLarge)
      {
        slots[i] = CheckFailure{instance, error.what()};
      }
    }
    catch (std::exception const &error)
    {
      slots[i] = CheckFailure{instance, error.what()};
    }
  });
  return merge_report(Goal::Totality, instances.size(), slots);
}

SoundnessReport check_well_defined(
    std::vector<AuctionInstance> const &instances, TieBreakSeed seed,
    Exec exec, Mutation mutation)
{
  std::vector<std::optional<CheckFailure>> slots(instances.size());
  for_each_indexed(instances.size(), exec, [&](std::size_t i) {
    AuctionInstance const &instance = instances[i];
    try
    {
      Outcome outcome = run_auction(instance, seed, Solver::Dp, Exec::Serial);
      if (mutation == Mutation::WellDefinedness && i == 0)
      {
        outcome = corrupted_negative_payment(std::move(outcome));
      }
      if (auto defect = outcome_defect(instance, outcome))
      {
        slots[i] = CheckFailure{instance, *defect};
      }
    }
    catch (std::exception const &error)
    {
      slots[i] = CheckFailure{instance, error.what()};
    }
  });
  return merge_report(Goal::WellDefinedness, instances.size(), slots);
}

SoundnessReport check_uniqueness(
    std::vector<AuctionInstance> const &instances, TieBreakSeed seed,
    Exec exec, Mutation mutation)
{
  std::vector<std::optional<CheckFailure>> slots(instances.size());
  for_each_indexed(instances.size(), exec, [&](std::size_t i) {
    AuctionInstance const &instance = instances[i];
    try
    {
      Outcome const first =
          run_auction(instance, seed, Solver::Oracle, Exec::Serial);
      Outcome second =
          run_auction(instance, seed, Solver::Oracle, Exec::Serial);
      Outcome const third =
          run_auction(instance, seed, Solver::Dp, Exec::Serial);
      if (mutation == Mutation::Uniqueness && i == 0)
      {
        second.max_value += Amount(1);
      }
      std::string const a = outcome_canonical_json(first);
      std::string const b = outcome_canonical_json(second);
      std::string const c = outcome_canonical_json(third);
      if (a != b)
      {
        slots[i] = CheckFailure{
            instance, "repeated oracle runs disagree at seed " +
                          std::to_string(seed.value)};
      }
      else if (a != c)
      {
        slots[i] = CheckFailure{
            instance, "oracle and dp outcomes disagree at seed " +
                          std::to_string(seed.value)};
      }
    }
    catch (std::exception const &error)
    {
      slots[i] = CheckFailure{instance, error.what()};
    }
  });
  return merge_report(Goal::Uniqueness, instances.size(), slots);
}

SoundnessReport check_equivalence(std::size_t max_goods,
                                  std::size_t max_bidders,
                                  std::size_t tables_per_shape,
                                  std::uint64_t rng_seed, Exec exec,
                                  Mutation mutation)
{
  if (max_goods == 0 || max_goods > 4 || max_bidders == 0 || max_bidders > 4)
  {
    throw_error(Errc::TooLarge,
                "the exhaustive equivalence regime is limited to 4 goods "
                "and 4 bidders");
  }

  std::vector<Amount> const grid{Amount(0), Amount(1), Amount(2), Amount(3)};

  SoundnessReport report;
  report.goal = Goal::Equivalence;
  for (std::size_t g = 1; g <= max_goods; ++g)
  {
    for (std::size_t m = 1; m <= max_bidders; ++m)
    {
      std::vector<Good> const     goods = letter_goods(g);
      std::vector<BidderId> const bidders = numbered_bidders(m);

      std::set<Allocation> const oracle_set =
          possible_allocations_oracle(goods, bidders);
      std::vector<Allocation> const raw =
          possible_allocations_alg(goods, bidders, Exec::Serial);
      std::set<Allocation> alg_set(raw.begin(), raw.end());
      if (mutation == Mutation::Equivalence && g == 1 && m == 1 &&
          !alg_set.empty())
      {
        alg_set.erase(alg_set.begin());
      }

      ++report.instances_checked;
      if (alg_set != oracle_set)
      {
        std::vector<Allocation> difference;
        std::set_symmetric_difference(
            alg_set.begin(), alg_set.end(), oracle_set.begin(),
            oracle_set.end(), std::back_inserter(difference));
        std::ostringstream diag;
        diag << "allocation sets differ at " << g << " goods, " << m
             << " bidders (alg " << alg_set.size() << ", oracle "
             << oracle_set.size() << "); first difference: "
             << difference.front().str();
        report.failures.push_back(
            CheckFailure{AuctionInstance(goods, bidders, {}), diag.str()});
      }

      std::vector<Allocation> const space(oracle_set.begin(),
                                          oracle_set.end());
      std::vector<std::optional<CheckFailure>> slots(tables_per_shape);
      std::vector<AuctionInstance>             tables(tables_per_shape);
      for (std::size_t t = 0; t < tables_per_shape; ++t)
      {
        detail::SplitMix rng(detail::splitmix_fin(
            detail::splitmix_fin(rng_seed ^ (g * 64 + m)) + t));
        tables[t] = gen_instance(rng, g, m, grid);
      }
      for_each_indexed(tables_per_shape, exec, [&](std::size_t t) {
        AuctionInstance const &instance = tables[t];
        WdpResult const oracle = scan_allocations(instance, space,
                                                  Exec::Serial);
        WdpResult const dp =
            winning_allocations_dp(instance, Exec::Serial);
        if (!(dp == oracle))
        {
          std::ostringstream diag;
          diag << "dp result differs from oracle (max " << dp.max_value.str()
               << " vs " << oracle.max_value.str() << "; winners "
               << dp.winners.size() << " vs " << oracle.winners.size() << ")";
          slots[t] = CheckFailure{instance, diag.str()};
        }
      });
      report.instances_checked += tables_per_shape;
      for (auto &slot : slots)
      {
        if (slot)
        {
          report.failures.push_back(std::move(*slot));
        }
      }
    }
  }
  return report;
}

SoundnessReport check_truthfulness_single_good(
    std::size_t n_bidders, std::vector<Amount> const &grid,
    std::vector<TieBreakSeed> const &seeds, Exec exec, Mutation mutation)
{
  if (n_bidders == 0 || n_bidders > 3)
  {
    throw_error(Errc::TooLarge,
                "the dominance desk check admits 1 to 3 bidders");
  }
  std::vector<Amount> values = grid;
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  for (Amount const &amount : values)
  {
    if (amount.is_negative())
    {
      throw_error(Errc::NegativeBid, "valuation grid contains " + amount.str());
    }
  }
  if (values.empty())
  {
    return SoundnessReport{Goal::Truthfulness, 0, {}};
  }

  std::vector<Good> const     goods = letter_goods(1);
  std::vector<BidderId> const bidders = numbered_bidders(n_bidders);
  Bundle const                lot(goods);

  auto instance_for = [&](std::vector<Amount> const &bid_vector) {
    std::vector<BidEntry> entries;
    for (std::size_t i = 0; i < n_bidders; ++i)
    {
      if (!bid_vector[i].is_zero())
      {
        entries.push_back(BidEntry{bidders[i], lot, bid_vector[i]});
      }
    }
    return AuctionInstance(goods, bidders, std::move(entries));
  };

  auto utility = [&](Outcome const &outcome, std::size_t bidder_index,
                     Amount const &valuation) {
    Amount gained;
    if (auto bundle = outcome.chosen.bundle_of(bidders[bidder_index]))
    {
      if (!bundle->empty())
      {
        gained = valuation;
      }
    }
    return gained - outcome.payments[bidder_index].second;
  };

  std::size_t profile_count = 1;
  for (std::size_t i = 0; i < n_bidders; ++i)
  {
    profile_count *= values.size();
  }

  std::vector<std::optional<CheckFailure>> slots(profile_count);
  for_each_indexed(profile_count, exec, [&](std::size_t code) {
    std::vector<Amount> profile(n_bidders);
    std::size_t         rest = code;
    for (std::size_t i = 0; i < n_bidders; ++i)
    {
      profile[i] = values[rest % values.size()];
      rest /= values.size();
    }
    AuctionInstance const truthful = instance_for(profile);

    for (TieBreakSeed const seed : seeds)
    {
      Outcome const base = run_auction(truthful, seed, Solver::Dp,
                                       Exec::Serial);
      for (std::size_t i = 0; i < n_bidders && !slots[code]; ++i)
      {
        Amount const truthful_utility = utility(base, i, profile[i]);
        for (Amount const &deviation : values)
        {
          if (deviation == profile[i])
          {
            continue;
          }
          std::vector<Amount> bid_vector = profile;
          bid_vector[i] = deviation;
          Outcome const deviated = run_auction(instance_for(bid_vector), seed,
                                               Solver::Dp, Exec::Serial);
          Amount deviation_utility = utility(deviated, i, profile[i]);
          if (mutation == Mutation::Truthfulness && code == 0)
          {
            deviation_utility += Amount(1);
          }
          if (deviation_utility > truthful_utility)
          {
            std::ostringstream diag;
            diag << "bidder " << bidders[i].id << " gains by bidding "
                 << deviation.str() << " instead of " << profile[i].str()
                 << " (utility " << deviation_utility.str() << " > "
                 << truthful_utility.str() << ", seed " << seed.value << ")";
            slots[code] = CheckFailure{truthful, diag.str()};
            break;
          }
        }
      }
      if (slots[code])
      {
        break;
      }
    }
  });
  return merge_report(Goal::Truthfulness, profile_count * seeds.size(), slots);
}

}  // namespace vickrey
