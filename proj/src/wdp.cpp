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

#include "vickrey/wdp.hpp"

#include "vickrey/partitions.hpp"

#include <algorithm>
#include <cassert>
#include <utility>

namespace vickrey {

namespace {

// Value of an allocation known to be valid; skips the recognizer.
Amount raw_value(AuctionInstance const &instance, Allocation const &allocation)
{
  Amount total;
  for (auto const &[bundle, bidder] : allocation.items())
  {
    total += instance.bid(bidder, bundle);
  }
  return total;
}

// Goods mapped onto bit positions by canonical order; per-bidder explicit
// bid entries as (mask, amount). Explicit empty-bundle entries are dropped
// (they are forced to 0 and equivalent to no assignment).
struct CompiledInstance
{
  std::vector<Good>                                          goods;
  std::vector<BidderId>                                      bidders;
  std::uint32_t                                              full_mask = 0;
  std::vector<std::vector<std::pair<std::uint32_t, Amount>>> entries;

  explicit CompiledInstance(AuctionInstance const &instance)
    : goods(instance.goods())
    , bidders(instance.bidders())
  {
    full_mask = goods.size() == 32
                    ? ~std::uint32_t{0}
                    : (std::uint32_t{1} << goods.size()) - 1;
    entries.resize(bidders.size());
    for (BidEntry const &entry : instance.bids())
    {
      if (entry.bundle.empty())
      {
        continue;
      }
      std::uint32_t mask = 0;
      for (Good const &good : entry.bundle.goods())
      {
        auto it = std::lower_bound(goods.begin(), goods.end(), good);
        mask |= std::uint32_t{1} << (it - goods.begin());
      }
      auto const bidder_index =
          std::lower_bound(bidders.begin(), bidders.end(), entry.bidder) -
          bidders.begin();
      entries[bidder_index].emplace_back(mask, entry.amount);
    }
    for (auto &per_bidder : entries)
    {
      std::sort(per_bidder.begin(), per_bidder.end(),
                [](auto const &a, auto const &b) { return a.first < b.first; });
    }
  }

  bool has_explicit(std::size_t bidder_index, std::uint32_t mask) const
  {
    auto const &per_bidder = entries[bidder_index];
    auto        it = std::lower_bound(
        per_bidder.begin(), per_bidder.end(), mask,
        [](auto const &entry, std::uint32_t m) { return entry.first < m; });
    return it != per_bidder.end() && it->first == mask;
  }

  Bundle bundle_from(std::uint32_t mask) const
  {
    std::vector<Good> members;
    for (std::size_t bit = 0; bit < goods.size(); ++bit)
    {
      if (mask & (std::uint32_t{1} << bit))
      {
        members.push_back(goods[bit]);
      }
    }
    return Bundle(std::move(members));
  }
};

// Forward pass of W(i, S) = max over admissible bundles T of
// b_i(T) + W(i-1, S \ T); T ranges over the bidder's explicit entries plus
// the empty bundle (unlisted bundles bid 0 and cannot beat T = {} on value).
// Cells within a layer are independent, which is what makes the parallel
// fill bit-identical to the serial one.
std::vector<std::vector<Amount>> dp_forward(CompiledInstance const &compiled,
                                            Exec                    exec)
{
  std::size_t const n_states = std::size_t{compiled.full_mask} + 1;
  std::size_t const n_bidders = compiled.bidders.size();
  std::vector<std::vector<Amount>> table(n_bidders + 1,
                                         std::vector<Amount>(n_states));
  for (std::size_t layer = 1; layer <= n_bidders; ++layer)
  {
    auto const &previous = table[layer - 1];
    auto       &current = table[layer];
    auto const &bids = compiled.entries[layer - 1];
    auto        fill = [&](std::size_t state) {
      std::uint32_t const available = static_cast<std::uint32_t>(state);
      Amount              best = previous[state];
      for (auto const &[mask, amount] : bids)
      {
        if ((mask & available) == mask)
        {
          Amount candidate = amount + previous[state & ~mask];
          if (candidate > best)
          {
            best = std::move(candidate);
          }
        }
      }
      current[state] = std::move(best);
    };
    if (exec == Exec::Parallel)
    {
#pragma omp parallel for schedule(static)
      for (std::size_t state = 0; state < n_states; ++state)
      {
        fill(state);
      }
    }
    else
    {
      for (std::size_t state = 0; state < n_states; ++state)
      {
        fill(state);
      }
    }
  }
  return table;
}

// Enumerates every optimal assignment path. A tie at a cell is any choice
// reproducing the cell's value: an explicit bundle, or any remaining
// sub-bundle at its implicit bid of 0 (required for completeness — a winner
// may hand a bidder goods nobody bid on when the optimum permits it).
void backtrack(CompiledInstance const                  &compiled,
               std::vector<std::vector<Amount>> const  &table,
               std::size_t layer, std::uint32_t state,
               std::vector<std::pair<std::uint32_t, std::size_t>> &chosen,
               std::set<Allocation>                    &out)
{
  if (layer == 0)
  {
    std::vector<Allocation::Item> items;
    items.reserve(chosen.size());
    for (auto const &[mask, bidder_index] : chosen)
    {
      items.emplace_back(compiled.bundle_from(mask),
                         compiled.bidders[bidder_index]);
    }
    out.insert(Allocation(std::move(items)));
    return;
  }

  Amount const &target = table[layer][state];
  auto const   &previous = table[layer - 1];

  for (auto const &[mask, amount] : compiled.entries[layer - 1])
  {
    if ((mask & state) == mask && amount + previous[state & ~mask] == target)
    {
      chosen.emplace_back(mask, layer - 1);
      backtrack(compiled, table, layer - 1, state & ~mask, chosen, out);
      chosen.pop_back();
    }
  }

  std::uint32_t sub = state;
  while (true)
  {
    if (!compiled.has_explicit(layer - 1, sub) && previous[state & ~sub] == target)
    {
      if (sub != 0)
      {
        chosen.emplace_back(sub, layer - 1);
        backtrack(compiled, table, layer - 1, state & ~sub, chosen, out);
        chosen.pop_back();
      }
      else
      {
        backtrack(compiled, table, layer - 1, state, chosen, out);
      }
    }
    if (sub == 0)
    {
      break;
    }
    sub = (sub - 1) & state;
  }
}

}  // namespace

char const *to_string(Solver solver)
{
  return solver == Solver::Oracle ? "oracle" : "dp";
}

WdpResult scan_allocations(AuctionInstance const         &instance,
                           std::vector<Allocation> const &space, Exec exec)
{
  assert(!space.empty());
  std::vector<Amount> values(space.size());
  if (exec == Exec::Parallel)
  {
#pragma omp parallel for schedule(static)
    for (std::size_t i = 0; i < space.size(); ++i)
    {
      values[i] = raw_value(instance, space[i]);
    }
  }
  else
  {
    for (std::size_t i = 0; i < space.size(); ++i)
    {
      values[i] = raw_value(instance, space[i]);
    }
  }

  WdpResult result;
  result.max_value = values[0];
  for (Amount const &value : values)
  {
    if (value > result.max_value)
    {
      result.max_value = value;
    }
  }
  for (std::size_t i = 0; i < space.size(); ++i)
  {
    if (values[i] == result.max_value)
    {
      result.winners.insert(space[i]);
    }
  }
  return result;
}

WdpResult winning_allocations_oracle(AuctionInstance const &instance,
                                     Exec                   exec)
{
  validate_instance(instance);
  std::set<Allocation> const space =
      possible_allocations_oracle(instance.goods(), instance.bidders());
  std::vector<Allocation> flat(space.begin(), space.end());
  return scan_allocations(instance, flat, exec);
}

WdpResult winning_allocations_dp(AuctionInstance const &instance, Exec exec)
{
  validate_instance(instance);
  if (instance.goods().size() > kMaxDpGoods)
  {
    throw_error(Errc::TooLarge,
                "the subset DP admits at most " + std::to_string(kMaxDpGoods) +
                    " goods, got " + std::to_string(instance.goods().size()));
  }

  CompiledInstance const compiled(instance);
  auto const             table = dp_forward(compiled, exec);

  WdpResult result;
  result.max_value = table[compiled.bidders.size()][compiled.full_mask];

  std::vector<std::pair<std::uint32_t, std::size_t>> chosen;
  backtrack(compiled, table, compiled.bidders.size(), compiled.full_mask,
            chosen, result.winners);
  return result;
}

Amount max_value(AuctionInstance const &instance, Solver solver, Exec exec)
{
  validate_instance(instance);
  if (solver == Solver::Oracle)
  {
    std::set<Allocation> const space =
        possible_allocations_oracle(instance.goods(), instance.bidders());
    Amount best;
    for (Allocation const &allocation : space)
    {
      Amount value = raw_value(instance, allocation);
      if (value > best)
      {
        best = std::move(value);
      }
    }
    return best;
  }

  if (instance.goods().size() > kMaxDpGoods)
  {
    throw_error(Errc::TooLarge,
                "the subset DP admits at most " + std::to_string(kMaxDpGoods) +
                    " goods, got " + std::to_string(instance.goods().size()));
  }
  CompiledInstance const compiled(instance);
  auto const             table = dp_forward(compiled, exec);
  return table[compiled.bidders.size()][compiled.full_mask];
}

WdpResult solve_wdp(AuctionInstance const &instance, Solver solver, Exec exec)
{
  return solver == Solver::Oracle ? winning_allocations_oracle(instance, exec)
                                  : winning_allocations_dp(instance, exec);
}

}  // namespace vickrey
