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

#include "vickrey/partitions.hpp"

#include <algorithm>

namespace vickrey {

namespace {

void check_enumeration_inputs(std::vector<Good> const     &goods,
                              std::vector<BidderId> const &bidders)
{
  if (goods.empty())
  {
    throw_error(Errc::EmptyGoods, "allocation enumeration needs goods");
  }
  if (bidders.empty())
  {
    throw_error(Errc::EmptyBidders, "allocation enumeration needs bidders");
  }
}

void enumerate_injective(std::vector<Bundle> const    &blocks,
                         std::vector<BidderId> const  &bidders,
                         std::size_t                   depth,
                         std::vector<bool>            &used,
                         std::vector<Allocation::Item> &current,
                         std::vector<Allocation>      &out)
{
  if (depth == blocks.size())
  {
    out.emplace_back(current);
    return;
  }
  // Unassigned branch first, then each still-free bidder in order.
  enumerate_injective(blocks, bidders, depth + 1, used, current, out);
  for (std::size_t b = 0; b < bidders.size(); ++b)
  {
    if (used[b])
    {
      continue;
    }
    used[b] = true;
    current.emplace_back(blocks[depth], bidders[b]);
    enumerate_injective(blocks, bidders, depth + 1, used, current, out);
    current.pop_back();
    used[b] = false;
  }
}

}  // namespace

std::vector<Allocation> injective_functions(
    std::vector<Bundle> const &blocks, std::vector<BidderId> const &bidders)
{
  std::vector<Allocation>       out;
  std::vector<bool>             used(bidders.size(), false);
  std::vector<Allocation::Item> current;
  enumerate_injective(blocks, bidders, 0, used, current, out);
  return out;
}

std::set<Allocation> possible_allocations_oracle(
    std::vector<Good> const &goods, std::vector<BidderId> const &bidders)
{
  check_enumeration_inputs(goods, bidders);
  std::vector<BidderId> const ordered_bidders = [&] {
    std::vector<BidderId> b = bidders;
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
    return b;
  }();
  std::vector<Good> const ordered_goods = canonical_order(goods);

  std::set<Allocation> result;
  for (Partition const &partition : all_partitions(ordered_goods))
  {
    // Every map from blocks to bidder-or-unassigned, screened through the
    // recognizer; injectivity is enforced by the filter, not the generator.
    std::size_t const k = partition.blocks.size();
    std::size_t const choices = ordered_bidders.size() + 1;
    std::size_t       total = 1;
    for (std::size_t i = 0; i < k; ++i)
    {
      total *= choices;
    }
    for (std::size_t code = 0; code < total; ++code)
    {
      std::vector<Allocation::Item> items;
      std::size_t                   rest = code;
      for (std::size_t i = 0; i < k; ++i)
      {
        std::size_t const choice = rest % choices;
        rest /= choices;
        if (choice > 0)
        {
          items.emplace_back(partition.blocks[i], ordered_bidders[choice - 1]);
        }
      }
      Allocation candidate(std::move(items));
      if (is_valid_allocation(candidate, ordered_goods, ordered_bidders))
      {
        result.insert(std::move(candidate));
      }
    }
  }
  return result;
}

std::vector<Allocation> possible_allocations_alg(
    std::vector<Good> const &goods, std::vector<BidderId> const &bidders,
    Exec exec)
{
  check_enumeration_inputs(goods, bidders);
  std::vector<BidderId> ordered_bidders = bidders;
  std::sort(ordered_bidders.begin(), ordered_bidders.end());
  ordered_bidders.erase(
      std::unique(ordered_bidders.begin(), ordered_bidders.end()),
      ordered_bidders.end());

  std::vector<Partition> const partitions =
      all_partitions(canonical_order(goods));

  // Per-partition enumeration is independent; concatenation order is the
  // partition order either way.
  std::vector<std::vector<Allocation>> chunks(partitions.size());
  if (exec == Exec::Parallel)
  {
#pragma omp parallel for schedule(dynamic)
    for (std::size_t p = 0; p < partitions.size(); ++p)
    {
      chunks[p] = injective_functions(partitions[p].blocks, ordered_bidders);
    }
  }
  else
  {
    for (std::size_t p = 0; p < partitions.size(); ++p)
    {
      chunks[p] = injective_functions(partitions[p].blocks, ordered_bidders);
    }
  }

  std::vector<Allocation> result;
  for (auto &chunk : chunks)
  {
    result.insert(result.end(), std::make_move_iterator(chunk.begin()),
                  std::make_move_iterator(chunk.end()));
  }
  return result;
}

}  // namespace vickrey
