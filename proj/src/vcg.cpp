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

#include "vickrey/vcg.hpp"

#include "vickrey/detail/splitmix.hpp"

#include <algorithm>
#include <cassert>

namespace vickrey {

namespace {

AuctionInstance without_bidder(AuctionInstance const &instance,
                               BidderId               bidder)
{
  std::vector<BidderId> reduced_bidders;
  for (BidderId const &candidate : instance.bidders())
  {
    if (candidate != bidder)
    {
      reduced_bidders.push_back(candidate);
    }
  }
  std::vector<BidEntry> reduced_bids;
  for (BidEntry const &entry : instance.bids())
  {
    if (entry.bidder != bidder)
    {
      reduced_bids.push_back(entry);
    }
  }
  return AuctionInstance(instance.goods(), std::move(reduced_bidders),
                         std::move(reduced_bids));
}

Amount alpha_unchecked(AuctionInstance const &instance, BidderId bidder,
                       Solver solver, Exec exec)
{
  if (instance.bidders().size() == 1)
  {
    return Amount{};  // only the empty allocation remains
  }
  return max_value(without_bidder(instance, bidder), solver, exec);
}

// Opportunity-cost values for every bidder, in bidder order. Independent
// subproblems; the parallel path writes into indexed slots.
std::vector<Amount> all_alphas(AuctionInstance const &instance, Solver solver,
                               Exec exec)
{
  auto const         &bidders = instance.bidders();
  std::vector<Amount> alphas(bidders.size());
  if (exec == Exec::Parallel)
  {
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < bidders.size(); ++i)
    {
      alphas[i] = alpha_unchecked(instance, bidders[i], solver, Exec::Serial);
    }
  }
  else
  {
    for (std::size_t i = 0; i < bidders.size(); ++i)
    {
      alphas[i] = alpha_unchecked(instance, bidders[i], solver, Exec::Serial);
    }
  }
  return alphas;
}

std::vector<std::pair<BidderId, Amount>> payments_from_alphas(
    AuctionInstance const &instance, Allocation const &chosen,
    std::vector<Amount> const &alphas)
{
  Amount const total = [&] {
    Amount sum;
    for (auto const &[bundle, bidder] : chosen.items())
    {
      sum += instance.bid(bidder, bundle);
    }
    return sum;
  }();

  std::vector<std::pair<BidderId, Amount>> result;
  result.reserve(instance.bidders().size());
  for (std::size_t i = 0; i < instance.bidders().size(); ++i)
  {
    BidderId const bidder = instance.bidders()[i];
    Amount         own;
    if (auto bundle = chosen.bundle_of(bidder))
    {
      own = instance.bid(bidder, *bundle);
    }
    // p_n = alpha_n - sum over m != n of b_m(X*_m)
    result.emplace_back(bidder, alphas[i] - (total - own));
  }
  return result;
}

}  // namespace

Amount alpha(AuctionInstance const &instance, BidderId bidder, Solver solver,
             Exec exec)
{
  validate_instance(instance);
  if (!instance.has_bidder(bidder))
  {
    throw_error(Errc::UnknownBidder,
                "alpha of bidder " + std::to_string(bidder.id) +
                    " outside the bidder set");
  }
  return alpha_unchecked(instance, bidder, solver, exec);
}

std::vector<std::pair<BidderId, Amount>> payments(
    AuctionInstance const &instance, Allocation const &chosen, Solver solver,
    Exec exec)
{
  validate_instance(instance);
  if (!is_valid_allocation(chosen, instance.goods(), instance.bidders()))
  {
    throw_error(Errc::NotAWinner,
                "payments require a value-maximising allocation; " +
                    chosen.str() + " is not even valid");
  }
  Amount value;
  for (auto const &[bundle, bidder] : chosen.items())
  {
    value += instance.bid(bidder, bundle);
  }
  if (value != max_value(instance, solver, exec))
  {
    throw_error(Errc::NotAWinner,
                chosen.str() + " does not attain the optimum");
  }
  return payments_from_alphas(instance, chosen,
                              all_alphas(instance, solver, exec));
}

std::uint64_t bundle_weight(TieBreakSeed seed, BidderId bidder,
                            Bundle const &bundle)
{
  std::vector<unsigned char> message;
  message.reserve(16 + bundle.size() * 8);
  detail::append_u64le(message, seed.value);
  detail::append_u64le(message, bidder.id);
  for (Good const &good : bundle.goods())
  {
    detail::append_u32le(message, static_cast<std::uint32_t>(good.id.size()));
    message.insert(message.end(), good.id.begin(), good.id.end());
  }
  return detail::fold_bytes(message);
}

Allocation tie_break(std::set<Allocation> const &candidates,
                     AuctionInstance const &instance, TieBreakSeed seed)
{
  if (candidates.empty())
  {
    throw_error(Errc::EmptyCandidates, "tie_break over an empty set");
  }

  Bundle const      empty_bundle;
  Allocation const *best = nullptr;
  std::uint64_t     best_score = 0;
  // Candidates iterate in canonical order, so keeping only strict score
  // improvements makes the least candidate win residual score ties.
  for (Allocation const &candidate : candidates)
  {
    std::uint64_t score = 0;
    for (BidderId const &bidder : instance.bidders())
    {
      auto bundle = candidate.bundle_of(bidder);
      score += bundle_weight(seed, bidder, bundle ? *bundle : empty_bundle);
    }
    if (best == nullptr || score > best_score)
    {
      best = &candidate;
      best_score = score;
    }
  }
  return *best;
}

Outcome run_auction(AuctionInstance const &instance, TieBreakSeed seed,
                    Solver solver, Exec exec)
{
  validate_instance(instance);
  WdpResult const result = solve_wdp(instance, solver, exec);
  assert(!result.winners.empty());

  Outcome outcome;
  outcome.chosen = tie_break(result.winners, instance, seed);
  outcome.max_value = result.max_value;
  outcome.tie_break_applied = result.winners.size() > 1;

  std::vector<Amount> const alphas = all_alphas(instance, solver, exec);
  outcome.payments = payments_from_alphas(instance, outcome.chosen, alphas);
  outcome.alphas.reserve(alphas.size());
  for (std::size_t i = 0; i < alphas.size(); ++i)
  {
    outcome.alphas.emplace_back(instance.bidders()[i], alphas[i]);
  }
  return outcome;
}

}  // namespace vickrey
