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

#include <algorithm>
#include <set>
#include <sstream>

namespace vickrey {

char const *to_string(Errc code)
{
  switch (code)
  {
  case Errc::EmptyGoods:
    return "EmptyGoods";
  case Errc::EmptyBidders:
    return "EmptyBidders";
  case Errc::BundleNotSubset:
    return "BundleNotSubset";
  case Errc::NegativeBid:
    return "NegativeBid";
  case Errc::NonzeroEmptyBundleBid:
    return "NonzeroEmptyBundleBid";
  case Errc::DuplicateBidEntry:
    return "DuplicateBidEntry";
  case Errc::InvalidGood:
    return "InvalidGood";
  case Errc::InvalidBidder:
    return "InvalidBidder";
  case Errc::UnknownBidder:
    return "UnknownBidder";
  case Errc::InvalidAllocation:
    return "InvalidAllocation";
  case Errc::NotAWinner:
    return "NotAWinner";
  case Errc::EmptyCandidates:
    return "EmptyCandidates";
  case Errc::TooLarge:
    return "TooLarge";
  case Errc::ParseError:
    return "ParseError";
  }
  return "UnknownError";
}

AuctionError::AuctionError(Errc code, std::string const &message)
  : std::runtime_error(std::string(to_string(code)) + ": " + message)
  , code_(code)
{
}

void throw_error(Errc code, std::string const &message)
{
  throw AuctionError(code, message);
}

Bundle::Bundle(std::vector<Good> goods)
  : goods_(std::move(goods))
{
  std::sort(goods_.begin(), goods_.end());
  goods_.erase(std::unique(goods_.begin(), goods_.end()), goods_.end());
}

bool Bundle::empty() const
{
  return goods_.empty();
}

std::size_t Bundle::size() const
{
  return goods_.size();
}

bool Bundle::contains(Good const &good) const
{
  return std::binary_search(goods_.begin(), goods_.end(), good);
}

bool Bundle::subset_of(std::vector<Good> const &sorted_goods) const
{
  return std::includes(sorted_goods.begin(), sorted_goods.end(),
                       goods_.begin(), goods_.end());
}

bool Bundle::disjoint_with(Bundle const &other) const
{
  auto a = goods_.begin();
  auto b = other.goods_.begin();
  while (a != goods_.end() && b != other.goods_.end())
  {
    if (*a < *b)
    {
      ++a;
    }
    else if (*b < *a)
    {
      ++b;
    }
    else
    {
      return false;
    }
  }
  return true;
}

std::string Bundle::str() const
{
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < goods_.size(); ++i)
  {
    if (i > 0)
    {
      out << ',';
    }
    out << goods_[i].id;
  }
  out << '}';
  return out.str();
}

Allocation::Allocation(std::vector<Item> items)
  : items_(std::move(items))
{
  std::sort(items_.begin(), items_.end());
}

bool Allocation::empty() const
{
  return items_.empty();
}

std::size_t Allocation::size() const
{
  return items_.size();
}

std::optional<Bundle> Allocation::bundle_of(BidderId bidder) const
{
  for (auto const &[bundle, owner] : items_)
  {
    if (owner == bidder)
    {
      return bundle;
    }
  }
  return std::nullopt;
}

std::string Allocation::str() const
{
  if (items_.empty())
  {
    return "(empty)";
  }
  std::ostringstream out;
  for (std::size_t i = 0; i < items_.size(); ++i)
  {
    if (i > 0)
    {
      out << ' ';
    }
    out << items_[i].first.str() << "->" << items_[i].second.id;
  }
  return out.str();
}

AuctionInstance::AuctionInstance(std::vector<Good>     goods,
                                 std::vector<BidderId> bidders,
                                 std::vector<BidEntry> bids)
  : goods_(std::move(goods))
  , bidders_(std::move(bidders))
  , bids_(std::move(bids))
{
  std::sort(goods_.begin(), goods_.end());
  goods_.erase(std::unique(goods_.begin(), goods_.end()), goods_.end());
  std::sort(bidders_.begin(), bidders_.end());
  bidders_.erase(std::unique(bidders_.begin(), bidders_.end()),
                 bidders_.end());
  std::stable_sort(bids_.begin(), bids_.end(),
                   [](BidEntry const &a, BidEntry const &b) {
                     if (a.bidder != b.bidder)
                     {
                       return a.bidder < b.bidder;
                     }
                     return a.bundle < b.bundle;
                   });
}

bool AuctionInstance::has_bidder(BidderId bidder) const
{
  return std::binary_search(bidders_.begin(), bidders_.end(), bidder);
}

Amount const &AuctionInstance::bid(BidderId bidder, Bundle const &bundle) const
{
  static Amount const zero{};
  auto it = std::lower_bound(bids_.begin(), bids_.end(),
                             std::make_pair(bidder, bundle),
                             [](BidEntry const &entry, auto const &key) {
                               if (entry.bidder != key.first)
                               {
                                 return entry.bidder < key.first;
                               }
                               return entry.bundle < key.second;
                             });
  if (it != bids_.end() && it->bidder == bidder && it->bundle == bundle)
  {
    return it->amount;
  }
  return zero;
}

AuctionInstance const &validate_instance(AuctionInstance const &instance)
{
  if (instance.goods().empty())
  {
    throw_error(Errc::EmptyGoods, "the goods set must be non-empty");
  }
  if (instance.bidders().empty())
  {
    throw_error(Errc::EmptyBidders, "the bidder set must be non-empty");
  }
  for (Good const &good : instance.goods())
  {
    if (good.id.empty())
    {
      throw_error(Errc::InvalidGood, "good identifiers must be non-empty");
    }
  }
  for (BidderId const &bidder : instance.bidders())
  {
    if (bidder.id < 1)
    {
      throw_error(Errc::InvalidBidder, "bidder ids start at 1");
    }
  }

  BidEntry const *previous = nullptr;
  for (BidEntry const &entry : instance.bids())
  {
    if (!instance.has_bidder(entry.bidder))
    {
      throw_error(Errc::UnknownBidder,
                  "bid entry names bidder " + std::to_string(entry.bidder.id) +
                      " outside the bidder set");
    }
    if (!entry.bundle.subset_of(instance.goods()))
    {
      throw_error(Errc::BundleNotSubset,
                  "bid on " + entry.bundle.str() +
                      " references goods outside the endowment");
    }
    if (entry.amount.is_negative())
    {
      throw_error(Errc::NegativeBid, "bid of " + entry.amount.str() + " by bidder " +
                                         std::to_string(entry.bidder.id));
    }
    if (entry.bundle.empty() && !entry.amount.is_zero())
    {
      throw_error(Errc::NonzeroEmptyBundleBid,
                  "the empty bundle is forced to bid 0, got " +
                      entry.amount.str());
    }
    if (previous != nullptr && previous->bidder == entry.bidder &&
        previous->bundle == entry.bundle)
    {
      throw_error(Errc::DuplicateBidEntry,
                  "bidder " + std::to_string(entry.bidder.id) +
                      " bids twice on " + entry.bundle.str());
    }
    previous = &entry;
  }
  return instance;
}

Amount bid_value(AuctionInstance const &instance, BidderId bidder,
                 Bundle const &bundle)
{
  if (!instance.has_bidder(bidder))
  {
    throw_error(Errc::UnknownBidder,
                "bidder " + std::to_string(bidder.id) + " is not in the instance");
  }
  if (!bundle.subset_of(instance.goods()))
  {
    throw_error(Errc::BundleNotSubset,
                bundle.str() + " is not a subset of the endowment");
  }
  if (bundle.empty())
  {
    return Amount{};
  }
  return instance.bid(bidder, bundle);
}

bool is_valid_allocation(Allocation const            &allocation,
                         std::vector<Good> const     &goods,
                         std::vector<BidderId> const &bidders)
{
  std::set<BidderId> seen_bidders;
  std::set<Good>     seen_goods;
  for (auto const &[bundle, bidder] : allocation.items())
  {
    if (bundle.empty())
    {
      return false;
    }
    if (!bundle.subset_of(goods))
    {
      return false;
    }
    if (!std::binary_search(bidders.begin(), bidders.end(), bidder))
    {
      return false;
    }
    if (!seen_bidders.insert(bidder).second)
    {
      return false;
    }
    for (Good const &good : bundle.goods())
    {
      if (!seen_goods.insert(good).second)
      {
        return false;
      }
    }
  }
  return true;
}

Amount allocation_value(AuctionInstance const &instance,
                        Allocation const      &allocation)
{
  if (!is_valid_allocation(allocation, instance.goods(), instance.bidders()))
  {
    throw_error(Errc::InvalidAllocation,
                "not a valid allocation for this instance: " +
                    allocation.str());
  }
  Amount total;
  for (auto const &[bundle, bidder] : allocation.items())
  {
    total += instance.bid(bidder, bundle);
  }
  return total;
}

}  // namespace vickrey
