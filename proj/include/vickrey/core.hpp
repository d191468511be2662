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

#include "vickrey/amount.hpp"
#include "vickrey/error.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace vickrey {

/// One indivisible good, identified by a short text token ("A", "lot17").
/// Goods are totally ordered by that token.
struct Good
{
  std::string id;

  auto operator<=>(Good const &) const = default;
};

/// Bidders are the agents 1..N; the seller is never represented as one.
struct BidderId
{
  std::uint32_t id = 0;

  auto operator<=>(BidderId const &) const = default;
};

/// A duplicate-free set of goods, held as the sorted sequence of its
/// identifiers (the canonical form). May be empty.
class Bundle
{
public:
  Bundle() = default;
  explicit Bundle(std::vector<Good> goods);

  std::vector<Good> const &goods() const
  {
    return goods_;
  }

  bool        empty() const;
  std::size_t size() const;
  bool        contains(Good const &good) const;
  bool        subset_of(std::vector<Good> const &sorted_goods) const;
  bool        disjoint_with(Bundle const &other) const;

  /// "{A,B}"; "{}" for the empty bundle.
  std::string str() const;

  auto operator<=>(Bundle const &) const = default;

private:
  std::vector<Good> goods_;
};

/// A partial assignment of bundles to bidders, held sorted by bundle.
/// The container itself does not enforce disjointness or injectivity;
/// is_valid_allocation is the recognizer for those invariants.
class Allocation
{
public:
  using Item = std::pair<Bundle, BidderId>;

  Allocation() = default;
  explicit Allocation(std::vector<Item> items);

  std::vector<Item> const &items() const
  {
    return items_;
  }

  bool        empty() const;
  std::size_t size() const;

  std::optional<Bundle> bundle_of(BidderId bidder) const;

  /// "{A}->1 {B}->2"; "(empty)" for the empty allocation.
  std::string str() const;

  auto operator<=>(Allocation const &) const = default;

private:
  std::vector<Item> items_;
};

struct BidEntry
{
  BidderId bidder;
  Bundle   bundle;
  Amount   amount;

  bool operator==(BidEntry const &) const = default;
};

/// The auction input: the endowment, the bidder set, and a sparse bid table.
/// Bundles absent from the table bid 0, as does the empty bundle.
class AuctionInstance
{
public:
  AuctionInstance() = default;
  AuctionInstance(std::vector<Good> goods, std::vector<BidderId> bidders,
                  std::vector<BidEntry> bids);

  std::vector<Good> const &goods() const
  {
    return goods_;
  }
  std::vector<BidderId> const &bidders() const
  {
    return bidders_;
  }
  std::vector<BidEntry> const &bids() const
  {
    return bids_;
  }

  bool has_bidder(BidderId bidder) const;

  /// Sparse lookup without precondition checks: the stored amount, or 0.
  Amount const &bid(BidderId bidder, Bundle const &bundle) const;

  bool operator==(AuctionInstance const &) const = default;

private:
  std::vector<Good>     goods_;    // sorted, unique
  std::vector<BidderId> bidders_;  // sorted, unique
  std::vector<BidEntry> bids_;     // sorted by (bidder, bundle); duplicates
                                   // survive construction so that validation
                                   // can report them
};

/// Checks every instance invariant and returns the instance unchanged.
/// Throws AuctionError with one of: EmptyGoods, EmptyBidders, InvalidGood,
/// InvalidBidder, BundleNotSubset, NegativeBid, NonzeroEmptyBundleBid,
/// DuplicateBidEntry.
AuctionInstance const &validate_instance(AuctionInstance const &instance);

/// b_n(X): the stored amount, or 0 for unlisted bundles and for X = {}.
Amount bid_value(AuctionInstance const &instance, BidderId bidder,
                 Bundle const &bundle);

/// True iff the allocation's bundles are non-empty, pairwise disjoint
/// subsets of `goods`, no bidder appears twice, and every assigned bidder
/// is a member of `bidders`. Both vectors must be sorted and unique.
bool is_valid_allocation(Allocation const &allocation,
                         std::vector<Good> const     &goods,
                         std::vector<BidderId> const &bidders);

/// Sum of b_n(X_n) over the allocation's assignments; 0 for the empty
/// allocation. Throws InvalidAllocation when the allocation is not valid
/// for the instance.
Amount allocation_value(AuctionInstance const &instance,
                        Allocation const      &allocation);

}  // namespace vickrey
