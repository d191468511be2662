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

#include <stdexcept>
#include <string>

namespace vickrey {

enum class Errc
{
  EmptyGoods,
  EmptyBidders,
  BundleNotSubset,
  NegativeBid,
  NonzeroEmptyBundleBid,
  DuplicateBidEntry,
  InvalidGood,
  InvalidBidder,
  UnknownBidder,
  InvalidAllocation,
  NotAWinner,
  EmptyCandidates,
  TooLarge,
  ParseError,
};

char const *to_string(Errc code);

/// Engine-level failure carrying a machine-checkable error code.
class AuctionError : public std::runtime_error
{
public:
  AuctionError(Errc code, std::string const &message);

  Errc code() const noexcept
  {
    return code_;
  }

private:
  Errc code_;
};

[[noreturn]] void throw_error(Errc code, std::string const &message);

}  // namespace vickrey
