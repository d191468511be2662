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
//
// JSON interchange: bid files in, outcome documents and soundness reports
// out. Everything is canonical — object keys sorted, rationals rendered in
// lowest terms as "p" or "p/q" strings, never floating point — so equal
// values serialize to identical bytes.

#include "vickrey/core.hpp"
#include "vickrey/soundness.hpp"
#include "vickrey/vcg.hpp"
#include "vickrey/wdp.hpp"

#include <cstdint>
#include <string>
#include <string_view>

namespace vickrey {

/// Outcome plus the run parameters that produced it.
struct OutcomeDocument
{
  Outcome       outcome;
  std::uint64_t seed = 0;
  Solver        solver = Solver::Dp;
  std::string   version;

  bool operator==(OutcomeDocument const &) const = default;
};

/// Parses a bid file:
///   {"goods":["A","B"],"bidders":[1,2],
///    "bids":[{"bidder":1,"bundle":["A"],"price":"2"}]}
/// Prices may be integer, fraction ("3/4") or decimal ("2.50") strings, or
/// JSON integers; JSON floats are rejected to keep the pipeline exact.
/// Syntax errors throw ParseError with line/column; the result is validated.
AuctionInstance parse_bid_file(std::string_view text);

/// Canonical rendering; parse_bid_file(render_bid_file(i)) == i.
std::string render_bid_file(AuctionInstance const &instance);

std::string     render_outcome(OutcomeDocument const &document);
OutcomeDocument parse_outcome(std::string_view text);

/// Canonical bytes of the outcome alone (no run parameters); the uniqueness
/// checker compares these across runs and solvers.
std::string outcome_canonical_json(Outcome const &outcome);

std::string report_text(SoundnessReport const &report);
std::string report_json(SoundnessReport const &report);

}  // namespace vickrey
