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

#include "vickrey/serialization.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace vickrey {

namespace {

using nlohmann::json;

// Line/column of a byte offset, both 1-based, for parse diagnostics.
std::pair<std::size_t, std::size_t> position_of(std::string_view text,
                                                std::size_t      offset)
{
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i)
  {
    if (text[i] == '\n')
    {
      ++line;
      column = 1;
    }
    else
    {
      ++column;
    }
  }
  return {line, column};
}

json parse_json(std::string_view text)
{
  try
  {
    return json::parse(text);
  }
  catch (json::parse_error const &error)
  {
    auto const [line, column] =
        position_of(text, error.byte > 0 ? error.byte - 1 : 0);
    std::ostringstream message;
    message << "line " << line << ", column " << column << ": "
            << error.what();
    throw_error(Errc::ParseError, message.str());
  }
}

void require_keys(json const &object, std::vector<std::string> const &keys,
                  std::string const &where)
{
  if (!object.is_object())
  {
    throw_error(Errc::ParseError, where + " must be a JSON object");
  }
  for (std::string const &key : keys)
  {
    if (!object.contains(key))
    {
      throw_error(Errc::ParseError, where + " is missing key \"" + key + "\"");
    }
  }
  for (auto const &[key, value] : object.items())
  {
    if (std::find(keys.begin(), keys.end(), key) == keys.end())
    {
      throw_error(Errc::ParseError, where + " has unknown key \"" + key + "\"");
    }
  }
}

Amount parse_price(json const &value, std::string const &where)
{
  if (value.is_string())
  {
    if (auto amount = Amount::parse(value.get<std::string>()))
    {
      return *amount;
    }
    throw_error(Errc::ParseError, where + ": malformed price \"" +
                                      value.get<std::string>() + "\"");
  }
  if (value.is_number_integer() && !value.is_number_float())
  {
    return Amount(value.get<long>());
  }
  // Floats are rejected outright: decimal strings keep the pipeline exact.
  throw_error(Errc::ParseError,
              where + ": prices must be strings or integers");
}

BidderId parse_bidder(json const &value, std::string const &where)
{
  if (!value.is_number_integer() || value.is_number_float() ||
      value.get<long long>() < 1 ||
      value.get<long long>() > 0xffffffffLL)
  {
    throw_error(Errc::ParseError, where + ": bidders are positive integers");
  }
  return BidderId{static_cast<std::uint32_t>(value.get<long long>())};
}

json bundle_to_json(Bundle const &bundle)
{
  json out = json::array();
  for (Good const &good : bundle.goods())
  {
    out.push_back(good.id);
  }
  return out;
}

Bundle bundle_from_json(json const &value, std::string const &where)
{
  if (!value.is_array())
  {
    throw_error(Errc::ParseError, where + ": bundles are arrays of goods");
  }
  std::vector<Good> goods;
  for (json const &item : value)
  {
    if (!item.is_string() || item.get<std::string>().empty())
    {
      throw_error(Errc::ParseError,
                  where + ": bundle members are non-empty strings");
    }
    goods.push_back(Good{item.get<std::string>()});
  }
  return Bundle(std::move(goods));
}

json allocation_to_json(Allocation const &allocation)
{
  json out = json::array();
  for (auto const &[bundle, bidder] : allocation.items())
  {
    json item;
    item["bidder"] = bidder.id;
    item["bundle"] = bundle_to_json(bundle);
    out.push_back(item);
  }
  return out;
}

Allocation allocation_from_json(json const &value, std::string const &where)
{
  if (!value.is_array())
  {
    throw_error(Errc::ParseError, where + " must be an array");
  }
  std::vector<Allocation::Item> items;
  for (std::size_t i = 0; i < value.size(); ++i)
  {
    json const &item = value[i];
    std::string const at = where + "[" + std::to_string(i) + "]";
    require_keys(item, {"bidder", "bundle"}, at);
    items.emplace_back(bundle_from_json(item["bundle"], at),
                       parse_bidder(item["bidder"], at));
  }
  return Allocation(std::move(items));
}

json amount_map_to_json(std::vector<std::pair<BidderId, Amount>> const &map)
{
  json out = json::object();
  for (auto const &[bidder, amount] : map)
  {
    out[std::to_string(bidder.id)] = amount.str();
  }
  return out;
}

std::vector<std::pair<BidderId, Amount>> amount_map_from_json(
    json const &value, std::string const &where)
{
  if (!value.is_object())
  {
    throw_error(Errc::ParseError, where + " must be an object");
  }
  std::vector<std::pair<BidderId, Amount>> map;
  for (auto const &[key, entry] : value.items())
  {
    char *end = nullptr;
    long  id = std::strtol(key.c_str(), &end, 10);
    if (end == nullptr || *end != '\0' || id < 1)
    {
      throw_error(Errc::ParseError, where + ": bad bidder key \"" + key + "\"");
    }
    if (!entry.is_string())
    {
      throw_error(Errc::ParseError, where + ": amounts are strings");
    }
    auto amount = Amount::parse(entry.get<std::string>());
    if (!amount)
    {
      throw_error(Errc::ParseError, where + ": malformed amount \"" +
                                        entry.get<std::string>() + "\"");
    }
    map.emplace_back(BidderId{static_cast<std::uint32_t>(id)}, *amount);
  }
  std::sort(map.begin(), map.end(),
            [](auto const &a, auto const &b) { return a.first < b.first; });
  return map;
}

json outcome_to_json(Outcome const &outcome)
{
  json out;
  out["allocation"] = allocation_to_json(outcome.chosen);
  out["alphas"] = amount_map_to_json(outcome.alphas);
  out["max_value"] = outcome.max_value.str();
  out["payments"] = amount_map_to_json(outcome.payments);
  out["tie_break_applied"] = outcome.tie_break_applied;
  return out;
}

}  // namespace

AuctionInstance parse_bid_file(std::string_view text)
{
  json const root = parse_json(text);
  require_keys(root, {"goods", "bidders", "bids"}, "bid file");

  if (!root["goods"].is_array())
  {
    throw_error(Errc::ParseError, "\"goods\" must be an array");
  }
  std::vector<Good> goods;
  for (json const &item : root["goods"])
  {
    if (!item.is_string() || item.get<std::string>().empty())
    {
      throw_error(Errc::ParseError, "goods are non-empty strings");
    }
    Good good{item.get<std::string>()};
    if (std::find(goods.begin(), goods.end(), good) != goods.end())
    {
      throw_error(Errc::ParseError, "good \"" + good.id + "\" listed twice");
    }
    goods.push_back(std::move(good));
  }

  if (!root["bidders"].is_array())
  {
    throw_error(Errc::ParseError, "\"bidders\" must be an array");
  }
  std::vector<BidderId> bidders;
  for (json const &item : root["bidders"])
  {
    BidderId const bidder = parse_bidder(item, "bidders");
    if (std::find(bidders.begin(), bidders.end(), bidder) != bidders.end())
    {
      throw_error(Errc::ParseError,
                  "bidder " + std::to_string(bidder.id) + " listed twice");
    }
    bidders.push_back(bidder);
  }

  if (!root["bids"].is_array())
  {
    throw_error(Errc::ParseError, "\"bids\" must be an array");
  }
  std::vector<BidEntry> entries;
  for (std::size_t i = 0; i < root["bids"].size(); ++i)
  {
    json const &item = root["bids"][i];
    std::string const at = "bids[" + std::to_string(i) + "]";
    require_keys(item, {"bidder", "bundle", "price"}, at);
    entries.push_back(BidEntry{parse_bidder(item["bidder"], at),
                               bundle_from_json(item["bundle"], at),
                               parse_price(item["price"], at)});
  }

  AuctionInstance instance(std::move(goods), std::move(bidders),
                           std::move(entries));
  validate_instance(instance);
  return instance;
}

std::string render_bid_file(AuctionInstance const &instance)
{
  json out;
  out["goods"] = json::array();
  for (Good const &good : instance.goods())
  {
    out["goods"].push_back(good.id);
  }
  out["bidders"] = json::array();
  for (BidderId const &bidder : instance.bidders())
  {
    out["bidders"].push_back(bidder.id);
  }
  out["bids"] = json::array();
  for (BidEntry const &entry : instance.bids())
  {
    json bid;
    bid["bidder"] = entry.bidder.id;
    bid["bundle"] = bundle_to_json(entry.bundle);
    bid["price"] = entry.amount.str();
    out["bids"].push_back(bid);
  }
  return out.dump(2) + "\n";
}

std::string outcome_canonical_json(Outcome const &outcome)
{
  return outcome_to_json(outcome).dump(2) + "\n";
}

std::string render_outcome(OutcomeDocument const &document)
{
  json out = outcome_to_json(document.outcome);
  out["seed"] = document.seed;
  out["solver"] = to_string(document.solver);
  out["version"] = document.version;
  return out.dump(2) + "\n";
}

OutcomeDocument parse_outcome(std::string_view text)
{
  json const root = parse_json(text);
  require_keys(root,
               {"allocation", "alphas", "max_value", "payments",
                "tie_break_applied", "seed", "solver", "version"},
               "outcome document");

  OutcomeDocument document;
  document.outcome.chosen = allocation_from_json(root["allocation"],
                                                 "allocation");
  document.outcome.alphas = amount_map_from_json(root["alphas"], "alphas");
  document.outcome.payments = amount_map_from_json(root["payments"],
                                                   "payments");
  if (!root["max_value"].is_string())
  {
    throw_error(Errc::ParseError, "max_value must be a string");
  }
  auto max_value = Amount::parse(root["max_value"].get<std::string>());
  if (!max_value)
  {
    throw_error(Errc::ParseError, "malformed max_value");
  }
  document.outcome.max_value = *max_value;
  if (!root["tie_break_applied"].is_boolean())
  {
    throw_error(Errc::ParseError, "tie_break_applied must be a boolean");
  }
  document.outcome.tie_break_applied = root["tie_break_applied"].get<bool>();
  if (!root["seed"].is_number_unsigned() && !root["seed"].is_number_integer())
  {
    throw_error(Errc::ParseError, "seed must be an integer");
  }
  document.seed = root["seed"].get<std::uint64_t>();
  std::string const solver = root["solver"].is_string()
                                 ? root["solver"].get<std::string>()
                                 : std::string{};
  if (solver == "oracle")
  {
    document.solver = Solver::Oracle;
  }
  else if (solver == "dp")
  {
    document.solver = Solver::Dp;
  }
  else
  {
    throw_error(Errc::ParseError, "solver must be \"oracle\" or \"dp\"");
  }
  if (!root["version"].is_string())
  {
    throw_error(Errc::ParseError, "version must be a string");
  }
  document.version = root["version"].get<std::string>();
  return document;
}

std::string report_text(SoundnessReport const &report)
{
  std::ostringstream out;
  out << (report.passed() ? "[PASS] " : "[FAIL] ") << to_string(report.goal)
      << ": " << report.instances_checked << " checked";
  if (!report.passed())
  {
    out << ", " << report.failures.size() << " failure"
        << (report.failures.size() == 1 ? "" : "s");
    out << "\n  first: " << report.failures.front().diagnostic;
  }
  out << "\n";
  return out.str();
}

std::string report_json(SoundnessReport const &report)
{
  json out;
  out["goal"] = to_string(report.goal);
  out["checked"] = report.instances_checked;
  out["failures"] = json::array();
  for (CheckFailure const &failure : report.failures)
  {
    json entry;
    entry["diagnostic"] = failure.diagnostic;
    entry["instance"] = json::parse(render_bid_file(failure.instance));
    out["failures"].push_back(entry);
  }
  return out.dump(2) + "\n";
}

}  // namespace vickrey
