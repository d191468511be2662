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
// vickrey — combinatorial VCG auction engine.
//
//   vickrey run <bids.json> [--seed N] [--solver dp|oracle] [--output PATH]
//   vickrey check [--max-goods K] [--max-bidders M] [--instances C]
//                 [--seed S] [--json]
//   vickrey enumerate --goods A,B,C [--bidders 1,2]
//                 --what partitions|allocations
//
// Exit codes: 0 success, 1 parse/validation error, 2 size guard,
// 3 soundness failure.

#include "vickrey/allocations.hpp"
#include "vickrey/partitions.hpp"
#include "vickrey/serialization.hpp"
#include "vickrey/soundness.hpp"
#include "vickrey/vcg.hpp"
#include "vickrey/version.hpp"
#include "vickrey/wdp.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

namespace {

using namespace vickrey;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitTooLarge = 2;
constexpr int kExitUnsound = 3;

int exit_code_for(AuctionError const &error)
{
  return error.code() == Errc::TooLarge ? kExitTooLarge : kExitValidation;
}

std::string read_file(std::string const &path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
  {
    throw_error(Errc::ParseError, "cannot read " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

struct RunOptions
{
  std::string bids_path;
  std::uint64_t seed = 0;
  std::string solver = "dp";
  std::string output = "-";
};

int cmd_run(RunOptions const &options)
{
  AuctionInstance const instance = parse_bid_file(read_file(options.bids_path));
  Solver const solver =
      options.solver == "oracle" ? Solver::Oracle : Solver::Dp;

  OutcomeDocument document;
  document.outcome = run_auction(instance, TieBreakSeed{options.seed}, solver);
  document.seed = options.seed;
  document.solver = solver;
  document.version = kVersion;

  std::string const rendered = render_outcome(document);
  if (options.output == "-")
  {
    std::cout << rendered;
  }
  else
  {
    std::ofstream out(options.output, std::ios::binary);
    if (!out)
    {
      throw_error(Errc::ParseError, "cannot write " + options.output);
    }
    out << rendered;
  }
  return kExitOk;
}

struct CheckOptions
{
  std::size_t max_goods = 3;
  std::size_t max_bidders = 3;
  std::size_t instances = 200;
  std::uint64_t seed = 0;
  bool json = false;
  std::string mutant;
};

Mutation mutation_for(std::string const &name)
{
  if (name == "totality")
  {
    return Mutation::Totality;
  }
  if (name == "well-definedness")
  {
    return Mutation::WellDefinedness;
  }
  if (name == "uniqueness")
  {
    return Mutation::Uniqueness;
  }
  if (name == "equivalence")
  {
    return Mutation::Equivalence;
  }
  if (name == "truthfulness")
  {
    return Mutation::Truthfulness;
  }
  return Mutation::None;
}

int cmd_check(CheckOptions const &options)
{
  if (options.max_goods > 4 || options.max_goods == 0)
  {
    throw_error(Errc::TooLarge,
                "--max-goods must be between 1 and 4 (exhaustive regime)");
  }
  if (options.max_bidders > 4 || options.max_bidders == 0)
  {
    throw_error(Errc::TooLarge,
                "--max-bidders must be between 1 and 4 (exhaustive regime)");
  }

  Mutation const mutation = mutation_for(options.mutant);
  TieBreakSeed const seed{options.seed};
  FuzzSpec spec;
  spec.max_goods = options.max_goods;
  spec.max_bidders = options.max_bidders;
  spec.bid_grid = {Amount(0), Amount(1), Amount(2)};
  spec.instance_count = options.instances;
  spec.rng_seed = options.seed;
  std::vector<AuctionInstance> const corpus = fuzz_instances(spec);

  std::vector<SoundnessReport> reports;
  reports.push_back(check_totality(corpus, seed, Exec::Parallel,
                                   mutation));
  reports.push_back(check_well_defined(corpus, seed, Exec::Parallel,
                                       mutation));
  reports.push_back(check_uniqueness(corpus, seed, Exec::Parallel,
                                     mutation));
  reports.push_back(check_equivalence(options.max_goods, options.max_bidders,
                                      options.instances, options.seed,
                                      Exec::Parallel, mutation));
  std::vector<TieBreakSeed> const dominance_seeds{
      TieBreakSeed{options.seed}, TieBreakSeed{options.seed + 1},
      TieBreakSeed{options.seed + 2}};
  reports.push_back(check_truthfulness_single_good(
      std::min<std::size_t>(options.max_bidders, 3),
      {Amount(0), Amount(1), Amount(2)}, dominance_seeds, Exec::Parallel,
      mutation));

  bool all_passed = true;
  for (SoundnessReport const &report : reports)
  {
    if (options.json)
    {
      std::cout << report_json(report);
    }
    else
    {
      std::cout << report_text(report);
    }
    all_passed = all_passed && report.passed();
  }

  if (!options.json)
  {
    for (std::size_t g = 1; g <= options.max_goods; ++g)
    {
      for (std::size_t m = 1; m <= options.max_bidders; ++m)
      {
        auto const goods = [&] {
          std::vector<Good> v;
          for (std::size_t i = 0; i < g; ++i)
          {
            v.push_back(Good{std::string(1, static_cast<char>('A' + i))});
          }
          return v;
        }();
        auto const bidders = [&] {
          std::vector<BidderId> v;
          for (std::size_t i = 0; i < m; ++i)
          {
            v.push_back(BidderId{static_cast<std::uint32_t>(i + 1)});
          }
          return v;
        }();
        std::cout << "  shape " << g << " goods x " << m
                  << " bidders: partitions " << all_partitions(goods).size()
                  << ", allocations "
                  << possible_allocations_oracle(goods, bidders).size()
                  << "\n";
      }
    }
  }

  if (!all_passed)
  {
    for (SoundnessReport const &report : reports)
    {
      if (!report.passed())
      {
        std::cerr << "counterexample (replayable bid file) for "
                  << to_string(report.goal) << ":\n"
                  << render_bid_file(report.failures.front().instance);
        break;
      }
    }
    return kExitUnsound;
  }
  return kExitOk;
}

struct EnumerateOptions
{
  std::vector<std::string> goods;
  std::vector<std::uint32_t> bidders;
  std::string what = "partitions";
};

int cmd_enumerate(EnumerateOptions const &options)
{
  std::vector<Good> goods;
  for (std::string const &id : options.goods)
  {
    goods.push_back(Good{id});
  }

  if (options.what == "partitions")
  {
    auto const partitions = all_partitions(goods);
    for (Partition const &partition : partitions)
    {
      std::cout << partition.str() << "\n";
    }
    std::cout << "count: " << partitions.size() << "\n";
    return kExitOk;
  }

  if (options.bidders.empty())
  {
    throw_error(Errc::EmptyBidders,
                "--bidders is required for --what allocations");
  }
  std::vector<BidderId> bidders;
  for (std::uint32_t id : options.bidders)
  {
    if (id < 1)
    {
      throw_error(Errc::InvalidBidder, "bidder ids start at 1");
    }
    bidders.push_back(BidderId{id});
  }
  auto const raw = possible_allocations_alg(goods, bidders);
  std::set<Allocation> const unique(raw.begin(), raw.end());
  for (Allocation const &allocation : unique)
  {
    std::cout << allocation.str() << "\n";
  }
  std::cout << "count: " << unique.size() << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Combinatorial VCG auction engine"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  RunOptions run_options;
  CLI::App *run = app.add_subcommand("run", "Run an auction from a bid file");
  run->add_option("bids", run_options.bids_path, "Bid file (JSON)")
      ->required();
  run->add_option("--seed", run_options.seed, "Tie-break seed");
  run->add_option("--solver", run_options.solver, "Solver")
      ->check(CLI::IsMember({"dp", "oracle"}));
  run->add_option("--output", run_options.output,
                  "Output path ('-' for stdout)");

  CheckOptions check_options;
  CLI::App *check = app.add_subcommand("check", "Run the soundness suite");
  check->add_option("--max-goods", check_options.max_goods,
                    "Largest goods-set size (1..4)");
  check->add_option("--max-bidders", check_options.max_bidders,
                    "Largest bidder-set size (1..4)");
  check->add_option("--instances", check_options.instances,
                    "Fuzzed instances / tables per shape");
  check->add_option("--seed", check_options.seed, "Fuzz and tie-break seed");
  check->add_flag("--json", check_options.json, "Machine-readable reports");
  check
      ->add_option("--inject-mutant", check_options.mutant,
                   "Corrupt one check (self-test only)")
      ->check(CLI::IsMember({"totality", "well-definedness", "uniqueness",
                             "equivalence", "truthfulness"}))
      ->group("");

  EnumerateOptions enumerate_options;
  CLI::App *enumerate =
      app.add_subcommand("enumerate", "List partitions or allocations");
  enumerate
      ->add_option("--goods", enumerate_options.goods, "Good identifiers")
      ->required()
      ->delimiter(',');
  enumerate
      ->add_option("--bidders", enumerate_options.bidders, "Bidder ids")
      ->delimiter(',');
  enumerate
      ->add_option("--what", enumerate_options.what, "Object kind")
      ->check(CLI::IsMember({"partitions", "allocations"}))
      ->required();

  try
  {
    app.parse(argc, argv);
    if (run->parsed())
    {
      return cmd_run(run_options);
    }
    if (check->parsed())
    {
      return cmd_check(check_options);
    }
    return cmd_enumerate(enumerate_options);
  }
  catch (CLI::ParseError const &error)
  {
    return app.exit(error);
  }
  catch (AuctionError const &error)
  {
    std::cerr << "error: " << error.what() << "\n";
    return exit_code_for(error);
  }
  catch (std::exception const &error)
  {
    std::cerr << "error: " << error.what() << "\n";
    return kExitValidation;
  }
}
