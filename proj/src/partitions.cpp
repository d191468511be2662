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

#include "vickrey/partitions.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace vickrey {

std::vector<Bundle> Partition::canonical_blocks() const
{
  std::vector<Bundle> sorted = blocks;
  std::sort(sorted.begin(), sorted.end());
  return sorted;
}

std::string Partition::str() const
{
  if (blocks.empty())
  {
    return "(empty)";
  }
  std::ostringstream out;
  for (std::size_t i = 0; i < blocks.size(); ++i)
  {
    if (i > 0)
    {
      out << ' ';
    }
    out << blocks[i].str();
  }
  return out.str();
}

bool Partition::operator==(Partition const &other) const
{
  return canonical_blocks() == other.canonical_blocks();
}

bool Partition::operator<(Partition const &other) const
{
  return canonical_blocks() < other.canonical_blocks();
}

std::vector<Good> canonical_order(std::vector<Good> goods)
{
  std::sort(goods.begin(), goods.end());
  goods.erase(std::unique(goods.begin(), goods.end()), goods.end());
  return goods;
}

std::vector<Partition> all_partitions(std::vector<Good> const &goods)
{
  std::vector<Good> const ordered = canonical_order(goods);
  if (ordered.size() > kMaxEnumerationGoods)
  {
    throw_error(Errc::TooLarge,
                "partition enumeration admits at most " +
                    std::to_string(kMaxEnumerationGoods) + " goods, got " +
                    std::to_string(ordered.size()));
  }

  // Textbook recursion: extend each partition of the first k elements by
  // placing element k+1 into every existing block in creation order, then
  // as a new singleton. The base case is the single empty partition.
  std::vector<std::vector<std::vector<Good>>> current{{}};
  for (Good const &good : ordered)
  {
    std::vector<std::vector<std::vector<Good>>> next;
    next.reserve(current.size() * 2);
    for (auto const &partition : current)
    {
      for (std::size_t target = 0; target < partition.size(); ++target)
      {
        auto extended = partition;
        extended[target].push_back(good);
        next.push_back(std::move(extended));
      }
      auto with_singleton = partition;
      with_singleton.push_back({good});
      next.push_back(std::move(with_singleton));
    }
    current = std::move(next);
  }

  std::vector<Partition> result;
  result.reserve(current.size());
  for (auto const &raw : current)
  {
    Partition partition;
    partition.blocks.reserve(raw.size());
    for (auto const &block : raw)
    {
      partition.blocks.emplace_back(block);
    }
    result.push_back(std::move(partition));
  }
  return result;
}

bool is_partition_of(std::vector<Bundle> const &candidate,
                     std::vector<Good> const   &goods)
{
  std::set<Good> covered;
  std::size_t    total = 0;
  for (Bundle const &block : candidate)
  {
    if (block.empty())
    {
      return false;
    }
    total += block.size();
    covered.insert(block.goods().begin(), block.goods().end());
  }
  if (covered.size() != total)
  {
    return false;  // overlap between blocks
  }
  std::set<Good> const ground(goods.begin(), goods.end());
  return covered == ground;
}

}  // namespace vickrey
