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

#include "vickrey/detail/splitmix.hpp"

namespace vickrey::detail {

std::uint64_t fold_bytes(std::vector<unsigned char> const &message)
{
  std::uint64_t state = 0;
  std::size_t   offset = 0;
  while (offset < message.size())
  {
    std::uint64_t chunk = 0;
    for (std::size_t i = 0; i < 8 && offset + i < message.size(); ++i)
    {
      chunk |= std::uint64_t{message[offset + i]} << (8 * i);
    }
    state = splitmix_fin(state ^ chunk);
    offset += 8;
  }
  return state;
}

void append_u32le(std::vector<unsigned char> &buffer, std::uint32_t value)
{
  for (int i = 0; i < 4; ++i)
  {
    buffer.push_back(static_cast<unsigned char>(value >> (8 * i)));
  }
}

void append_u64le(std::vector<unsigned char> &buffer, std::uint64_t value)
{
  for (int i = 0; i < 8; ++i)
  {
    buffer.push_back(static_cast<unsigned char>(value >> (8 * i)));
  }
}

}  // namespace vickrey::detail
