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

#include <cstdint>
#include <vector>

namespace vickrey::detail {

inline constexpr std::uint64_t kSplitMixGamma = 0x9e3779b97f4a7c15ULL;

constexpr std::uint64_t splitmix_fin(std::uint64_t z)
{
  z ^= z >> 30;
  z *= 0xbf58476d1ce4e5b9ULL;
  z ^= z >> 27;
  z *= 0x94d049bb133111ebULL;
  z ^= z >> 31;
  return z;
}

/// Folds a byte message into a 64-bit digest: bytes are packed into
/// little-endian 8-byte chunks (the tail zero-padded) and each chunk is
/// absorbed through the splitmix64 finalizer.
std::uint64_t fold_bytes(std::vector<unsigned char> const &message);

/// Minimal deterministic generator for fuzzing and tests; the weight
/// hashing and this stream share the same finalizer.
class SplitMix
{
public:
  explicit SplitMix(std::uint64_t seed)
    : state_(seed)
  {
  }

  std::uint64_t next()
  {
    state_ += kSplitMixGamma;
    return splitmix_fin(state_);
  }

  /// Uniform-ish draw in [0, bound); bound must be positive. Modulo bias is
  /// irrelevant at the bounds used here.
  std::uint64_t below(std::uint64_t bound)
  {
    return next() % bound;
  }

private:
  std::uint64_t state_;
};

void append_u32le(std::vector<unsigned char> &buffer, std::uint32_t value);
void append_u64le(std::vector<unsigned char> &buffer, std::uint64_t value);

}  // namespace vickrey::detail
