// Copyright 2026 The edgeqaoa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EDGEQAOA_RNG_H_
#define EDGEQAOA_RNG_H_

#include <array>
#include <cstdint>

namespace edgeqaoa {

/// Philox4x32-10 block function (Salmon, Moraes, Dror, Shaw; SC'11).
///
/// Counter-based: the output depends only on (counter, key), so every stream
/// can be replayed bit-exactly on any platform without carrying state around.
std::array<uint32_t, 4> philox4x32_10(std::array<uint32_t, 4> counter,
                                      std::array<uint32_t, 2> key);

/// A sequential view over one Philox stream.
///
/// The key is the 64-bit seed; the upper two counter words hold the stream id
/// and the lower two hold the block index. Distinct (seed, stream) pairs never
/// share blocks.
class RandomStream {
 public:
  explicit RandomStream(uint64_t seed, uint64_t stream = 0);

  uint32_t next_u32();
  uint64_t next_u64();

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform();

  /// Uniform integer in [0, n). Unbiased (rejection sampling). n must be > 0.
  uint64_t below(uint64_t n);

  bool coin() { return (next_u32() & 1u) != 0; }

  uint64_t seed() const { return seed_; }
  uint64_t stream() const { return stream_; }

 private:
  void refill();

  uint64_t seed_;
  uint64_t stream_;
  uint64_t block_ = 0;
  std::array<uint32_t, 4> buffer_{};
  int pos_ = 4;
};

/// Mixes (master, a, b) into a child seed. Used to key per-trial streams.
uint64_t derive_seed(uint64_t master, uint64_t a, uint64_t b = 0);

}  // namespace edgeqaoa

#endif  // EDGEQAOA_RNG_H_
