// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>

namespace bayesint {

// Philox 4x64 with 10 rounds (Salmon, Moraes, Dror, Shaw 2011): a
// counter-based generator, so any block of the stream is addressable
// directly and parallel consumers stay reproducible.
struct Philox4x64 {
  static std::array<std::uint64_t, 4> block(std::array<std::uint64_t, 4> counter,
                                            std::array<std::uint64_t, 2> key);
};

// Draw stream for one replication: key = (seed, stream), counter word 1
// carries the replication index, counter word 0 the block index within the
// replication. Streams for distinct (seed, stream, rep) triples never
// overlap.
class PhiloxStream {
 public:
  PhiloxStream(std::uint64_t seed, std::uint64_t stream, std::uint64_t rep);

  std::uint64_t next_u64();

  // Uniform on (0, 1], from the top 53 bits of one word.
  double next_uniform();

  // Standard normal via Box-Muller; the pair's second value is cached.
  double next_normal();

  // Gamma(shape, 1) via Marsaglia-Tsang; shapes below 1 draw the boost
  // uniform first, then recurse on shape + 1.
  double next_gamma(double shape);

 private:
  std::array<std::uint64_t, 2> key_;
  std::array<std::uint64_t, 4> counter_;
  std::array<std::uint64_t, 4> buffer_{};
  int position_;
  double cached_normal_ = 0.0;
  bool has_cached_normal_ = false;
};

}  // namespace bayesint
