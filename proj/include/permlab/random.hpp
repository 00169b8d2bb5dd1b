#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>

namespace permlab {

/// Seeded stream of uniform 64-bit words. A (seed, stream) pair always yields
/// the same sequence; distinct stream ids give independent streams for
/// parallel sampling.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed, std::uint64_t stream = 0) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    engine_.seed(seq);
  }

  std::uint64_t next() { return engine_(); }

  /// Uniform on [1, k]. Words from the top partial block of the 2^64 range
  /// are rejected, so there is no modulo bias.
  std::uint64_t uniform(std::uint64_t k) {
    if (k == 0) throw std::invalid_argument("uniform(k) needs k >= 1");
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    // Largest multiple of k not exceeding 2^64, minus one.
    const std::uint64_t limit = max - (max % k + 1) % k;
    std::uint64_t x;
    do {
      x = next();
    } while (x > limit);
    return x % k + 1;
  }

  /// Uniform on [0, 1).
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace permlab
