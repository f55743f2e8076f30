#pragma once

#include <cstdint>
#include <random>

namespace pearle {

// Seeded random stream with a platform-independent output sequence.
//
// The engine is std::mt19937_64, whose state sequence for a given 64-bit
// seed is fixed by the C++ standard. Doubles are produced by our own
// mapping (top 53 bits of one engine output scaled by 2^-53) rather than
// std::uniform_real_distribution, which is implementation-defined and
// therefore not reproducible across standard libraries. Given a seed, the
// stream of uniform01() values is identical on every conforming platform.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  // Uniform on [0, 1), 53-bit resolution.
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Uniform on [a, b).
  double uniform(double a, double b) { return a + (b - a) * uniform01(); }

  // Independent stream for parallel worker `worker_index`, derived from the
  // master seed. The worker's engine is seeded with the (worker_index+1)-th
  // output of the splitmix64 sequence started at `master_seed`, so the
  // family of streams is a fixed function of the master seed alone.
  static RandomStream substream(std::uint64_t master_seed,
                                std::uint64_t worker_index) {
    std::uint64_t t =
        master_seed + (worker_index + 1) * 0x9E3779B97F4A7C15ULL;
    t = (t ^ (t >> 30)) * 0xBF58476D1CE4E5B9ULL;
    t = (t ^ (t >> 27)) * 0x94D049BB133111EBULL;
    t ^= t >> 31;
    return RandomStream(t);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace pearle
