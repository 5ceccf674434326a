#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace folres {

/// Deterministic PRNG stream. Child streams are derived from a parent seed and a
/// task tag, so independent tasks draw reproducibly regardless of scheduling.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : seed_(seed), engine_(mix(seed)) {}

  std::uint64_t seed() const noexcept { return seed_; }

  RandomStream split(std::uint64_t tag) const { return RandomStream(mix(seed_ ^ mix(tag + 0x632be59bd9b4e019ULL))); }
  RandomStream split(std::string_view tag) const { return split(fnv1a(tag)); }

  /// Uniform-ish integer in [-bound, bound]; the engine output is mapped by hand so
  /// draws are identical across standard library implementations.
  long small_int(long bound = 17) {
    const auto span = static_cast<std::uint64_t>(2 * bound + 1);
    return static_cast<long>(engine_() % span) - bound;
  }

  /// Like small_int but never zero.
  long nonzero_int(long bound = 17) {
    for (;;) {
      const long v = small_int(bound);
      if (v != 0) return v;
    }
  }

  static std::uint64_t fnv1a(std::string_view text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
      h ^= c;
      h *= 0x100000001b3ULL;
    }
    return h;
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace folres
