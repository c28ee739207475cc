#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace dcd {

/// SplitMix64 generator. Used everywhere seeded randomness is needed so that
/// identical seeds give identical streams on every platform; the standard
/// library's distributions (and std::shuffle) are implementation-defined.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [0, bound). bound must be >= 1.
  std::uint64_t uniform_below(std::uint64_t bound) {
    // Rejection sampling; bias-free.
    const std::uint64_t limit = ~0ULL - ~0ULL % bound;
    std::uint64_t r;
    do {
      r = next();
    } while (r >= limit);
    return r % bound;
  }

  /// Uniform double in [0, 1) with 53 bits of precision.
  double uniform_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

template <typename T>
void shuffle(std::vector<T>& values, SplitMix64& rng) {
  for (std::size_t i = values.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(rng.uniform_below(i));
    std::swap(values[i - 1], values[j]);
  }
}

inline std::uint64_t mix64(std::uint64_t x) {
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Per-run seed for the experiment harness: a stable hash of
/// (base seed, network id, simulation index). Adding networks to a config
/// never shifts the randomness of existing runs.
inline std::uint64_t derive_run_seed(std::uint64_t base_seed,
                                     std::string_view network_id,
                                     std::uint64_t simulation) {
  std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a over the id bytes
  for (unsigned char c : network_id) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return mix64(mix64(base_seed ^ h) ^ simulation);
}

}  // namespace dcd
