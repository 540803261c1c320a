#pragma once

#include <cstdint>

namespace pesinlab {

/// Counter-based pseudo-random generator. Each (seed, stream) pair names an
/// independent reproducible stream; the n-th draw is a pure function of
/// (seed, stream, n), so ensembles give identical results under any thread
/// schedule.
class CounterRng {
  public:
    CounterRng(std::uint64_t seed, std::uint64_t stream) : key_(mix(mix(seed) ^ mix(stream ^ 0x9e3779b97f4a7c15ull))) {}

    std::uint64_t next_u64() { return mix(key_ ^ (counter_++ * 0xbf58476d1ce4e5b9ull)); }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  private:
    // SplitMix64 finalizer; full-period bijective mix on 64 bits.
    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ull;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

}  // namespace pesinlab
