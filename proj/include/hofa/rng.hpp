#pragma once

#include <cstdint>
#include <random>

namespace hofa {

/// Deterministic random stream. mt19937_64 raw output is pinned by the
/// standard; the distribution helpers below are implemented by hand because
/// std::uniform_*_distribution is not portable across library vendors.
/// Every stochastic operation in the library takes a seed and derives any
/// per-trial substreams with derive(), so results are reproducible
/// bit-for-bit and independent of thread count.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [0, n), n >= 1. Unbiased via rejection.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = n * ((~std::uint64_t{0}) / n);
        for (;;) {
            std::uint64_t v = engine_();
            if (v < limit) return v % n;
        }
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double real01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Derives an independent substream for trial/worker `index`.
    static std::uint64_t derive(std::uint64_t master_seed, std::uint64_t index) {
        // SplitMix64 finalizer over (seed, index)
        std::uint64_t z = master_seed + 0x9e3779b97f4a7c15ULL * (index + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    static Rng substream(std::uint64_t master_seed, std::uint64_t index) {
        return Rng(derive(master_seed, index));
    }

  private:
    std::mt19937_64 engine_;
};

}  // namespace hofa
