#pragma once

#include <cstdint>
#include <random>

namespace crm {

// Deterministic RNG with a hand-rolled bounded draw so the sampled streams
// are identical across standard library implementations.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    std::uint64_t below(std::uint64_t n) {
        // Rejection sampling on the top multiple of n.
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = eng_();
        } while (x >= limit);
        return x % n;
    }

    // Uniform integer in [lo, hi].
    long long int_range(long long lo, long long hi) {
        return lo + static_cast<long long>(
                        below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    // Small coefficient from {-3,...,3}, the documented sampling set.
    long long small_coeff() { return int_range(-3, 3); }

  private:
    std::mt19937_64 eng_;
};

}  // namespace crm
