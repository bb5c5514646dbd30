#pragma once

#include <cstdint>
#include <random>

namespace regen {

// Deterministic RNG used throughout. mt19937_64 is fully specified by the
// standard, so the same seed reproduces the same stream on any platform.
// The uniform mappings below are spelled out by hand for the same reason;
// std::uniform_*_distribution output is implementation-defined.
class Rng {
public:
    explicit Rng(uint64_t seed) : gen_(seed) {}

    uint64_t next() { return gen_(); }

    // Uniform double in [low, high) with 53-bit resolution.
    double uniform(double low, double high) {
        double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
        return low + (high - low) * u;
    }

    // Uniform integer in [0, n), unbiased via rejection.
    uint64_t uniform_int(uint64_t n);

private:
    std::mt19937_64 gen_;
};

// splitmix64 finalizer, used to derive independent sub-seeds so that adding
// sweep axes or trials never shifts other points' streams.
uint64_t splitmix64(uint64_t x);
uint64_t mix_seed(uint64_t base, uint64_t salt);

inline const char* rng_algorithm_name() { return "mt19937_64"; }

}  // namespace regen
