#pragma once

#include <cstdint>
#include <random>

namespace evifuse {

// Deterministic random source with hand-rolled distributions so that
// seeded outputs are identical across standard libraries.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    // Uniform in [0,1) with 53 random bits.
    double uniform01() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Inclusive bounds, rejection sampled (no modulo bias).
    int uniform_int(int lo, int hi);

    // Standard normal via Box-Muller, spare cached.
    double normal();

    bool bernoulli(double p) { return uniform01() < p; }

private:
    std::mt19937_64 gen_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

// Stateless mix for deriving substream seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace evifuse
