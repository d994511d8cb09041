#pragma once

#include <cstdint>
#include <random>

namespace modcluster {

/// Seeded random source with explicit output mappings. std::mt19937_64 has a
/// standard-mandated output sequence and no std::*_distribution is involved,
/// so streams are bit-identical across platforms for a given seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    /// Uniform spin in {-1, +1}.
    int spin() { return (gen_() & 1u) ? +1 : -1; }

private:
    std::mt19937_64 gen_;
};

}  // namespace modcluster
