#pragma once

#include <cstdint>
#include <random>

namespace swim {

// Seeded random stream. The engine is std::mt19937_64, whose output
// sequence is fixed by the standard; the variate transforms below are done
// by hand so a run is reproducible across standard library vendors.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Independent stream for (seed, stream index), e.g. one per replication.
    static Rng derive(std::uint64_t seed, std::uint64_t stream);

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1) with 53 bits of resolution.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Uniform integer in [0, n). n must be > 0.
    std::uint64_t below(std::uint64_t n);

    double exponential(double mean);

private:
    std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

// Seed of replication `index` for a base seed.
inline std::uint64_t replication_seed(std::uint64_t base, std::uint64_t index)
{
    return splitmix64(base ^ splitmix64(index + 0x9e3779b97f4a7c15ULL));
}

} // namespace swim
