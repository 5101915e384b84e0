#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace pframe {

/// Derives independent per-component seeds from one base seed. Fixed offsets
/// keep every report reproducible from a single --seed flag.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
    // splitmix64 step on (base, stream)
    std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Standard-normal generator: mt19937_64 + Box-Muller. std::normal_distribution
/// is implementation-defined, so the sequence is produced explicitly to keep
/// seeded runs reproducible across standard libraries.
class GaussianSampler {
public:
    explicit GaussianSampler(std::uint64_t seed) : rng_(seed) {}

    double operator()() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = (static_cast<double>(rng_() >> 11) + 1.0) * 0x1p-53; // (0,1]
        const double u2 = static_cast<double>(rng_() >> 11) * 0x1p-53;         // [0,1)
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925287 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

private:
    std::mt19937_64 rng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

} // namespace pframe
