#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace filtopo {

/// Deterministic standard-normal stream: Box-Muller on top of mt19937_64.
/// Uniform inputs are the top 53 bits of the engine output, so a given seed
/// produces the same stream on every platform (std::normal_distribution makes
/// no such guarantee).
class GaussianSampler {
public:
    explicit GaussianSampler(std::uint64_t seed) : rng_(seed) {}

    double next() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        // u1 in (0,1] so the log is finite.
        double u1 = 1.0 - uniform01();
        double u2 = uniform01();
        double radius = std::sqrt(-2.0 * std::log(u1));
        double angle = 2.0 * std::numbers::pi * u2;
        spare_ = radius * std::sin(angle);
        has_spare_ = true;
        return radius * std::cos(angle);
    }

    /// Uniform double in [0, 1).
    double uniform01() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 rng_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace filtopo
