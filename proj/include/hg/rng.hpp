#pragma once

#include <cmath>
#include <cstdint>

namespace hg {

/// Counter-based RNG. Streams are derived by hashing (seed, a, b, c), so a
/// node's random draws depend only on its indices, never on evaluation order.
/// This is what makes parallel and serial sweeps produce identical samples.
class Rng {
public:
    explicit Rng(std::uint64_t state) : s_(state) {}

    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    static Rng stream(std::uint64_t seed, std::uint64_t a = 0, std::uint64_t b = 0,
                      std::uint64_t c = 0) {
        std::uint64_t h = mix(seed);
        h = mix(h ^ (a + 0x9e3779b97f4a7c15ULL));
        h = mix(h ^ (b + 0xc2b2ae3d27d4eb4fULL));
        h = mix(h ^ (c + 0x165667b19e3779f9ULL));
        return Rng(h);
    }

    std::uint64_t next_u64() {
        s_ += 0x9e3779b97f4a7c15ULL;
        return mix(s_);
    }

    /// Uniform in [0,1).
    double uniform() { return (next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Log-uniform on [lo, hi], lo > 0.
    double log_uniform(double lo, double hi) {
        return std::exp(uniform(std::log(lo), std::log(hi)));
    }

    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform(), u2 = uniform();
        while (u1 <= 1e-300) u1 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        spare_ = r * std::sin(2.0 * M_PI * u2);
        have_spare_ = true;
        return r * std::cos(2.0 * M_PI * u2);
    }

private:
    std::uint64_t s_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace hg
