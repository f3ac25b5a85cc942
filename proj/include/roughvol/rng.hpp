#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace roughvol {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Derive an independent substream seed from (seed, stream id).
inline std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t stream) {
    return splitmix64(splitmix64(seed) ^ (stream + 0x632be59bd9b4e019ULL));
}

// mt19937_64 with an explicit Box-Muller normal generator.  The standard
// normal_distribution caches a second variate and its algorithm is
// implementation-defined; rolling it by hand keeps the output stream
// reproducible across standard libraries.
class GaussianRng {
  public:
    explicit GaussianRng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

    double uniform() {
        // (0,1), never exactly 0
        return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1p-53;
    }

    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u = uniform();
        const double v = uniform();
        const double r = std::sqrt(-2.0 * std::log(u));
        const double a = 6.283185307179586476925286766559 * v;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    std::uint64_t uint64() { return engine_(); }

    // Uniform integer in [0, n)
    std::uint64_t below(std::uint64_t n) {
        // Lemire-style rejection; bias negligible for the sizes used here,
        // but we reject anyway to keep streams well-defined.
        const std::uint64_t threshold = (~n + 1) % n;
        for (;;) {
            const std::uint64_t r = engine_();
            if (r >= threshold) return r % n;
        }
    }

  private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace roughvol
