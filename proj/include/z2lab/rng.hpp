#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>

namespace z2lab {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Seed for the `stream`-th independent substream of a master seed.  Used to
// make trials/restarts/shards reproducible regardless of thread count.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
    return splitmix64(splitmix64(master) ^ splitmix64(stream * 0xd1342543de82ef95ULL + 1));
}

// mt19937_64 plus hand-rolled uniform/Box-Muller transforms.  The standard
// distributions are implementation-defined, which would break the
// byte-identical-output contract; these transforms are fixed.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    // uniform in [0, 1)
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    // uniform integer in [lo, hi], inclusive
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
        const std::uint64_t limit = range * (UINT64_MAX / range);
        std::uint64_t v;
        do {
            v = eng_();
        } while (v >= limit);
        return lo + static_cast<std::int64_t>(v % range);
    }

    // standard normal, mean 0 variance 1
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double u1 = 1.0 - uniform();  // (0, 1]
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(a);
        has_spare_ = true;
        return r * std::cos(a);
    }

    // standard complex Gaussian: E gamma = 0, E|gamma|^2 = 1
    // (real and imaginary parts independent with variance 1/2)
    std::complex<double> complex_normal() {
        const double inv_sqrt2 = 0x1.6a09e667f3bcdp-1;
        return {normal() * inv_sqrt2, normal() * inv_sqrt2};
    }

  private:
    std::mt19937_64 eng_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace z2lab
