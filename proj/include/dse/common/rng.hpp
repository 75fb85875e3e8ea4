#pragma once

#include <cmath>
#include <cstdint>

namespace dse {

// Counter-based pseudo-random streams. Every consumer derives its stream
// from (seed, index), so records, paths and days can be generated in any
// order or in parallel and still reproduce bit-identical output. The
// standard-library distributions are deliberately avoided: their output is
// implementation-defined, which would break byte-identical artifacts.
class Rng {
public:
    Rng() : state_(0x853c49e6748fea9bULL) {}

    explicit Rng(std::uint64_t seed) : state_(mix(seed)) { next_u64(); }

    // Substream i of a master seed. Adjacent indices land on
    // well-separated states via two rounds of the splitmix finalizer.
    Rng(std::uint64_t seed, std::uint64_t index)
        : state_(mix(mix(seed) ^ mix(index + 0x9e3779b97f4a7c15ULL))) {
        next_u64();
    }

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform on [0, 1) with 53-bit resolution.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + uniform01() * (hi - lo); }

    // Uniform on (0, 1], used where log(u) must stay finite.
    double uniform01_open_low() { return 1.0 - uniform01(); }

    // Standard normal via Box-Muller; the second value of each pair is cached.
    double normal() {
        if (has_cached_) {
            has_cached_ = false;
            return cached_;
        }
        const double u1 = uniform01_open_low();
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925286766559 * u2;
        cached_ = r * std::sin(a);
        has_cached_ = true;
        return r * std::cos(a);
    }

    // Exponential with mean 1/rate.
    double exponential(double rate) { return -std::log(uniform01_open_low()) / rate; }

    // Uniform integer in [0, n).
    std::uint64_t next_below(std::uint64_t n) {
        // Multiply-shift rejection-free mapping is fine for our n << 2^64.
        return static_cast<std::uint64_t>(uniform01() * static_cast<double>(n));
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
    double cached_ = 0.0;
    bool has_cached_ = false;
};

}  // namespace dse
