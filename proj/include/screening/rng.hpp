#pragma once

#include <cmath>
#include <cstdint>

namespace screening {

// splitmix64. One instance per simulated path, keyed by (seed, path index),
// so serial and parallel runs draw identical streams.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t s) : state(s) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
    // uniform in (0, 1]
    double uniform01() { return (static_cast<double>(next() >> 11) + 1.0) * 0x1.0p-53; }
};

inline std::uint64_t substream_key(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 g(seed ^ (0xA0761D6478BD642FULL * (index + 1)));
    g.next();
    return g.next();
}

// Standard normals via Box-Muller; the second variate of each pair is cached.
struct GaussianStream {
    SplitMix64 gen;
    double spare = 0.0;
    bool has_spare = false;

    explicit GaussianStream(std::uint64_t key) : gen(key) {}

    double next() {
        if (has_spare) {
            has_spare = false;
            return spare;
        }
        const double u1 = gen.uniform01();
        const double u2 = gen.uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * 3.14159265358979323846 * u2;
        spare = r * std::sin(a);
        has_spare = true;
        return r * std::cos(a);
    }
};

}  // namespace screening
