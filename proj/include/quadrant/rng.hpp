#pragma once

#include <cstddef>
#include <cstdint>

namespace quadrant {

/// Counter-based 64-bit generator: the k-th draw of stream s under seed is a
/// pure function of (seed, s, k), so independent streams can be derived per
/// sample index without shared state.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
        : key_(mix(seed ^ 0x6a09e667f3bcc909ULL) ^ mix(stream + 0x3c6ef372fe94f82bULL)) {}

    std::uint64_t next() { return mix(key_ + 0x9e3779b97f4a7c15ULL * ++counter_); }

    /// Uniform in [lo, hi) with 53 bits of resolution.
    double uniform(double lo, double hi) {
        const double unit = static_cast<double>(next() >> 11) * 0x1.0p-53;
        return lo + (hi - lo) * unit;
    }

    /// Uniform in {0, ..., n-1}; n must be positive.
    std::size_t below(std::size_t n) { return static_cast<std::size_t>(next() % n); }

    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

}  // namespace quadrant
