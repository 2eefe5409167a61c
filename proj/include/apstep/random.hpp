#pragma once

#include <cstdint>
#include <limits>

namespace apstep {

/// Counter-based 64-bit generator built on the SplitMix64 finalizer.
///
/// Draw i of stream s under seed k is
///   mix64(key(k, s) + (i + 1) * 0x9e3779b97f4a7c15)
/// with key(k, s) = mix64(k ^ mix64(s + 0x632be59bd9b4e019)).
/// Streams are independent and addressable, so trial j of an experiment always
/// sees the same numbers regardless of how trials are scheduled. The mapping
/// to doubles is fixed here rather than delegated to <random> distributions,
/// whose output is implementation-defined.
class CounterRng {
public:
    using result_type = std::uint64_t;

    CounterRng(std::uint64_t seed, std::uint64_t stream)
        : key_(mix64(seed ^ mix64(stream + 0x632be59bd9b4e019ULL))) {}

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()() {
        ++counter_;
        return mix64(key_ + counter_ * kGamma);
    }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

    /// Uniform on [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// +1 or -1 with equal probability (top bit).
    int rademacher() { return ((*this)() >> 63) != 0 ? 1 : -1; }

    std::uint64_t counter() const noexcept { return counter_; }

    static constexpr std::uint64_t mix64(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

}  // namespace apstep
