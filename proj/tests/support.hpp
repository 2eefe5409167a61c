#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "apstep/series.hpp"

namespace apstep::test {

inline std::uint64_t bits(double x) { return std::bit_cast<std::uint64_t>(x); }

inline bool same_bits(double a, double b) { return bits(a) == bits(b); }

inline bool same_bits(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!same_bits(a[i], b[i])) return false;
    return true;
}

inline bool same_bits(Complex a, Complex b) { return same_bits(a.real(), b.real()) && same_bits(a.imag(), b.imag()); }

inline bool same_bits(const APSeries& a, const APSeries& b) {
    if (a.size() != b.size() || !same_bits(a.freq.values(), b.freq.values())) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!same_bits(a.coeff[i], b.coeff[i])) return false;
    return true;
}

}  // namespace apstep::test
