#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "apstep/series.hpp"

namespace apstep {

/// Sorted multiset of the N(N-1) ordered differences lambda_k - lambda_l, k != l.
struct DifferenceMultiset {
    std::vector<double> diffs;
    std::vector<long double> prefix_d;   // prefix_d[i] = diffs[0] + ... + diffs[i-1]
    std::vector<long double> prefix_d2;  // same for squares

    std::size_t size() const noexcept { return diffs.size(); }
};

DifferenceMultiset pairwise_differences(const FrequencySeq& freq);

/// Largest N accepted by the O(N^4) oracle.
inline constexpr std::size_t kNaiveQuadrupleLimit = 64;

/// M = sum over ordered pairs (k,l) != (k',l'), k != l, k' != l', of
/// (1 - |(lambda_k - lambda_l) - (lambda_k' - lambda_l')|)_+^2, by direct enumeration.
double quadruple_sum_naive(const FrequencySeq& freq);

/// Same functional through the sorted difference multiset in O(N^2 log N).
double quadruple_sum_fast(const FrequencySeq& freq, unsigned workers = 0);
double quadruple_sum_fast(const DifferenceMultiset& dm, unsigned workers = 0);

struct SidonWitness {
    // lambda_{k} + lambda_{l} == lambda_{k2} + lambda_{l2}, 1-based, k <= l, k2 <= l2
    std::size_t k = 0, l = 0, k2 = 0, l2 = 0;
    long long sum = 0;
};

struct SidonResult {
    bool is_sidon = true;
    std::optional<SidonWitness> witness;
};

/// Requires integer-valued, strictly increasing input.
SidonResult sidon_check(const FrequencySeq& freq);

/// max_n #{k : n <= lambda_k < n + 1}
std::size_t block_count_bound(const FrequencySeq& freq);

/// (1 - cos t) / (pi t^2), with the limit 1/(2 pi) at 0.
double tau_density(double t);

struct TauTransform {
    double value = 0.0;  // integral of cos(x t) tau(t) over [-T, T]
    double imag = 0.0;   // integral of sin(x t) tau(t), zero by symmetry
    double tail_bound = 0.0;  // 2 / (pi T)
};

/// Composite Simpson on each 2 pi period, accumulated from the origin outward.
TauTransform tau_fourier_numeric(double x, double horizon = 1e4, double step = 0.01);

/// (1 - |x|)_+
double triangle_kernel(double x);

/// <g_k conj(g_l), g_k' conj(g_l')>_tau for g_j = e^{i lambda_j t}; indices are 1-based.
double exp_quadruple_inner(const FrequencySeq& freq, std::size_t k, std::size_t l, std::size_t k2, std::size_t l2);

struct BellmanBoasReport {
    double lhs = 0.0;
    double rhs = 0.0;
    double max_norm_sq = 0.0;
    double cross = 0.0;  // (sum_{i != j} |<y_i, y_j>|^2)^{1/2}
    bool holds = false;
};

/// lhs = sum_i |<x, y_i>|^2, rhs = |x|^2 (max_i |y_i|^2 + cross), with <x, y> = sum x conj(y).
BellmanBoasReport bellman_boas_check(const std::vector<Complex>& x, const std::vector<std::vector<Complex>>& ys);

}  // namespace apstep
